#pragma once

// Strong Groebner bases over Z (S-polynomials plus gcd-polynomials, with
// remainder reduction of coefficients) and the abelian-group structure of
// the quotient Z[x]/I they expose.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "exact_linalg.hpp"
#include "groebner.hpp"
#include "polynomial.hpp"

namespace hypertoric {

struct StrongGroebnerBasis {
    MonomialOrder order = MonomialOrder::GradedReverseLex;
    std::size_t nvars = 0;
    std::vector<ZPolynomial> basis;  // positive leading coefficients
};

namespace detail {

struct DescendingZ {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(order, a, b) > 0; }
};

inline ZPolynomial positive_lead(const ZPolynomial& p) {
    if (p.is_zero() || p.leading_coeff() > 0) return p;
    return -p;
}

/// Remainder reduction: at each term c*X, take the divisor of least leading
/// coefficient b among those whose leading monomial divides X and replace c
/// by c mod b (in [0, b)).
inline ZPolynomial reduce_strong(const ZPolynomial& p, const std::vector<const ZPolynomial*>& divisors) {
    const auto order = p.order();
    std::map<Monomial, Integer, DescendingZ> work(DescendingZ{order});
    for (const auto& t : p.terms()) work.emplace(t.monomial, t.coeff);
    std::vector<Term<Integer>> remainder;
    while (!work.empty()) {
        auto it = work.begin();
        const ZPolynomial* best = nullptr;
        for (const auto* g : divisors)
            if (g->leading_monomial().divides(it->first) && (best == nullptr || g->leading_coeff() < best->leading_coeff()))
                best = g;
        Integer q = best == nullptr ? Integer(0) : floor_div(it->second, best->leading_coeff());
        if (q == 0) {
            remainder.push_back({it->first, it->second});
            work.erase(it);
            continue;
        }
        Monomial shift = it->first / best->leading_monomial();
        const auto& gt = best->terms();
        for (std::size_t k = 0; k < gt.size(); ++k) {
            Monomial mono = gt[k].monomial * shift;
            auto [pos, inserted] = work.emplace(mono, Integer(0));
            pos->second -= q * gt[k].coeff;
            if (pos->second == 0) work.erase(pos);
        }
    }
    return ZPolynomial::from_terms(p.nvars(), order, std::move(remainder));
}

inline std::vector<const ZPolynomial*> pointers(const std::vector<ZPolynomial>& v) {
    std::vector<const ZPolynomial*> out;
    for (const auto& p : v) out.push_back(&p);
    return out;
}

}  // namespace detail

/// Strong Groebner basis over Z. No pair criteria are applied; intended for
/// spot checks on small ideals.
inline StrongGroebnerBasis strong_groebner_basis(std::size_t nvars, const std::vector<ZPolynomial>& generators,
                                                 MonomialOrder order, const Budget& budget = {}) {
    std::vector<ZPolynomial> G;
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t reductions = 0;

    auto reduce = [&](const ZPolynomial& f) {
        if (++reductions > budget.max_reductions)
            throw ResourceBudgetExceeded("strong Groebner computation exceeded " +
                                         std::to_string(budget.max_reductions) + " reductions");
        return detail::positive_lead(detail::reduce_strong(f, detail::pointers(G)));
    };
    auto add = [&](ZPolynomial h) {
        if (h.degree() > budget.max_degree) throw ResourceBudgetExceeded("strong basis element exceeds the degree cap");
        for (std::size_t i = 0; i < G.size(); ++i) pairs.emplace_back(i, G.size());
        G.push_back(std::move(h));
    };

    for (const auto& g : generators) {
        if (g.nvars() != nvars) throw InvalidInput("generator has the wrong variable count");
        auto h = reduce(g.with_order(order));
        if (!h.is_zero()) add(std::move(h));
    }
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const ZPolynomial f = G[i], g = G[j];
        const Integer a = f.leading_coeff(), b = g.leading_coeff();
        const Monomial L = lcm(f.leading_monomial(), g.leading_monomial());
        const Monomial sf = L / f.leading_monomial(), sg = L / g.leading_monomial();
        const Integer l = lcm(a, b);
        std::vector<ZPolynomial> candidates;
        if (!(coprime(f.leading_monomial(), g.leading_monomial()) && (a == 1 || b == 1)))
            candidates.push_back(f.scaled_shift(Integer(l / a), sf) - g.scaled_shift(Integer(l / b), sg));
        if (!divides(a, b) && !divides(b, a)) {
            auto e = extended_gcd(a, b);
            candidates.push_back(f.scaled_shift(e.s, sf) + g.scaled_shift(e.t, sg));
        }
        for (const auto& c : candidates) {
            auto h = reduce(c);
            if (!h.is_zero()) add(std::move(h));
        }
    }

    // Drop elements whose leading term is a multiple of another's, then tail-reduce.
    std::sort(G.begin(), G.end(), [order](const ZPolynomial& x, const ZPolynomial& y) {
        int c = compare(order, x.leading_monomial(), y.leading_monomial());
        if (c != 0) return c < 0;
        return x.leading_coeff() < y.leading_coeff();
    });
    std::vector<ZPolynomial> minimal;
    for (const auto& g : G) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(), [&g](const ZPolynomial& f) {
            return f.leading_monomial().divides(g.leading_monomial()) && divides(f.leading_coeff(), g.leading_coeff());
        });
        if (!redundant) minimal.push_back(g);
    }
    StrongGroebnerBasis out{order, nvars, {}};
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<const ZPolynomial*> others;
        for (std::size_t l = 0; l < minimal.size(); ++l)
            if (l != k) others.push_back(&minimal[l]);
        auto lt = ZPolynomial::monomial(minimal[k].leading_monomial(), minimal[k].leading_coeff(), order);
        out.basis.push_back(lt + detail::reduce_strong(minimal[k] - lt, others));
    }
    return out;
}

inline ZPolynomial strong_normal_form(const ZPolynomial& p, const StrongGroebnerBasis& G) {
    return detail::reduce_strong(p.with_order(G.order), detail::pointers(G.basis));
}

/// Abelian-group structure of Z[x]/I read off a strong basis.
struct ZModuleStructure {
    bool finitely_supported = false;  // only finitely many monomials survive unit-lead reduction
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1
    /// Monomials whose coefficient ideal is (d) with d > 1, with that d.
    std::vector<std::pair<Monomial, Integer>> nonunit_leads;
    /// Monomials spanning the quotient, increasing in the basis order.
    std::vector<Monomial> support;

    bool free() const { return finitely_supported && torsion.empty(); }
    /// The standard monomials form a Z-basis.
    bool standard_monomials_are_basis() const { return free() && nonunit_leads.empty(); }
};

inline ZModuleStructure zmodule_structure(const StrongGroebnerBasis& G) {
    ZModuleStructure out;
    std::vector<Monomial> unit_leads;
    for (const auto& g : G.basis)
        if (g.leading_coeff() == 1) unit_leads.push_back(g.leading_monomial());

    std::vector<bool> pure(G.nvars, false);
    bool has_one = false;
    std::uint32_t bound = 0;
    for (const auto& l : unit_leads) {
        if (l.is_one()) has_one = true;
        auto v = l.pure_power_variable();
        if (v < G.nvars) pure[v] = true;
        bound += l.degree();
    }
    if (!has_one && !std::all_of(pure.begin(), pure.end(), [](bool b) { return b; })) return out;
    out.finitely_supported = true;

    // Monomials not divisible by a unit leading monomial.
    std::vector<Monomial> support;
    {
        auto is_free = [&](const Monomial& m) {
            return std::none_of(unit_leads.begin(), unit_leads.end(), [&m](const Monomial& l) { return l.divides(m); });
        };
        std::set<Monomial> seen;
        std::deque<Monomial> queue;
        Monomial one(G.nvars);
        if (is_free(one)) {
            queue.push_back(one);
            seen.insert(one);
        }
        while (!queue.empty()) {
            auto m = queue.front();
            queue.pop_front();
            support.push_back(m);
            if (m.degree() >= bound) continue;
            for (std::size_t i = 0; i < G.nvars; ++i) {
                auto next = m * Monomial::variable(G.nvars, i);
                if (seen.count(next) || !is_free(next)) continue;
                seen.insert(next);
                queue.push_back(next);
            }
        }
        std::sort(support.begin(), support.end(),
                  [o = G.order](const Monomial& a, const Monomial& b) { return compare(o, a, b) < 0; });
    }
    out.support = support;
    std::map<Monomial, std::size_t> index;
    for (std::size_t k = 0; k < support.size(); ++k) index.emplace(support[k], k);

    std::vector<IntegerVector> rows;
    for (const auto& mono : support) {
        const ZPolynomial* best = nullptr;
        for (const auto& g : G.basis)
            if (g.leading_monomial().divides(mono) && (best == nullptr || g.leading_coeff() < best->leading_coeff()))
                best = &g;
        if (best == nullptr) continue;
        out.nonunit_leads.emplace_back(mono, best->leading_coeff());
        auto h = best->scaled_shift(Integer(1), mono / best->leading_monomial());
        auto tail = h - ZPolynomial::monomial(mono, best->leading_coeff(), G.order);
        IntegerVector row(support.size(), Integer(0));
        row[index.at(mono)] = best->leading_coeff();
        auto reduced = strong_normal_form(tail, G);
        for (const auto& t : reduced.terms()) row[index.at(t.monomial)] += t.coeff;
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        out.free_rank = support.size();
        return out;
    }
    IntegerMatrix R(rows.size(), support.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < support.size(); ++c) R(r, c) = rows[r][c];
    auto factors = smith_normal_form(R).invariant_factors();
    out.free_rank = support.size() - factors.size();
    for (const auto& d : factors)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

}  // namespace hypertoric
