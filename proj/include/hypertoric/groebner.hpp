#pragma once

// Buchberger's algorithm over Q with the normal selection strategy and the
// Gebauer-Moeller pair criteria, plus the quotient-ring machinery built on
// a reduced basis: normal forms, standard monomials, Hilbert functions and
// multiplication tables.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "exact_linalg.hpp"
#include "polynomial.hpp"

namespace hypertoric {

/// Caps on a single basis computation. A reduction is one normal-form pass
/// of an input generator or an S-polynomial.
struct Budget {
    std::size_t max_reductions = 200000;
    std::uint32_t max_degree = 512;
};

struct IdealSpec {
    std::size_t nvars = 0;
    std::vector<QPolynomial> generators;
    MonomialOrder order = MonomialOrder::GradedReverseLex;
};

struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::GradedReverseLex;
    std::size_t nvars = 0;
    std::vector<QPolynomial> basis;  // monic, sorted by increasing leading monomial
    bool reduced = false;
    bool homogeneous = false;  // every generator of the source ideal was homogeneous

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        for (const auto& g : basis) out.push_back(g.leading_monomial());
        return out;
    }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.order == b.order && a.nvars == b.nvars && a.basis == b.basis;
    }
};

namespace detail {

struct DescendingIn {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(order, a, b) > 0; }
};

inline QPolynomial make_monic(const QPolynomial& p) {
    if (p.is_zero() || p.leading_coeff() == 1) return p;
    Rational inv = 1 / p.leading_coeff();
    return inv * p;
}

/// Full reduction of p by the polynomials in `divisors` (all nonzero, any
/// leading coefficient). The first divisor whose leading monomial divides
/// the current term is used.
inline QPolynomial reduce_by(const QPolynomial& p, const std::vector<const QPolynomial*>& divisors) {
    const auto order = p.order();
    std::map<Monomial, Rational, DescendingIn> work(DescendingIn{order});
    for (const auto& t : p.terms()) work.emplace(t.monomial, t.coeff);
    std::vector<Term<Rational>> remainder;
    while (!work.empty()) {
        auto it = work.begin();
        const QPolynomial* hit = nullptr;
        for (const auto* g : divisors)
            if (g->leading_monomial().divides(it->first)) {
                hit = g;
                break;
            }
        if (hit == nullptr) {
            remainder.push_back({it->first, it->second});
            work.erase(it);
            continue;
        }
        Monomial shift = it->first / hit->leading_monomial();
        Rational factor = it->second / hit->leading_coeff();
        work.erase(it);
        const auto& gt = hit->terms();
        for (std::size_t k = 1; k < gt.size(); ++k) {
            Monomial mono = gt[k].monomial * shift;
            auto [pos, inserted] = work.emplace(mono, Rational(0));
            pos->second -= factor * gt[k].coeff;
            if (pos->second == 0) work.erase(pos);
        }
    }
    return QPolynomial::from_terms(p.nvars(), order, std::move(remainder));
}

inline std::vector<const QPolynomial*> pointers(const std::vector<QPolynomial>& v) {
    std::vector<const QPolynomial*> out;
    for (const auto& p : v) out.push_back(&p);
    return out;
}

inline QPolynomial s_polynomial(const QPolynomial& f, const QPolynomial& g) {
    Monomial L = lcm(f.leading_monomial(), g.leading_monomial());
    return f.scaled_shift(1 / f.leading_coeff(), L / f.leading_monomial()) -
           g.scaled_shift(1 / g.leading_coeff(), L / g.leading_monomial());
}

struct Pair {
    std::size_t i, j;  // i < j, indices into the polynomial store
    Monomial lcm;
};

class BuchbergerState {
public:
    BuchbergerState(std::size_t nvars, MonomialOrder order, const Budget& budget)
        : nvars_(nvars), order_(order), budget_(budget) {}

    void add_generator(const QPolynomial& f) {
        auto h = reduce_counted(f);
        if (!h.is_zero()) insert(make_monic(h));
    }

    void run() {
        while (!pairs_.empty()) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) {
                if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
                int c = compare(order_, a.lcm, b.lcm);
                if (c != 0) return c < 0;
                return std::tie(a.i, a.j) < std::tie(b.i, b.j);
            });
            Pair p = *best;
            pairs_.erase(best);
            auto h = reduce_counted(s_polynomial(store_[p.i], store_[p.j]));
            if (!h.is_zero()) insert(make_monic(h));
        }
    }

    std::vector<QPolynomial> active_basis() const {
        std::vector<QPolynomial> out;
        for (auto idx : active_) out.push_back(store_[idx]);
        return out;
    }

private:
    QPolynomial reduce_counted(const QPolynomial& f) {
        if (++reductions_ > budget_.max_reductions)
            throw ResourceBudgetExceeded("Groebner computation exceeded " + std::to_string(budget_.max_reductions) +
                                         " reductions");
        std::vector<const QPolynomial*> divisors;
        for (auto idx : active_) divisors.push_back(&store_[idx]);
        return reduce_by(f, divisors);
    }

    // Gebauer-Moeller update with the new element h.
    void insert(QPolynomial h) {
        if (h.degree() > budget_.max_degree)
            throw ResourceBudgetExceeded("Groebner basis element of degree " + std::to_string(h.degree()) +
                                         " exceeds the degree cap");
        const std::size_t hi = store_.size();
        store_.push_back(std::move(h));
        const Monomial& lh = store_[hi].leading_monomial();

        std::vector<Pair> C;
        for (auto g : active_) C.push_back({g, hi, lcm(store_[g].leading_monomial(), lh)});

        // Keep a new pair if its leading monomials are coprime or no other
        // new pair has an lcm dividing its lcm.
        std::vector<Pair> D;
        for (std::size_t a = 0; a < C.size(); ++a) {
            const auto& pa = C[a];
            bool keep = coprime(store_[pa.i].leading_monomial(), lh);
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < C.size() && keep; ++b)
                    if (C[b].lcm.divides(pa.lcm)) keep = false;
                for (std::size_t b = 0; b < D.size() && keep; ++b)
                    if (D[b].lcm.divides(pa.lcm)) keep = false;
            }
            if (keep) D.push_back(pa);
        }
        std::vector<Pair> E;
        for (const auto& p : D)
            if (!coprime(store_[p.i].leading_monomial(), lh)) E.push_back(p);

        // Chain criterion on old pairs.
        std::vector<Pair> kept;
        for (const auto& p : pairs_) {
            bool drop = lh.divides(p.lcm) && !(lcm(store_[p.i].leading_monomial(), lh) == p.lcm) &&
                        !(lcm(store_[p.j].leading_monomial(), lh) == p.lcm);
            if (!drop) kept.push_back(p);
        }
        for (auto& p : E) kept.push_back(std::move(p));
        pairs_ = std::move(kept);

        std::vector<std::size_t> next;
        for (auto g : active_)
            if (!lh.divides(store_[g].leading_monomial())) next.push_back(g);
        next.push_back(hi);
        active_ = std::move(next);
    }

    std::size_t nvars_;
    MonomialOrder order_;
    Budget budget_;
    std::size_t reductions_ = 0;
    std::vector<QPolynomial> store_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
};

/// Minimalizes and interreduces a Groebner basis into the reduced one.
inline std::vector<QPolynomial> reduce_basis(std::vector<QPolynomial> G, MonomialOrder order) {
    std::sort(G.begin(), G.end(), [order](const QPolynomial& a, const QPolynomial& b) {
        return compare(order, a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<QPolynomial> minimal;
    for (auto& g : G) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(), [&g](const QPolynomial& f) {
            return f.leading_monomial().divides(g.leading_monomial());
        });
        if (!redundant) minimal.push_back(make_monic(g));
    }
    std::vector<QPolynomial> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<const QPolynomial*> others;
        for (std::size_t l = 0; l < minimal.size(); ++l)
            if (l != k) others.push_back(&minimal[l]);
        auto lt = QPolynomial::monomial(minimal[k].leading_monomial(), Rational(1), order);
        reduced.push_back(lt + reduce_by(minimal[k] - lt, others));
    }
    return reduced;
}

}  // namespace detail

/// Reduced Groebner basis of the ideal in the ideal's order. Generators are
/// fed in order of increasing leading monomial, so the result (the unique
/// reduced basis) never depends on the input order.
inline GroebnerBasis groebner_basis(const IdealSpec& I, const Budget& budget = {}) {
    GroebnerBasis out;
    out.order = I.order;
    out.nvars = I.nvars;
    out.homogeneous = true;
    std::vector<QPolynomial> gens;
    for (const auto& g : I.generators) {
        if (g.nvars() != I.nvars) throw InvalidInput("generator has the wrong variable count");
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) out.homogeneous = false;
        gens.push_back(detail::make_monic(g.with_order(I.order)));
    }
    std::sort(gens.begin(), gens.end(), [o = I.order](const QPolynomial& a, const QPolynomial& b) {
        int c = compare(o, a.leading_monomial(), b.leading_monomial());
        if (c != 0) return c < 0;
        return a.to_string() < b.to_string();
    });
    detail::BuchbergerState state(I.nvars, I.order, budget);
    for (const auto& g : gens) state.add_generator(g);
    state.run();
    out.basis = detail::reduce_basis(state.active_basis(), I.order);
    out.reduced = true;
    return out;
}

/// Remainder of p on division by G; no term is divisible by a leading monomial of G.
inline QPolynomial normal_form(const QPolynomial& p, const GroebnerBasis& G) {
    return detail::reduce_by(p.with_order(G.order), detail::pointers(G.basis));
}

/// Every S-polynomial of G reduces to zero (Buchberger's criterion).
inline bool satisfies_buchberger_criterion(const GroebnerBasis& G) {
    for (std::size_t i = 0; i < G.basis.size(); ++i)
        for (std::size_t j = i + 1; j < G.basis.size(); ++j)
            if (!normal_form(detail::s_polynomial(G.basis[i], G.basis[j]), G).is_zero()) return false;
    return true;
}

/// nullopt when the quotient is infinite-dimensional over Q.
inline std::optional<std::size_t> quotient_dimension(const GroebnerBasis& G);

namespace detail {

inline bool is_standard(const Monomial& m, const std::vector<Monomial>& leads) {
    return std::none_of(leads.begin(), leads.end(), [&m](const Monomial& l) { return l.divides(m); });
}

inline bool has_pure_powers(const GroebnerBasis& G) {
    std::vector<bool> seen(G.nvars, false);
    for (const auto& g : G.basis) {
        auto v = g.leading_monomial().pure_power_variable();
        if (v < G.nvars) seen[v] = true;
        if (g.leading_monomial().is_one()) return true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Standard monomials of total degree <= max_degree, sorted increasingly.
inline std::vector<Monomial> standard_monomials_up_to(const GroebnerBasis& G, std::uint32_t max_degree) {
    auto leads = G.leading_monomials();
    std::vector<Monomial> out;
    std::set<Monomial> seen;
    std::deque<Monomial> queue;
    Monomial one(G.nvars);
    if (is_standard(one, leads)) {
        queue.push_back(one);
        seen.insert(one);
    }
    while (!queue.empty()) {
        Monomial m = queue.front();
        queue.pop_front();
        out.push_back(m);
        if (m.degree() >= max_degree) continue;
        for (std::size_t i = 0; i < G.nvars; ++i) {
            Monomial next = m * Monomial::variable(G.nvars, i);
            if (seen.count(next) || !is_standard(next, leads)) continue;
            seen.insert(next);
            queue.push_back(next);
        }
    }
    std::sort(out.begin(), out.end(),
              [o = G.order](const Monomial& a, const Monomial& b) { return compare(o, a, b) < 0; });
    return out;
}

}  // namespace detail

/// Standard monomials of a zero-dimensional ideal, increasing in G's order.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& G) {
    if (!detail::has_pure_powers(G)) throw InvalidInput("quotient is infinite-dimensional");
    std::uint32_t bound = 0;
    for (const auto& g : G.basis) bound += g.leading_monomial().degree();
    return detail::standard_monomials_up_to(G, bound);
}

inline std::optional<std::size_t> quotient_dimension(const GroebnerBasis& G) {
    if (!detail::has_pure_powers(G)) return std::nullopt;
    return standard_monomials(G).size();
}

/// Number of standard monomials in each degree. For a finite quotient the
/// sequence runs to the top degree (or `up_to`, whichever is smaller); for an
/// infinite one `up_to` is required.
inline std::vector<std::size_t> hilbert_function(const GroebnerBasis& G,
                                                 std::optional<std::uint32_t> up_to = std::nullopt) {
    if (!G.homogeneous) throw NotHomogeneous("hilbert_function needs a homogeneous ideal");
    if (!is_degree_compatible(G.order)) throw InvalidInput("hilbert_function needs a degree-compatible order");
    std::vector<Monomial> mons;
    if (detail::has_pure_powers(G)) {
        mons = standard_monomials(G);
    } else {
        if (!up_to) throw InvalidInput("infinite quotient: a degree bound is required");
        mons = detail::standard_monomials_up_to(G, *up_to);
    }
    std::vector<std::size_t> h;
    for (const auto& m : mons) {
        if (up_to && m.degree() > *up_to) continue;
        if (h.size() <= m.degree()) h.resize(m.degree() + 1, 0);
        ++h[m.degree()];
    }
    if (up_to && !detail::has_pure_powers(G)) h.resize(*up_to + 1, 0);
    return h;
}

/// True iff both ideals have the same reduced Groebner basis.
inline bool ideal_equal(const IdealSpec& a, const IdealSpec& b, const Budget& budget = {}) {
    if (a.nvars != b.nvars || a.order != b.order) throw InvalidInput("ideal_equal: incompatible ideals");
    return groebner_basis(a, budget).basis == groebner_basis(b, budget).basis;
}

/// Standard-monomial basis of a finite quotient with its multiplication
/// table: table[i][j] holds the coordinates of s_i * s_j.
struct QuotientBasis {
    std::vector<Monomial> standard_monomials;
    std::vector<std::vector<RationalVector>> table;

    std::size_t dimension() const { return standard_monomials.size(); }
};

/// Arithmetic in Q[x]/I on coordinate vectors over the standard monomials.
class QuotientAlgebra {
public:
    explicit QuotientAlgebra(GroebnerBasis G) : G_(std::move(G)), basis_(standard_monomials(G_)) {
        for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
    }

    const GroebnerBasis& groebner() const { return G_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    std::size_t dimension() const { return basis_.size(); }

    RationalVector coordinates(const QPolynomial& p) const {
        RationalVector v(basis_.size(), Rational(0));
        auto r = normal_form(p, G_);
        for (const auto& t : r.terms()) v[index_.at(t.monomial)] = t.coeff;
        return v;
    }

    QPolynomial element(const RationalVector& coords) const {
        std::vector<Term<Rational>> terms;
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (coords[k] != 0) terms.push_back({basis_[k], coords[k]});
        return QPolynomial::from_terms(G_.nvars, G_.order, std::move(terms));
    }

    RationalVector one() const { return coordinates(QPolynomial::constant(G_.nvars, Rational(1), G_.order)); }

    /// Matrix of multiplication by p; column k holds the coordinates of p * s_k.
    RationalMatrix multiplication_matrix(const QPolynomial& p) const {
        RationalMatrix M(basis_.size(), basis_.size());
        auto reduced = normal_form(p, G_);
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            auto col = coordinates(reduced.scaled_shift(Rational(1), basis_[k]));
            for (std::size_t r = 0; r < col.size(); ++r) M(r, k) = col[r];
        }
        return M;
    }

    QuotientBasis structure_constants() const {
        QuotientBasis qb;
        qb.standard_monomials = basis_;
        const std::size_t d = basis_.size();
        qb.table.assign(d, std::vector<RationalVector>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j) {
                auto c = coordinates(QPolynomial::monomial(basis_[i] * basis_[j], Rational(1), G_.order));
                qb.table[i][j] = c;
                qb.table[j][i] = c;
            }
        return qb;
    }

private:
    GroebnerBasis G_;
    std::vector<Monomial> basis_;
    std::map<Monomial, std::size_t> index_;
};

inline QuotientBasis structure_constants(const GroebnerBasis& G) {
    return QuotientAlgebra(G).structure_constants();
}

}  // namespace hypertoric
