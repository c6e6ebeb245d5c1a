#pragma once

// Cohomology and K-ring presentations attached to a smooth datum, and the
// checks that tie them together: rank equalities against the vertex count,
// lowest-degree forms of the K-relations, independence of the chosen
// u-vectors, unit and nilpotence certificates, and the explicit isomorphism
// for the cotangent bundle of projective space.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arrangement.hpp"
#include "groebner.hpp"
#include "groebner_zz.hpp"
#include "relations.hpp"

namespace hypertoric {

/// Split and smooth, or throws NotSmooth naming the first problem.
inline void require_admissible(const Datum& d) {
    if (!d.is_split()) throw NotSmooth("B is not a split surjection onto Z^n");
    auto report = certify_smooth(d);
    if (!report.smooth()) {
        const auto& v = report.violations.front();
        std::string subset;
        for (auto i : v.subset) subset += (subset.empty() ? "" : ",") + std::to_string(i + 1);
        throw NotSmooth("arrangement is not smooth: " + to_string(v.kind) + " on {" + subset + "}");
    }
}

/// prod_{i in I} x_i for every minimal empty subset I.
inline std::vector<Monomial> monomial_relations(const Arrangement& a) {
    std::vector<Monomial> out;
    for (const auto& I : minimal_empty_subsets(a)) {
        std::vector<std::uint32_t> e(a.size(), 0);
        for (auto i : I) e[i] = 1;
        out.emplace_back(std::move(e));
    }
    return out;
}

inline std::vector<IntegerVector> standard_basis(std::size_t n) {
    std::vector<IntegerVector> out;
    for (std::size_t k = 0; k < n; ++k) {
        IntegerVector u(n, Integer(0));
        u[k] = 1;
        out.push_back(std::move(u));
    }
    return out;
}

/// Index sets with nonempty intersection, maximal under inclusion, sorted.
inline std::vector<IndexSet> maximal_nonempty_flats(const Arrangement& a) {
    const std::size_t m = a.size();
    std::vector<std::uint32_t> empty_sets, nonempty;
    for (std::size_t k = 1; k <= m; ++k) {
        for (auto bits : detail::subsets_of_size(m, k)) {
            if (std::any_of(empty_sets.begin(), empty_sets.end(), [bits](std::uint32_t e) { return (e & bits) == e; }))
                continue;
            if (flat_of(a, detail::bits_to_set(bits)).empty)
                empty_sets.push_back(bits);
            else
                nonempty.push_back(bits);
        }
    }
    std::vector<IndexSet> out;
    for (auto bits : nonempty) {
        bool maximal = std::none_of(nonempty.begin(), nonempty.end(),
                                    [bits](std::uint32_t o) { return o != bits && (o & bits) == bits; });
        if (maximal) out.push_back(detail::bits_to_set(bits));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// For normals v_i (i in I) extending to a Z-basis: integer u_j with
/// <u_j, v_i> = [i == j] for i in I, one per j in I.
inline std::vector<IntegerVector> dual_vectors(const Datum& d, const IndexSet& I) {
    std::vector<IntegerVector> cols;
    for (auto i : I) cols.push_back(d.normal(i));
    auto snf = smith_normal_form(IntegerMatrix::from_columns(d.n(), cols));
    const std::size_t k = cols.size();
    auto f = snf.invariant_factors();
    if (f.size() != k || !std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 1; }))
        throw NotSmooth("normals of a flat do not extend to a basis");
    std::vector<IntegerVector> out;
    for (std::size_t j = 0; j < k; ++j) {
        IntegerVector u(d.n(), Integer(0));
        for (std::size_t l = 0; l < d.n(); ++l)
            for (std::size_t i = 0; i < k; ++i) u[l] += snf.D(i, i) * snf.V(j, i) * snf.U(i, l);
        out.push_back(std::move(u));
    }
    return out;
}

/// Standard basis, then the dual vectors of every maximal nonempty flat,
/// skipping any u with u or -u already present. The standard basis alone can
/// leave points with some 1 - x_j = 0 in the zero set of the K-ideal; the
/// dual vectors cut those away.
inline std::vector<IntegerVector> default_u_set(const Datum& d) {
    auto out = standard_basis(d.n());
    std::vector<IntegerVector> extra;
    for (const auto& I : maximal_nonempty_flats(arrangement_from_datum(d)))
        for (auto& u : dual_vectors(d, I)) extra.push_back(std::move(u));
    std::sort(extra.begin(), extra.end());
    for (auto& u : extra) {
        IntegerVector neg(u.size());
        std::transform(u.begin(), u.end(), neg.begin(), [](const Integer& x) { return Integer(-x); });
        if (std::find(out.begin(), out.end(), u) == out.end() && std::find(out.begin(), out.end(), neg) == out.end())
            out.push_back(std::move(u));
    }
    return out;
}

struct CohomPresentation {
    Datum datum;
    std::vector<Monomial> monomial_relations;
    std::vector<QPolynomial> linear_relations;  // h_{e_k}, k = 1..n
    IdealSpec ideal;
};

struct KPresentation {
    Datum datum;
    std::vector<Monomial> monomial_relations;
    std::vector<QPolynomial> ku_relations;  // z_u for u in u_set
    std::vector<IntegerVector> u_set;
    IdealSpec ideal;
};

inline CohomPresentation cohomology_presentation(const Datum& d,
                                                 MonomialOrder order = MonomialOrder::GradedReverseLex) {
    require_admissible(d);
    auto a = arrangement_from_datum(d);
    CohomPresentation p{d, monomial_relations(a), {}, {d.m(), {}, order}};
    for (const auto& u : standard_basis(d.n())) p.linear_relations.push_back(build_h_u(d, u, order));
    for (const auto& mono : p.monomial_relations) p.ideal.generators.push_back(QPolynomial::monomial(mono, 1, order));
    for (const auto& h : p.linear_relations) p.ideal.generators.push_back(h);
    return p;
}

/// `u_set` defaults to default_u_set(d) and must generate Z^n.
inline KPresentation ktheory_presentation(const Datum& d, std::optional<std::vector<IntegerVector>> u_set = std::nullopt,
                                          MonomialOrder order = MonomialOrder::GradedReverseLex) {
    require_admissible(d);
    auto us = u_set ? *u_set : default_u_set(d);
    if (us.empty()) throw DegenerateUSet("u_set is empty");
    for (const auto& u : us)
        if (u.size() != d.n()) throw DegenerateUSet("u_set entry has the wrong length");
    auto snf = smith_normal_form(IntegerMatrix::from_columns(d.n(), us)).invariant_factors();
    if (snf.size() != d.n() || !std::all_of(snf.begin(), snf.end(), [](const Integer& f) { return f == 1; }))
        throw DegenerateUSet("u_set does not generate Z^n");

    auto a = arrangement_from_datum(d);
    KPresentation p{d, monomial_relations(a), {}, us, {d.m(), {}, order}};
    for (const auto& u : us) p.ku_relations.push_back(build_z_u(d, u, order));
    for (const auto& mono : p.monomial_relations) p.ideal.generators.push_back(QPolynomial::monomial(mono, 1, order));
    for (const auto& z : p.ku_relations) p.ideal.generators.push_back(z);
    return p;
}

struct RankSummary {
    std::vector<std::size_t> betti;  // b_0, b_2, b_4, ... (Hilbert function of the cohomology ideal)
    std::size_t cohom_rank = 0;
    std::size_t k_rank = 0;
    std::size_t vertex_count = 0;

    /// b_0, b_1, b_2, ... with the odd ones reported as zero.
    std::vector<std::size_t> all_betti() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < betti.size(); ++k) {
            if (k > 0) out.push_back(0);
            out.push_back(betti[k]);
        }
        return out;
    }
};

inline RankSummary ranks_and_betti(const Datum& d, const Budget& budget = {}) {
    auto coh = cohomology_presentation(d);
    auto kp = ktheory_presentation(d);
    auto Gc = groebner_basis(coh.ideal, budget);
    auto Gk = groebner_basis(kp.ideal, budget);
    RankSummary r;
    r.betti = hilbert_function(Gc);
    for (auto b : r.betti) r.cohom_rank += b;
    auto kdim = quotient_dimension(Gk);
    if (!kdim) throw Error("K-theory quotient is infinite-dimensional");
    r.k_rank = *kdim;
    r.vertex_count = vertices(arrangement_from_datum(d)).size();
    return r;
}

/// Deterministic pseudo-random integer vectors with entries in [lo, hi].
inline std::vector<IntegerVector> sample_u_vectors(std::size_t n, std::size_t count, std::uint64_t seed, long lo = -2,
                                                   long hi = 2) {
    std::mt19937_64 rng(seed);
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    std::vector<IntegerVector> out;
    for (std::size_t k = 0; k < count; ++k) {
        IntegerVector u;
        for (std::size_t i = 0; i < n; ++i) u.emplace_back(lo + static_cast<long>(rng() % span));
        out.push_back(std::move(u));
    }
    return out;
}

struct InitialFormCheck {
    IntegerVector u;
    bool skipped = false;  // z_u = 0
    int sign = 0;          // lowest_degree_form(z_u) = sign * h_u; 0 if neither
};

struct InitialFormReport {
    std::vector<InitialFormCheck> checks;

    bool all_match() const {
        return std::all_of(checks.begin(), checks.end(), [](const InitialFormCheck& c) { return c.skipped || c.sign != 0; });
    }
    /// The common sign over the non-skipped checks, or 0 if they disagree or none ran.
    int consistent_sign() const {
        int s = 0;
        for (const auto& c : checks) {
            if (c.skipped) continue;
            if (c.sign == 0 || (s != 0 && c.sign != s)) return 0;
            s = c.sign;
        }
        return s;
    }
};

inline InitialFormCheck check_initial_form(const Datum& d, const IntegerVector& u) {
    InitialFormCheck c{u, false, 0};
    auto z = build_z_u(d, u);
    if (z.is_zero()) {
        c.skipped = true;
        return c;
    }
    auto low = z.lowest_degree_form();
    auto h = build_h_u(d, u);
    if (low == h)
        c.sign = 1;
    else if (low == -h)
        c.sign = -1;
    return c;
}

/// Compares lowest_degree_form(z_u) with +-h_u for the standard basis and the given extras.
inline InitialFormReport verify_initial_forms(const Datum& d, const std::vector<IntegerVector>& extra_us = {}) {
    require_admissible(d);
    InitialFormReport r;
    for (const auto& u : default_u_set(d)) r.checks.push_back(check_initial_form(d, u));
    for (const auto& u : extra_us) r.checks.push_back(check_initial_form(d, u));
    return r;
}

/// Coordinates of prod_j (1 - x_j)^{e_j} in the quotient, computed by
/// repeated multiplication so that large exponents never get expanded.
inline RationalVector one_minus_x_power_coords(const QuotientAlgebra& Q, const IntegerVector& exps) {
    const std::size_t m = exps.size();
    const auto order = Q.groebner().order;
    auto v = Q.one();
    for (std::size_t j = 0; j < m; ++j) {
        if (exps[j] <= 0) continue;
        auto M = Q.multiplication_matrix(QPolynomial::constant(m, Rational(1), order) - QPolynomial::variable(m, j, order));
        for (Integer k = 0; k < exps[j]; ++k) v = M.apply(v);
    }
    return v;
}

/// Coordinates of z_u in a finite quotient.
inline RationalVector z_u_coords(const QuotientAlgebra& Q, const Datum& d, const IntegerVector& u) {
    auto w = pairings(d, u);
    IntegerVector pos(w.size()), neg(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        pos[j] = w[j] > 0 ? w[j] : Integer(0);
        neg[j] = w[j] < 0 ? Integer(-w[j]) : Integer(0);
    }
    auto a = one_minus_x_power_coords(Q, pos);
    auto b = one_minus_x_power_coords(Q, neg);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

enum class StabilityMethod {
    /// z_u lies in J' (its image in the finite quotient vanishes).
    Membership,
    /// Recompute the reduced basis of J' + (z_u) and compare.
    FullBasis,
};

struct StabilityReport {
    bool stable = true;
    std::vector<IntegerVector> checked;
    std::optional<IntegerVector> counterexample;
};

/// Whether adjoining z_u for each extra u leaves the ideal of `kp` unchanged.
inline StabilityReport verify_u_stability_report(const KPresentation& kp, const std::vector<IntegerVector>& extra_us,
                                                 StabilityMethod method = StabilityMethod::Membership,
                                                 const Budget& budget = {}) {
    const Datum& d = kp.datum;
    auto G = groebner_basis(kp.ideal, budget);
    StabilityReport r;
    std::optional<QuotientAlgebra> Q;
    if (method == StabilityMethod::Membership && quotient_dimension(G)) Q.emplace(G);
    for (const auto& u : extra_us) {
        bool same;
        if (Q) {
            auto c = z_u_coords(*Q, d, u);
            same = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
        } else {
            IdealSpec bigger = kp.ideal;
            bigger.generators.push_back(build_z_u(d, u, kp.ideal.order));
            same = groebner_basis(bigger, budget).basis == G.basis;
        }
        r.checked.push_back(u);
        if (!same) {
            r.stable = false;
            r.counterexample = u;
            break;
        }
    }
    return r;
}

inline StabilityReport verify_u_stability_report(const Datum& d, const std::vector<IntegerVector>& extra_us,
                                                 StabilityMethod method = StabilityMethod::Membership,
                                                 const Budget& budget = {}) {
    return verify_u_stability_report(ktheory_presentation(d), extra_us, method, budget);
}

inline bool verify_u_stability(const Datum& d, const std::vector<IntegerVector>& extra_us) {
    return verify_u_stability_report(d, extra_us).stable;
}

/// Nilpotence of each x_j and invertibility of each (1 - x_j) in a finite quotient.
struct UnitNilpotenceReport {
    std::vector<std::size_t> nilpotency_index;  // least k with x_j^k = 0; 0 if none up to dim + 1
    std::vector<Rational> unit_determinants;    // det of multiplication by (1 - x_j) over Q
    std::vector<std::optional<Integer>> unit_determinants_zz;  // same over Z when the Z-basis is standard

    bool all_nilpotent() const {
        return std::all_of(nilpotency_index.begin(), nilpotency_index.end(), [](std::size_t k) { return k > 0; });
    }
    bool all_units() const {
        return std::all_of(unit_determinants.begin(), unit_determinants.end(), [](const Rational& q) { return q != 0; });
    }
};

inline UnitNilpotenceReport certify_units_and_nilpotence(const QuotientAlgebra& Q,
                                                         const std::optional<StrongGroebnerBasis>& zz = std::nullopt) {
    const std::size_t m = Q.groebner().nvars;
    const auto order = Q.groebner().order;
    UnitNilpotenceReport r;
    std::optional<ZModuleStructure> zs;
    if (zz) zs = zmodule_structure(*zz);
    for (std::size_t j = 0; j < m; ++j) {
        auto x = QPolynomial::variable(m, j, order);
        auto X = Q.multiplication_matrix(x);
        auto v = Q.one();
        std::size_t k = 0;
        for (std::size_t step = 1; step <= Q.dimension() + 1; ++step) {
            v = X.apply(v);
            if (std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; })) {
                k = step;
                break;
            }
        }
        r.nilpotency_index.push_back(k);
        auto unit = QPolynomial::constant(m, Rational(1), order) - x;
        r.unit_determinants.push_back(determinant(Q.multiplication_matrix(unit)));

        std::optional<Integer> zdet;
        if (zs && zs->standard_monomials_are_basis() && zs->support == Q.basis()) {
            const auto& basis = Q.basis();
            IntegerMatrix M(basis.size(), basis.size());
            auto zunit = ZPolynomial::constant(m, Integer(1), order) - ZPolynomial::variable(m, j, order);
            for (std::size_t c = 0; c < basis.size(); ++c) {
                auto col = strong_normal_form(zunit.scaled_shift(Integer(1), basis[c]), *zz);
                for (const auto& t : col.terms()) {
                    auto pos = std::find(basis.begin(), basis.end(), t.monomial) - basis.begin();
                    M(static_cast<std::size_t>(pos), c) = t.coeff;
                }
            }
            zdet = determinant(M);
        }
        r.unit_determinants_zz.push_back(zdet);
    }
    return r;
}

/// T*(CP^n): B = [I_n | -1], lift = (1, ..., 1).
inline Datum cotangent_projective_datum(std::size_t n) {
    if (n < 1) throw InvalidInput("cotangent_projective_datum needs n >= 1");
    IntegerMatrix B(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        B(i, i) = 1;
        B(i, n) = -1;
    }
    return Datum(std::move(B), RationalVector(n + 1, Rational(1)));
}

/// Witness that x -> 1 - x_{n+1} induces Q[x]/(1-x)^{n+1} ~= Q[x_1..x_{n+1}]/J'.
struct IsoCertificate {
    std::size_t source_dimension = 0;
    std::size_t target_dimension = 0;
    bool relation_maps_to_zero = false;  // (1 - (1 - x_{n+1}))^{n+1} = x_{n+1}^{n+1} lies in J'
    bool surjective = false;             // images of 1, x, ..., x^n span the quotient
    Rational image_determinant = 0;      // det of the image coordinates of 1, ..., x^n
    /// Images of 1, x, ..., x^n in standard-monomial coordinates.
    std::vector<RationalVector> images;

    bool ok() const { return relation_maps_to_zero && surjective && source_dimension == target_dimension; }
    bool unimodular() const { return image_determinant == 1 || image_determinant == -1; }
};

inline IsoCertificate cotangent_iso_certificate(std::size_t n, const Budget& budget = {}) {
    auto d = cotangent_projective_datum(n);
    auto kp = ktheory_presentation(d);
    auto G = groebner_basis(kp.ideal, budget);
    IsoCertificate cert;
    cert.source_dimension = n + 1;
    auto dim = quotient_dimension(G);
    if (!dim) return cert;
    cert.target_dimension = *dim;
    QuotientAlgebra Q(G);
    const std::size_t m = n + 1;
    const auto order = G.order;
    auto line = QPolynomial::constant(m, Rational(1), order) - QPolynomial::variable(m, n, order);  // [L_{n+1}]
    auto one = QPolynomial::constant(m, Rational(1), order);
    cert.relation_maps_to_zero = normal_form((one - line).pow(static_cast<std::uint32_t>(n + 1)), G).is_zero();

    auto L = Q.multiplication_matrix(line);
    auto v = Q.one();
    for (std::size_t k = 0; k <= n; ++k) {
        cert.images.push_back(v);
        v = L.apply(v);
    }
    if (cert.target_dimension == cert.source_dimension) {
        auto M = RationalMatrix::from_columns(Q.dimension(), cert.images);
        cert.image_determinant = determinant(M);
        cert.surjective = cert.image_determinant != 0;
    } else {
        auto M = RationalMatrix::from_columns(Q.dimension(), cert.images);
        cert.surjective = rank(M) == Q.dimension();
    }
    return cert;
}

inline bool verify_cotangent_iso(std::size_t n) { return cotangent_iso_certificate(n).ok(); }

}  // namespace hypertoric
