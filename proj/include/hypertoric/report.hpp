#pragma once

// Report blocks shared by the command-line tool and the acceptance suite.
// Every block is an ordered JSON object so that serialization is canonical.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "datum_io.hpp"
#include "presentations.hpp"

namespace hypertoric {

inline constexpr const char* kToolName = "hypertoric";
inline constexpr const char* kToolVersion = "0.1.0";

struct ReportOptions {
    MonomialOrder order = MonomialOrder::GradedReverseLex;
    std::vector<IntegerVector> u_extra;
    Budget budget;
    std::uint64_t seed = 0;
    bool zz = false;
    std::size_t sampled_us = 20;
};

inline std::optional<MonomialOrder> parse_order(const std::string& s) {
    if (s == "grevlex") return MonomialOrder::GradedReverseLex;
    if (s == "lex") return MonomialOrder::Lex;
    if (s == "grlex") return MonomialOrder::GradedLex;
    return std::nullopt;
}

/// "a,b;c,d" -> {(a,b), (c,d)}; every vector must have length n.
inline std::vector<IntegerVector> parse_u_list(const std::string& text, std::size_t n) {
    std::vector<IntegerVector> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(';', start);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(start, end - start);
        IntegerVector u;
        std::size_t p = 0;
        while (p <= item.size()) {
            auto q = item.find(',', p);
            if (q == std::string::npos) q = item.size();
            auto v = parse_integer(item.substr(p, q - p));
            if (!v) throw InvalidInput("bad u-vector entry in \"" + item + "\"");
            u.push_back(*v);
            p = q + 1;
        }
        if (u.size() != n) throw InvalidInput("u-vector \"" + item + "\" must have " + std::to_string(n) + " entries");
        out.push_back(std::move(u));
        start = end + 1;
    }
    return out;
}

namespace detail {

inline ordered_json index_set_json(const IndexSet& I) {
    ordered_json a = ordered_json::array();
    for (auto i : I) a.push_back(i + 1);
    return a;
}

inline ordered_json integer_vector_json(const IntegerVector& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(integer_to_json(x));
    return a;
}

inline ordered_json rational_vector_json(const RationalVector& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline ordered_json polys_json(const std::vector<QPolynomial>& ps, MonomialOrder order) {
    ordered_json a = ordered_json::array();
    for (const auto& p : ps) a.push_back(p.with_order(order).to_string());
    return a;
}

inline ordered_json monomials_json(const std::vector<Monomial>& ms) {
    ordered_json a = ordered_json::array();
    for (const auto& m : ms) a.push_back(m.to_string());
    return a;
}

template <class T>
ordered_json counts_json(const std::vector<T>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(x);
    return a;
}

/// "p1 - p2 = -1" for normal (1, -1) and constant -1.
inline std::string equation(const Hyperplane& h) {
    std::vector<Term<Integer>> terms;
    for (std::size_t k = 0; k < h.normal.size(); ++k)
        if (h.normal[k] != 0) terms.push_back({Monomial::variable(h.normal.size(), k), h.normal[k]});
    auto lhs = ZPolynomial::from_terms(h.normal.size(), MonomialOrder::Lex, std::move(terms)).to_string();
    for (auto& c : lhs)
        if (c == 'x') c = 'p';
    return lhs + " = " + to_string(h.constant);
}

inline bool is_cotangent_datum(const Datum& d) {
    return d.m() == d.n() + 1 && d == cotangent_projective_datum(d.n());
}

}  // namespace detail

inline ordered_json meta_block(const std::string& command, const ReportOptions& opts) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["seed"] = opts.seed;
    j["budget"] = {{"max_reductions", opts.budget.max_reductions}, {"max_degree", opts.budget.max_degree}};
    j["order"] = to_string(opts.order);
    j["zz"] = opts.zz;
    return j;
}

inline ordered_json smoothness_block(const Datum& d) {
    auto report = certify_smooth(d);
    ordered_json j;
    j["split"] = d.is_split();
    j["smooth"] = report.smooth();
    ordered_json vs = ordered_json::array();
    for (const auto& v : report.violations) vs.push_back({{"subset", detail::index_set_json(v.subset)}, {"kind", to_string(v.kind)}});
    j["violations"] = std::move(vs);
    return j;
}

inline bool admissible(const Datum& d) { return d.is_split() && is_smooth(d); }

inline ordered_json arrangement_block(const Datum& d) {
    auto a = detail::raw_arrangement(d);
    ordered_json j;
    ordered_json hs = ordered_json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& h = a.hyperplanes[i];
        ordered_json e;
        e["index"] = i + 1;
        e["normal"] = detail::integer_vector_json(h.normal);
        e["constant"] = to_string(h.constant);
        e["equation"] = detail::equation(h);
        hs.push_back(std::move(e));
    }
    j["hyperplanes"] = std::move(hs);
    ordered_json mins = ordered_json::array();
    for (const auto& I : minimal_empty_subsets(a)) mins.push_back(detail::index_set_json(I));
    j["minimal_empty_subsets"] = std::move(mins);
    try {
        auto vs = vertices(a);
        ordered_json arr = ordered_json::array();
        for (const auto& v : vs) {
            ordered_json sets = ordered_json::array();
            for (const auto& I : v.index_sets) sets.push_back(detail::index_set_json(I));
            arr.push_back({{"point", detail::rational_vector_json(v.point)}, {"index_sets", std::move(sets)}});
        }
        j["vertex_count"] = vs.size();
        j["vertices"] = std::move(arr);
    } catch (const NotSimple&) {
        j["vertex_count"] = nullptr;
        j["vertices"] = nullptr;
    }
    return j;
}

inline ordered_json cohomology_block(const Datum& d, const ReportOptions& opts) {
    auto p = cohomology_presentation(d, opts.order);
    auto G = groebner_basis(p.ideal, opts.budget);
    ordered_json j;
    std::vector<QPolynomial> monos;
    for (const auto& m : p.monomial_relations) monos.push_back(QPolynomial::monomial(m, Rational(1), opts.order));
    j["monomial_relations"] = detail::polys_json(monos, opts.order);
    j["linear_relations"] = detail::polys_json(p.linear_relations, opts.order);
    j["groebner_basis"] = detail::polys_json(G.basis, opts.order);
    auto dim = quotient_dimension(G);
    j["standard_monomials"] = dim ? detail::monomials_json(standard_monomials(G)) : ordered_json(nullptr);
    j["dimension"] = dim ? ordered_json(*dim) : ordered_json(nullptr);
    if (is_degree_compatible(opts.order) && dim) j["hilbert_function"] = detail::counts_json(hilbert_function(G));
    return j;
}

inline ordered_json ktheory_block(const Datum& d, const ReportOptions& opts) {
    auto p = ktheory_presentation(d, std::nullopt, opts.order);
    auto G = groebner_basis(p.ideal, opts.budget);
    ordered_json j;
    ordered_json us = ordered_json::array();
    for (const auto& u : p.u_set) us.push_back(detail::integer_vector_json(u));
    j["u_set"] = std::move(us);
    std::vector<QPolynomial> monos;
    for (const auto& m : p.monomial_relations) monos.push_back(QPolynomial::monomial(m, Rational(1), opts.order));
    j["monomial_relations"] = detail::polys_json(monos, opts.order);
    j["u_relations"] = detail::polys_json(p.ku_relations, opts.order);
    j["groebner_basis"] = detail::polys_json(G.basis, opts.order);
    auto dim = quotient_dimension(G);
    j["standard_monomials"] = dim ? detail::monomials_json(standard_monomials(G)) : ordered_json(nullptr);
    j["dimension"] = dim ? ordered_json(*dim) : ordered_json(nullptr);
    if (opts.zz) {
        std::vector<ZPolynomial> gens;
        for (const auto& g : p.ideal.generators) gens.push_back(primitive_integer_part(g));
        auto S = strong_groebner_basis(d.m(), gens, opts.order, opts.budget);
        auto z = zmodule_structure(S);
        ordered_json zj;
        ordered_json sb = ordered_json::array();
        for (const auto& g : S.basis) sb.push_back(g.to_string());
        zj["strong_basis"] = std::move(sb);
        zj["finitely_generated"] = z.finitely_supported;
        zj["free_rank"] = z.free_rank;
        ordered_json tor = ordered_json::array();
        for (const auto& t : z.torsion) tor.push_back(detail::integer_to_json(t));
        zj["torsion"] = std::move(tor);
        zj["free"] = z.free();
        zj["standard_monomials_are_basis"] = z.standard_monomials_are_basis();
        j["integer"] = std::move(zj);
    }
    return j;
}

inline ordered_json ranks_block(const Datum& d, const ReportOptions& opts) {
    auto r = ranks_and_betti(d, opts.budget);
    ordered_json j;
    j["betti"] = detail::counts_json(r.betti);
    j["betti_all"] = detail::counts_json(r.all_betti());
    j["cohom_rank"] = r.cohom_rank;
    j["k_rank"] = r.k_rank;
    j["vertex_count"] = r.vertex_count;
    j["equal"] = r.cohom_rank == r.k_rank && r.k_rank == r.vertex_count;
    return j;
}

/// u-vectors for the sampled checks: the explicit extras, then `sampled_us`
/// seeded vectors in [-2, 2]^n.
inline std::vector<IntegerVector> verification_us(const Datum& d, const ReportOptions& opts) {
    auto us = opts.u_extra;
    for (auto& u : sample_u_vectors(d.n(), opts.sampled_us, opts.seed)) us.push_back(std::move(u));
    return us;
}

inline ordered_json verification_block(const Datum& d, const ReportOptions& opts) {
    ordered_json j;
    bool all = true;
    const auto us = verification_us(d, opts);
    ordered_json extra = ordered_json::array();
    for (const auto& u : us) extra.push_back(detail::integer_vector_json(u));
    j["u_vectors"] = std::move(extra);

    {
        auto r = verify_initial_forms(d, us);
        ordered_json checks = ordered_json::array();
        for (const auto& c : r.checks) {
            std::string result = c.skipped ? "skipped" : c.sign == 1 ? "+h_u" : c.sign == -1 ? "-h_u" : "mismatch";
            checks.push_back({{"u", detail::integer_vector_json(c.u)}, {"result", result}});
        }
        bool pass = r.all_match() && r.consistent_sign() != 0;
        ordered_json b;
        b["checks"] = std::move(checks);
        b["sign"] = r.consistent_sign();
        b["pass"] = pass;
        j["initial_forms"] = std::move(b);
        all = all && pass;
    }
    {
        auto kp = ktheory_presentation(d);
        auto coh = cohomology_presentation(d);
        IdealSpec degenerate{d.m(), {}, MonomialOrder::GradedReverseLex};
        for (const auto& m : kp.monomial_relations) degenerate.generators.push_back(QPolynomial::monomial(m));
        for (const auto& z : kp.ku_relations) degenerate.generators.push_back(lowest_degree_form(z));
        bool pass = ideal_equal(degenerate, coh.ideal, opts.budget);
        j["graded_degeneration"] = {{"pass", pass}};
        all = all && pass;
    }
    {
        auto r = verify_u_stability_report(d, us, StabilityMethod::Membership, opts.budget);
        ordered_json b;
        b["method"] = "membership";
        b["checked"] = r.checked.size();
        b["stable"] = r.stable;
        b["counterexample"] = r.counterexample ? detail::integer_vector_json(*r.counterexample) : ordered_json(nullptr);
        b["pass"] = r.stable;
        j["u_stability"] = std::move(b);
        all = all && r.stable;
    }
    {
        auto r = ranks_and_betti(d, opts.budget);
        bool pass = r.cohom_rank == r.k_rank && r.k_rank == r.vertex_count;
        j["rank_equality"] = {{"cohom_rank", r.cohom_rank},
                              {"k_rank", r.k_rank},
                              {"vertex_count", r.vertex_count},
                              {"pass", pass}};
        all = all && pass;
    }
    {
        auto kp = ktheory_presentation(d);
        QuotientAlgebra Q(groebner_basis(kp.ideal, opts.budget));
        std::optional<StrongGroebnerBasis> zz;
        if (opts.zz) {
            std::vector<ZPolynomial> gens;
            for (const auto& g : kp.ideal.generators) gens.push_back(primitive_integer_part(g));
            zz = strong_groebner_basis(d.m(), gens, MonomialOrder::GradedReverseLex, opts.budget);
        }
        auto r = certify_units_and_nilpotence(Q, zz);
        ordered_json b;
        b["nilpotency_index"] = detail::counts_json(r.nilpotency_index);
        ordered_json dets = ordered_json::array();
        for (const auto& q : r.unit_determinants) dets.push_back(to_string(q));
        b["unit_determinants"] = std::move(dets);
        if (opts.zz) {
            ordered_json zd = ordered_json::array();
            for (const auto& z : r.unit_determinants_zz) zd.push_back(z ? ordered_json(to_string(*z)) : ordered_json(nullptr));
            b["unit_determinants_integer"] = std::move(zd);
        }
        bool pass = r.all_nilpotent() && r.all_units();
        b["pass"] = pass;
        j["units_and_nilpotence"] = std::move(b);
        all = all && pass;
    }
    if (detail::is_cotangent_datum(d)) {
        auto c = cotangent_iso_certificate(d.n(), opts.budget);
        ordered_json b;
        b["source_dimension"] = c.source_dimension;
        b["target_dimension"] = c.target_dimension;
        b["relation_maps_to_zero"] = c.relation_maps_to_zero;
        b["surjective"] = c.surjective;
        b["image_determinant"] = to_string(c.image_determinant);
        b["pass"] = c.ok();
        j["cotangent_isomorphism"] = std::move(b);
        all = all && c.ok();
    }
    j["pass"] = all;
    return j;
}

namespace detail {

inline bool is_scalar(const ordered_json& v) { return !v.is_object() && !v.is_array(); }

inline std::string scalar_text(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

inline bool flat_array(const ordered_json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v) {
        if (is_scalar(e)) continue;
        if (!e.is_array()) return false;
        for (const auto& x : e)
            if (!is_scalar(x)) return false;
    }
    return true;
}

// Arrays of strings where some entry has spaces (polynomials) go one per line.
inline bool spaced_strings(const ordered_json& v) {
    if (!v.is_array()) return false;
    bool spaced = false;
    for (const auto& e : v) {
        if (!e.is_string()) return false;
        spaced = spaced || e.get<std::string>().find(' ') != std::string::npos;
    }
    return spaced;
}

inline std::string inline_text(const ordered_json& v) {
    if (is_scalar(v)) return scalar_text(v);
    std::string s = "(";
    bool first = true;
    for (const auto& e : v) {
        if (!first) s += ", ";
        first = false;
        s += inline_text(e);
    }
    return s + ")";
}

inline void render(const ordered_json& v, std::size_t indent, std::string& out) {
    const std::string pad(indent, ' ');
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) {
            if (is_scalar(val)) {
                out += pad + key + ": " + scalar_text(val) + "\n";
            } else if (val.is_array() && val.empty()) {
                out += pad + key + ": none\n";
            } else if (spaced_strings(val)) {
                out += pad + key + ":\n";
                for (const auto& e : val) out += pad + "  " + scalar_text(e) + "\n";
            } else if (flat_array(val)) {
                out += pad + key + ": " + inline_text(val) + "\n";
            } else {
                out += pad + key + ":\n";
                render(val, indent + 2, out);
            }
        }
    } else if (v.is_array()) {
        for (const auto& e : v) {
            if (e.is_object()) {
                std::string inner;
                render(e, indent + 2, inner);
                inner.replace(indent, 2, "- ");
                out += inner;
            } else {
                out += pad + "- " + inline_text(e) + "\n";
            }
        }
    } else {
        out += pad + scalar_text(v) + "\n";
    }
}

}  // namespace detail

/// Indented plain-text rendering of a report, in the same field order.
inline std::string render_text(const ordered_json& report) {
    std::string out;
    detail::render(report, 0, out);
    return out;
}

}  // namespace hypertoric
