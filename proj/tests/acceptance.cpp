// Acceptance suite. Prints one PASS/FAIL line per criterion on stdout;
// findings and counterexamples go to stderr. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypertoric/datum_io.hpp"
#include "hypertoric/presentations.hpp"
#include "hypertoric/random_datum.hpp"
#include "hypertoric/report.hpp"
#include "oracles.hpp"

using namespace hypertoric;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct SuiteEntry {
    Datum datum;
    std::uint64_t seed;
};

constexpr std::size_t kSuiteSize = 54;
constexpr std::uint64_t kSuiteSeed = 1000;
constexpr std::uint64_t kUSeed = 77;

/// Every (m, n) with 1 <= n <= 3 and n <= m <= 7, cycled.
std::vector<std::pair<std::size_t, std::size_t>> suite_shapes() {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t m = n; m <= 7; ++m) out.emplace_back(m, n);
    return out;
}

std::vector<SuiteEntry> build_suite() {
    auto shapes = suite_shapes();
    std::vector<SuiteEntry> out;
    for (std::size_t k = 0; k < kSuiteSize; ++k) {
        auto [m, n] = shapes[k % shapes.size()];
        out.push_back({random_datum(m, n, kSuiteSeed + k).datum, kSuiteSeed + k});
    }
    return out;
}

std::string describe(const Datum& d) {
    std::string s = emit_datum(d);
    for (auto& c : s)
        if (c == '\n') c = ' ';
    return s;
}

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " " << id << " " << name << ": " << detail << std::endl;
    if (!pass) ++failures;
}

/// Runs a criterion body, turning an escaped exception into a FAIL line.
void criterion(int id, const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [pass, detail] = body();
        report(id, name, pass, detail);
    } catch (const std::exception& e) {
        report(id, name, false, std::string("exception: ") + e.what());
    }
}

// ---- independent combinatorics ----

std::vector<oracle::Z> normal_of(const Datum& d, std::size_t i) {
    std::vector<oracle::Z> v;
    for (std::size_t r = 0; r < d.n(); ++r) v.push_back(d.B()(r, i));
    return v;
}

std::vector<std::size_t> members(std::uint32_t bits) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; bits >> i; ++i)
        if ((bits >> i) & 1u) out.push_back(i);
    return out;
}

/// Emptiness of every subset's intersection, by rank test on <p, v_i> = -lift_i.
std::vector<bool> empty_by_subset(const Datum& d) {
    const std::size_t m = d.m();
    std::vector<bool> empty(std::size_t(1) << m, false);
    for (std::uint32_t bits = 1; bits < (1u << m); ++bits) {
        std::vector<std::vector<oracle::Z>> A;
        std::vector<oracle::Q> b;
        for (auto i : members(bits)) {
            A.push_back(normal_of(d, i));
            b.push_back(-d.lift()[i]);
        }
        empty[bits] = !oracle::affine_feasible(A, b);
    }
    return empty;
}

std::vector<IndexSet> exhaustive_minimal_empty(const Datum& d) {
    auto empty = empty_by_subset(d);
    std::vector<IndexSet> out;
    for (std::uint32_t bits = 1; bits < empty.size(); ++bits) {
        if (!empty[bits]) continue;
        bool minimal = true;
        for (auto i : members(bits)) minimal = minimal && !empty[bits & ~(1u << i)];
        if (!minimal) continue;
        auto mem = members(bits);
        out.push_back(IndexSet(mem.begin(), mem.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Violation> exhaustive_violations(const Datum& d) {
    const std::size_t m = d.m();
    auto empty = empty_by_subset(d);
    std::vector<Violation> out;
    for (std::size_t i = 0; i < m; ++i) {
        oracle::Z g = 0;
        for (const auto& x : normal_of(d, i)) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g != 1) out.push_back({{i}, ViolationKind::NonPrimitiveNormal});
    }
    for (std::uint32_t bits = 1; bits < empty.size(); ++bits) {
        if (empty[bits]) continue;
        auto mem = members(bits);
        IndexSet I(mem.begin(), mem.end());
        std::vector<std::vector<oracle::Q>> rows;
        for (auto i : mem) {
            auto v = normal_of(d, i);
            rows.emplace_back(v.begin(), v.end());
        }
        if (oracle::rank_q(rows) < mem.size()) {
            out.push_back({I, ViolationKind::CodimensionDrop});
            continue;
        }
        oracle::ZMat cols(d.n(), std::vector<oracle::Z>(mem.size()));
        for (std::size_t c = 0; c < mem.size(); ++c)
            for (std::size_t r = 0; r < d.n(); ++r) cols[r][c] = d.B()(r, mem[c]);
        auto factors = oracle::invariant_factors_by_minors(cols);
        bool unimodular = factors.size() == mem.size();
        for (const auto& f : factors) unimodular = unimodular && abs(f) == 1;
        if (!unimodular) out.push_back({I, ViolationKind::NotUnimodular});
    }
    std::sort(out.begin(), out.end(), [](const Violation& x, const Violation& y) {
        if (x.subset != y.subset) return x.subset < y.subset;
        return static_cast<int>(x.kind) < static_cast<int>(y.kind);
    });
    return out;
}

/// Unfiltered draws from the same entry ranges as the sampler, so that
/// rejected data are exercised too.
std::vector<Datum> raw_data(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto shapes = suite_shapes();
    std::vector<Datum> out;
    for (std::size_t k = 0; k < count; ++k) {
        auto [m, n] = shapes[k % shapes.size()];
        IntegerMatrix B(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) B(i, j) = static_cast<long>(rng() % 5) - 2;
        RationalVector lift;
        for (std::size_t j = 0; j < m; ++j) {
            Rational q(static_cast<long>(rng() % 7) - 3, static_cast<long>(1 + rng() % 2));
            q.canonicalize();
            lift.push_back(q);
        }
        out.emplace_back(std::move(B), std::move(lift));
    }
    return out;
}

ordered_json full_report(const Datum& d) {
    ReportOptions opts;
    opts.seed = kUSeed;
    ordered_json r;
    r["input"] = datum_to_json(d);
    r["smoothness"] = smoothness_block(d);
    r["arrangement"] = arrangement_block(d);
    r["cohomology"] = cohomology_block(d, opts);
    r["ktheory"] = ktheory_block(d, opts);
    r["ranks"] = ranks_block(d, opts);
    r["verification"] = verification_block(d, opts);
    r["meta"] = meta_block("verify", opts);
    return r;
}

}  // namespace

int main() {
    criterion(1, "cotangent golden example", [] {
        auto t0 = Clock::now();
        std::ostringstream detail;
        bool ok = true;
        for (std::size_t n = 1; n <= 4; ++n) {
            auto d = cotangent_projective_datum(n);
            bool iso = verify_cotangent_iso(n);
            auto r = ranks_and_betti(d);
            bool ranks = r.k_rank == n + 1 && r.cohom_rank == n + 1 && r.vertex_count == n + 1;
            ok = ok && iso && ranks;
            detail << "n=" << n << " iso=" << (iso ? "yes" : "no") << " ranks=" << r.k_rank << "/" << r.cohom_rank << "/"
                   << r.vertex_count << "; ";
        }
        double t = seconds_since(t0);
        detail << "time " << t << "s (limit 10s)";
        return std::pair{ok && t < 10.0, detail.str()};
    });

    auto t_suite = Clock::now();
    std::vector<SuiteEntry> suite;
    try {
        suite = build_suite();
    } catch (const std::exception& e) {
        std::cerr << "suite construction failed: " << e.what() << "\n";
    }

    criterion(2, "rank equality on random smooth data", [&] {
        std::size_t good = 0;
        for (const auto& s : suite) {
            auto r = ranks_and_betti(s.datum);
            if (r.cohom_rank == r.k_rank && r.k_rank == r.vertex_count)
                ++good;
            else
                std::cerr << "finding: ranks " << r.cohom_rank << "/" << r.k_rank << "/" << r.vertex_count
                          << " differ for " << describe(s.datum) << "\n";
        }
        double t = seconds_since(t_suite);
        std::ostringstream detail;
        detail << good << "/" << suite.size() << " data with dim J = dim J' = vertex count; time " << t
               << "s including sampling (limit 120s)";
        return std::pair{suite.size() >= 50 && good == suite.size() && t < 120.0, detail.str()};
    });

    criterion(3, "initial forms", [&] {
        std::size_t checks = 0, skipped = 0;
        int sign = 0;
        bool ok = !suite.empty();
        for (const auto& s : suite) {
            auto r = verify_initial_forms(s.datum, sample_u_vectors(s.datum.n(), 10, s.seed));
            for (const auto& c : r.checks) {
                ++checks;
                if (c.skipped) ++skipped;
            }
            int here = r.consistent_sign();
            if (!r.all_match() || here == 0 || (sign != 0 && here != sign)) {
                ok = false;
                std::cerr << "finding: initial form mismatch for " << describe(s.datum) << "\n";
            }
            if (sign == 0) sign = here;
        }
        std::ostringstream detail;
        detail << checks << " checks (" << skipped << " with z_u = 0), observed sign " << sign << " (expected -1)";
        return std::pair{ok && sign == -1, detail.str()};
    });

    criterion(4, "u-stability of the reduced basis", [&] {
        std::size_t checked = 0;
        for (const auto& s : suite) {
            auto us = sample_u_vectors(s.datum.n(), 20, kUSeed + s.seed);
            auto r = verify_u_stability_report(s.datum, us, StabilityMethod::FullBasis);
            checked += r.checked.size();
            if (!r.stable) {
                std::ostringstream detail;
                detail << "counterexample u = " << detail::integer_vector_json(*r.counterexample).dump() << " for "
                       << describe(s.datum);
                std::cerr << "finding: " << detail.str() << "\n";
                return std::pair{false, detail.str()};
            }
        }
        std::size_t narrow_short = 0;
        for (const auto& s : suite) {
            auto narrow = quotient_dimension(groebner_basis(ktheory_presentation(s.datum, standard_basis(s.datum.n())).ideal));
            if (narrow != vertices(arrangement_from_datum(s.datum)).size()) ++narrow_short;
        }
        std::cerr << "finding: with the standard basis alone as u-set, " << narrow_short << "/" << suite.size()
                  << " suite data have a K-ideal of the wrong rank\n";
        std::ostringstream detail;
        detail << checked << " adjoined z_u over " << suite.size() << " data, reduced basis unchanged each time";
        return std::pair{!suite.empty(), detail.str()};
    });

    criterion(5, "combinatorics oracle", [&] {
        std::size_t instances = 0, rejected = 0;
        bool ok = true;
        auto check = [&](const Datum& d) {
            ++instances;
            auto expected_min = exhaustive_minimal_empty(d);
            auto expected_viol = exhaustive_violations(d);
            auto got_min = minimal_empty_subsets(detail::raw_arrangement(d));
            auto got = certify_smooth(d);
            if (!expected_viol.empty()) ++rejected;
            if (got_min != expected_min || got.violations != expected_viol || is_smooth(d) != expected_viol.empty()) {
                ok = false;
                std::cerr << "finding: combinatorics disagree for " << describe(d) << "\n";
            }
        };
        for (const auto& s : suite) check(s.datum);
        for (const auto& d : raw_data(360, 4242)) check(d);
        std::ostringstream detail;
        detail << instances << " instances (" << rejected
               << " non-smooth) agree with exhaustive subset enumeration and minors-based Smith form";
        return std::pair{ok, detail.str()};
    });

    criterion(6, "known rejects", [] {
        IntegerMatrix two(1, 1);
        two(0, 0) = 2;
        auto r1 = certify_smooth(Datum(two, {Rational(0)}));
        IntegerMatrix lines(2, 3);
        lines(0, 0) = 1;
        lines(0, 2) = 1;
        lines(1, 1) = 1;
        lines(1, 2) = 1;
        auto r2 = certify_smooth(Datum(lines, RationalVector(3, Rational(0))));
        bool a = r1.has(ViolationKind::NotUnimodular);
        bool b = r2.has(ViolationKind::CodimensionDrop);
        std::ostringstream detail;
        detail << "B=[[2]] NotUnimodular=" << (a ? "yes" : "no")
               << ", concurrent lines CodimensionDrop=" << (b ? "yes" : "no");
        return std::pair{a && b && !r1.smooth() && !r2.smooth(), detail.str()};
    });

    criterion(7, "nilpotence and unit certificates", [&] {
        std::size_t vars = 0;
        bool ok = !suite.empty();
        for (const auto& s : suite) {
            auto G = groebner_basis(ktheory_presentation(s.datum).ideal);
            QuotientAlgebra Q(G);
            auto r = certify_units_and_nilpotence(Q);
            vars += r.nilpotency_index.size();
            if (!r.all_nilpotent() || !r.all_units()) {
                ok = false;
                std::cerr << "finding: unit/nilpotence certificate failed for " << describe(s.datum) << "\n";
            }
        }
        std::ostringstream detail;
        detail << vars << " generators nilpotent with (1 - x_j) invertible, over " << suite.size() << " data";
        return std::pair{ok, detail.str()};
    });

    criterion(8, "determinism", [&] {
        std::size_t same = 0;
        auto again = build_suite();
        bool data_same = again.size() == suite.size();
        for (std::size_t k = 0; data_same && k < suite.size(); ++k)
            data_same = emit_datum(again[k].datum) == emit_datum(suite[k].datum);
        std::vector<Datum> inputs;
        for (std::size_t n = 1; n <= 4; ++n) inputs.push_back(cotangent_projective_datum(n));
        for (const auto& s : suite) inputs.push_back(s.datum);
        for (const auto& d : inputs) {
            auto first = full_report(d).dump(2);
            auto second = full_report(d).dump(2);
            if (first == second)
                ++same;
            else
                std::cerr << "finding: report differs between runs for " << describe(d) << "\n";
        }
        std::ostringstream detail;
        detail << "suite regenerated " << (data_same ? "identically" : "DIFFERENTLY") << "; " << same << "/"
               << inputs.size() << " full reports byte-identical across two runs";
        return std::pair{data_same && same == inputs.size(), detail.str()};
    });

    return failures == 0 ? 0 : 1;
}
