#include <gtest/gtest.h>

#include <random>

#include "hypertoric/arrangement.hpp"
#include "oracles.hpp"

using namespace hypertoric;

namespace {

Datum cotangent(std::size_t n) {
    IntegerMatrix B(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        B(i, i) = 1;
        B(i, n) = -1;
    }
    return Datum(B, RationalVector(n + 1, Rational(1)));
}

Datum three_points() { return Datum(IntegerMatrix{{1, 1, -1}}, {Rational(1), Rational(2), Rational(1)}); }

RationalVector ints(std::initializer_list<long> xs) {
    RationalVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// Exhaustive emptiness by the rank oracle.
bool oracle_empty(const Arrangement& a, const IndexSet& I) {
    std::vector<std::vector<oracle::Z>> rows;
    std::vector<oracle::Q> rhs;
    for (auto i : I) {
        rows.push_back(a.hyperplanes[i].normal);
        rhs.push_back(a.hyperplanes[i].constant);
    }
    return !oracle::affine_feasible(rows, rhs);
}

Datum random_datum(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    for (;;) {
        IntegerMatrix B(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) B(i, j) = static_cast<long>(rng() % 5) - 2;
        RationalVector lift;
        for (std::size_t j = 0; j < m; ++j) {
            Rational q(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 3));
            q.canonicalize();
            lift.push_back(q);
        }
        Datum d(B, lift);
        if (d.is_split()) return d;
    }
}

}  // namespace

TEST(Datum, RejectsBadShapes) {
    EXPECT_THROW(Datum(IntegerMatrix{{1}, {0}}, ints({0})), InvalidInput);  // m < n
    EXPECT_THROW(Datum(IntegerMatrix{{1, 1}}, ints({0})), InvalidInput);    // lift length
    EXPECT_THROW(Datum(IntegerMatrix(0, 1), ints({0})), InvalidInput);
}

TEST(ArrangementFromDatum, CotangentP2) {
    auto a = arrangement_from_datum(cotangent(2));
    ASSERT_EQ(a.size(), 3u);
    // a1 = -1, a2 = -1, -(a1 + a2) = -1
    EXPECT_EQ(a.hyperplanes[0].normal, (IntegerVector{1, 0}));
    EXPECT_EQ(a.hyperplanes[0].constant, -1);
    EXPECT_EQ(a.hyperplanes[1].normal, (IntegerVector{0, 1}));
    EXPECT_EQ(a.hyperplanes[1].constant, -1);
    EXPECT_EQ(a.hyperplanes[2].normal, (IntegerVector{-1, -1}));
    EXPECT_EQ(a.hyperplanes[2].constant, -1);
}

TEST(ArrangementFromDatum, SingleWallThroughOrigin) {
    auto a = arrangement_from_datum(Datum(IntegerMatrix{{1}}, ints({0})));
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a.hyperplanes[0].constant, 0);
}

TEST(ArrangementFromDatum, ThreePoints) {
    auto a = arrangement_from_datum(three_points());
    // p = -1, p = -2, -p = -1 (i.e. p = 1)
    EXPECT_EQ(a.hyperplanes[0].constant, -1);
    EXPECT_EQ(a.hyperplanes[1].constant, -2);
    EXPECT_EQ(a.hyperplanes[2].normal, (IntegerVector{-1}));
    EXPECT_EQ(a.hyperplanes[2].constant, -1);
}

TEST(ArrangementFromDatum, NonPrimitiveColumnThrows) {
    EXPECT_THROW(arrangement_from_datum(Datum(IntegerMatrix{{2}}, ints({0}))), NonPrimitiveNormal);
    EXPECT_THROW(arrangement_from_datum(Datum(IntegerMatrix{{1, 0}}, ints({0, 1}))), NonPrimitiveNormal);
}

TEST(FlatOf, Examples) {
    auto p1 = arrangement_from_datum(cotangent(1));
    EXPECT_TRUE(flat_of(p1, {0, 1}).empty);
    auto f = flat_of(p1, {0});
    EXPECT_FALSE(f.empty);
    EXPECT_EQ(f.dim, 0u);

    auto p2 = arrangement_from_datum(cotangent(2));
    auto g = flat_of(p2, {0, 1});
    EXPECT_FALSE(g.empty);
    EXPECT_EQ(g.dim, 0u);
    EXPECT_EQ(flat_of(p2, {2}).dim, 1u);
    EXPECT_TRUE(flat_of(p2, {0, 1, 2}).empty);
    EXPECT_THROW(flat_of(p2, {}), InvalidInput);
    EXPECT_THROW(flat_of(p2, {5}), InvalidInput);
}

TEST(MinimalEmptySubsets, Examples) {
    for (std::size_t n = 1; n <= 4; ++n) {
        auto got = minimal_empty_subsets(arrangement_from_datum(cotangent(n)));
        IndexSet all;
        for (std::size_t i = 0; i <= n; ++i) all.push_back(i);
        EXPECT_EQ(got, std::vector<IndexSet>{all}) << "n=" << n;
    }
    EXPECT_EQ(minimal_empty_subsets(arrangement_from_datum(three_points())),
              (std::vector<IndexSet>{{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_TRUE(minimal_empty_subsets(arrangement_from_datum(Datum(IntegerMatrix{{1}}, ints({3})))).empty());
}

TEST(Vertices, Examples) {
    auto v1 = vertices(arrangement_from_datum(cotangent(1)));
    ASSERT_EQ(v1.size(), 2u);
    EXPECT_EQ(v1[0].point, ints({-1}));
    EXPECT_EQ(v1[1].point, ints({1}));

    auto v2 = vertices(arrangement_from_datum(cotangent(2)));
    ASSERT_EQ(v2.size(), 3u);
    EXPECT_EQ(v2[0].point, ints({-1, -1}));
    EXPECT_EQ(v2[1].point, ints({-1, 2}));
    EXPECT_EQ(v2[2].point, ints({2, -1}));
    EXPECT_EQ(v2[0].index_sets, (std::vector<IndexSet>{{0, 1}}));

    EXPECT_EQ(vertices(arrangement_from_datum(cotangent(3))).size(), 4u);
    EXPECT_EQ(vertices(arrangement_from_datum(Datum(IntegerMatrix{{1}}, ints({0})))).size(), 1u);
}

TEST(Vertices, NotSimpleThrows) {
    Datum concurrent(IntegerMatrix{{1, 0, 1}, {0, 1, 1}}, ints({0, 0, 0}));
    EXPECT_THROW(vertices(arrangement_from_datum(concurrent)), NotSimple);
}

TEST(CertifySmooth, CotangentIsSmooth) {
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(certify_smooth(cotangent(n)).smooth()) << "n=" << n;
}

TEST(CertifySmooth, ConcurrentLines) {
    Datum d(IntegerMatrix{{1, 0, 1}, {0, 1, 1}}, ints({0, 0, 0}));
    auto r = certify_smooth(d);
    ASSERT_FALSE(r.smooth());
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0], (Violation{{0, 1, 2}, ViolationKind::CodimensionDrop}));
}

TEST(CertifySmooth, NonPrimitiveNormal) {
    auto r = certify_smooth(Datum(IntegerMatrix{{2}}, ints({0})));
    ASSERT_FALSE(r.smooth());
    EXPECT_TRUE(r.has(ViolationKind::NotUnimodular));
    EXPECT_TRUE(r.has(ViolationKind::NonPrimitiveNormal));
    for (const auto& v : r.violations) EXPECT_EQ(v.subset, IndexSet{0});
}

TEST(CertifySmooth, UnimodularityFailureOnAVertex) {
    // Normals (1,1) and (1,-1) meet in a point but span an index-2 sublattice.
    Datum d(IntegerMatrix{{1, 1, 1}, {1, -1, 0}}, ints({0, 0, 5}));
    auto r = certify_smooth(d);
    EXPECT_TRUE(r.has(ViolationKind::NotUnimodular));
    EXPECT_FALSE(r.has(ViolationKind::CodimensionDrop));
}

TEST(ArrangementProperties, BruteForceAgreement) {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 3, m = n + rng() % (8 - n);
        auto d = random_datum(rng, n, m);
        auto a = detail::raw_arrangement(d);
        auto minimal = minimal_empty_subsets(a);
        std::vector<std::uint32_t> min_bits;
        for (const auto& I : minimal) min_bits.push_back(detail::set_to_bits(I));
        for (std::uint32_t bits = 1; bits < (1u << m); ++bits) {
            auto I = detail::bits_to_set(bits);
            bool empty = oracle_empty(a, I);
            bool covered = false;
            for (auto b : min_bits) covered |= (b & bits) == b;
            EXPECT_EQ(empty, covered);
            EXPECT_EQ(flat_of(a, I).empty, empty);
        }
        for (const auto& I : minimal) {
            ASSERT_TRUE(oracle_empty(a, I));
            for (std::size_t drop = 0; drop < I.size() && I.size() > 1; ++drop) {
                IndexSet J = I;
                J.erase(J.begin() + static_cast<long>(drop));
                EXPECT_FALSE(oracle_empty(a, J));
            }
        }
        EXPECT_TRUE(std::is_sorted(minimal.begin(), minimal.end()));
    }
}

TEST(ArrangementProperties, SmoothVerticesHaveExactIncidence) {
    std::mt19937_64 rng(4242);
    int smooth_seen = 0;
    for (int trial = 0; trial < 400 && smooth_seen < 25; ++trial) {
        std::size_t n = 1 + rng() % 3, m = n + rng() % (7 - n);
        auto d = random_datum(rng, n, m);
        if (!certify_smooth(d).smooth()) continue;
        ++smooth_seen;
        auto a = arrangement_from_datum(d);
        for (const auto& v : vertices(a)) {
            ASSERT_EQ(v.index_sets.size(), 1u);
            std::size_t incident = 0;
            for (const auto& h : a.hyperplanes) {
                Rational s = 0;
                for (std::size_t k = 0; k < n; ++k) s += Rational(h.normal[k]) * v.point[k];
                if (s == h.constant) ++incident;
            }
            EXPECT_EQ(incident, n);
        }
    }
    EXPECT_GE(smooth_seen, 10);
}

TEST(ArrangementProperties, TranslationInvariance) {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 3, m = n + rng() % (7 - n);
        auto d = random_datum(rng, n, m);
        IntegerVector t;
        for (std::size_t k = 0; k < n; ++k) t.emplace_back(static_cast<long>(rng() % 7) - 3);
        RationalVector lift = d.lift();
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < n; ++k) lift[j] += Rational(d.B()(k, j) * t[k]);
        Datum moved(d.B(), lift);

        auto a0 = detail::raw_arrangement(d), a1 = detail::raw_arrangement(moved);
        EXPECT_EQ(minimal_empty_subsets(a0), minimal_empty_subsets(a1));
        auto s0 = certify_smooth(d), s1 = certify_smooth(moved);
        EXPECT_EQ(s0.violations, s1.violations);
        if (!s0.has(ViolationKind::CodimensionDrop)) {
            auto v0 = vertices(a0), v1 = vertices(a1);
            ASSERT_EQ(v0.size(), v1.size());
            // Hyperplanes <p, v> = -lift move to p - t.
            for (std::size_t k = 0; k < v0.size(); ++k) {
                RationalVector shifted = v0[k].point;
                for (std::size_t c = 0; c < n; ++c) shifted[c] -= Rational(t[c]);
                bool present = false;
                for (const auto& w : v1) present |= w.point == shifted;
                EXPECT_TRUE(present);
            }
        }
    }
}

TEST(ArrangementProperties, EmptinessIsUpwardClosed) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 2, m = n + rng() % 4;
        auto a = detail::raw_arrangement(random_datum(rng, n, m));
        for (std::uint32_t I = 1; I < (1u << m); ++I)
            for (std::uint32_t J = I; J < (1u << m); ++J) {
                if ((I & J) != I) continue;
                if (flat_of(a, detail::bits_to_set(I)).empty) {
                    EXPECT_TRUE(flat_of(a, detail::bits_to_set(J)).empty);
                }
            }
    }
}
