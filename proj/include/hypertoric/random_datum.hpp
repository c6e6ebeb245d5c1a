#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "arrangement.hpp"
#include "errors.hpp"

namespace hypertoric {

struct RandomDatum {
    Datum datum;
    std::size_t attempts = 0;
};

/// Rejection sampling of split, smooth data: B entries in [-2, 2], lift
/// entries p/q with |p| <= 6 and 1 <= q <= 3. Deterministic per seed.
inline RandomDatum random_datum(std::size_t m, std::size_t n, std::uint64_t seed, std::size_t max_attempts = 500000) {
    if (n < 1 || m < n) throw InvalidInput("random datum needs m >= n >= 1");
    if (m > Datum::kMaxHyperplanes) throw InvalidInput("random datum: m is too large");
    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
        IntegerMatrix B(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) B(i, j) = static_cast<long>(rng() % 5) - 2;
        RationalVector lift;
        for (std::size_t j = 0; j < m; ++j) {
            Rational q(static_cast<long>(rng() % 13) - 6, static_cast<long>(1 + rng() % 3));
            q.canonicalize();
            lift.push_back(q);
        }
        bool primitive = true;
        for (std::size_t j = 0; j < m && primitive; ++j) primitive = content(B.column(j)) == 1;
        if (!primitive) continue;
        Datum d(std::move(B), std::move(lift));
        if (d.is_split() && is_smooth(d)) return {std::move(d), attempt};
    }
    throw GiveUp("no split smooth datum with m = " + std::to_string(m) + ", n = " + std::to_string(n) + " after " +
                 std::to_string(max_attempts) + " attempts");
}

}  // namespace hypertoric
