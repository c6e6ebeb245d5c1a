#pragma once

// The linear forms h_u and the K-theoretic differences z_u attached to a datum.

#include <cstdint>
#include <vector>

#include "arrangement.hpp"
#include "polynomial.hpp"

namespace hypertoric {

/// <u, v_j> for every column j of B.
inline IntegerVector pairings(const Datum& d, const IntegerVector& u) {
    if (u.size() != d.n()) throw InvalidInput("u must have length n");
    IntegerVector out(d.m(), Integer(0));
    for (std::size_t j = 0; j < d.m(); ++j)
        for (std::size_t k = 0; k < d.n(); ++k) out[j] += u[k] * d.B()(k, j);
    return out;
}

/// h_u = sum_j <u, v_j> x_j
inline QPolynomial build_h_u(const Datum& d, const IntegerVector& u,
                             MonomialOrder order = MonomialOrder::GradedReverseLex) {
    auto w = pairings(d, u);
    std::vector<Term<Rational>> terms;
    for (std::size_t j = 0; j < d.m(); ++j)
        if (w[j] != 0) terms.push_back({Monomial::variable(d.m(), j), Rational(w[j])});
    return QPolynomial::from_terms(d.m(), order, std::move(terms));
}

/// prod_{w_j > 0} (1 - x_j)^{w_j}, or the same over w_j < 0 with -w_j when
/// `negative_side` is set. Empty products give 1.
inline QPolynomial one_minus_x_product(const Datum& d, const IntegerVector& w, bool negative_side,
                                       MonomialOrder order) {
    const std::size_t m = d.m();
    auto result = QPolynomial::constant(m, Rational(1), order);
    for (std::size_t j = 0; j < m; ++j) {
        Integer e = negative_side ? Integer(-w[j]) : w[j];
        if (e <= 0) continue;
        auto factor = QPolynomial::constant(m, Rational(1), order) - QPolynomial::variable(m, j, order);
        for (Integer k = 0; k < e; ++k) result = result * factor;
    }
    return result;
}

/// z_u = prod_{<u,v_j> > 0} (1 - x_j)^{<u,v_j>} - prod_{<u,v_j> < 0} (1 - x_j)^{-<u,v_j>}
inline QPolynomial build_z_u(const Datum& d, const IntegerVector& u,
                             MonomialOrder order = MonomialOrder::GradedReverseLex) {
    auto w = pairings(d, u);
    return one_minus_x_product(d, w, false, order) - one_minus_x_product(d, w, true, order);
}

}  // namespace hypertoric
