#pragma once

// Sparse multivariate polynomials over an exact coefficient ring with a
// runtime-selected monomial order. Terms are kept sorted by decreasing
// monomial in the polynomial's order, so the first term is the leading one.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace hypertoric {

enum class MonomialOrder { GradedReverseLex, Lex, GradedLex };

inline std::string to_string(MonomialOrder o) {
    switch (o) {
        case MonomialOrder::GradedReverseLex: return "grevlex";
        case MonomialOrder::Lex: return "lex";
        case MonomialOrder::GradedLex: return "grlex";
    }
    return "?";
}

inline bool is_degree_compatible(MonomialOrder o) { return o != MonomialOrder::Lex; }

/// Exponent vector over m variables x1 > x2 > ... > xm.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
        for (auto e : exps_) degree_ += e;
    }

    static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1) {
        Monomial m(nvars);
        m.exps_[i] = power;
        m.degree_ = power;
        return m;
    }

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    /// Returns the index of the single variable this is a pure power of, or nvars().
    std::size_t pure_power_variable() const {
        std::size_t found = exps_.size();
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (found != exps_.size()) return exps_.size();
            found = i;
        }
        return found;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
        r.degree_ += b.degree_;
        return r;
    }

    /// a / b; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
        r.degree_ -= b.degree_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        r.degree_ = 0;
        for (std::size_t i = 0; i < r.exps_.size(); ++i) {
            r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
            r.degree_ += r.exps_[i];
        }
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    /// Plain lexicographic comparison of exponent vectors, for use as a map key.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

    std::string to_string() const {
        if (degree_ == 0) return "1";
        std::string s;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!s.empty()) s += '*';
            s += 'x' + std::to_string(i + 1);
            if (exps_[i] > 1) s += '^' + std::to_string(exps_[i]);
        }
        return s;
    }

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

/// Three-way comparison in the given order: negative if a < b.
inline int compare(MonomialOrder order, const Monomial& a, const Monomial& b) {
    const std::size_t n = a.nvars();
    if (order != MonomialOrder::Lex && a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    if (order == MonomialOrder::GradedReverseLex) {
        for (std::size_t i = n; i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        return 0;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

template <class Coeff>
struct Term {
    Monomial monomial;
    Coeff coeff;
};

template <class Coeff>
class Polynomial {
public:
    using term_type = Term<Coeff>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars, MonomialOrder order = MonomialOrder::GradedReverseLex)
        : nvars_(nvars), order_(order) {}

    static Polynomial constant(std::size_t nvars, const Coeff& c,
                               MonomialOrder order = MonomialOrder::GradedReverseLex) {
        Polynomial p(nvars, order);
        if (c != 0) p.terms_.push_back({Monomial(nvars), c});
        return p;
    }

    /// x_{i+1}
    static Polynomial variable(std::size_t nvars, std::size_t i,
                               MonomialOrder order = MonomialOrder::GradedReverseLex) {
        Polynomial p(nvars, order);
        p.terms_.push_back({Monomial::variable(nvars, i), Coeff(1)});
        return p;
    }

    static Polynomial monomial(const Monomial& m, const Coeff& c = Coeff(1),
                               MonomialOrder order = MonomialOrder::GradedReverseLex) {
        Polynomial p(m.nvars(), order);
        if (c != 0) p.terms_.push_back({m, c});
        return p;
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    static Polynomial from_terms(std::size_t nvars, MonomialOrder order, std::vector<term_type> terms) {
        std::map<Monomial, Coeff> acc;
        for (auto& t : terms) acc[t.monomial] += t.coeff;
        Polynomial p(nvars, order);
        for (auto& [m, c] : acc)
            if (c != 0) p.terms_.push_back({m, c});
        p.sort_terms();
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    MonomialOrder order() const { return order_; }
    const std::vector<term_type>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    const term_type& leading_term() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().monomial; }
    const Coeff& leading_coeff() const { return terms_.front().coeff; }

    /// Total degree of the highest-degree term; 0 for the zero polynomial.
    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
        return d;
    }

    std::uint32_t min_degree() const {
        if (terms_.empty()) throw ZeroPolynomial("min_degree of the zero polynomial");
        std::uint32_t d = terms_.front().monomial.degree();
        for (const auto& t : terms_) d = std::min(d, t.monomial.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        auto d = terms_.front().monomial.degree();
        return std::all_of(terms_.begin(), terms_.end(), [d](const term_type& t) { return t.monomial.degree() == d; });
    }

    Coeff coefficient(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.monomial == m) return t.coeff;
        return Coeff(0);
    }

    Coeff constant_term() const {
        if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
        return Coeff(0);
    }

    Polynomial with_order(MonomialOrder order) const {
        Polynomial p = *this;
        p.order_ = order;
        p.sort_terms();
        return p;
    }

    Polynomial operator-() const {
        Polynomial p = *this;
        for (auto& t : p.terms_) t.coeff = -t.coeff;
        return p;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, Coeff(1)); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, Coeff(-1)); }
    Polynomial& operator+=(const Polynomial& b) { return *this = merge(*this, b, Coeff(1)); }
    Polynomial& operator-=(const Polynomial& b) { return *this = merge(*this, b, Coeff(-1)); }

    friend Polynomial operator*(const Coeff& c, const Polynomial& p) {
        Polynomial r(p.nvars_, p.order_);
        if (c == 0) return r;
        r.terms_.reserve(p.terms_.size());
        for (const auto& t : p.terms_) r.terms_.push_back({t.monomial, Coeff(c * t.coeff)});
        return r;
    }

    /// c * m * p
    Polynomial scaled_shift(const Coeff& c, const Monomial& m) const {
        Polynomial r(nvars_, order_);
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, Coeff(c * t.coeff)});
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_compatible(a, b);
        std::map<Monomial, Coeff> acc;
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coeff * t.coeff;
        Polynomial r(a.nvars_, a.order_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) r.terms_.push_back({m, c});
        r.sort_terms();
        return r;
    }

    Polynomial pow(std::uint32_t e) const {
        Polynomial r = constant(nvars_, Coeff(1), order_);
        for (std::uint32_t i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// Homogeneous component of lowest total degree.
    Polynomial lowest_degree_form() const {
        if (terms_.empty()) throw ZeroPolynomial("lowest_degree_form of the zero polynomial");
        auto d = min_degree();
        Polynomial r(nvars_, order_);
        for (const auto& t : terms_)
            if (t.monomial.degree() == d) r.terms_.push_back(t);
        return r;
    }

    Polynomial homogeneous_component(std::uint32_t d) const {
        Polynomial r(nvars_, order_);
        for (const auto& t : terms_)
            if (t.monomial.degree() == d) r.terms_.push_back(t);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
        if (a.order_ != b.order_) return a == b.with_order(a.order_);
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }

    /// Canonical rendering: leading term first, explicit signs between terms,
    /// e.g. "x1*x2 - x3^2 - x1 - x2 + 2*x3".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            Coeff c = t.coeff;
            bool negative = c < 0;
            if (negative) c = -c;
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? " - " : " + ");
            first = false;
            if (t.monomial.is_one())
                os << c.get_str();
            else if (c == 1)
                os << t.monomial.to_string();
            else
                os << c.get_str() << '*' << t.monomial.to_string();
        }
        return os.str();
    }

private:
    static void check_compatible(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_) throw InvalidInput("polynomials over different variable counts");
    }

    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(), [o = order_](const term_type& x, const term_type& y) {
            return compare(o, x.monomial, y.monomial) > 0;
        });
    }

    // a + sign * b on sorted term lists.
    static Polynomial merge(const Polynomial& a, const Polynomial& b, const Coeff& sign) {
        check_compatible(a, b);
        if (a.order_ != b.order_) return merge(a, b.with_order(a.order_), sign);
        Polynomial r(a.nvars_, a.order_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int cmp;
            if (i == a.terms_.size())
                cmp = -1;
            else if (j == b.terms_.size())
                cmp = 1;
            else
                cmp = compare(a.order_, a.terms_[i].monomial, b.terms_[j].monomial);
            if (cmp > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (cmp < 0) {
                r.terms_.push_back({b.terms_[j].monomial, Coeff(sign * b.terms_[j].coeff)});
                ++j;
            } else {
                Coeff c = a.terms_[i].coeff + sign * b.terms_[j].coeff;
                if (c != 0) r.terms_.push_back({a.terms_[i].monomial, c});
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::size_t nvars_ = 0;
    MonomialOrder order_ = MonomialOrder::GradedReverseLex;
    std::vector<term_type> terms_;
};

using QPolynomial = Polynomial<Rational>;
using ZPolynomial = Polynomial<Integer>;

template <class Coeff>
Polynomial<Coeff> multiply(const Polynomial<Coeff>& p, const Polynomial<Coeff>& q) {
    return p * q;
}

template <class Coeff>
Polynomial<Coeff> lowest_degree_form(const Polynomial<Coeff>& p) {
    return p.lowest_degree_form();
}

inline QPolynomial to_rational(const ZPolynomial& p) {
    std::vector<Term<Rational>> terms;
    for (const auto& t : p.terms()) terms.push_back({t.monomial, Rational(t.coeff)});
    return QPolynomial::from_terms(p.nvars(), p.order(), std::move(terms));
}

/// Clears denominators and removes the content; leading coefficient made positive.
inline ZPolynomial primitive_integer_part(const QPolynomial& p) {
    Integer den = 1;
    for (const auto& t : p.terms()) den = lcm(den, t.coeff.get_den());
    std::vector<Term<Integer>> terms;
    Integer g = 0;
    for (const auto& t : p.terms()) {
        Integer c = t.coeff.get_num() * (den / t.coeff.get_den());
        g = gcd(g, c);
        terms.push_back({t.monomial, c});
    }
    if (g == 0) return ZPolynomial(p.nvars(), p.order());
    if (terms.front().coeff < 0) g = -g;
    for (auto& t : terms) t.coeff /= g;
    return ZPolynomial::from_terms(p.nvars(), p.order(), std::move(terms));
}

}  // namespace hypertoric
