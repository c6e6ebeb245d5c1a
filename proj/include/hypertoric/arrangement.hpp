#pragma once

// Lattice datum -> affine hyperplane arrangement, flats, minimal empty
// subsets, vertices and the smoothness certificate.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exact_linalg.hpp"

namespace hypertoric {

/// Ordered index set into {0..m-1}; always kept sorted ascending.
using IndexSet = std::vector<std::size_t>;

/// Lattice input: B is n x m (column i is v_i) and lift is the chosen
/// v in t* (length m). Construction checks shapes only; splitness and
/// smoothness are certified separately so that rejected data can still be
/// diagnosed.
class Datum {
public:
    static constexpr std::size_t kMaxHyperplanes = 24;

    Datum(IntegerMatrix B, RationalVector lift) : B_(std::move(B)), lift_(std::move(lift)) {
        if (B_.rows() < 1) throw InvalidInput("datum: n must be at least 1");
        if (B_.cols() < B_.rows()) throw InvalidInput("datum: m must be at least n");
        if (B_.cols() > kMaxHyperplanes) throw InvalidInput("datum: more hyperplanes than supported");
        if (lift_.size() != B_.cols()) throw InvalidInput("datum: lift length must equal m");
    }

    std::size_t n() const { return B_.rows(); }
    std::size_t m() const { return B_.cols(); }
    const IntegerMatrix& B() const { return B_; }
    const RationalVector& lift() const { return lift_; }

    /// v_i = rho(e_i), the i-th column of B.
    IntegerVector normal(std::size_t i) const { return B_.column(i); }

    bool is_split() const { return is_split_surjection(B_); }

    friend bool operator==(const Datum&, const Datum&) = default;

private:
    IntegerMatrix B_;
    RationalVector lift_;
};

/// {p : <p, normal> = constant}.
struct Hyperplane {
    IntegerVector normal;
    Rational constant;
};

struct Arrangement {
    std::size_t dim = 0;
    std::vector<Hyperplane> hyperplanes;

    std::size_t size() const { return hyperplanes.size(); }
};

namespace detail {

inline Arrangement raw_arrangement(const Datum& d) {
    Arrangement a;
    a.dim = d.n();
    for (std::size_t i = 0; i < d.m(); ++i) a.hyperplanes.push_back({d.normal(i), -d.lift()[i]});
    return a;
}

inline IntegerMatrix stacked_normals(const Arrangement& a, const IndexSet& I) {
    IntegerMatrix A(I.size(), a.dim);
    for (std::size_t r = 0; r < I.size(); ++r)
        for (std::size_t c = 0; c < a.dim; ++c) A(r, c) = a.hyperplanes[I[r]].normal[c];
    return A;
}

inline RationalVector stacked_constants(const Arrangement& a, const IndexSet& I) {
    RationalVector b;
    for (auto i : I) b.push_back(a.hyperplanes[i].constant);
    return b;
}

inline IndexSet bits_to_set(std::uint32_t bits) {
    IndexSet s;
    for (std::size_t i = 0; bits != 0; ++i, bits >>= 1)
        if (bits & 1u) s.push_back(i);
    return s;
}

inline std::uint32_t set_to_bits(const IndexSet& s) {
    std::uint32_t b = 0;
    for (auto i : s) b |= (1u << i);
    return b;
}

/// All subsets of {0..m-1} of the given size, as bitmasks in lexicographic order.
inline std::vector<std::uint32_t> subsets_of_size(std::size_t m, std::size_t k) {
    std::vector<std::uint32_t> out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > m) return out;
    for (;;) {
        std::uint32_t bits = 0;
        for (auto i : idx) bits |= (1u << i);
        out.push_back(bits);
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == m - k + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace detail

/// Hyperplane i has normal = column i of B and constant = -lift[i].
/// Throws NonPrimitiveNormal when a column is zero or not primitive.
inline Arrangement arrangement_from_datum(const Datum& d) {
    for (std::size_t i = 0; i < d.m(); ++i)
        if (content(d.normal(i)) != 1)
            throw NonPrimitiveNormal("column " + std::to_string(i + 1) + " of B is not a primitive vector");
    return detail::raw_arrangement(d);
}

/// Intersection of a subset of hyperplanes: empty, or an affine flat of
/// the given dimension.
struct Flat {
    bool empty = true;
    std::size_t dim = 0;
};

inline Flat flat_of(const Arrangement& a, const IndexSet& I) {
    if (I.empty()) throw InvalidInput("flat_of: empty index set");
    for (auto i : I)
        if (i >= a.size()) throw InvalidInput("flat_of: index out of range");
    auto A = detail::stacked_normals(a, I);
    auto sol = solve_affine(A, detail::stacked_constants(a, I));
    if (!sol.feasible) return {true, 0};
    return {false, a.dim - rank(A)};
}

/// Inclusion-minimal index sets whose hyperplanes have empty intersection,
/// sorted lexicographically.
inline std::vector<IndexSet> minimal_empty_subsets(const Arrangement& a) {
    const std::size_t m = a.size();
    std::vector<std::uint32_t> found;
    for (std::size_t k = 1; k <= m; ++k) {
        for (auto bits : detail::subsets_of_size(m, k)) {
            bool covers_known = std::any_of(found.begin(), found.end(),
                                            [bits](std::uint32_t e) { return (e & bits) == e; });
            if (covers_known) continue;
            if (flat_of(a, detail::bits_to_set(bits)).empty) found.push_back(bits);
        }
    }
    std::vector<IndexSet> out;
    for (auto b : found) out.push_back(detail::bits_to_set(b));
    std::sort(out.begin(), out.end());
    return out;
}

enum class ViolationKind { CodimensionDrop, NotUnimodular, NonPrimitiveNormal };

inline std::string to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::CodimensionDrop: return "CodimensionDrop";
        case ViolationKind::NotUnimodular: return "NotUnimodular";
        case ViolationKind::NonPrimitiveNormal: return "NonPrimitiveNormal";
    }
    return "?";
}

struct Violation {
    IndexSet subset;
    ViolationKind kind;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct SmoothnessReport {
    std::vector<Violation> violations;

    bool smooth() const { return violations.empty(); }
    bool has(ViolationKind k) const {
        return std::any_of(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; });
    }
};

/// Checks, for every index set with a nonempty flat, that the flat has
/// codimension |I| (else CodimensionDrop) and that independent normals
/// extend to a Z-basis (else NotUnimodular). Zero or non-primitive columns
/// are additionally reported as NonPrimitiveNormal on their singleton.
inline SmoothnessReport certify_smooth(const Datum& d);

namespace detail {

/// Walks subsets by increasing size; with `stop_at_first` it returns as soon
/// as one violation is recorded.
inline SmoothnessReport scan_smoothness(const Datum& d, bool stop_at_first) {
    SmoothnessReport report;
    auto a = raw_arrangement(d);
    const std::size_t m = d.m();
    for (std::size_t i = 0; i < m; ++i)
        if (content(d.normal(i)) != 1) {
            report.violations.push_back({{i}, ViolationKind::NonPrimitiveNormal});
            if (stop_at_first) return report;
        }

    std::vector<std::uint32_t> empty_sets;
    for (std::size_t k = 1; k <= m; ++k) {
        for (auto bits : subsets_of_size(m, k)) {
            if (std::any_of(empty_sets.begin(), empty_sets.end(), [bits](std::uint32_t e) { return (e & bits) == e; }))
                continue;
            auto I = bits_to_set(bits);
            auto A = stacked_normals(a, I);
            if (!solve_affine(A, stacked_constants(a, I)).feasible) {
                empty_sets.push_back(bits);
                continue;
            }
            if (rank(A) < I.size()) {
                report.violations.push_back({I, ViolationKind::CodimensionDrop});
                if (stop_at_first) return report;
                continue;
            }
            std::vector<IntegerVector> cols;
            for (auto i : I) cols.push_back(a.hyperplanes[i].normal);
            if (!is_basis_extendable(cols)) {
                report.violations.push_back({I, ViolationKind::NotUnimodular});
                if (stop_at_first) return report;
            }
        }
    }
    std::sort(report.violations.begin(), report.violations.end(), [](const Violation& x, const Violation& y) {
        if (x.subset != y.subset) return x.subset < y.subset;
        return static_cast<int>(x.kind) < static_cast<int>(y.kind);
    });
    return report;
}

}  // namespace detail

inline SmoothnessReport certify_smooth(const Datum& d) { return detail::scan_smoothness(d, false); }

/// Same verdict as certify_smooth(d).smooth(), stopping at the first violation.
inline bool is_smooth(const Datum& d) { return detail::scan_smoothness(d, true).smooth(); }

/// A 0-dimensional flat together with every n-subset that cuts it out.
struct Vertex {
    RationalVector point;
    std::vector<IndexSet> index_sets;
};

/// Vertices of a simple arrangement, deduplicated and sorted by coordinates.
/// Throws NotSimple when some nonempty intersection has the wrong codimension.
inline std::vector<Vertex> vertices(const Arrangement& a) {
    const std::size_t m = a.size(), n = a.dim;
    std::vector<std::uint32_t> empty_sets;
    for (std::size_t k = 1; k <= m; ++k) {
        for (auto bits : detail::subsets_of_size(m, k)) {
            if (std::any_of(empty_sets.begin(), empty_sets.end(), [bits](std::uint32_t e) { return (e & bits) == e; }))
                continue;
            auto I = detail::bits_to_set(bits);
            auto f = flat_of(a, I);
            if (f.empty) {
                empty_sets.push_back(bits);
                continue;
            }
            if (n - f.dim != I.size()) throw NotSimple("hyperplanes of a nonempty intersection are not independent");
        }
    }

    std::map<RationalVector, std::vector<IndexSet>> found;
    for (auto bits : detail::subsets_of_size(m, n)) {
        auto I = detail::bits_to_set(bits);
        auto A = detail::stacked_normals(a, I);
        if (rank(A) < n) continue;
        auto sol = solve_affine(A, detail::stacked_constants(a, I));
        found[sol.particular].push_back(I);
    }
    std::vector<Vertex> out;
    for (auto& [p, sets] : found) out.push_back({p, sets});
    return out;
}

}  // namespace hypertoric
