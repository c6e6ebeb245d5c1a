#pragma once

// JSON datum files:
//
//   {"n": 2, "m": 3, "B": [[1, 0, -1], [0, 1, -1]], "lift": ["1", "1", "1"]}
//
// B is row-major. Integers outside +-2^53 are written as decimal strings;
// lift entries are always written as strings and read from strings or JSON
// integers.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "arrangement.hpp"
#include "errors.hpp"
#include "numeric.hpp"

namespace hypertoric {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline const Integer& json_safe_bound() {
    static const Integer bound = Integer(1) << 53;
    return bound;
}

inline ordered_json integer_to_json(const Integer& v) {
    if (abs(v) < json_safe_bound()) return v.get_si();
    return v.get_str();
}

inline std::size_t size_field(const ordered_json& j, const char* name) {
    if (!j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
    const auto& v = j.at(name);
    if (!v.is_number_unsigned()) throw ParseError(std::string("field \"") + name + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

inline Integer integer_from_json(const ordered_json& v, const std::string& where) {
    if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(v.get<unsigned long>()) : Integer(v.get<long>());
    if (v.is_string()) {
        if (auto z = parse_integer(v.get<std::string>())) return *z;
        throw ParseError(where + ": \"" + v.get<std::string>() + "\" is not an integer");
    }
    throw ParseError(where + " must be an integer (or a decimal string)");
}

inline Rational rational_from_json(const ordered_json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(integer_from_json(v, where));
    if (v.is_string()) {
        if (auto q = parse_rational(v.get<std::string>())) return *q;
        throw ParseError(where + ": \"" + v.get<std::string>() + "\" is not a rational p/q");
    }
    throw ParseError(where + " must be a string \"p/q\" or an integer");
}

inline std::string position_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace detail

inline ordered_json datum_to_json(const Datum& d) {
    ordered_json j;
    j["n"] = d.n();
    j["m"] = d.m();
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < d.n(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t k = 0; k < d.m(); ++k) row.push_back(detail::integer_to_json(d.B()(i, k)));
        rows.push_back(std::move(row));
    }
    j["B"] = std::move(rows);
    ordered_json lift = ordered_json::array();
    for (const auto& q : d.lift()) lift.push_back(to_string(q));
    j["lift"] = std::move(lift);
    return j;
}

inline Datum datum_from_json(const ordered_json& j) {
    if (!j.is_object()) throw ParseError("datum must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (key != "n" && key != "m" && key != "B" && key != "lift") throw ParseError("unknown field \"" + key + "\"");
    const std::size_t n = detail::size_field(j, "n"), m = detail::size_field(j, "m");
    if (n < 1) throw ParseError("field \"n\" must be at least 1");
    if (m < n) throw ParseError("field \"m\" must be at least n");
    if (m > Datum::kMaxHyperplanes)
        throw ParseError("field \"m\" exceeds " + std::to_string(Datum::kMaxHyperplanes));

    if (!j.contains("B")) throw ParseError("missing field \"B\"");
    const auto& b = j.at("B");
    if (!b.is_array() || b.size() != n) throw ParseError("field \"B\" must be an array of n = " + std::to_string(n) + " rows");
    IntegerMatrix B(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = b.at(i);
        const std::string where = "B[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != m)
            throw ParseError("field \"" + where + "\" must be an array of m = " + std::to_string(m) + " entries");
        for (std::size_t k = 0; k < m; ++k)
            B(i, k) = detail::integer_from_json(row.at(k), "field \"" + where + "[" + std::to_string(k) + "]\"");
    }

    if (!j.contains("lift")) throw ParseError("missing field \"lift\"");
    const auto& l = j.at("lift");
    if (!l.is_array() || l.size() != m) throw ParseError("field \"lift\" must be an array of m = " + std::to_string(m) + " entries");
    RationalVector lift;
    for (std::size_t k = 0; k < m; ++k)
        lift.push_back(detail::rational_from_json(l.at(k), "field \"lift[" + std::to_string(k) + "]\""));
    return Datum(std::move(B), std::move(lift));
}

inline Datum parse_datum(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed JSON at " + detail::position_of(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    return datum_from_json(j);
}

namespace detail {

inline std::string compact(const ordered_json& v) {
    if (!v.is_array()) return v.dump();
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + compact(v[k]);
    return s + "]";
}

}  // namespace detail

/// Canonical text: one field per line, arrays on a single line.
inline std::string emit_datum(const Datum& d) {
    auto j = datum_to_json(d);
    std::string s = "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        s += (first ? "  \"" : ",\n  \"") + key + "\": " + detail::compact(value);
        first = false;
    }
    return s + "\n}\n";
}

inline Datum read_datum_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_datum(buf.str());
}

}  // namespace hypertoric
