#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "tlat/error.hpp"

namespace tlat {

/// Exact rational scalar used by every classical-distribution algorithm.
/// Arbitrary precision: cumulative sums, simplex pivots and lattice
/// constructions never overflow or round.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Canonical text form: "num/den" reduced, or bare "num" for integers.
inline std::string to_string(const Rational& r) { return r.str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace detail

/// Parses "a/b", an integer, or a plain decimal ("0.15" -> 3/20, exactly).
/// Anything else (empty, scientific notation, stray characters) is rejected.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    require(!s.empty(), "invalid-rational", "empty rational literal: '" + std::string(text) + "'");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        require(detail::all_digits(num) && detail::all_digits(den), "invalid-rational",
                "malformed fraction: '" + std::string(text) + "'");
        Integer d{std::string(den)};
        require(d != 0, "invalid-rational", "zero denominator: '" + std::string(text) + "'");
        value = Rational(Integer{std::string(num)}, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        require((whole.empty() || detail::all_digits(whole)) && detail::all_digits(frac),
                "invalid-rational", "malformed decimal: '" + std::string(text) + "'");
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Integer units = whole.empty() ? Integer(0) : Integer{std::string(whole)};
        value = Rational(units * scale + Integer{std::string(frac)}, scale);
    } else {
        require(detail::all_digits(s), "invalid-rational",
                "malformed integer: '" + std::string(text) + "'");
        value = Rational(Integer{std::string(s)});
    }
    return negative ? Rational(-value) : value;
}

}  // namespace tlat
