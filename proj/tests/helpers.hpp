#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "tlat/prob_vector.hpp"
#include "tlat/rational.hpp"

// Shorthand constructors for exact fixtures: PV({"0.6","0.15","0.15","0.1"})
// parses decimals and fractions exactly.
inline tlat::ProbVector PV(std::initializer_list<const char*> entries) {
    std::vector<tlat::Rational> v;
    v.reserve(entries.size());
    for (const char* s : entries) v.push_back(tlat::parse_rational(s));
    return tlat::ProbVector::validated(std::move(v));
}

inline tlat::Rational R(const char* s) { return tlat::parse_rational(s); }
