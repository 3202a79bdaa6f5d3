#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ttour {

/// Exact rational number. Every quantity in the pipeline (costs, LP values,
/// tree weights, bounds) is carried in this type.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading '-'), canonicalized.
/// Throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" for integers.
std::string to_string(const Rational& value);

/// Values indexed by edge index.
using EdgeVector = std::vector<Rational>;

inline Rational max0(const Rational& value) { return value > 0 ? value : Rational(0); }

} // namespace ttour
