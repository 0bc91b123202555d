#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sugawara {

/// Exact rational coefficients used everywhere in the library.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading sign). Throws std::invalid_argument
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise, q > 0 and coprime.
std::string to_string(const Rational& q);

}  // namespace sugawara
