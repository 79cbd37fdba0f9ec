#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace linkage {

using Rational = mpq_class;

// Accepts "3", "-3/4", "1.25". Decimals are converted exactly.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace linkage
