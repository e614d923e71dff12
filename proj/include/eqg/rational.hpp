#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eqg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Lowest-terms rendering: "0", "7", "-1/6".
std::string to_string(const Rational& q);

/// Accepts "a" or "a/b" with optional leading sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace eqg
