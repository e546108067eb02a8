/*
  Exact rational scalars used for every cost, capacity and flow quantity.
*/
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace sfc {

using Rational = mpq_class;

// Accepts "7", "-3/2", "1.25", "2.5e-1". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Shortest decimal that round-trips the double, read back exactly.
Rational rational_from_double(double value);

// Canonical "p" or "p/q".
std::string to_string(const Rational& value);

double to_double(const Rational& value);

bool is_integer(const Rational& value);

// True when value is a multiple of 1/2.
bool is_half_integer(const Rational& value);

Rational ceil(const Rational& value);

}  // namespace sfc
