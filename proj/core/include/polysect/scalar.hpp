#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polysect {

/// Exact rational number. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator.
using Scalar = mpq_class;

/// Parses "a", "a/b", or a decimal literal such as "-1.25" or "3e-2".
/// Decimals are converted exactly as base-10 rationals.
Scalar parse_scalar(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Scalar& value);

double to_double(const Scalar& value);

/// The exact rational value of a finite double.
Scalar exact_from_double(double value);

/// Nearest rational with denominator 2^bits.
Scalar rationalize(double value, unsigned bits = 20);

inline int sign(const Scalar& value) { return sgn(value); }

}  // namespace polysect
