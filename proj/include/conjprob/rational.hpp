#pragma once

// Exact rational values. Every probability in the library is carried as a
// GMP rational in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace conjprob {

using BigInt = mpz_class;
using ExactRational = mpq_class;

enum class Rounding { HalfUp, Down, Up };

/// "num/den" with the denominator always present ("1/1" for one).
std::string to_fraction_string(const ExactRational& q);

/// Parses "num/den", "num" or a finite decimal literal such as "0.00247".
/// The result is canonicalized. Throws std::invalid_argument on malformed
/// input or a zero denominator.
ExactRational parse_rational(std::string_view text);

/// Renders q with exactly `digits` digits after the decimal point.
/// HalfUp rounds ties away from zero; Down and Up are floor and ceiling.
std::string to_decimal(const ExactRational& q, unsigned digits,
                       Rounding mode = Rounding::HalfUp);

/// The decimal rendering above read back as an exact rational.
ExactRational round_to_decimal(const ExactRational& q, unsigned digits,
                               Rounding mode = Rounding::HalfUp);

ExactRational make_rational(const BigInt& num, const BigInt& den);
ExactRational make_rational(std::int64_t num, std::int64_t den = 1);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt power(const BigInt& base, unsigned long exponent);
ExactRational power(const ExactRational& base, unsigned long exponent);

bool is_integer(const ExactRational& q);

}  // namespace conjprob
