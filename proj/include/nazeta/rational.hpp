#pragma once

// Exact integer and rational scalars.
//
// BigInt / BigRational are GMP's C++ classes. mpq_class keeps values in
// lowest terms with a positive denominator as long as every construction
// goes through make_rational() or parse_rational(), which canonicalize.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nazeta {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Builds num/den in lowest terms. Throws std::domain_error on den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den = 1);

// Accepts "p", "-p", "p/q" (optionally surrounded by whitespace).
// Throws std::invalid_argument on malformed text or a zero denominator.
BigRational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& x);
std::string to_string(const BigInt& x);

// base^e for any integer e; base must be nonzero when e < 0.
BigRational pow(const BigRational& base, long e);

// Fractional part in [0, 1): frac(-1/3) == 2/3.
BigRational frac(const BigRational& x);

// Floor as an integer.
BigInt floor(const BigRational& x);

inline bool is_integer(const BigRational& x) { return x.get_den() == 1; }

}  // namespace nazeta
