#pragma once

#include <gmpxx.h>

#include <string>

#include "ppbox/errors.hpp"

namespace ppbox {

// Exact scalar base: arbitrary-precision integers and reduced rationals.
// GMP supplies the arithmetic; the helpers below add the exactness checks
// (roots and divisions must be exact, anything else is an InvariantError).

using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt parse_bigint(const std::string& s);
BigRat parse_bigrat(const std::string& s);

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRat& v) { return v.get_str(); }

inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }

// b^e for e >= 0.
BigInt int_pow(const BigInt& base, unsigned long e);
BigRat rat_pow(const BigRat& base, long e);

BigInt factorial(long n);

// n!! = n(n-2)...1 for odd n >= 1.  The standard convention; the literal
// "(n-1)(n-3)..." reading would make 3!! vanish and is rejected by the
// small-box cross checks.
BigInt odd_double_factorial(long n);

// Throwing variants: the quotient/root must exist exactly.
BigInt exact_div(const BigInt& a, const BigInt& b);
BigInt exact_sqrt(const BigInt& a);
BigInt exact_cbrt(const BigInt& a);

inline bool is_integer(const BigRat& r) { return r.get_den() == 1; }

// gcd(num, den) after reduction; used by property tests.
BigInt rat_gcd_check(const BigRat& r);

}  // namespace ppbox
