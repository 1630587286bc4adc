#pragma once

#include <limits>
#include <vector>

#include "ppbox/laurent.hpp"
#include "ppbox/numbers.hpp"

namespace ppbox {

// A box a x b x c with the derived side sums that index everything downstream.
struct BoxDims {
    long a = 1, b = 1, c = 1;

    BoxDims() = default;
    BoxDims(long a_, long b_, long c_);

    long ahat() const { return b + c; }
    long bhat() const { return a + c; }
    long chat() const { return a + b; }
    long d() const { return a + b + c; }
    long volume() const { return a * b * c; }
};

// Sentinel for an unbounded box dimension (only finitely many factors of the
// product differ from 1, so these always converge).
inline constexpr long kInfiniteDim = std::numeric_limits<long>::max();

// C(a_1,...,a_k; n) = prod over the integer box of max(n - sum x_i, 1)
BigInt box_product(const std::vector<long>& dims, long n);
Laurent box_product_q(const std::vector<long>& dims, long n);

// T(k,n) = C(inf,...,inf; n), memoized through the inductive rules
// T(0,n)=n, T(k,0)=1, T(k,n)=T(k-1,n)T(k,n-1), and 1 outside that range.
BigInt simplex_product(long k, long n);
Laurent simplex_product_q(long k, long n);

// H(n) = 1!2!...(n-1)! = T(2,n-1)
BigInt hyperfactorial(long n);

// Unrestricted count, computed by both closed forms (the box-product quotient
// and the hyperfactorial quotient), which must agree exactly.
BigInt count_pp_formula(const BoxDims& dims);

// q-count: polynomial in q with constant term 1 and degree abc.
Laurent count_pp_formula_q(const BoxDims& dims);

// Transpose-complement count for the box (a,a,2b):
//   sqrt( N(a,a,2b) (2a-1)!! (2b-1)!! / (2a+2b-1)!! ).
// The double-factorial corrections are pinned by the brute-force oracle.
BigInt count_tcpp_formula(long a, long b);

// Cyclically symmetric count for the cube (a,a,a):
//   cbrt( N(a,a,a) prod_{i=1}^{a} (3i-1)^2/(3i-2)^2 ).
BigInt count_cspp_formula(long a);

}  // namespace ppbox
