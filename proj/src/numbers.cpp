#include "ppbox/numbers.hpp"

namespace ppbox {

BigInt parse_bigint(const std::string& s) {
    mpz_class v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw UsageError("not a decimal integer: '" + s + "'");
    return v;
}

BigRat parse_bigrat(const std::string& s) {
    mpq_class v;
    if (s.empty() || mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
        throw UsageError("not a rational: '" + s + "'");
    if (sgn(v.get_den()) == 0) throw UsageError("zero denominator: '" + s + "'");
    v.canonicalize();
    return v;
}

BigInt int_pow(const BigInt& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigRat rat_pow(const BigRat& base, long e) {
    if (e == 0) return BigRat(1);
    if (e < 0) {
        require_invariant(sgn(base) != 0, "rat_pow: 0 to a negative power");
        return rat_pow(BigRat(1) / base, -e);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

BigInt factorial(long n) {
    if (n < 0) throw UsageError("factorial of negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt odd_double_factorial(long n) {
    if (n < 1 || n % 2 == 0) throw UsageError("odd double factorial needs odd n >= 1");
    BigInt r = 1;
    for (long k = n; k >= 1; k -= 2) r *= k;
    return r;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
    require_invariant(sgn(b) != 0, "exact_div: division by zero");
    require_invariant(mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0,
                      "exact_div: " + a.get_str() + " not divisible by " + b.get_str());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt exact_sqrt(const BigInt& a) {
    require_invariant(sgn(a) >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0,
                      "exact_sqrt: " + a.get_str() + " is not a perfect square");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

BigInt exact_cbrt(const BigInt& a) {
    mpz_class r;
    int exactness = mpz_root(r.get_mpz_t(), a.get_mpz_t(), 3);
    require_invariant(exactness != 0, "exact_cbrt: " + a.get_str() + " is not a perfect cube");
    return r;
}

BigInt rat_gcd_check(const BigRat& r) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return g;
}

}  // namespace ppbox
