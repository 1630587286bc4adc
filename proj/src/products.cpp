#include "ppbox/products.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace ppbox {

BoxDims::BoxDims(long a_, long b_, long c_) : a(a_), b(b_), c(c_) {
    if (a < 1 || b < 1 || c < 1) throw UsageError("box dimensions must be >= 1");
}

namespace {

void check_dims(const std::vector<long>& dims) {
    for (long d : dims)
        if (d < 1) throw UsageError("box product dimensions must be >= 1 or infinite");
}

// C(dims; n) = prod_{x=0}^{dims[0]-1} C(rest; n-x).  Once n-x <= 1 every
// remaining factor is 1, which also bounds the infinite case.
BigInt box_product_rec(const std::vector<long>& dims, size_t at, long n) {
    if (at == dims.size()) return BigInt(std::max(n, 1L));
    BigInt r = 1;
    if (dims[at] == kInfiniteDim) {
        for (long x = 0; n - x >= 2; ++x) r *= box_product_rec(dims, at + 1, n - x);
    } else {
        for (long x = 0; x < dims[at]; ++x) r *= box_product_rec(dims, at + 1, n - x);
    }
    return r;
}

Laurent box_product_q_rec(const std::vector<long>& dims, size_t at, long n) {
    if (at == dims.size()) return q_integer(std::max(n, 1L));
    Laurent r = Laurent::constant(Var::q, BigRat(1));
    if (dims[at] == kInfiniteDim) {
        for (long x = 0; n - x >= 2; ++x) r *= box_product_q_rec(dims, at + 1, n - x);
    } else {
        for (long x = 0; x < dims[at]; ++x) r *= box_product_q_rec(dims, at + 1, n - x);
    }
    return r;
}

}  // namespace

BigInt box_product(const std::vector<long>& dims, long n) {
    check_dims(dims);
    return box_product_rec(dims, 0, n);
}

Laurent box_product_q(const std::vector<long>& dims, long n) {
    check_dims(dims);
    return box_product_q_rec(dims, 0, n);
}

BigInt simplex_product(long k, long n) {
    if (k < 0) throw UsageError("simplex product needs k >= 0");
    if (k == 0) return BigInt(std::max(n, 1L));
    if (n <= 0) return BigInt(1);

    static std::map<std::pair<long, long>, BigInt> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);

    // iterative fill so deep recursion never touches the lock twice
    for (long kk = 1; kk <= k; ++kk) {
        for (long nn = 1; nn <= n; ++nn) {
            auto key = std::make_pair(kk, nn);
            if (memo.count(key)) continue;
            BigInt left = kk == 1 ? BigInt(nn) : memo.at({kk - 1, nn});
            BigInt down = nn == 1 ? BigInt(1) : memo.at({kk, nn - 1});
            memo.emplace(key, left * down);
        }
    }
    return memo.at({k, n});
}

Laurent simplex_product_q(long k, long n) {
    if (k < 0) throw UsageError("simplex product needs k >= 0");
    if (k == 0) return q_integer(std::max(n, 1L));
    if (n <= 0) return Laurent::constant(Var::q, BigRat(1));

    static std::map<std::pair<long, long>, Laurent> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);

    for (long kk = 1; kk <= k; ++kk) {
        for (long nn = 1; nn <= n; ++nn) {
            auto key = std::make_pair(kk, nn);
            if (memo.count(key)) continue;
            Laurent left = kk == 1 ? q_integer(nn) : memo.at({kk - 1, nn});
            Laurent down = nn == 1 ? Laurent::constant(Var::q, BigRat(1)) : memo.at({kk, nn - 1});
            memo.emplace(key, left * down);
        }
    }
    return memo.at({k, n});
}

BigInt hyperfactorial(long n) {
    if (n < 1) throw UsageError("hyperfactorial needs n >= 1");
    return simplex_product(2, n - 1);
}

BigInt count_pp_formula(const BoxDims& dims) {
    const long a = dims.a, b = dims.b, c = dims.c, d = dims.d();

    BigInt quotient_form =
        exact_div(box_product({a, b, c}, d - 1), box_product({a, b, c}, d - 2));

    BigInt hyperfactorial_form = exact_div(hyperfactorial(d) * hyperfactorial(a) * hyperfactorial(b) *
                                      hyperfactorial(c),
                                  hyperfactorial(a + b) * hyperfactorial(a + c) *
                                      hyperfactorial(b + c));

    require_invariant(quotient_form == hyperfactorial_form,
                      "count_pp_formula: box-product and hyperfactorial forms disagree");
    return quotient_form;
}

Laurent count_pp_formula_q(const BoxDims& dims) {
    const long a = dims.a, b = dims.b, c = dims.c, d = dims.d();
    Laurent num = simplex_product_q(2, d - 1) * simplex_product_q(2, a - 1) *
                  simplex_product_q(2, b - 1) * simplex_product_q(2, c - 1);
    Laurent den = simplex_product_q(2, dims.chat() - 1) * simplex_product_q(2, dims.bhat() - 1) *
                  simplex_product_q(2, dims.ahat() - 1);
    Laurent result(Var::q);
    require_invariant(num.divide_exact(den, result), "count_pp_formula_q: inexact quotient");
    require_invariant(result.is_plain_polynomial() && result.has_integer_coefficients(),
                      "count_pp_formula_q: result is not an integral polynomial");
    require_invariant(result.coeff(0) == 1 && result.max_qexp() == 4 * dims.volume(),
                      "count_pp_formula_q: wrong constant term or degree");
    return result;
}

BigInt count_tcpp_formula(long a, long b) {
    if (a < 1 || b < 1) throw UsageError("count_tcpp_formula needs a,b >= 1");
    BigInt n = count_pp_formula(BoxDims(a, a, 2 * b));
    BigInt radicand = exact_div(n * odd_double_factorial(2 * a - 1) * odd_double_factorial(2 * b - 1),
                                odd_double_factorial(2 * a + 2 * b - 1));
    return exact_sqrt(radicand);
}

BigInt count_cspp_formula(long a) {
    if (a < 1) throw UsageError("count_cspp_formula needs a >= 1");
    BigInt num = count_pp_formula(BoxDims(a, a, a));
    BigInt den = 1;
    for (long i = 1; i <= a; ++i) {
        num *= BigInt(3 * i - 1) * (3 * i - 1);
        den *= BigInt(3 * i - 2) * (3 * i - 2);
    }
    return exact_cbrt(exact_div(num, den));
}

}  // namespace ppbox
