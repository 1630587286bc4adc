#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ppbox/numbers.hpp"

namespace ppbox {

// Exact Laurent polynomial in one tagged formal variable (q or t).
//
// Exponents are stored as integers counting quarter steps of the variable:
// qexp 4 is q^1, qexp 2 is q^{1/2}, qexp 1 is q^{1/4}.  Half powers appear in
// quantum integers and normalizations; quarter powers appear in individual
// entries of quantum tensor matrices.  No zero coefficient is ever stored.

enum class Var : unsigned char { q, t };

inline char var_letter(Var v) { return v == Var::q ? 'q' : 't'; }

class Laurent {
  public:
    explicit Laurent(Var v = Var::q) : var_(v) {}

    static Laurent constant(Var v, const BigRat& c);
    static Laurent monomial(Var v, const BigRat& c, long qexp);

    Var var() const { return var_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::map<long, BigRat>& terms() const { return terms_; }

    // Extremal quarter exponents; only meaningful on nonzero polynomials.
    long min_qexp() const;
    long max_qexp() const;

    BigRat coeff(long qexp) const;
    BigRat eval_at_one() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator*=(const Laurent& o);
    bool operator==(const Laurent& o) const;
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    Laurent scaled(const BigRat& c) const;
    Laurent shifted(long dqexp) const;  // multiply by var^{dqexp/4}

    // exponent map e -> k*e; the substitution t -> t^k
    Laurent substituted_power(long k) const;
    // exponent map e -> -e; palindromes are fixed points
    Laurent reversed() const;
    bool is_palindromic() const { return *this == reversed(); }

    // Exact division in the Laurent ring over Q.  Returns false if the
    // divisor does not divide; quot is untouched in that case.
    bool divide_exact(const Laurent& divisor, Laurent& quot) const;

    // true iff all exponents are nonnegative integers (an honest polynomial)
    bool is_plain_polynomial() const;
    bool has_integer_coefficients() const;

    // canonical text form, ascending exponents: "1 + q - 2*q^2 + q^(-1/2)"
    std::string str() const;

  private:
    void add_term(long qexp, const BigRat& c);
    void check_var(const Laurent& o) const;

    Var var_;
    std::map<long, BigRat> terms_;
};

// (n)_q = 1 + q + ... + q^{n-1}, n >= 1
Laurent q_integer(long n);

// [n] = q^{(1-n)/2}(n)_q = q^{-(n-1)/2} + ... + q^{(n-1)/2}, n >= 0
Laurent quantum_integer(long n);

// [lambda] for any integer, [-n] = -[n]
Laurent bracket_integer(long lambda);

BigRat poly_eval_at_one(const Laurent& p);
Laurent poly_substitute_power(const Laurent& p, long k);

}  // namespace ppbox
