#include "ppbox/laurent.hpp"

#include <sstream>

namespace ppbox {

Laurent Laurent::constant(Var v, const BigRat& c) { return monomial(v, c, 0); }

Laurent Laurent::monomial(Var v, const BigRat& c, long qexp) {
    Laurent p(v);
    BigRat cc = c;
    cc.canonicalize();  // callers may hand over unreduced fractions
    if (sgn(cc) != 0) p.terms_[qexp] = cc;
    return p;
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool Laurent::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

long Laurent::min_qexp() const {
    require_invariant(!terms_.empty(), "min_qexp of zero polynomial");
    return terms_.begin()->first;
}

long Laurent::max_qexp() const {
    require_invariant(!terms_.empty(), "max_qexp of zero polynomial");
    return terms_.rbegin()->first;
}

BigRat Laurent::coeff(long qexp) const {
    auto it = terms_.find(qexp);
    return it == terms_.end() ? BigRat(0) : it->second;
}

BigRat Laurent::eval_at_one() const {
    BigRat s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void Laurent::add_term(long qexp, const BigRat& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(qexp);
    if (it == terms_.end()) {
        terms_.emplace(qexp, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void Laurent::check_var(const Laurent& o) const {
    require_invariant(var_ == o.var_, "mixed-variable Laurent arithmetic");
}

Laurent Laurent::operator-() const {
    Laurent r(var_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    check_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    check_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    r -= o;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    check_var(o);
    Laurent r(var_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
}

bool Laurent::operator==(const Laurent& o) const { return var_ == o.var_ && terms_ == o.terms_; }

Laurent Laurent::scaled(const BigRat& c) const {
    Laurent r(var_);
    BigRat cc = c;
    cc.canonicalize();
    if (sgn(cc) == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * cc;
    return r;
}

Laurent Laurent::shifted(long dqexp) const {
    Laurent r(var_);
    for (const auto& [e, c] : terms_) r.terms_[e + dqexp] = c;
    return r;
}

Laurent Laurent::substituted_power(long k) const {
    if (k < 1) throw UsageError("substituted_power needs k >= 1");
    Laurent r(var_);
    for (const auto& [e, c] : terms_) r.terms_[e * k] = c;
    return r;
}

Laurent Laurent::reversed() const {
    Laurent r(var_);
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

bool Laurent::divide_exact(const Laurent& divisor, Laurent& quot) const {
    check_var(divisor);
    require_invariant(!divisor.is_zero(), "Laurent division by zero");
    Laurent q(var_);
    if (is_zero()) {
        quot = q;
        return true;
    }
    // Quotient exponents are confined to [min-min, max-max]; running past the
    // lower bound means the division is not exact.
    const long lo = min_qexp() - divisor.min_qexp();
    Laurent rem = *this;
    const long dmax = divisor.max_qexp();
    const BigRat dlead = divisor.coeff(dmax);
    while (!rem.is_zero()) {
        long e = rem.max_qexp() - dmax;
        if (e < lo) return false;
        BigRat c = rem.coeff(rem.max_qexp()) / dlead;
        q.add_term(e, c);
        rem -= divisor * monomial(var_, c, e);
    }
    quot = q;
    return true;
}

bool Laurent::is_plain_polynomial() const {
    for (const auto& [e, c] : terms_)
        if (e < 0 || e % 4 != 0) return false;
    return true;
}

bool Laurent::has_integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

namespace {

// reduced exponent e/4 as "2", "-1", "1/2", "-3/4"
std::string qexp_str(long e) {
    long num = e, den = 4;
    while (num % 2 == 0 && den > 1) {
        num /= 2;
        den /= 2;
    }
    std::ostringstream os;
    os << num;
    if (den != 1) os << "/" << den;
    return os.str();
}

}  // namespace

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigRat a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        const bool unit = (a == 1);
        if (e == 0) {
            os << a.get_str();
        } else {
            if (!unit) os << a.get_str() << "*";
            os << var_letter(var_);
            if (e != 4) {
                std::string es = qexp_str(e);
                bool plain = es.find('/') == std::string::npos && es[0] != '-';
                os << "^" << (plain ? es : "(" + es + ")");
            }
        }
    }
    return os.str();
}

Laurent q_integer(long n) {
    if (n < 1) throw UsageError("q_integer needs n >= 1");
    Laurent p(Var::q);
    for (long i = 0; i < n; ++i) p += Laurent::monomial(Var::q, BigRat(1), 4 * i);
    return p;
}

Laurent quantum_integer(long n) {
    if (n < 0) throw UsageError("quantum_integer needs n >= 0");
    Laurent p(Var::q);
    // [n] = q^{-(n-1)/2} + q^{-(n-3)/2} + ... + q^{(n-1)/2}
    for (long i = 0; i < n; ++i) p += Laurent::monomial(Var::q, BigRat(1), 2 * (2 * i - (n - 1)));
    return p;
}

Laurent bracket_integer(long lambda) {
    if (lambda >= 0) return quantum_integer(lambda);
    return -quantum_integer(-lambda);
}

BigRat poly_eval_at_one(const Laurent& p) { return p.eval_at_one(); }

Laurent poly_substitute_power(const Laurent& p, long k) { return p.substituted_power(k); }

}  // namespace ppbox
