#include "diffalg/ratfunc.hpp"

#include <limits>

#include "diffalg/errors.hpp"

namespace diffalg {

RatFunc::RatFunc(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial::one();
        return;
    }
    Polynomial g = poly_gcd(num, den);
    num = num / g;
    den = den / g;
    Rational lead = den.leading();
    num_ = num * (Rational(1) / lead);
    den_ = den * (Rational(1) / lead);
}

std::optional<Rational> RatFunc::as_constant() const {
    if (!is_constant()) return std::nullopt;
    return num_.constant_value();
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero("rational function division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc(Rational(1));
    RatFunc base = e > 0 ? *this : inverse();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    RatFunc result(Rational(1));
    while (n > 0) {
        if (n & 1ul) result = result * base;
        base = base * base;
        n >>= 1ul;
    }
    return result;
}

RatFunc RatFunc::derive() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::optional<Rational> RatFunc::eval(const Rational& at) const {
    Rational d = den_.eval(at);
    if (d == 0) return std::nullopt;
    return num_.eval(at) / d;
}

unsigned RatFunc::pole_order(const Rational& at) const {
    if (is_zero()) return 0;
    if (den_.eval(at) != 0) return 0;
    return den_.valuation_at(at); // num and den are coprime
}

int RatFunc::degree_at_infinity() const {
    if (is_zero()) return std::numeric_limits<int>::min() / 2;
    return num_.degree() - den_.degree();
}

namespace {

// A denominator needs no parentheses exactly when it is a monic monomial:
// "f/x^3" parses as f/(x^3) under the left-associative grammar.
bool monic_monomial(const Polynomial& p) {
    return p.degree() >= 1 && p.leading() == 1 &&
           p == Polynomial::x().pow(static_cast<unsigned>(p.degree()));
}

std::size_t term_count(const Polynomial& p) {
    std::size_t n = 0;
    for (const auto& c : p.coeffs())
        if (c != 0) ++n;
    return n;
}

} // namespace

std::string RatFunc::to_string() const {
    if (den_ == Polynomial::one()) return num_.to_string();
    std::string ns = num_.to_string();
    if (term_count(num_) > 1) ns = "(" + ns + ")";
    std::string ds = den_.to_string();
    if (!monic_monomial(den_)) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

int ratfunc_cmp(const RatFunc& a, const RatFunc& b) {
    int c = poly_cmp(a.num(), b.num());
    if (c != 0) return c;
    return poly_cmp(a.den(), b.den());
}

} // namespace diffalg
