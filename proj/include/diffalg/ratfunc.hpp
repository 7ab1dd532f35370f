#ifndef DIFFALG_RATFUNC_HPP
#define DIFFALG_RATFUNC_HPP

#include <optional>
#include <string>

#include "diffalg/polynomial.hpp"

namespace diffalg {

// Element of Q(x) in normalized fraction form: the denominator is monic,
// gcd(num, den) = 1, and zero is 0/1. Two values are equal iff their
// components are identical, so operator== is normal-form equality.
class RatFunc {
public:
    RatFunc() : num_(), den_(Polynomial::one()) {}
    RatFunc(const Rational& c) : num_(Polynomial(c)), den_(Polynomial::one()) {}
    explicit RatFunc(const Polynomial& p) : num_(p), den_(Polynomial::one()) {}
    RatFunc(Polynomial num, Polynomial den);

    static RatFunc x() { return RatFunc(Polynomial::x()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_ == Polynomial::one(); }
    std::optional<Rational> as_constant() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inverse() const;
    RatFunc pow(long e) const;

    // d/dx by the quotient rule, renormalized.
    RatFunc derive() const;

    std::optional<Rational> eval(const Rational& at) const;

    // Pole order at a point; 0 when finite there.
    unsigned pole_order(const Rational& at) const;
    // deg(num) - deg(den); very negative for zero.
    int degree_at_infinity() const;

    std::string to_string() const;

private:
    Polynomial num_;
    Polynomial den_;
};

inline RatFunc derive(const RatFunc& f) { return f.derive(); }

int ratfunc_cmp(const RatFunc& a, const RatFunc& b);

} // namespace diffalg

#endif
