#ifndef DIFFALG_POLYNOMIAL_HPP
#define DIFFALG_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffalg/rational.hpp"

namespace diffalg {

// Dense univariate polynomial over Q. Coefficients are stored low degree
// first with no trailing zeros; the zero polynomial has an empty vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Rational& c);
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(Rational(1)); }
    static Polynomial x();
    // (x - c)
    static Polynomial linear(const Rational& c);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of zero is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& leading() const;
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational constant_value() const { return coeff(0); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative() const;
    Rational eval(const Rational& at) const;
    Polynomial pow(unsigned e) const;
    Polynomial monic() const;

    // Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    Polynomial operator/(const Polynomial& o) const { return divmod(o).first; }
    Polynomial operator%(const Polynomial& o) const { return divmod(o).second; }

    // Multiplicity of `root` as a zero of this polynomial.
    unsigned valuation_at(const Rational& root) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

// All rational roots with multiplicities (found by divisor-bound search on the
// squarefree part) plus the remaining factor, which has no rational roots.
struct RationalRoots {
    std::vector<std::pair<Rational, unsigned>> roots; // sorted by location
    Polynomial remainder;
};
RationalRoots rational_roots(const Polynomial& p);

// Deterministic total order, used for map keys. Returns <0, 0, >0.
int poly_cmp(const Polynomial& a, const Polynomial& b);

} // namespace diffalg

#endif
