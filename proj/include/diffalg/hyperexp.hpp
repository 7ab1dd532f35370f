#ifndef DIFFALG_HYPEREXP_HPP
#define DIFFALG_HYPEREXP_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffalg/ratfunc.hpp"

namespace diffalg {

// Multiplicative part prod (x - c_i)^{r_i} * exp(R) of a hyperexponential
// element, with every r_i reduced to its fractional part in (0, 1); integer
// powers of (x - c_i) live in the rational cofactor instead. With that
// normalization two monomials are equal iff their data match, and distinct
// monomials are linearly independent over Q(x).
struct HyperexpMonomial {
    std::vector<std::pair<Rational, Rational>> factors; // (base point, exponent), sorted, exponent in (0,1)
    RatFunc exp_part;                                   // R, meaning exp(R)

    bool is_trivial() const { return factors.empty() && exp_part.is_zero(); }
    // d(mu)/mu = sum r_i/(x - c_i) + R'
    RatFunc log_derivative() const;
    Rational exponent_at(const Rational& base) const;

    bool operator==(const HyperexpMonomial& o) const;
    bool operator<(const HyperexpMonomial& o) const;
};

// Nonzero element scalar * cofactor * monomial with scalar in Q*, cofactor a
// quotient of monic polynomials. The zero solution is represented by the
// absence of a HyperexpElem (std::optional at call sites), never by a value.
class HyperexpElem {
public:
    static HyperexpElem one();
    static HyperexpElem from_ratfunc(const RatFunc& f); // f must be nonzero
    // Normalizing constructor: raw exponents may be any rationals; integer
    // parts are folded into the cofactor and zero exponents dropped.
    static HyperexpElem make(const RatFunc& coefficient,
                             std::vector<std::pair<Rational, Rational>> raw_factors,
                             const RatFunc& exp_part);

    const Rational& scalar() const { return scalar_; }
    const RatFunc& cofactor() const { return cofactor_; }
    const HyperexpMonomial& monomial() const { return mono_; }
    // scalar * cofactor as one rational function
    RatFunc coefficient() const { return cofactor_ * RatFunc(scalar_); }

    // d(h)/h, always a rational function
    RatFunc log_derivative() const;

    HyperexpElem operator*(const HyperexpElem& o) const;
    HyperexpElem inverse() const;
    HyperexpElem pow(long e) const;
    bool operator==(const HyperexpElem& o) const;
    bool operator!=(const HyperexpElem& o) const { return !(*this == o); }

    bool is_rational() const { return mono_.is_trivial(); }
    std::optional<RatFunc> to_ratfunc() const;

    // Canonical rendering, e.g. "(x)^(1/2)" or "(x)^3*exp(-1/x)"; integer
    // orders of the cofactor at its rational roots and poles are merged into
    // the printed exponents.
    std::string to_string() const;

private:
    HyperexpElem() = default;
    Rational scalar_{1};
    RatFunc cofactor_{Rational(1)};
    HyperexpMonomial mono_;
};

// Finite Q(x)-linear combination of hyperexponential monomials: the exact
// model of elements of an exponential tower over Q(x). Addition and
// multiplication are closed; inverses exist for single-term elements only.
class TowerElem {
public:
    TowerElem() = default;
    TowerElem(const RatFunc& f);
    TowerElem(const Rational& c) : TowerElem(RatFunc(c)) {}
    TowerElem(long v) : TowerElem(RatFunc(Rational(v))) {}
    TowerElem(const HyperexpElem& h);

    bool is_zero() const { return terms_.empty(); }
    const std::map<HyperexpMonomial, RatFunc>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    TowerElem operator+(const TowerElem& o) const;
    TowerElem operator-(const TowerElem& o) const;
    TowerElem operator-() const;
    TowerElem operator*(const TowerElem& o) const;
    TowerElem& operator+=(const TowerElem& o) { return *this = *this + o; }
    TowerElem& operator-=(const TowerElem& o) { return *this = *this - o; }
    bool operator==(const TowerElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const TowerElem& o) const { return !(*this == o); }

    // Termwise: d(f * mu) = (f' + f * dmu/mu) * mu.
    TowerElem derive() const;

    std::optional<HyperexpElem> single_term() const;
    // Throws NotInvertible unless the element is a single term.
    TowerElem inverse() const;

    bool is_rational() const;
    std::optional<RatFunc> to_ratfunc() const;

    std::string to_string() const;

private:
    void insert_term(const HyperexpMonomial& mono, const RatFunc& coeff);
    std::map<HyperexpMonomial, RatFunc> terms_;
};

inline TowerElem derive(const TowerElem& t) { return t.derive(); }

// Generators of an exponential extension of Q(x); each generator's
// logarithmic derivative lies in Q(x) by construction.
struct SplittingTower {
    std::vector<HyperexpElem> generators;

    static SplittingTower trivial() { return {}; }
    void add_generator(const HyperexpElem& h); // skips duplicates and rational gens
    std::vector<RatFunc> log_derivatives() const;
    std::size_t size() const { return generators.size(); }
};

} // namespace diffalg

#endif
