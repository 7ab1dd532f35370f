#ifndef DIFFALG_PARTIAL_FRACTIONS_HPP
#define DIFFALG_PARTIAL_FRACTIONS_HPP

#include <vector>

#include "diffalg/ratfunc.hpp"

namespace diffalg {

// One term coeff/(x - location)^order of a decomposition.
struct PoleTerm {
    Rational location;
    unsigned order = 1;
    Rational coeff;
};

// Exact partial-fraction decomposition over Q. Re-summing the parts
// reproduces the input exactly.
struct PartialFraction {
    Polynomial poly;
    std::vector<PoleTerm> terms; // sorted by (location, order); top-order coeffs nonzero

    RatFunc resum() const;
    // Residue (order-1 coefficient) at a point, 0 if absent.
    Rational residue_at(const Rational& location) const;
    // Highest order present at a point, 0 if absent.
    unsigned order_at(const Rational& location) const;
    std::vector<Rational> pole_locations() const;
};

// Throws NonSplitDenominator if the denominator has an irreducible factor of
// degree >= 2 over Q.
PartialFraction partial_fractions(const RatFunc& f);

} // namespace diffalg

#endif
