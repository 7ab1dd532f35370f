#include "diffalg/partial_fractions.hpp"

#include <algorithm>

#include "diffalg/errors.hpp"

namespace diffalg {

RatFunc PartialFraction::resum() const {
    RatFunc acc{poly};
    for (const auto& t : terms) {
        RatFunc base(Polynomial(Rational(t.coeff)),
                     Polynomial::linear(t.location).pow(t.order));
        acc += base;
    }
    return acc;
}

Rational PartialFraction::residue_at(const Rational& location) const {
    for (const auto& t : terms)
        if (t.order == 1 && t.location == location) return t.coeff;
    return Rational(0);
}

unsigned PartialFraction::order_at(const Rational& location) const {
    unsigned best = 0;
    for (const auto& t : terms)
        if (t.location == location && t.coeff != 0) best = std::max(best, t.order);
    return best;
}

std::vector<Rational> PartialFraction::pole_locations() const {
    std::vector<Rational> locs;
    for (const auto& t : terms)
        if (locs.empty() || locs.back() != t.location) locs.push_back(t.location);
    return locs;
}

PartialFraction partial_fractions(const RatFunc& f) {
    PartialFraction out;
    auto [quot, rem] = f.num().divmod(f.den());
    out.poly = quot;
    if (rem.is_zero()) return out;

    RationalRoots fac = rational_roots(f.den());
    if (fac.remainder.degree() >= 1)
        throw NonSplitDenominator("denominator factor without rational roots: " +
                                  fac.remainder.to_string());

    for (const auto& [c, mult] : fac.roots) {
        // Taylor coefficients of rem/(den/(x-c)^mult) at c give the Laurent
        // coefficients at the pole, top order first.
        Polynomial cofactor = f.den() / Polynomial::linear(c).pow(mult);
        RatFunc g(rem, cofactor);
        Rational factorial(1);
        for (unsigned j = 0; j < mult; ++j) {
            if (j > 0) {
                g = g.derive();
                factorial *= Rational(static_cast<long>(j));
            }
            auto val = g.eval(c);
            Rational a = *val / factorial;
            unsigned order = mult - j;
            if (a != 0) out.terms.push_back({c, order, a});
        }
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const PoleTerm& a, const PoleTerm& b) {
        if (a.location != b.location) return a.location < b.location;
        return a.order < b.order;
    });
    return out;
}

} // namespace diffalg
