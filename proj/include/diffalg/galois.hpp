#ifndef DIFFALG_GALOIS_HPP
#define DIFFALG_GALOIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffalg/hyperexp.hpp"
#include "diffalg/lattice.hpp"
#include "diffalg/ratfunc.hpp"

namespace diffalg {

// Structural coordinates of a split-class rational function viewed as a
// candidate logarithmic derivative: simple-pole residues plus the exact
// integral of everything else.
struct LogDerivativeData {
    std::map<Rational, Rational> residues;
    RatFunc exp_part; // R with R' = a - sum residues/(x - c)
};
LogDerivativeData log_derivative_data(const RatFunc& a);

// Z-basis of L0 = { m : sum m_i a_i is the logarithmic derivative of a
// rational function }, i.e. prod xi_i^{m_i} lies in Q(x). Membership is
// decided structurally: integer residues and vanishing exp part.
std::vector<IVec> relation_lattice(const std::vector<RatFunc>& a);

// Character-lattice invariants of the diagonalizable Galois group of the
// exponential tower with generator log-derivatives a_i: the quotient
// Z^m / L0 has free rank `torus_rank` and torsion given by the invariant
// factors (each >= 2, each dividing the next).
struct GaloisDescriptor {
    int torus_rank = 0;
    std::vector<Integer> invariant_factors;
    std::vector<IVec> relation_basis; // canonical HNF basis of L0
    // generator exponent data
    std::vector<Rational> pole_locations;
    std::vector<std::vector<Rational>> residue_matrix; // [generator][pole]
    std::vector<bool> exp_flags;                       // generator has an exp part

    Integer finite_order() const; // product of invariant factors
};
GaloisDescriptor classify(const std::vector<RatFunc>& a);

struct TowerDescription {
    int transcendence_degree = 0; // computed by rational rank, asserted == torus rank
    Integer algebraic_degree = 1;
    bool exponential = true;
    GaloisDescriptor group;
};
TowerDescription tower_description(const std::vector<RatFunc>& a);

// Witness that h = cofactor * prod xi_i^{exponents_i} over the tower.
struct MembershipWitness {
    IVec exponents;
    RatFunc cofactor;
};
std::optional<MembershipWitness> tower_membership(const HyperexpElem& h, const SplittingTower& tower);

} // namespace diffalg

#endif
