#ifndef DIFFALG_SOLVE_HPP
#define DIFFALG_SOLVE_HPP

#include <optional>
#include <string>

#include "diffalg/diffmod.hpp"
#include "diffalg/hyperexp.hpp"

namespace diffalg {

// Hyperexponential solution h of dh/h = a, normalized with unit cofactor
// scale and zero integration constants. Total on the Q-split class; throws
// NonSplitDenominator otherwise.
HyperexpElem solve_rank1(const RatFunc& a);

// Some rational solution y of y' = a*y + b, or nullopt when none exists.
// For b = 0 a *nonzero* solution is sought (the hyperexponential solution
// restricted to Q(x)). Complete on the Q-split class; candidate poles are
// confined to poles of a and b, with local order bounds from lowest-order
// balance and a degree bound from the behavior at infinity.
std::optional<RatFunc> rational_solution(const RatFunc& a, const RatFunc& b);

struct DiagonalSolution {
    FundamentalMatrix fundamental;
    SplittingTower tower; // generated by the diagonal solutions
};

// Fundamental matrix diag(h_1, ..., h_n) for diagonal P.
DiagonalSolution solve_diagonal(const Matrix<RatFunc>& P);

struct TriangularSolution {
    bool completely_reducible = false;
    // Gauge entry z with m = [[1, z], [0, 1]] diagonalizing P; present iff
    // completely reducible.
    std::optional<RatFunc> gauge_entry;
    // Fundamental matrix m * diag(h1, h2); present iff completely reducible
    // (otherwise the solution needs a primitive extension, outside the model).
    std::optional<FundamentalMatrix> fundamental;
    std::optional<SplittingTower> tower;
    std::string obstruction; // set when not completely reducible
};

// Upper-triangular 2x2 solver; throws NotInClass when a diagonal entry is
// outside the rank-1 class.
TriangularSolution solve_triangular_2x2(const Matrix<RatFunc>& P);

// Particular solution of y' = a*y + b over the tower model, with support on
// the monomials of b (the equation is monomial-diagonal, so each coefficient
// solves an independent rational problem). nullopt when no solution exists.
std::optional<TowerElem> solve_first_order_tower(const RatFunc& a, const TowerElem& b);

// Rational pair (y, kappa) with y' = a*y + b1 + kappa*b2, if one exists.
// Used where an inhomogeneity is only determined up to a scalar.
std::optional<std::pair<RatFunc, Rational>> rational_solution_with_parameter(const RatFunc& a,
                                                                             const RatFunc& b1,
                                                                             const RatFunc& b2);

} // namespace diffalg

#endif
