#ifndef DIFFALG_DCSA_HPP
#define DIFFALG_DCSA_HPP

#include <optional>
#include <string>
#include <vector>

#include "diffalg/diffmod.hpp"
#include "diffalg/galois.hpp"
#include "diffalg/solve.hpp"

namespace diffalg {

// Matrix algebra M_n(Q(x)) with derivation D = d/dx (coordinatewise) plus
// the inner derivation X -> X*P - P*X. Every derivation of M_n extending
// d/dx has this shape, so P is a complete parameter.
struct Dcsa {
    int n = 0;
    Matrix<RatFunc> P;

    static Dcsa coordinatewise(int n) { return {n, Matrix<RatFunc>(n, n)}; }
};

// D(X) = dX + X*P - P*X for X over a tower.
Matrix<TowerElem> apply_derivation(const Dcsa& alg, const Matrix<TowerElem>& X);
Matrix<RatFunc> apply_derivation_rational(const Dcsa& alg, const Matrix<RatFunc>& X);

// The n^2-dimensional module of the algebra over the ordered elementary
// basis E_11, E_12, ..., E_nn (row-major), with connection extracted via
// d(e_i) = -sum_j a_ji e_j from D(E_kl) = E_kl*P - P*E_kl.
DiffModule associated_module(const Dcsa& alg);

// Certificate check: dZ = P*Z and det(Z) != 0. A pass certifies that
// conjugation by Z is a differential isomorphism from the coordinatewise
// algebra to this one (and that P is gauge equivalent to zero over the
// field generated by Z's entries).
FundamentalReport split_check(const Dcsa& alg, const Matrix<TowerElem>& Z);

// Search for splitting certificates over a given tower, restricted class.
// The strict certificate Z solves dZ = P*Z (gauge triviality); the general
// certificate H solves dH = (P - defect*I)*H, which is exactly what an
// algebra isomorphism needs: conjugation kills the scalar defect.
struct SplitSearchResult {
    bool gauge_trivial = false; // strict certificate exists over the tower
    bool splits = false;        // general certificate exists over the tower
    std::optional<Matrix<TowerElem>> strict_Z;
    std::optional<Matrix<TowerElem>> general_H;
    std::optional<RatFunc> defect;
    std::string obstruction;
};
SplitSearchResult split_search(const Dcsa& alg, const SplittingTower& tower);

// Basis of { X : D(X) = 0 } over Q, with entries in the given tower.
struct ConstantsAlgebra {
    Dcsa ambient;
    SplittingTower tower;
    std::vector<Matrix<TowerElem>> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
};
// Over the Picard-Vessiot tower of the associated module (the smallest
// tower that trivializes the algebra, when one exists in the model).
ConstantsAlgebra constants_algebra(const Dcsa& alg);
ConstantsAlgebra constants_algebra(const Dcsa& alg, const SplittingTower& tower);

struct TrivialityReport {
    bool trivial = false;
    int dimension = 0;
    int expected = 0; // n^2
};
TrivialityReport triviality_check(const Dcsa& alg, const SplittingTower& tower);

// Kronecker-sum construction P_m = sum_i I x ... x P x ... x I on the
// ordered product basis; tensor_power(alg, 1) = alg.
Dcsa tensor_power(const Dcsa& alg, int m, int size_limit = 16);

// Tower generated by the solutions of the associated module (the ratios of
// the column solutions for diagonal and reducible-triangular inputs).
SplittingTower module_splitting_tower(const Dcsa& alg);

} // namespace diffalg

#endif
