#ifndef DIFFALG_LATTICE_HPP
#define DIFFALG_LATTICE_HPP

#include <optional>
#include <vector>

#include "diffalg/rational.hpp"

namespace diffalg {

// Row-major integer matrix.
using IMat = std::vector<std::vector<Integer>>;
using IVec = std::vector<Integer>;

// Column-style Hermite normal form H = A * U with U unimodular: pivots are
// positive, columns past the rank are zero, and every entry left of a pivot
// is reduced modulo it. If U is non-null the accumulated column operations
// are stored there.
IMat hnf_columns(const IMat& A, IMat* U = nullptr);

// Basis of the right kernel { x : A x = 0 }, returned as column vectors.
std::vector<IVec> integer_kernel(const IMat& A);

// Some integer solution of A x = b, or nullopt.
std::optional<IVec> solve_diophantine(const IMat& A, const IVec& b);

// Invariant factors d_1 | d_2 | ... (nonzero diagonal of the Smith normal
// form), including any trailing 1s from the rank.
std::vector<Integer> smith_invariants(IMat A);

// Canonical basis (column HNF, zero columns dropped) of the lattice spanned
// by the given vectors; used for lattice equality tests.
std::vector<IVec> lattice_canonical_basis(const std::vector<IVec>& gens, std::size_t dim);

// Is v in the span of the basis vectors over the integers?
bool lattice_contains(const std::vector<IVec>& basis, const IVec& v);

} // namespace diffalg

#endif
