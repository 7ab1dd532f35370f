#ifndef DIFFALG_IDEALS_HPP
#define DIFFALG_IDEALS_HPP

#include <optional>
#include <string>
#include <vector>

#include "diffalg/dcsa.hpp"
#include "diffalg/matrix.hpp"
#include "diffalg/ratfunc.hpp"

namespace diffalg {

// Subspace of K^n in reduced-echelon canonical form; equality of subspaces
// is representation equality.
template <class K>
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(int ambient) { return Subspace(ambient, {}); }
    static Subspace full(int ambient);
    static Subspace from_vectors(int ambient, std::vector<std::vector<K>> vecs);
    static Subspace span_of_columns(const Matrix<K>& m);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<K>>& basis() const { return basis_; }

    bool contains(const std::vector<K>& v) const;
    bool is_subspace_of(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    // Image under an invertible matrix.
    Subspace apply(const Matrix<K>& m) const;

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    Subspace(int ambient, std::vector<std::vector<K>> echelon)
        : ambient_(ambient), basis_(std::move(echelon)) {}
    int ambient_ = 0;
    std::vector<std::vector<K>> basis_; // reduced echelon rows
};

// Right ideal of M_n(K) represented by its column space: the ideal is
// { X : every column of X lies in the column space }, of linear dimension
// n * dim(column space).
template <class K>
struct RightIdeal {
    int n = 0;
    Subspace<K> column_space;

    int dim() const { return n * column_space.dim(); }
    std::vector<Matrix<K>> matrix_basis() const;
    bool operator==(const RightIdeal& o) const { return n == o.n && column_space == o.column_space; }
};

// Phi correspondence of right ideals and subspaces (mutually inverse).
template <class K>
Subspace<K> phi(const RightIdeal<K>& ideal) { return ideal.column_space; }
template <class K>
RightIdeal<K> phi_inverse(const Subspace<K>& w) { return {w.ambient(), w}; }

// Column span of a set of matrices: Phi of the right ideal they generate.
template <class K>
RightIdeal<K> ideal_from_matrices(int n, const std::vector<Matrix<K>>& mats);

template <class K>
RightIdeal<K> intersect(const RightIdeal<K>& a, const RightIdeal<K>& b) {
    return {a.n, a.column_space.intersect(b.column_space)};
}
template <class K>
RightIdeal<K> sum(const RightIdeal<K>& a, const RightIdeal<K>& b) {
    return {a.n, a.column_space.sum(b.column_space)};
}

// C * I * C^-1; satisfies Phi(C.I) = C Phi(I). Throws SingularMatrix.
template <class K>
RightIdeal<K> conjugate(const RightIdeal<K>& ideal, const Matrix<K>& C);

// Complete list of delta-stable subspaces of the column module d(w) = P w
// (w stable iff w' - P w stays in the subspace), for the restricted class.
// When an isotypic pair makes the lattice infinite, `complete` is false and
// the returned family generates the lattice.
struct StableSubspaceReport {
    std::vector<Subspace<RatFunc>> subspaces;
    bool complete = true;
    std::string note;
};
StableSubspaceReport delta_stable_subspaces(const Matrix<RatFunc>& P);

bool is_delta_stable(const Subspace<RatFunc>& w, const Matrix<RatFunc>& P);

struct ReductiveResult {
    bool reductive = false;
    std::vector<RightIdeal<RatFunc>> summands;        // minimal delta-right ideals, when reductive
    std::optional<Subspace<RatFunc>> obstruction;     // unrefinable non-split submodule otherwise
    std::string note;
};
ReductiveResult reductive_criterion(const Dcsa& alg);

struct IdealChain {
    std::vector<RightIdeal<RatFunc>> chain; // strictly increasing, dims n, 2n, ..., n^2
};
std::optional<IdealChain> flag_criterion(const Dcsa& alg);

// Chain W_1 < W_2 < ... < W_n with dim(W_j) = j drawn from the family, if
// one exists.
std::optional<std::vector<Subspace<RatFunc>>> find_flag(const std::vector<Subspace<RatFunc>>& family,
                                                        int n);

using QSubspace = Subspace<Rational>;
using QRightIdeal = RightIdeal<Rational>;

} // namespace diffalg

#endif
