#include "diffalg/ideals.hpp"

#include <algorithm>

#include "diffalg/errors.hpp"
#include "diffalg/solve.hpp"

namespace diffalg {

namespace {

// Reduced row echelon form over a field; zero rows dropped.
template <class K>
std::vector<std::vector<K>> echelonize(std::vector<std::vector<K>> rows) {
    if (rows.empty()) return rows;
    std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == K()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        K inv = K(1) / rows[r][c];
        for (std::size_t j = c; j < cols; ++j) rows[r][j] = rows[r][j] * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == K()) continue;
            K f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

} // namespace

template <class K>
Subspace<K> Subspace<K>::full(int ambient) {
    std::vector<std::vector<K>> rows(static_cast<std::size_t>(ambient),
                                     std::vector<K>(static_cast<std::size_t>(ambient), K()));
    for (int i = 0; i < ambient; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = K(1);
    return Subspace(ambient, std::move(rows));
}

template <class K>
Subspace<K> Subspace<K>::from_vectors(int ambient, std::vector<std::vector<K>> vecs) {
    return Subspace(ambient, echelonize(std::move(vecs)));
}

template <class K>
Subspace<K> Subspace<K>::span_of_columns(const Matrix<K>& m) {
    std::vector<std::vector<K>> vecs;
    for (int j = 0; j < m.cols(); ++j) {
        std::vector<K> v(static_cast<std::size_t>(m.rows()));
        for (int i = 0; i < m.rows(); ++i) v[static_cast<std::size_t>(i)] = m.at(i, j);
        vecs.push_back(std::move(v));
    }
    return from_vectors(m.rows(), std::move(vecs));
}

template <class K>
bool Subspace<K>::contains(const std::vector<K>& v) const {
    std::vector<K> residual = v;
    for (const auto& row : basis_) {
        std::size_t piv = 0;
        while (piv < row.size() && row[piv] == K()) ++piv;
        if (piv == row.size()) continue;
        if (!(residual[piv] == K())) {
            K f = residual[piv];
            for (std::size_t j = 0; j < row.size(); ++j) residual[j] = residual[j] - f * row[j];
        }
    }
    return std::all_of(residual.begin(), residual.end(), [](const K& x) { return x == K(); });
}

template <class K>
bool Subspace<K>::is_subspace_of(const Subspace& o) const {
    return std::all_of(basis_.begin(), basis_.end(),
                       [&o](const std::vector<K>& v) { return o.contains(v); });
}

template <class K>
Subspace<K> Subspace<K>::sum(const Subspace& o) const {
    std::vector<std::vector<K>> rows = basis_;
    rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
    return from_vectors(ambient_, std::move(rows));
}

template <class K>
Subspace<K> Subspace<K>::intersect(const Subspace& o) const {
    // Zassenhaus: echelonize rows [u|u] and [w|0]; rows with zero left half
    // carry a basis of the intersection in the right half.
    std::size_t n = static_cast<std::size_t>(ambient_);
    std::vector<std::vector<K>> rows;
    for (const auto& u : basis_) {
        std::vector<K> r(2 * n, K());
        for (std::size_t j = 0; j < n; ++j) r[j] = r[n + j] = u[j];
        rows.push_back(std::move(r));
    }
    for (const auto& w : o.basis_) {
        std::vector<K> r(2 * n, K());
        for (std::size_t j = 0; j < n; ++j) r[j] = w[j];
        rows.push_back(std::move(r));
    }
    rows = echelonize(std::move(rows));
    std::vector<std::vector<K>> inter;
    for (const auto& r : rows) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n; ++j)
            if (!(r[j] == K())) { left_zero = false; break; }
        if (left_zero) inter.emplace_back(r.begin() + static_cast<long>(n), r.end());
    }
    return from_vectors(ambient_, std::move(inter));
}

template <class K>
Subspace<K> Subspace<K>::apply(const Matrix<K>& m) const {
    std::vector<std::vector<K>> rows;
    for (const auto& v : basis_) {
        std::vector<K> image(static_cast<std::size_t>(ambient_), K());
        for (int i = 0; i < ambient_; ++i) {
            K acc = K();
            for (int j = 0; j < ambient_; ++j)
                acc = acc + m.at(i, j) * v[static_cast<std::size_t>(j)];
            image[static_cast<std::size_t>(i)] = acc;
        }
        rows.push_back(std::move(image));
    }
    return from_vectors(ambient_, std::move(rows));
}

template <class K>
std::vector<Matrix<K>> RightIdeal<K>::matrix_basis() const {
    std::vector<Matrix<K>> out;
    for (const auto& w : column_space.basis()) {
        for (int j = 0; j < n; ++j) {
            Matrix<K> m(n, n);
            for (int i = 0; i < n; ++i) m.at(i, j) = w[static_cast<std::size_t>(i)];
            out.push_back(std::move(m));
        }
    }
    return out;
}

template <class K>
RightIdeal<K> ideal_from_matrices(int n, const std::vector<Matrix<K>>& mats) {
    std::vector<std::vector<K>> cols;
    for (const auto& m : mats) {
        for (int j = 0; j < m.cols(); ++j) {
            std::vector<K> v(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = m.at(i, j);
            cols.push_back(std::move(v));
        }
    }
    return {n, Subspace<K>::from_vectors(n, std::move(cols))};
}

template <class K>
RightIdeal<K> conjugate(const RightIdeal<K>& ideal, const Matrix<K>& C) {
    if (det_field(C) == K()) throw SingularMatrix();
    return {ideal.n, ideal.column_space.apply(C)};
}

template class Subspace<Rational>;
template class Subspace<RatFunc>;
template struct RightIdeal<Rational>;
template struct RightIdeal<RatFunc>;
template RightIdeal<Rational> ideal_from_matrices(int, const std::vector<Matrix<Rational>>&);
template RightIdeal<RatFunc> ideal_from_matrices(int, const std::vector<Matrix<RatFunc>>&);
template RightIdeal<Rational> conjugate(const RightIdeal<Rational>&, const Matrix<Rational>&);
template RightIdeal<RatFunc> conjugate(const RightIdeal<RatFunc>&, const Matrix<RatFunc>&);

bool is_delta_stable(const Subspace<RatFunc>& w, const Matrix<RatFunc>& P) {
    for (const auto& v : w.basis()) {
        std::vector<RatFunc> image(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            RatFunc acc = v[i].derive();
            for (std::size_t j = 0; j < v.size(); ++j)
                acc -= P.at(static_cast<int>(i), static_cast<int>(j)) * v[j];
            image[i] = acc;
        }
        if (!w.contains(image)) return false;
    }
    return true;
}

namespace {

std::vector<RatFunc> unit_vector(int n, int i) {
    std::vector<RatFunc> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(i)] = RatFunc(Rational(1));
    return v;
}

// Coordinate subspace spanned by the chosen indices.
Subspace<RatFunc> coordinate_subspace(int n, const std::vector<int>& idx) {
    std::vector<std::vector<RatFunc>> rows;
    for (int i : idx) rows.push_back(unit_vector(n, i));
    return Subspace<RatFunc>::from_vectors(n, std::move(rows));
}

StableSubspaceReport stable_subspaces_diagonal(const Matrix<RatFunc>& P) {
    int n = P.rows();
    StableSubspaceReport rep;

    // Two coordinates interact iff the solution ratio h_i/h_j is rational
    // ("cotrivial"); then rational rescalings mix them and the lattice is
    // infinite over an infinite field.
    bool isotypic = false;
    for (int i = 0; i < n && !isotypic; ++i)
        for (int j = i + 1; j < n && !isotypic; ++j)
            if (rational_solution(P.at(i, i) - P.at(j, j), RatFunc())) isotypic = true;

    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        rep.subspaces.push_back(coordinate_subspace(n, idx));
    }
    std::sort(rep.subspaces.begin(), rep.subspaces.end(),
              [](const Subspace<RatFunc>& a, const Subspace<RatFunc>& b) { return a.dim() < b.dim(); });
    rep.complete = !isotypic;
    if (isotypic)
        rep.note = "cotrivial diagonal entries: infinitely many delta-stable subspaces; "
                   "the returned coordinate family generates the lattice (full flags exist)";
    return rep;
}

StableSubspaceReport stable_subspaces_triangular(const Matrix<RatFunc>& P) {
    StableSubspaceReport rep;
    rep.subspaces.push_back(Subspace<RatFunc>::zero(2));
    rep.subspaces.push_back(coordinate_subspace(2, {0})); // span{e1}, always stable

    auto z = rational_solution(P.at(0, 0) - P.at(1, 1), P.at(0, 1));
    if (z) {
        rep.subspaces.push_back(Subspace<RatFunc>::from_vectors(
            2, {{*z, RatFunc(Rational(1))}}));
        // A rational homogeneous solution shifts z by a one-parameter family.
        if (rational_solution(P.at(0, 0) - P.at(1, 1), RatFunc())) {
            rep.complete = false;
            rep.note = "one-parameter family of complements; returned a representative";
        }
    }
    rep.subspaces.push_back(Subspace<RatFunc>::full(2));
    return rep;
}

} // namespace

StableSubspaceReport delta_stable_subspaces(const Matrix<RatFunc>& P) {
    if (P.is_diagonal()) {
        if (P.rows() > 4)
            throw UnsupportedClass("stable subspace search limited to diagonal n <= 4");
        return stable_subspaces_diagonal(P);
    }
    if (P.rows() == 2 && P.is_upper_triangular()) return stable_subspaces_triangular(P);
    throw UnsupportedClass("stable subspace search supports diagonal (n <= 4) and 2x2 "
                           "upper-triangular P only");
}

ReductiveResult reductive_criterion(const Dcsa& alg) {
    ReductiveResult out;
    const Matrix<RatFunc>& P = alg.P;
    if (P.is_diagonal()) {
        if (alg.n > 4) throw UnsupportedClass("reductive criterion limited to diagonal n <= 4");
        out.reductive = true; // coordinate lines decompose the column module
        for (int i = 0; i < alg.n; ++i)
            out.summands.push_back(phi_inverse(coordinate_subspace(alg.n, {i})));
        return out;
    }
    if (alg.n == 2 && P.is_upper_triangular()) {
        auto z = rational_solution(P.at(0, 0) - P.at(1, 1), P.at(0, 1));
        if (z) {
            out.reductive = true;
            out.summands.push_back(phi_inverse(coordinate_subspace(2, {0})));
            out.summands.push_back(phi_inverse(
                Subspace<RatFunc>::from_vectors(2, {{*z, RatFunc(Rational(1))}})));
        } else {
            out.reductive = false;
            out.obstruction = coordinate_subspace(2, {0});
            out.note = "span{e1} is delta-stable but has no delta-stable complement";
        }
        return out;
    }
    throw UnsupportedClass("reductive criterion supports diagonal (n <= 4) and 2x2 "
                           "upper-triangular P only");
}

std::optional<std::vector<Subspace<RatFunc>>> find_flag(const std::vector<Subspace<RatFunc>>& family,
                                                        int n) {
    std::vector<Subspace<RatFunc>> chain;
    std::function<bool(int)> extend = [&](int target_dim) -> bool {
        if (target_dim > n) return true;
        for (const auto& w : family) {
            if (w.dim() != target_dim) continue;
            if (!chain.empty() && !chain.back().is_subspace_of(w)) continue;
            chain.push_back(w);
            if (extend(target_dim + 1)) return true;
            chain.pop_back();
        }
        return false;
    };
    if (!extend(1)) return std::nullopt;
    return chain;
}

std::optional<IdealChain> flag_criterion(const Dcsa& alg) {
    StableSubspaceReport rep = delta_stable_subspaces(alg.P);
    auto flag = find_flag(rep.subspaces, alg.n);
    if (!flag) return std::nullopt;
    IdealChain chain;
    for (const auto& w : *flag) chain.chain.push_back(phi_inverse(w));
    return chain;
}

} // namespace diffalg
