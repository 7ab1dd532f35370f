#include "diffalg/lattice.hpp"

#include <algorithm>

#include "diffalg/errors.hpp"

namespace diffalg {

namespace {

std::size_t n_rows(const IMat& A) { return A.size(); }
std::size_t n_cols(const IMat& A) { return A.empty() ? 0 : A[0].size(); }

void negate_column(IMat& M, std::size_t j) {
    for (auto& row : M) row[j] = -row[j];
}

void swap_columns(IMat& M, std::size_t a, std::size_t b) {
    for (auto& row : M) std::swap(row[a], row[b]);
}

// col_a -= q * col_b
void sub_column(IMat& M, std::size_t a, std::size_t b, const Integer& q) {
    if (q == 0) return;
    for (auto& row : M) row[a] -= q * row[b];
}

} // namespace

IMat hnf_columns(const IMat& A, IMat* U) {
    std::size_t m = n_rows(A), n = n_cols(A);
    IMat H = A;
    IMat unit(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) unit[i][i] = 1;

    auto apply = [&](auto&& op) {
        op(H);
        op(unit);
    };

    std::size_t r = 0; // next pivot column
    for (std::size_t i = 0; i < m && r < n; ++i) {
        // Euclidean reduction across columns r..n-1 on row i.
        while (true) {
            std::size_t best = n;
            for (std::size_t j = r; j < n; ++j) {
                if (H[i][j] == 0) continue;
                if (best == n || abs(H[i][j]) < abs(H[i][best])) best = j;
            }
            if (best == n) break; // row has no pivot among remaining columns
            if (best != r) apply([&](IMat& M) { swap_columns(M, r, best); });
            bool all_zero = true;
            for (std::size_t j = r + 1; j < n; ++j) {
                if (H[i][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), H[i][j].get_mpz_t(), H[i][r].get_mpz_t());
                apply([&](IMat& M) { sub_column(M, j, r, q); });
                if (H[i][j] != 0) all_zero = false;
            }
            if (all_zero) break;
        }
        if (H[i][r] == 0) continue; // no pivot in this row
        if (H[i][r] < 0) apply([&](IMat& M) { negate_column(M, r); });
        for (std::size_t j = 0; j < r; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), H[i][j].get_mpz_t(), H[i][r].get_mpz_t());
            apply([&](IMat& M) { sub_column(M, j, r, q); });
        }
        ++r;
    }
    if (U) *U = std::move(unit);
    return H;
}

std::vector<IVec> integer_kernel(const IMat& A) {
    std::size_t n = n_cols(A);
    IMat U;
    IMat H = hnf_columns(A, &U);
    std::vector<IVec> kernel;
    for (std::size_t j = 0; j < n; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < n_rows(H); ++i)
            if (H[i][j] != 0) { zero = false; break; }
        if (!zero) continue;
        IVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = U[i][j];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::optional<IVec> solve_diophantine(const IMat& A, const IVec& b) {
    std::size_t m = n_rows(A), n = n_cols(A);
    IMat U;
    IMat H = hnf_columns(A, &U);

    IVec residual = b;
    IVec y(n, 0);
    std::size_t col = 0;
    for (std::size_t i = 0; i < m && col < n; ++i) {
        if (H[i][col] == 0) continue; // not a pivot row for this column
        if (residual[i] % H[i][col] != 0) return std::nullopt;
        Integer q = residual[i] / H[i][col];
        y[col] = q;
        for (std::size_t r = 0; r < m; ++r) residual[r] -= q * H[r][col];
        ++col;
    }
    for (std::size_t i = 0; i < m; ++i)
        if (residual[i] != 0) return std::nullopt;

    IVec x(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Integer acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += U[i][j] * y[j];
        x[i] = acc;
    }
    return x;
}

std::vector<Integer> smith_invariants(IMat A) {
    std::size_t m = n_rows(A), n = n_cols(A);
    std::size_t k = std::min(m, n);
    std::vector<Integer> inv;

    for (std::size_t t = 0; t < k; ++t) {
        // Find a nonzero entry of smallest magnitude in the trailing block.
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (A[i][j] != 0 && (pi == m || abs(A[i][j]) < abs(A[pi][pj]))) { pi = i; pj = j; }
        if (pi == m) break; // trailing block is zero
        std::swap(A[t], A[pi]);
        for (std::size_t i = 0; i < m; ++i) std::swap(A[i][t], A[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (A[i][t] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
                for (std::size_t j = t; j < n; ++j) A[i][j] -= q * A[t][j];
                if (A[i][t] != 0) { // remainder smaller than pivot: swap and restart
                    std::swap(A[t], A[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (A[t][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
                for (std::size_t i = t; i < m; ++i) A[i][j] -= q * A[i][t];
                if (A[t][j] != 0) {
                    for (std::size_t i = 0; i < m; ++i) std::swap(A[i][t], A[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // Divisibility: pivot must divide the trailing block.
                for (std::size_t i = t + 1; i < m && clean; ++i)
                    for (std::size_t j = t + 1; j < n && clean; ++j)
                        if (A[i][j] % A[t][t] != 0) {
                            for (std::size_t jj = t; jj < n; ++jj) A[t][jj] += A[i][jj];
                            clean = false;
                        }
            }
        }
        Integer d = abs(A[t][t]);
        inv.push_back(d);
    }
    return inv;
}

std::vector<IVec> lattice_canonical_basis(const std::vector<IVec>& gens, std::size_t dim) {
    if (gens.empty()) return {};
    IMat A(dim, IVec(gens.size(), 0));
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) A[i][j] = gens[j][i];
    IMat H = hnf_columns(A);
    std::vector<IVec> basis;
    for (std::size_t j = 0; j < n_cols(H); ++j) {
        IVec v(dim);
        bool zero = true;
        for (std::size_t i = 0; i < dim; ++i) {
            v[i] = H[i][j];
            if (v[i] != 0) zero = false;
        }
        if (!zero) basis.push_back(std::move(v));
    }
    return basis;
}

bool lattice_contains(const std::vector<IVec>& basis, const IVec& v) {
    bool v_zero = std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
    if (basis.empty()) return v_zero;
    std::size_t dim = v.size();
    IMat A(dim, IVec(basis.size(), 0));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) A[i][j] = basis[j][i];
    return solve_diophantine(A, v).has_value();
}

} // namespace diffalg
