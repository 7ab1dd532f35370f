#ifndef DIFFALG_DIFFMOD_HPP
#define DIFFALG_DIFFMOD_HPP

#include <optional>
#include <string>

#include "diffalg/hyperexp.hpp"
#include "diffalg/matrix.hpp"
#include "diffalg/ratfunc.hpp"

namespace diffalg {

// Differential module over Q(x) encoded by its connection matrix, with the
// convention dY = conn * Y; on a basis this is d(e_i) = -sum_j a_ji e_j.
struct DiffModule {
    int dim = 0;
    Matrix<RatFunc> conn;

    static DiffModule zero_module(int n) { return {n, Matrix<RatFunc>(n, n)}; }
};

// Entrywise derivative of a rational matrix.
Matrix<RatFunc> derive_matrix(const Matrix<RatFunc>& m);
Matrix<TowerElem> derive_matrix(const Matrix<TowerElem>& m);
Matrix<TowerElem> to_tower_matrix(const Matrix<RatFunc>& m);

// Gauge transform a = m^-1 * b * m - m^-1 * dm. Throws SingularGauge when
// det(m) = 0. If Z is a fundamental matrix for b, then m^-1 * Z is one for a
// (direction verified symbolically; the transport tests pin it down).
Matrix<RatFunc> gauge_transform(const Matrix<RatFunc>& b, const Matrix<RatFunc>& m);

// Per-entry pass/fail report for the certificate dZ = conn * Z, det(Z) != 0.
struct FundamentalReport {
    bool pass = false;
    bool equation_holds = false;
    bool det_nonzero = false;
    Matrix<TowerElem> residual; // dZ - conn*Z
    TowerElem det;
    std::optional<std::pair<int, int>> first_failure;

    std::string summary() const;
};

FundamentalReport verify_fundamental(const DiffModule& mod, const Matrix<TowerElem>& Z);

// Invertible solution matrix together with the module it solves.
struct FundamentalMatrix {
    int size = 0;
    Matrix<TowerElem> entries;
    DiffModule module;
};

// Connection -conn^T; (Z^T)^-1 solves the dual when Z solves the module.
DiffModule dual(const DiffModule& mod);
// Kronecker constructions: conn_1 x I + I x conn_2, resp. block diagonal.
DiffModule tensor(const DiffModule& m1, const DiffModule& m2);
DiffModule direct_sum(const DiffModule& m1, const DiffModule& m2);

} // namespace diffalg

#endif
