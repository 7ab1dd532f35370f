#include "diffalg/diffmod.hpp"

namespace diffalg {

Matrix<RatFunc> derive_matrix(const Matrix<RatFunc>& m) {
    return m.map<RatFunc>([](const RatFunc& f) { return f.derive(); });
}

Matrix<TowerElem> derive_matrix(const Matrix<TowerElem>& m) {
    return m.map<TowerElem>([](const TowerElem& t) { return t.derive(); });
}

Matrix<TowerElem> to_tower_matrix(const Matrix<RatFunc>& m) {
    return m.map<TowerElem>([](const RatFunc& f) { return TowerElem(f); });
}

Matrix<RatFunc> gauge_transform(const Matrix<RatFunc>& b, const Matrix<RatFunc>& m) {
    if (det_field(m).is_zero()) throw SingularGauge();
    Matrix<RatFunc> m_inv = inverse_field(m);
    return m_inv * b * m - m_inv * derive_matrix(m);
}

std::string FundamentalReport::summary() const {
    if (pass) return "pass";
    if (!equation_holds && first_failure)
        return "fail: dZ != conn*Z first at entry (" + std::to_string(first_failure->first + 1) +
               "," + std::to_string(first_failure->second + 1) + ")";
    if (!det_nonzero) return "fail: det(Z) = 0";
    return "fail";
}

FundamentalReport verify_fundamental(const DiffModule& mod, const Matrix<TowerElem>& Z) {
    FundamentalReport rep;
    rep.residual = derive_matrix(Z) - to_tower_matrix(mod.conn) * Z;
    rep.equation_holds = true;
    for (int i = 0; i < rep.residual.rows(); ++i) {
        for (int j = 0; j < rep.residual.cols(); ++j) {
            if (!rep.residual.at(i, j).is_zero()) {
                rep.equation_holds = false;
                if (!rep.first_failure) rep.first_failure = {i, j};
            }
        }
    }
    rep.det = det_ring(Z);
    rep.det_nonzero = !rep.det.is_zero();
    rep.pass = rep.equation_holds && rep.det_nonzero;
    return rep;
}

DiffModule dual(const DiffModule& mod) {
    Matrix<RatFunc> c(mod.dim, mod.dim);
    for (int i = 0; i < mod.dim; ++i)
        for (int j = 0; j < mod.dim; ++j) c.at(i, j) = -mod.conn.at(j, i);
    return {mod.dim, c};
}

DiffModule tensor(const DiffModule& m1, const DiffModule& m2) {
    int n1 = m1.dim, n2 = m2.dim;
    Matrix<RatFunc> i1 = Matrix<RatFunc>::identity(n1, RatFunc(), RatFunc(Rational(1)));
    Matrix<RatFunc> i2 = Matrix<RatFunc>::identity(n2, RatFunc(), RatFunc(Rational(1)));
    return {n1 * n2, kronecker(m1.conn, i2) + kronecker(i1, m2.conn)};
}

DiffModule direct_sum(const DiffModule& m1, const DiffModule& m2) {
    int n = m1.dim + m2.dim;
    Matrix<RatFunc> c(n, n);
    for (int i = 0; i < m1.dim; ++i)
        for (int j = 0; j < m1.dim; ++j) c.at(i, j) = m1.conn.at(i, j);
    for (int i = 0; i < m2.dim; ++i)
        for (int j = 0; j < m2.dim; ++j) c.at(m1.dim + i, m1.dim + j) = m2.conn.at(i, j);
    return {n, c};
}

} // namespace diffalg
