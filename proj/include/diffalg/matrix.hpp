#ifndef DIFFALG_MATRIX_HPP
#define DIFFALG_MATRIX_HPP

#include <functional>
#include <vector>

#include "diffalg/errors.hpp"

namespace diffalg {

// Dense row-major matrix over an exact coefficient type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill) {}

    static Matrix identity(int n, const T& zero = T(), const T& one = T(1)) {
        Matrix m(n, n, zero);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    const T& at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

    Matrix operator+(const Matrix& o) const {
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
        return out;
    }
    Matrix operator-(const Matrix& o) const {
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
        return out;
    }
    Matrix operator*(const Matrix& o) const {
        Matrix out(rows_, o.cols_, T());
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k)
                for (int j = 0; j < o.cols_; ++j)
                    out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
        return out;
    }
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    Matrix scale(const T& c) const {
        Matrix out = *this;
        for (auto& v : out.data_) v = v * c;
        return out;
    }

    template <class U, class F>
    Matrix<U> map(F&& f) const {
        Matrix<U> out(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(i, j) = f(at(i, j));
        return out;
    }

    bool is_diagonal(const T& zero = T()) const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (i != j && !(at(i, j) == zero)) return false;
        return true;
    }
    bool is_upper_triangular(const T& zero = T()) const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < i; ++j)
                if (!(at(i, j) == zero)) return false;
        return true;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

// Determinant over a field (uses division; Gaussian elimination).
template <class T>
T det_field(Matrix<T> m) {
    if (!m.is_square()) throw Error("determinant of non-square matrix");
    int n = m.rows();
    T det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!(m.at(r, col) == T())) { pivot = r; break; }
        if (pivot < 0) return T();
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = T() - det;
        }
        det = det * m.at(col, col);
        T inv = T(1) / m.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            T factor = m.at(r, col) * inv;
            for (int j = col; j < n; ++j) m.at(r, j) = m.at(r, j) - factor * m.at(col, j);
        }
    }
    return det;
}

// Determinant over a commutative ring by cofactor expansion; triangular
// matrices short-circuit to the diagonal product. Guarded for small sizes.
template <class T>
T det_ring(const Matrix<T>& m) {
    if (!m.is_square()) throw Error("determinant of non-square matrix");
    int n = m.rows();
    if (m.is_upper_triangular() || m.transpose().is_upper_triangular()) {
        T det(1);
        for (int i = 0; i < n; ++i) det = det * m.at(i, i);
        return det;
    }
    if (n > 6) throw SizeLimit("dense ring determinant limited to n <= 6");
    std::function<T(const Matrix<T>&)> go = [&](const Matrix<T>& a) -> T {
        int k = a.rows();
        if (k == 1) return a.at(0, 0);
        T acc;
        for (int j = 0; j < k; ++j) {
            if (a.at(0, j) == T()) continue;
            Matrix<T> minor(k - 1, k - 1);
            for (int r = 1; r < k; ++r) {
                int cc = 0;
                for (int c = 0; c < k; ++c) {
                    if (c == j) continue;
                    minor.at(r - 1, cc++) = a.at(r, c);
                }
            }
            T term = a.at(0, j) * go(minor);
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return go(m);
}

// Inverse over a field via Gauss-Jordan; throws SingularMatrix.
template <class T>
Matrix<T> inverse_field(Matrix<T> m) {
    if (!m.is_square()) throw Error("inverse of non-square matrix");
    int n = m.rows();
    Matrix<T> inv = Matrix<T>::identity(n, T(), T(1));
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!(m.at(r, col) == T())) { pivot = r; break; }
        if (pivot < 0) throw SingularMatrix();
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        T piv_inv = T(1) / m.at(col, col);
        for (int j = 0; j < n; ++j) {
            m.at(col, j) = m.at(col, j) * piv_inv;
            inv.at(col, j) = inv.at(col, j) * piv_inv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m.at(r, col) == T()) continue;
            T factor = m.at(r, col);
            for (int j = 0; j < n; ++j) {
                m.at(r, j) = m.at(r, j) - factor * m.at(col, j);
                inv.at(r, j) = inv.at(r, j) - factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

// Kronecker product.
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    return out;
}

} // namespace diffalg

#endif
