#ifndef DIFFALG_SPANUTIL_HPP
#define DIFFALG_SPANUTIL_HPP

#include <map>
#include <utility>
#include <vector>

#include "diffalg/hyperexp.hpp"
#include "diffalg/matrix.hpp"
#include "diffalg/polynomial.hpp"

namespace diffalg::testutil {

// Exact Q-coordinates for tower matrices: one axis per (entry, monomial,
// power of x) after clearing denominators per (entry, monomial) column.
class QCoordinates {
    using Key = std::pair<std::pair<int, int>, HyperexpMonomial>;
    struct KeyLess {
        bool operator()(const std::pair<Key, int>& a, const std::pair<Key, int>& b) const {
            if (a.first.first != b.first.first) return a.first.first < b.first.first;
            if (a.first.second < b.first.second) return true;
            if (b.first.second < a.first.second) return false;
            return a.second < b.second;
        }
        bool operator()(const Key& a, const Key& b) const {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        }
    };

public:
    explicit QCoordinates(const std::vector<Matrix<TowerElem>>& mats) {
        std::map<Key, Polynomial, KeyLess> dens;
        for (const auto& m : mats)
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j)
                    for (const auto& [mono, coeff] : m.at(i, j).terms()) {
                        Key k{{i, j}, mono};
                        auto it = dens.find(k);
                        if (it == dens.end())
                            dens.emplace(k, coeff.den());
                        else
                            it->second = poly_lcm(it->second, coeff.den());
                    }
        for (const auto& m : mats) {
            std::map<std::pair<Key, int>, Rational, KeyLess> coords;
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j)
                    for (const auto& [mono, coeff] : m.at(i, j).terms()) {
                        Key k{{i, j}, mono};
                        Polynomial lifted = coeff.num() * (dens.at(k) / coeff.den());
                        for (int d = 0; d <= lifted.degree(); ++d)
                            if (lifted.coeff(d) != 0) coords[{k, d}] = lifted.coeff(d);
                    }
            rows_.push_back(std::move(coords));
        }
        std::size_t axis = 0;
        for (const auto& row : rows_)
            for (const auto& [key, v] : row)
                if (axes_.emplace(key, axis).second) ++axis;
        naxes_ = axis;
    }

    std::vector<std::vector<Rational>> dense() const {
        std::vector<std::vector<Rational>> out;
        for (const auto& row : rows_) {
            std::vector<Rational> r(naxes_, Rational(0));
            for (const auto& [key, v] : row) r[axes_.at(key)] = v;
            out.push_back(std::move(r));
        }
        return out;
    }

private:
    std::vector<std::map<std::pair<Key, int>, Rational, KeyLess>> rows_;
    std::map<std::pair<Key, int>, std::size_t, KeyLess> axes_;
    std::size_t naxes_ = 0;
};

inline std::size_t q_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

// Rank of the Q-span of tower matrices.
inline std::size_t q_span_rank(const std::vector<Matrix<TowerElem>>& mats) {
    return q_rank(QCoordinates(mats).dense());
}

// Does `candidate` lie in the Q-span of `basis`?
inline bool in_q_span(const std::vector<Matrix<TowerElem>>& basis, const Matrix<TowerElem>& candidate) {
    std::vector<Matrix<TowerElem>> all = basis;
    all.push_back(candidate);
    return q_span_rank(all) == q_span_rank(basis);
}

inline bool same_q_span(const std::vector<Matrix<TowerElem>>& a,
                        const std::vector<Matrix<TowerElem>>& b) {
    std::vector<Matrix<TowerElem>> all = a;
    all.insert(all.end(), b.begin(), b.end());
    std::size_t ra = q_span_rank(a), rb = q_span_rank(b), rall = q_span_rank(all);
    return ra == rb && rb == rall;
}

// Rank over Q(x) of the span of tower matrices (columns indexed by entry and
// monomial, coefficients in Q(x)).
inline std::size_t f_span_rank(const std::vector<Matrix<TowerElem>>& mats) {
    struct AxisLess {
        bool operator()(const std::pair<std::pair<int, int>, HyperexpMonomial>& a,
                        const std::pair<std::pair<int, int>, HyperexpMonomial>& b) const {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        }
    };
    std::map<std::pair<std::pair<int, int>, HyperexpMonomial>, std::size_t, AxisLess> axes;
    std::size_t naxes = 0;
    for (const auto& m : mats)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                for (const auto& [mono, coeff] : m.at(i, j).terms())
                    if (axes.emplace(std::make_pair(std::make_pair(i, j), mono), naxes).second)
                        ++naxes;
    std::vector<std::vector<RatFunc>> rows;
    for (const auto& m : mats) {
        std::vector<RatFunc> r(naxes);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                for (const auto& [mono, coeff] : m.at(i, j).terms())
                    r[axes.at({{i, j}, mono})] = coeff;
        rows.push_back(std::move(r));
    }
    if (rows.empty() || naxes == 0) return 0;
    std::size_t cols = naxes, r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            RatFunc f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace diffalg::testutil

#endif
