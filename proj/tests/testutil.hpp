#ifndef DIFFALG_TESTUTIL_HPP
#define DIFFALG_TESTUTIL_HPP

#include <cstdlib>
#include <random>
#include <vector>

#include "diffalg/matrix.hpp"
#include "diffalg/polynomial.hpp"
#include "diffalg/ratfunc.hpp"

namespace diffalg::testutil {

// Seed from DIFFALG_TEST_SEED when set, for reproducing failures.
inline std::mt19937_64 make_rng(std::uint64_t default_seed = 20240911ull) {
    if (const char* env = std::getenv("DIFFALG_TEST_SEED")) default_seed = std::strtoull(env, nullptr, 10);
    return std::mt19937_64(default_seed);
}

inline Rational random_rational(std::mt19937_64& rng, long bound = 6) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long bound = 6) {
    Rational r;
    do {
        r = random_rational(rng, bound);
    } while (r == 0);
    return r;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_deg = 3, long bound = 4) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<Rational> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.push_back(random_rational(rng, bound));
    return Polynomial(coeffs);
}

inline Polynomial random_nonzero_polynomial(std::mt19937_64& rng, int max_deg = 3, long bound = 4) {
    Polynomial p;
    do {
        p = random_polynomial(rng, max_deg, bound);
    } while (p.is_zero());
    return p;
}

// Denominator a product of (x - c)^k with small rational c: stays in the
// Q-split class.
inline Polynomial random_split_denominator(std::mt19937_64& rng, int max_factors = 2) {
    static const long points[] = {0, 1, -1, 2, -2};
    std::uniform_int_distribution<int> nfac(0, max_factors);
    std::uniform_int_distribution<int> pick(0, 4);
    std::uniform_int_distribution<int> mult(1, 2);
    Polynomial den = Polynomial::one();
    int n = nfac(rng);
    for (int i = 0; i < n; ++i)
        den = den * Polynomial::linear(Rational(points[pick(rng)])).pow(static_cast<unsigned>(mult(rng)));
    return den;
}

inline RatFunc random_split_ratfunc(std::mt19937_64& rng, int max_deg = 3) {
    return RatFunc(random_polynomial(rng, max_deg), random_split_denominator(rng));
}

inline RatFunc random_ratfunc(std::mt19937_64& rng, int max_deg = 3) {
    return RatFunc(random_polynomial(rng, max_deg), random_nonzero_polynomial(rng, 2));
}

inline Matrix<Rational> random_q_matrix(std::mt19937_64& rng, int n, long bound = 5) {
    Matrix<Rational> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = random_rational(rng, bound);
    return m;
}

inline Matrix<Rational> random_invertible_q_matrix(std::mt19937_64& rng, int n, long bound = 5) {
    while (true) {
        Matrix<Rational> m = random_q_matrix(rng, n, bound);
        if (det_field(m) != 0) return m;
    }
}

// Invertible over Q(x): product of elementary operations with small
// rational-function entries.
inline Matrix<RatFunc> random_invertible_gauge(std::mt19937_64& rng, int n) {
    Matrix<RatFunc> m = Matrix<RatFunc>::identity(n, RatFunc(), RatFunc(Rational(1)));
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> ops(2, 4);
    int k = ops(rng);
    for (int t = 0; t < k; ++t) {
        int i = idx(rng), j = idx(rng);
        Matrix<RatFunc> e = Matrix<RatFunc>::identity(n, RatFunc(), RatFunc(Rational(1)));
        if (i == j) {
            e.at(i, i) = RatFunc(random_nonzero_rational(rng));
        } else {
            e.at(i, j) = random_split_ratfunc(rng, 1);
        }
        m = m * e;
    }
    return m;
}

} // namespace diffalg::testutil

#endif
