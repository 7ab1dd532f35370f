#ifndef DIFFALG_RATIONAL_HPP
#define DIFFALG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace diffalg {

// Arbitrary-precision exact arithmetic; GMP keeps everything in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Largest integer <= r.
inline Integer floor_int(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// r - floor(r), in [0, 1).
inline Rational frac_part(const Rational& r) {
    Rational f = r - Rational(floor_int(r));
    f.canonicalize();
    return f;
}

inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

inline Integer lcm_int(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Integer gcd_int(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Positive divisors of |n|; n must be nonzero. Desk-scale inputs only.
std::vector<Integer> positive_divisors(const Integer& n);

} // namespace diffalg

#endif
