#include "diffalg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "diffalg/errors.hpp"

namespace diffalg {

std::vector<Integer> positive_divisors(const Integer& n) {
    Integer m = abs(n);
    if (m == 0) throw Error("positive_divisors: argument is zero");
    std::vector<Integer> divs;
    for (Integer d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            divs.push_back(d);
            if (d * d != m) divs.push_back(m / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

Polynomial Polynomial::linear(const Rational& c) { return Polynomial({-c, Rational(1)}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial();
    std::vector<Rational> r = coeffs_;
    for (auto& v : r) v *= c;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(c));
}

Rational Polynomial::eval(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = Polynomial::one();
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    Polynomial rem = *this;
    std::vector<Rational> q;
    int dd = divisor.degree();
    if (rem.degree() >= dd) q.assign(static_cast<std::size_t>(rem.degree() - dd + 1), Rational(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        Rational factor = rem.leading() / divisor.leading();
        int shift = rem.degree() - dd;
        q[static_cast<std::size_t>(shift)] = factor;
        // rem -= factor * x^shift * divisor
        std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
        for (const auto& c : divisor.coeffs()) sub.push_back(c * factor);
        rem = rem - Polynomial(std::move(sub));
    }
    return {Polynomial(std::move(q)), rem};
}

unsigned Polynomial::valuation_at(const Rational& root) const {
    if (is_zero()) throw Error("valuation of zero polynomial");
    Polynomial p = *this;
    Polynomial lin = Polynomial::linear(root);
    unsigned v = 0;
    while (p.eval(root) == 0) {
        p = p / lin;
        ++v;
    }
    return v;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        Rational c = coeff(d);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        std::string piece;
        if (d == 0) {
            piece = rat_to_string(mag);
        } else {
            std::string xs = (d == 1) ? "x" : ("x^" + std::to_string(d));
            piece = (mag == 1) ? xs : (rat_to_string(mag) + "*" + xs);
        }
        if (out.empty())
            out = (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial g = poly_gcd(a, b);
    return ((a * b) / g).monic();
}

namespace {

// Clear denominators and content: primitive integer coefficient vector.
std::vector<Integer> primitive_integer_coeffs(const Polynomial& p) {
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) den_lcm = lcm_int(den_lcm, c.get_den());
    std::vector<Integer> ints;
    ints.reserve(p.coeffs().size());
    Integer content = 0;
    for (const auto& c : p.coeffs()) {
        Rational scaled = c * Rational(den_lcm);
        ints.push_back(scaled.get_num());
        content = gcd_int(content, ints.back());
    }
    if (content > 1)
        for (auto& v : ints) v /= content;
    return ints;
}

} // namespace

RationalRoots rational_roots(const Polynomial& p) {
    RationalRoots out;
    if (p.is_zero()) throw Error("rational_roots of zero polynomial");
    Polynomial work = p;

    // Root at zero.
    unsigned v0 = 0;
    while (!work.is_zero() && work.coeff(0) == 0) {
        work = work / Polynomial::x();
        ++v0;
    }
    if (v0 > 0) out.roots.emplace_back(Rational(0), v0);

    if (work.degree() >= 1) {
        // Squarefree part keeps the divisor search small; multiplicities are
        // recovered from the original polynomial.
        Polynomial sf = (work / poly_gcd(work, work.derivative())).monic();
        std::vector<Integer> ic = primitive_integer_coeffs(sf);
        if (ic.size() >= 2 && ic.front() != 0) {
            std::vector<Integer> nums = positive_divisors(ic.front());
            std::vector<Integer> dens = positive_divisors(ic.back());
            for (const auto& n : nums) {
                for (const auto& d : dens) {
                    for (int sign : {1, -1}) {
                        Rational cand(sign * n, d);
                        cand.canonicalize();
                        if (sf.eval(cand) == 0) {
                            unsigned mult = work.valuation_at(cand);
                            out.roots.emplace_back(cand, mult);
                            for (unsigned k = 0; k < mult; ++k) work = work / Polynomial::linear(cand);
                        }
                    }
                }
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.remainder = work;
    return out;
}

int poly_cmp(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int k = a.degree(); k >= 0; --k) {
        int c = cmp(a.coeff(k), b.coeff(k));
        if (c != 0) return c;
    }
    return 0;
}

} // namespace diffalg
