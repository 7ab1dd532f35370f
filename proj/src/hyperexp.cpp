#include "diffalg/hyperexp.hpp"

#include <algorithm>

#include "diffalg/errors.hpp"

namespace diffalg {

RatFunc HyperexpMonomial::log_derivative() const {
    RatFunc acc;
    for (const auto& [c, r] : factors)
        acc += RatFunc(Polynomial(r), Polynomial::linear(c));
    acc += exp_part.derive();
    return acc;
}

Rational HyperexpMonomial::exponent_at(const Rational& base) const {
    for (const auto& [c, r] : factors)
        if (c == base) return r;
    return Rational(0);
}

bool HyperexpMonomial::operator==(const HyperexpMonomial& o) const {
    return factors == o.factors && exp_part == o.exp_part;
}

bool HyperexpMonomial::operator<(const HyperexpMonomial& o) const {
    if (factors.size() != o.factors.size()) return factors.size() < o.factors.size();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        int c = cmp(factors[i].first, o.factors[i].first);
        if (c != 0) return c < 0;
        c = cmp(factors[i].second, o.factors[i].second);
        if (c != 0) return c < 0;
    }
    return ratfunc_cmp(exp_part, o.exp_part) < 0;
}

HyperexpElem HyperexpElem::one() { return from_ratfunc(RatFunc(Rational(1))); }

HyperexpElem HyperexpElem::from_ratfunc(const RatFunc& f) {
    return make(f, {}, RatFunc());
}

HyperexpElem HyperexpElem::make(const RatFunc& coefficient,
                                std::vector<std::pair<Rational, Rational>> raw_factors,
                                const RatFunc& exp_part) {
    if (coefficient.is_zero())
        throw Error("hyperexponential element cannot be zero");

    std::map<Rational, Rational> merged;
    for (const auto& [c, r] : raw_factors) merged[c] += r;

    HyperexpElem h;
    RatFunc coeff = coefficient;
    for (const auto& [c, r] : merged) {
        if (r == 0) continue;
        Integer n = floor_int(r);
        Rational fr = frac_part(r);
        if (n != 0) {
            long ni = static_cast<long>(n.get_si());
            coeff = coeff * RatFunc(Polynomial::linear(c)).pow(ni);
        }
        if (fr != 0) h.mono_.factors.emplace_back(c, fr);
    }
    h.mono_.exp_part = exp_part;

    // Split coeff = scalar * (monic / monic).
    Rational lead = coeff.num().leading();
    h.scalar_ = lead;
    h.cofactor_ = coeff * RatFunc(Rational(1) / lead);
    return h;
}

RatFunc HyperexpElem::log_derivative() const {
    RatFunc c = coefficient();
    return c.derive() / c + mono_.log_derivative();
}

HyperexpElem HyperexpElem::operator*(const HyperexpElem& o) const {
    std::vector<std::pair<Rational, Rational>> raw = mono_.factors;
    raw.insert(raw.end(), o.mono_.factors.begin(), o.mono_.factors.end());
    return make(coefficient() * o.coefficient(), std::move(raw),
                mono_.exp_part + o.mono_.exp_part);
}

HyperexpElem HyperexpElem::inverse() const {
    std::vector<std::pair<Rational, Rational>> raw;
    for (const auto& [c, r] : mono_.factors) raw.emplace_back(c, -r);
    return make(coefficient().inverse(), std::move(raw), -mono_.exp_part);
}

HyperexpElem HyperexpElem::pow(long e) const {
    std::vector<std::pair<Rational, Rational>> raw;
    for (const auto& [c, r] : mono_.factors) raw.emplace_back(c, r * Rational(e));
    return make(coefficient().pow(e), std::move(raw), mono_.exp_part * RatFunc(Rational(e)));
}

bool HyperexpElem::operator==(const HyperexpElem& o) const {
    return scalar_ == o.scalar_ && cofactor_ == o.cofactor_ && mono_ == o.mono_;
}

std::optional<RatFunc> HyperexpElem::to_ratfunc() const {
    if (!is_rational()) return std::nullopt;
    return coefficient();
}

std::string HyperexpElem::to_string() const {
    // Merge integer orders of the cofactor at rational points into the
    // displayed exponents.
    std::map<Rational, Rational> display;
    for (const auto& [c, r] : mono_.factors) display[c] = r;
    RationalRoots num_roots = rational_roots(cofactor_.num());
    RationalRoots den_roots = rational_roots(cofactor_.den());
    for (const auto& [c, k] : num_roots.roots) display[c] += Rational(static_cast<long>(k));
    for (const auto& [c, k] : den_roots.roots) display[c] -= Rational(static_cast<long>(k));

    bool neg = scalar_ < 0;
    Rational mag = neg ? Rational(-scalar_) : scalar_;

    std::vector<std::string> pieces;
    Polynomial rem_num = num_roots.remainder.monic();
    Polynomial rem_den = den_roots.remainder.monic();
    if (rem_num != Polynomial::one() || rem_den != Polynomial::one()) {
        std::string s = "(" + rem_num.to_string() + ")";
        if (rem_den != Polynomial::one()) s += "/(" + rem_den.to_string() + ")";
        pieces.push_back(s);
    }
    for (const auto& [c, r] : display) {
        if (r == 0) continue;
        std::string base;
        if (c == 0)
            base = "(x)";
        else if (c > 0)
            base = "(x - " + rat_to_string(c) + ")";
        else
            base = "(x + " + rat_to_string(Rational(-c)) + ")";
        if (r == 1)
            pieces.push_back(base);
        else if (is_integer(r) && r > 0)
            pieces.push_back(base + "^" + rat_to_string(r));
        else
            pieces.push_back(base + "^(" + rat_to_string(r) + ")");
    }
    if (!mono_.exp_part.is_zero())
        pieces.push_back("exp(" + mono_.exp_part.to_string() + ")");

    std::string out;
    if (mag != 1 || pieces.empty()) out = rat_to_string(mag);
    for (const auto& p : pieces) {
        if (!out.empty()) out += "*";
        out += p;
    }
    return (neg ? "-" : "") + out;
}

namespace {

// Product of two normalized monomials; exponent overflow past 1 moves into
// the returned rational carry.
std::pair<RatFunc, HyperexpMonomial> multiply_monomials(const HyperexpMonomial& a,
                                                        const HyperexpMonomial& b) {
    std::map<Rational, Rational> merged;
    for (const auto& [c, r] : a.factors) merged[c] += r;
    for (const auto& [c, r] : b.factors) merged[c] += r;
    RatFunc carry(Rational(1));
    HyperexpMonomial mono;
    for (const auto& [c, r] : merged) {
        if (r == 0) continue;
        Integer n = floor_int(r);
        Rational fr = frac_part(r);
        if (n != 0) carry = carry * RatFunc(Polynomial::linear(c)).pow(static_cast<long>(n.get_si()));
        if (fr != 0) mono.factors.emplace_back(c, fr);
    }
    mono.exp_part = a.exp_part + b.exp_part;
    return {carry, mono};
}

} // namespace

TowerElem::TowerElem(const RatFunc& f) {
    if (!f.is_zero()) terms_.emplace(HyperexpMonomial{}, f);
}

TowerElem::TowerElem(const HyperexpElem& h) {
    terms_.emplace(h.monomial(), h.coefficient());
}

void TowerElem::insert_term(const HyperexpMonomial& mono, const RatFunc& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TowerElem TowerElem::operator+(const TowerElem& o) const {
    TowerElem out = *this;
    for (const auto& [mono, coeff] : o.terms_) out.insert_term(mono, coeff);
    return out;
}

TowerElem TowerElem::operator-(const TowerElem& o) const { return *this + (-o); }

TowerElem TowerElem::operator-() const {
    TowerElem out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
    return out;
}

TowerElem TowerElem::operator*(const TowerElem& o) const {
    TowerElem out;
    for (const auto& [m1, f1] : terms_) {
        for (const auto& [m2, f2] : o.terms_) {
            auto [carry, mono] = multiply_monomials(m1, m2);
            out.insert_term(mono, f1 * f2 * carry);
        }
    }
    return out;
}

TowerElem TowerElem::derive() const {
    TowerElem out;
    for (const auto& [mono, coeff] : terms_)
        out.insert_term(mono, coeff.derive() + coeff * mono.log_derivative());
    return out;
}

std::optional<HyperexpElem> TowerElem::single_term() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [mono, coeff] = *terms_.begin();
    std::vector<std::pair<Rational, Rational>> raw(mono.factors.begin(), mono.factors.end());
    return HyperexpElem::make(coeff, std::move(raw), mono.exp_part);
}

TowerElem TowerElem::inverse() const {
    auto h = single_term();
    if (!h) throw NotInvertible("tower element with " + std::to_string(terms_.size()) +
                                " terms has no inverse in the model");
    return TowerElem(h->inverse());
}

bool TowerElem::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_trivial());
}

std::optional<RatFunc> TowerElem::to_ratfunc() const {
    if (terms_.empty()) return RatFunc();
    if (!is_rational()) return std::nullopt;
    return terms_.begin()->second;
}

std::string TowerElem::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, coeff] : terms_) {
        std::vector<std::pair<Rational, Rational>> raw(mono.factors.begin(), mono.factors.end());
        std::string term = HyperexpElem::make(coeff, std::move(raw), mono.exp_part).to_string();
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

void SplittingTower::add_generator(const HyperexpElem& h) {
    if (h.is_rational()) return;
    for (const auto& g : generators)
        if (g.monomial() == h.monomial()) return;
    generators.push_back(h);
}

std::vector<RatFunc> SplittingTower::log_derivatives() const {
    std::vector<RatFunc> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(g.log_derivative());
    return out;
}

} // namespace diffalg
