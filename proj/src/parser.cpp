#include "diffalg/parser.hpp"

#include <cctype>
#include <optional>

#include "diffalg/errors.hpp"

namespace diffalg {

namespace {

// Exact s^e for rational e = u/v: requires v-th roots of numerator and
// denominator to exist in Z.
std::optional<Rational> exact_rational_power(const Rational& s, const Rational& e) {
    if (s == 0) return std::nullopt;
    Integer u = e.get_num(), v = e.get_den();
    Integer num = s.get_num(), den = s.get_den();
    if (s < 0 && v % 2 == 0) return std::nullopt;
    Integer rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), v.get_ui()) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), v.get_ui()) == 0) return std::nullopt;
    Rational root(rn, rd);
    root.canonicalize();
    long ui = static_cast<long>(u.get_si());
    Rational out(1);
    Rational base = ui >= 0 ? root : Rational(1) / root;
    unsigned long k = static_cast<unsigned long>(ui >= 0 ? ui : -ui);
    while (k > 0) {
        if (k & 1ul) out *= base;
        base *= base;
        k >>= 1ul;
    }
    return out;
}

TowerElem tower_pow(const TowerElem& base, long e, std::size_t offset) {
    if (base.is_zero()) {
        if (e <= 0) throw DivisionByZero("zero raised to a nonpositive power");
        return TowerElem();
    }
    if (auto h = base.single_term()) return TowerElem(h->pow(e));
    if (e < 0)
        throw SyntaxError("negative power of a multi-term element is not representable", offset);
    TowerElem out{RatFunc(Rational(1))};
    for (long i = 0; i < e; ++i) out = out * base;
    return out;
}

// base^(u/v) for non-integer u/v: base must be rational and split into
// rational linear factors with an exactly-rootable scalar.
TowerElem tower_fractional_pow(const TowerElem& base, const Rational& e, std::size_t offset) {
    auto f = base.to_ratfunc();
    if (!f || f->is_zero())
        throw SyntaxError("fractional power requires a nonzero rational base", offset);
    RationalRoots nr = rational_roots(f->num());
    RationalRoots dr = rational_roots(f->den());
    if (nr.remainder.degree() >= 1 || dr.remainder.degree() >= 1)
        throw SyntaxError("fractional power requires a base that splits over Q", offset);
    Rational scalar = nr.remainder.constant_value() / dr.remainder.constant_value();
    auto root = exact_rational_power(scalar, e);
    if (!root)
        throw SyntaxError("scalar factor has no exact rational root", offset);
    std::vector<std::pair<Rational, Rational>> factors;
    for (const auto& [c, k] : nr.roots) factors.emplace_back(c, Rational(static_cast<long>(k)) * e);
    for (const auto& [c, k] : dr.roots) factors.emplace_back(c, Rational(-static_cast<long>(k)) * e);
    return TowerElem(HyperexpElem::make(RatFunc(*root), std::move(factors), RatFunc()));
}

class Parser {
public:
    Parser(std::string_view src, bool hyperexp) : src_(src), hyperexp_(hyperexp) {}

    TowerElem run() {
        TowerElem v = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return v;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    bool hyperexp_;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }

    Integer parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) throw SyntaxError("expected an integer", pos_);
        return Integer(std::string(src_.substr(start, pos_ - start)));
    }

    TowerElem parse_expr() {
        bool neg = consume('-');
        TowerElem acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (consume('+'))
                acc += parse_term();
            else if (consume('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    TowerElem parse_term() {
        TowerElem acc = parse_factor();
        while (true) {
            if (consume('*')) {
                acc = acc * parse_factor();
            } else if (consume('/')) {
                std::size_t at = pos_;
                TowerElem rhs = parse_factor();
                if (rhs.is_zero()) throw DivisionByZero("division by literal zero");
                (void)at;
                acc = acc * rhs.inverse();
            } else {
                return acc;
            }
        }
    }

    TowerElem parse_factor() {
        TowerElem base = parse_base();
        if (!consume('^')) return base;
        std::size_t at = pos_;
        // integer exponent, or (in hyperexp mode) a parenthesized rational
        if (hyperexp_ && peek() == '(') {
            expect('(');
            bool neg = consume('-');
            Integer num = parse_integer();
            Integer den = 1;
            if (consume('/')) den = parse_integer();
            expect(')');
            if (den == 0) throw DivisionByZero("zero denominator in exponent");
            Rational e(num, den);
            e.canonicalize();
            if (neg) e = -e;
            if (is_integer(e)) return tower_pow(base, static_cast<long>(e.get_num().get_si()), at);
            return tower_fractional_pow(base, e, at);
        }
        bool neg = consume('-');
        Integer e = parse_integer();
        long ei = static_cast<long>(e.get_si());
        return tower_pow(base, neg ? -ei : ei, at);
    }

    TowerElem parse_base() {
        skip_ws();
        if (pos_ >= src_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer n = parse_integer();
            return TowerElem(RatFunc(Rational(n)));
        }
        if (c == '(') {
            ++pos_;
            TowerElem v = parse_expr();
            expect(')');
            return v;
        }
        if (hyperexp_ && src_.substr(pos_).rfind("exp", 0) == 0) {
            std::size_t at = pos_;
            pos_ += 3;
            expect('(');
            TowerElem arg = parse_expr();
            expect(')');
            auto r = arg.to_ratfunc();
            if (!r) throw SyntaxError("exp argument must be a rational function", at);
            if (r->is_zero()) return TowerElem(RatFunc(Rational(1)));
            return TowerElem(HyperexpElem::make(RatFunc(Rational(1)), {}, *r));
        }
        if (c == 'x') {
            ++pos_;
            return TowerElem(RatFunc::x());
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }
};

} // namespace

RatFunc parse_ratfunc(std::string_view text) {
    TowerElem v = Parser(text, /*hyperexp=*/false).run();
    auto f = v.to_ratfunc();
    if (!f) throw SyntaxError("expression is not a rational function", 0);
    return *f;
}

TowerElem parse_tower_elem(std::string_view text) { return Parser(text, /*hyperexp=*/true).run(); }

HyperexpElem parse_hyperexp(std::string_view text) {
    TowerElem v = parse_tower_elem(text);
    auto h = v.single_term();
    if (!h) throw SyntaxError("expected a single hyperexponential term", 0);
    return *h;
}

} // namespace diffalg
