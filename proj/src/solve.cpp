#include "diffalg/solve.hpp"

#include <algorithm>
#include <set>

#include "diffalg/errors.hpp"
#include "diffalg/galois.hpp"
#include "diffalg/partial_fractions.hpp"

namespace diffalg {

HyperexpElem solve_rank1(const RatFunc& a) {
    // Simple-pole residues become exponents; everything else integrates
    // termwise into the exp part with zero integration constant.
    LogDerivativeData d = log_derivative_data(a);
    std::vector<std::pair<Rational, Rational>> exponents(d.residues.begin(), d.residues.end());
    return HyperexpElem::make(RatFunc(Rational(1)), std::move(exponents), d.exp_part);
}

namespace {

// Any exact solution of A u = rhs over Q, free variables set to zero.
std::optional<std::vector<Rational>> solve_linear_q(std::vector<std::vector<Rational>> A,
                                                    std::vector<Rational> rhs) {
    std::size_t rows = A.size();
    std::size_t cols = rows == 0 ? 0 : A[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && A[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(A[pr], A[r]);
        std::swap(rhs[pr], rhs[r]);
        Rational inv = Rational(1) / A[r][c];
        for (std::size_t j = c; j < cols; ++j) A[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || A[rr][c] == 0) continue;
            Rational f = A[rr][c];
            for (std::size_t j = c; j < cols; ++j) A[rr][j] -= f * A[r][j];
            rhs[rr] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t rr = r; rr < rows; ++rr)
        if (rhs[rr] != 0) return std::nullopt;
    std::vector<Rational> u(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) u[pivot_col[i]] = rhs[i];
    return u;
}

} // namespace

namespace {

// Candidate solutions of y' = a*y + b are spanned by x^k up to a degree
// bound from the behavior at infinity and (x - c)^{-k} up to local order
// bounds from lowest-order balance at each candidate pole. Resonant orders
// (integer residues of a) are included, so the basis is complete on the
// Q-split class.
std::vector<RatFunc> candidate_basis(const RatFunc& a,
                                     const std::vector<const RatFunc*>& rhs_list) {
    std::optional<PartialFraction> pf_a;
    if (!a.is_zero()) pf_a = partial_fractions(a);
    std::vector<PartialFraction> pf_rhs;
    for (const RatFunc* b : rhs_list)
        if (!b->is_zero()) pf_rhs.push_back(partial_fractions(*b));

    std::set<Rational> poles;
    if (pf_a)
        for (const auto& c : pf_a->pole_locations()) poles.insert(c);
    for (const auto& pf : pf_rhs)
        for (const auto& c : pf.pole_locations()) poles.insert(c);

    long db = 0;
    bool have_rhs = false;
    for (const RatFunc* b : rhs_list) {
        if (b->is_zero()) continue;
        long d = b->degree_at_infinity();
        db = have_rhs ? std::max(db, d) : d;
        have_rhs = true;
    }

    std::vector<RatFunc> basis;
    long d_max = 0;
    if (a.is_zero()) {
        if (have_rhs) d_max = std::max<long>(0, db + 1);
    } else {
        long da = a.degree_at_infinity();
        if (da >= 0) {
            if (have_rhs) d_max = std::max<long>(0, db - da);
        } else if (da <= -2) {
            if (have_rhs) d_max = std::max<long>(0, db + 1);
        } else {
            // a ~ rho/x at infinity; resonance when rho is a positive integer
            Rational rho_inf = a.num().leading(); // denominator is monic
            if (have_rhs) d_max = std::max<long>(0, db + 1);
            if (is_integer(rho_inf) && rho_inf >= 1) {
                Integer r = rho_inf.get_num();
                d_max = std::max(d_max, r.get_si());
            }
        }
    }
    for (long k = 0; k <= d_max; ++k)
        basis.emplace_back(Polynomial::x().pow(static_cast<unsigned>(k)));

    for (const auto& c : poles) {
        unsigned alpha = pf_a ? pf_a->order_at(c) : 0;
        unsigned beta = 0;
        for (const auto& pf : pf_rhs) beta = std::max(beta, pf.order_at(c));
        long m_c = 0;
        m_c = std::max(m_c, static_cast<long>(beta) - 1);
        m_c = std::max(m_c, static_cast<long>(beta) - static_cast<long>(alpha));
        if (alpha == 1 && pf_a) {
            Rational rho = pf_a->residue_at(c); // resonance when rho is a negative integer
            if (is_integer(rho) && rho <= -1) {
                Integer r = -rho.get_num();
                m_c = std::max(m_c, r.get_si());
            }
        }
        for (long k = 1; k <= m_c; ++k)
            basis.emplace_back(Polynomial::one(), Polynomial::linear(c).pow(static_cast<unsigned>(k)));
    }
    return basis;
}

// Exact linear solve of sum_i u_i * columns[i] = target as rational
// functions, by lifting to polynomial coefficients over a common
// denominator.
std::optional<std::vector<Rational>> solve_functional(const std::vector<RatFunc>& columns,
                                                      const RatFunc& target) {
    Polynomial common_den = target.den();
    for (const auto& f : columns) common_den = poly_lcm(common_den, f.den());
    auto lift = [&](const RatFunc& f) { return f.num() * (common_den / f.den()); };

    std::vector<Polynomial> lifted;
    int max_deg = lift(target).degree();
    for (const auto& f : columns) {
        lifted.push_back(lift(f));
        max_deg = std::max(max_deg, lifted.back().degree());
    }

    std::vector<std::vector<Rational>> A(static_cast<std::size_t>(max_deg + 1),
                                         std::vector<Rational>(columns.size(), Rational(0)));
    std::vector<Rational> rhs(static_cast<std::size_t>(max_deg + 1), Rational(0));
    for (std::size_t i = 0; i < lifted.size(); ++i)
        for (int k = 0; k <= lifted[i].degree(); ++k)
            A[static_cast<std::size_t>(k)][i] = lifted[i].coeff(k);
    Polynomial tl = lift(target);
    for (int k = 0; k <= tl.degree(); ++k) rhs[static_cast<std::size_t>(k)] = tl.coeff(k);

    return solve_linear_q(std::move(A), std::move(rhs));
}

} // namespace

std::optional<RatFunc> rational_solution(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) {
        // Nonzero rational solution of y'/y = a, if any.
        HyperexpElem h = solve_rank1(a);
        if (auto f = h.to_ratfunc()) return *f;
        return std::nullopt;
    }

    std::vector<RatFunc> basis = candidate_basis(a, {&b});
    std::vector<RatFunc> columns;
    columns.reserve(basis.size());
    for (const auto& phi : basis) columns.push_back(phi.derive() - a * phi);

    auto u = solve_functional(columns, b);
    if (!u) return std::nullopt;
    RatFunc y;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if ((*u)[i] != 0) y += basis[i] * RatFunc((*u)[i]);
    return y;
}

std::optional<std::pair<RatFunc, Rational>> rational_solution_with_parameter(const RatFunc& a,
                                                                             const RatFunc& b1,
                                                                             const RatFunc& b2) {
    std::vector<RatFunc> basis = candidate_basis(a, {&b1, &b2});
    std::vector<RatFunc> columns;
    columns.reserve(basis.size() + 1);
    for (const auto& phi : basis) columns.push_back(phi.derive() - a * phi);
    columns.push_back(-b2); // kappa column

    auto u = solve_functional(columns, b1);
    if (!u) return std::nullopt;
    RatFunc y;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if ((*u)[i] != 0) y += basis[i] * RatFunc((*u)[i]);
    auto kappa = (*u).back();
    return std::make_pair(y, Rational(kappa));
}

DiagonalSolution solve_diagonal(const Matrix<RatFunc>& P) {
    if (!P.is_square() || !P.is_diagonal())
        throw UnsupportedClass("solve_diagonal requires a diagonal matrix");
    int n = P.rows();
    DiagonalSolution out;
    out.fundamental.size = n;
    out.fundamental.module = {n, P};
    out.fundamental.entries = Matrix<TowerElem>(n, n);
    for (int i = 0; i < n; ++i) {
        HyperexpElem h = solve_rank1(P.at(i, i));
        out.fundamental.entries.at(i, i) = TowerElem(h);
        out.tower.add_generator(h);
    }
    return out;
}

TriangularSolution solve_triangular_2x2(const Matrix<RatFunc>& P) {
    if (!(P.rows() == 2 && P.cols() == 2 && P.is_upper_triangular()))
        throw UnsupportedClass("solve_triangular_2x2 requires an upper-triangular 2x2 matrix");
    const RatFunc& p11 = P.at(0, 0);
    const RatFunc& p22 = P.at(1, 1);
    const RatFunc& p12 = P.at(0, 1);

    HyperexpElem h1 = HyperexpElem::one(), h2 = HyperexpElem::one();
    try {
        h1 = solve_rank1(p11);
        h2 = solve_rank1(p22);
    } catch (const NonSplitDenominator& e) {
        throw NotInClass(std::string("diagonal entry outside the rank-1 class: ") + e.what());
    }

    TriangularSolution out;
    std::optional<RatFunc> z;
    if (p12.is_zero())
        z = RatFunc();
    else
        z = rational_solution(p11 - p22, p12);

    if (!z) {
        out.completely_reducible = false;
        out.obstruction = "no rational solution z of z' = (p11 - p22)*z + p12 with p11 - p22 = " +
                          (p11 - p22).to_string() + ", p12 = " + p12.to_string();
        return out;
    }
    out.completely_reducible = true;
    out.gauge_entry = z;

    Matrix<TowerElem> Z(2, 2);
    Z.at(0, 0) = TowerElem(h1);
    Z.at(0, 1) = TowerElem(*z) * TowerElem(h2);
    Z.at(1, 1) = TowerElem(h2);
    out.fundamental = FundamentalMatrix{2, Z, DiffModule{2, P}};
    SplittingTower tower;
    tower.add_generator(h1);
    tower.add_generator(h2);
    out.tower = tower;
    return out;
}

std::optional<TowerElem> solve_first_order_tower(const RatFunc& a, const TowerElem& b) {
    TowerElem y;
    for (const auto& [mono, coeff] : b.terms()) {
        auto y_mono = rational_solution(a - mono.log_derivative(), coeff);
        if (!y_mono) return std::nullopt;
        if (y_mono->is_zero()) continue;
        std::vector<std::pair<Rational, Rational>> raw(mono.factors.begin(), mono.factors.end());
        y += TowerElem(HyperexpElem::make(*y_mono, std::move(raw), mono.exp_part));
    }
    return y;
}

} // namespace diffalg
