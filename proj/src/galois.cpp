#include "diffalg/galois.hpp"

#include <algorithm>
#include <set>

#include "diffalg/errors.hpp"
#include "diffalg/partial_fractions.hpp"

namespace diffalg {

LogDerivativeData log_derivative_data(const RatFunc& a) {
    PartialFraction pf = partial_fractions(a);
    LogDerivativeData out;
    for (int k = 0; k <= pf.poly.degree(); ++k) {
        Rational c = pf.poly.coeff(k);
        if (c == 0) continue;
        std::vector<Rational> mono(static_cast<std::size_t>(k + 2), Rational(0));
        mono.back() = c / Rational(k + 1);
        out.exp_part += RatFunc(Polynomial(std::move(mono)));
    }
    for (const auto& t : pf.terms) {
        if (t.order == 1)
            out.residues[t.location] = t.coeff;
        else
            out.exp_part += RatFunc(Polynomial(-t.coeff / Rational(static_cast<long>(t.order - 1))),
                                    Polynomial::linear(t.location).pow(t.order - 1));
    }
    return out;
}

namespace {

// Coordinate key for the Q-linear span of exp parts: polynomial coefficient
// of degree k, or Laurent coefficient at (pole, order).
struct CoordKey {
    bool is_pole = false;
    Rational pole;
    unsigned index = 0; // degree or order

    bool operator<(const CoordKey& o) const {
        if (is_pole != o.is_pole) return !is_pole;
        if (is_pole) {
            int c = cmp(pole, o.pole);
            if (c != 0) return c < 0;
        }
        return index < o.index;
    }
};

std::map<CoordKey, Rational> exp_coordinates(const RatFunc& r) {
    std::map<CoordKey, Rational> out;
    if (r.is_zero()) return out;
    PartialFraction pf = partial_fractions(r);
    for (int k = 0; k <= pf.poly.degree(); ++k)
        if (pf.poly.coeff(k) != 0) out[{false, Rational(0), static_cast<unsigned>(k)}] = pf.poly.coeff(k);
    for (const auto& t : pf.terms) out[{true, t.location, t.order}] = t.coeff;
    return out;
}

// Integer constraint system over unknowns (n_1..n_g, u_1..u_p):
//   exp rows:   sum_i n_i R_i = target exp part (exact),
//   pole rows:  sum_i n_i r_{i,c} - L_c u_c = target residue at c (times L_c).
struct ConstraintSystem {
    IMat A;
    IVec rhs;
    std::size_t generators = 0;
};

ConstraintSystem build_system(const std::vector<LogDerivativeData>& gens,
                              const LogDerivativeData& target) {
    ConstraintSystem sys;
    std::size_t g = gens.size();
    sys.generators = g;

    std::set<CoordKey> exp_keys;
    std::vector<std::map<CoordKey, Rational>> gen_coords;
    for (const auto& d : gens) {
        gen_coords.push_back(exp_coordinates(d.exp_part));
        for (const auto& [k, v] : gen_coords.back()) exp_keys.insert(k);
    }
    auto target_coords = exp_coordinates(target.exp_part);
    for (const auto& [k, v] : target_coords) exp_keys.insert(k);

    std::set<Rational> poles;
    for (const auto& d : gens)
        for (const auto& [c, r] : d.residues) poles.insert(c);
    for (const auto& [c, r] : target.residues) poles.insert(c);
    std::vector<Rational> pole_list(poles.begin(), poles.end());
    std::size_t p = pole_list.size();

    auto coeff_of = [](const std::map<CoordKey, Rational>& m, const CoordKey& k) {
        auto it = m.find(k);
        return it == m.end() ? Rational(0) : it->second;
    };
    auto residue_of = [](const LogDerivativeData& d, const Rational& c) {
        auto it = d.residues.find(c);
        return it == d.residues.end() ? Rational(0) : it->second;
    };

    for (const auto& key : exp_keys) {
        std::vector<Rational> row(g);
        Integer den_lcm = 1;
        for (std::size_t i = 0; i < g; ++i) {
            row[i] = coeff_of(gen_coords[i], key);
            den_lcm = lcm_int(den_lcm, row[i].get_den());
        }
        Rational t = coeff_of(target_coords, key);
        den_lcm = lcm_int(den_lcm, t.get_den());
        IVec irow(g + p, 0);
        for (std::size_t i = 0; i < g; ++i) {
            Rational scaled = row[i] * Rational(den_lcm);
            irow[i] = scaled.get_num();
        }
        sys.A.push_back(std::move(irow));
        Rational st = t * Rational(den_lcm);
        sys.rhs.push_back(st.get_num());
    }
    for (std::size_t k = 0; k < p; ++k) {
        Integer den_lcm = 1;
        std::vector<Rational> row(g);
        for (std::size_t i = 0; i < g; ++i) {
            row[i] = residue_of(gens[i], pole_list[k]);
            den_lcm = lcm_int(den_lcm, row[i].get_den());
        }
        Rational t = residue_of(target, pole_list[k]);
        den_lcm = lcm_int(den_lcm, t.get_den());
        IVec irow(g + p, 0);
        for (std::size_t i = 0; i < g; ++i) {
            Rational scaled = row[i] * Rational(den_lcm);
            irow[i] = scaled.get_num();
        }
        irow[g + k] = -den_lcm;
        sys.A.push_back(std::move(irow));
        Rational st = t * Rational(den_lcm);
        sys.rhs.push_back(st.get_num());
    }
    return sys;
}

std::vector<LogDerivativeData> collect_data(const std::vector<RatFunc>& a) {
    std::vector<LogDerivativeData> out;
    out.reserve(a.size());
    for (const auto& f : a) out.push_back(log_derivative_data(f));
    return out;
}

} // namespace

std::vector<IVec> relation_lattice(const std::vector<RatFunc>& a) {
    std::vector<LogDerivativeData> data = collect_data(a);
    ConstraintSystem sys = build_system(data, LogDerivativeData{});
    std::size_t g = a.size();
    if (sys.A.empty()) {
        // No constraints at all: the whole of Z^g is the lattice.
        std::vector<IVec> basis;
        for (std::size_t i = 0; i < g; ++i) {
            IVec v(g, 0);
            v[i] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    std::vector<IVec> kernel = integer_kernel(sys.A);
    std::vector<IVec> projected;
    projected.reserve(kernel.size());
    for (const auto& v : kernel) projected.emplace_back(v.begin(), v.begin() + static_cast<long>(g));
    return lattice_canonical_basis(projected, g);
}

Integer GaloisDescriptor::finite_order() const {
    Integer o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
}

GaloisDescriptor classify(const std::vector<RatFunc>& a) {
    GaloisDescriptor desc;
    std::vector<LogDerivativeData> data = collect_data(a);
    desc.relation_basis = relation_lattice(a);
    std::size_t g = a.size();
    desc.torus_rank = static_cast<int>(g - desc.relation_basis.size());

    if (!desc.relation_basis.empty()) {
        IMat B(g, IVec(desc.relation_basis.size(), 0));
        for (std::size_t j = 0; j < desc.relation_basis.size(); ++j)
            for (std::size_t i = 0; i < g; ++i) B[i][j] = desc.relation_basis[j][i];
        for (const auto& d : smith_invariants(B))
            if (d > 1) desc.invariant_factors.push_back(d);
    }

    std::set<Rational> poles;
    for (const auto& d : data)
        for (const auto& [c, r] : d.residues) poles.insert(c);
    desc.pole_locations.assign(poles.begin(), poles.end());
    for (const auto& d : data) {
        std::vector<Rational> row;
        for (const auto& c : desc.pole_locations) {
            auto it = d.residues.find(c);
            row.push_back(it == d.residues.end() ? Rational(0) : it->second);
        }
        desc.residue_matrix.push_back(std::move(row));
        desc.exp_flags.push_back(!d.exp_part.is_zero());
    }
    return desc;
}

namespace {

// Rank over Q of the lattice basis, an independent route to the free rank.
std::size_t rational_rank(const std::vector<IVec>& basis, std::size_t dim) {
    if (basis.empty()) return 0;
    std::vector<std::vector<Rational>> m;
    for (const auto& v : basis) {
        std::vector<Rational> row;
        row.reserve(dim);
        for (const auto& x : v) row.emplace_back(x);
        m.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[rank][col];
            for (std::size_t j = col; j < dim; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

TowerDescription tower_description(const std::vector<RatFunc>& a) {
    TowerDescription out;
    out.group = classify(a);
    std::size_t lattice_rank = rational_rank(out.group.relation_basis, a.size());
    out.transcendence_degree = static_cast<int>(a.size() - lattice_rank);
    if (out.transcendence_degree != out.group.torus_rank)
        throw Error("transcendence degree does not match descriptor torus rank");
    out.algebraic_degree = out.group.finite_order();
    out.exponential = true;
    return out;
}

std::optional<MembershipWitness> tower_membership(const HyperexpElem& h, const SplittingTower& tower) {
    std::vector<LogDerivativeData> gens;
    gens.reserve(tower.generators.size());
    for (const auto& xi : tower.generators) gens.push_back(log_derivative_data(xi.log_derivative()));
    LogDerivativeData target = log_derivative_data(h.log_derivative());

    ConstraintSystem sys = build_system(gens, target);
    std::size_t g = tower.generators.size();

    IVec n;
    if (sys.A.empty()) {
        n.assign(g, 0);
    } else {
        auto sol = solve_diophantine(sys.A, sys.rhs);
        if (!sol) return std::nullopt;
        n.assign(sol->begin(), sol->begin() + static_cast<long>(g));
    }

    HyperexpElem quotient = h;
    for (std::size_t i = 0; i < g; ++i) {
        long e = static_cast<long>(n[i].get_si());
        if (e != 0) quotient = quotient * tower.generators[i].pow(-e);
    }
    auto f = quotient.to_ratfunc();
    if (!f) throw Error("tower membership witness failed to reduce to a rational cofactor");
    return MembershipWitness{std::move(n), *f};
}

} // namespace diffalg
