#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diffalg/dcsa.hpp"
#include "diffalg/errors.hpp"
#include "diffalg/ideals.hpp"
#include "diffalg/parser.hpp"
#include "diffalg/serialize.hpp"

namespace {

using namespace diffalg;

// Inline JSON if it looks like JSON, otherwise a path to a JSON file.
Json load_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] != '[' && arg[0] != '{') {
        std::ifstream in(arg);
        if (!in) throw Error("cannot open file: " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return Json::parse(text);
}

Dcsa load_algebra(const std::string& arg) { return dcsa_from_json(load_json_arg(arg)); }

SplittingTower load_tower(const std::vector<std::string>& gens) {
    SplittingTower tower;
    for (const auto& g : gens) tower.add_generator(parse_hyperexp(g));
    return tower;
}

void emit(const Json& report, bool as_json) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // plain rendering: one "key: value" line per top-level field
    for (const auto& [key, value] : report.items()) {
        if (value.is_string())
            std::cout << key << ": " << value.get<std::string>() << "\n";
        else
            std::cout << key << ": " << value.dump() << "\n";
    }
}

Json tower_to_json(const SplittingTower& tower) {
    Json gens = Json::array();
    for (const auto& g : tower.generators) gens.push_back(g.to_string());
    return gens;
}

int run_associated_ode(const Dcsa& alg, bool as_json) {
    DiffModule mod = associated_module(alg);
    Json rep;
    rep["command"] = "associated-ode";
    rep["n"] = alg.n;
    rep["dim"] = mod.dim;
    rep["conn"] = matrix_to_json(mod.conn);
    emit(rep, as_json);
    return 0;
}

int run_solve(const Dcsa& alg, bool as_json) {
    Json rep;
    rep["command"] = "solve";
    if (alg.P.is_diagonal()) {
        DiagonalSolution sol = solve_diagonal(alg.P);
        rep["fundamental_matrix"] = matrix_to_json(sol.fundamental.entries);
        rep["tower"] = tower_to_json(sol.tower);
        rep["completely_reducible"] = true;
    } else if (alg.n == 2 && alg.P.is_upper_triangular()) {
        TriangularSolution sol = solve_triangular_2x2(alg.P);
        rep["completely_reducible"] = sol.completely_reducible;
        if (sol.completely_reducible) {
            rep["fundamental_matrix"] = matrix_to_json(sol.fundamental->entries);
            rep["tower"] = tower_to_json(*sol.tower);
            rep["gauge_entry"] = sol.gauge_entry->to_string();
        } else {
            rep["obstruction"] = sol.obstruction;
        }
    } else {
        throw UnsupportedClass("solve supports diagonal and 2x2 upper-triangular P only");
    }
    emit(rep, as_json);
    return 0;
}

int run_constants(const Dcsa& alg, const std::vector<std::string>& tower_arg, bool as_json) {
    ConstantsAlgebra ca = tower_arg.empty() ? constants_algebra(alg)
                                            : constants_algebra(alg, load_tower(tower_arg));
    Json rep;
    rep["command"] = "constants";
    rep["dimension"] = ca.dimension();
    rep["expected"] = alg.n * alg.n;
    rep["trivial"] = ca.dimension() == alg.n * alg.n;
    Json basis = Json::array();
    for (const auto& X : ca.basis) basis.push_back(matrix_to_json(X));
    rep["basis"] = basis;
    rep["tower"] = tower_to_json(ca.tower);
    emit(rep, as_json);
    return 0;
}

int run_split_check(const Dcsa& alg, const std::string& z_arg,
                    const std::vector<std::string>& tower_arg, bool as_json) {
    Json rep;
    rep["command"] = "split-check";
    if (!z_arg.empty()) {
        Matrix<TowerElem> Z = tower_matrix_from_json(load_json_arg(z_arg));
        FundamentalReport fr = split_check(alg, Z);
        rep["certificate"] = fundamental_report_to_json(fr);
        rep["verdict"] = fr.pass ? "pass: dZ = P*Z with det(Z) nonzero"
                                 : "fail: " + fr.summary();
    } else {
        SplittingTower tower = tower_arg.empty() ? module_splitting_tower(alg)
                                                 : load_tower(tower_arg);
        SplitSearchResult res = split_search(alg, tower);
        rep["tower"] = tower_to_json(tower);
        rep["splits"] = res.splits;
        rep["gauge_equivalent_to_zero"] = res.gauge_trivial;
        if (res.strict_Z) rep["Z"] = matrix_to_json(*res.strict_Z);
        if (res.general_H && res.splits) {
            rep["H"] = matrix_to_json(*res.general_H);
            rep["defect"] = res.defect->to_string();
        }
        if (!res.obstruction.empty()) rep["obstruction"] = res.obstruction;
        rep["verdict"] = res.splits
                             ? (res.gauge_trivial
                                    ? "splits; P is gauge equivalent to 0 over the tower"
                                    : "splits via a scalar-defect gauge; P is NOT gauge "
                                      "equivalent to 0 over the tower")
                             : "does not split over the tower";
    }
    emit(rep, as_json);
    return 0;
}

int run_gauge_check(const Dcsa& alg, const std::string& m_arg,
                    const std::vector<std::string>& tower_arg, bool as_json) {
    Json rep;
    rep["command"] = "gauge-check";
    if (!m_arg.empty()) {
        Matrix<RatFunc> m = matrix_from_json(load_json_arg(m_arg));
        Matrix<RatFunc> a = gauge_transform(alg.P, m);
        rep["gauge_transform"] = matrix_to_json(a);
        rep["verdict"] = "computed a = m^-1*P*m - m^-1*m'";
    } else {
        SplittingTower tower = tower_arg.empty() ? module_splitting_tower(alg)
                                                 : load_tower(tower_arg);
        SplitSearchResult res = split_search(alg, tower);
        rep["tower"] = tower_to_json(tower);
        rep["gauge_equivalent_to_zero"] = res.gauge_trivial;
        if (res.strict_Z) rep["Z"] = matrix_to_json(*res.strict_Z);
        if (!res.obstruction.empty()) rep["obstruction"] = res.obstruction;
        rep["verdict"] = res.gauge_trivial ? "P is gauge equivalent to 0 over the tower"
                                           : "no Z over the tower solves dZ = P*Z";
    }
    emit(rep, as_json);
    return 0;
}

int run_ideals(const Dcsa& alg, bool as_json) {
    Json rep;
    rep["command"] = "ideals";
    StableSubspaceReport stable = delta_stable_subspaces(alg.P);
    Json subspaces = Json::array();
    for (const auto& w : stable.subspaces) {
        Json basis = Json::array();
        for (const auto& v : w.basis()) {
            Json row = Json::array();
            for (const auto& f : v) row.push_back(f.to_string());
            basis.push_back(std::move(row));
        }
        subspaces.push_back(Json{{"dim", w.dim()}, {"basis", basis}});
    }
    rep["delta_stable_subspaces"] = subspaces;
    rep["lattice_complete"] = stable.complete;
    if (!stable.note.empty()) rep["note"] = stable.note;

    ReductiveResult red = reductive_criterion(alg);
    rep["reductive"] = red.reductive;
    if (red.reductive) {
        Json summands = Json::array();
        for (const auto& ideal : red.summands) {
            Json mats = Json::array();
            for (const auto& B : ideal.matrix_basis()) mats.push_back(matrix_to_json(B));
            summands.push_back(Json{{"dim", ideal.dim()}, {"matrix_basis", mats}});
        }
        rep["minimal_ideals"] = summands;
    } else {
        rep["witness"] = red.note;
    }

    auto flag = flag_criterion(alg);
    if (flag) {
        Json dims = Json::array();
        for (const auto& ideal : flag->chain) dims.push_back(ideal.dim());
        rep["flag_dimensions"] = dims;
    } else {
        rep["flag_dimensions"] = nullptr;
    }
    emit(rep, as_json);
    return 0;
}

int run_classify(const Dcsa& alg, bool as_json) {
    if (!alg.P.is_diagonal())
        throw UnsupportedClass("classify reads exponent data off a diagonal P");
    std::vector<RatFunc> column, module;
    for (int i = 0; i < alg.n; ++i) column.push_back(alg.P.at(i, i));
    for (int k = 0; k < alg.n; ++k)
        for (int l = 0; l < alg.n; ++l) module.push_back(alg.P.at(k, k) - alg.P.at(l, l));

    Json rep;
    rep["command"] = "classify";
    rep["column_tower_group"] = descriptor_to_json(classify(column));
    rep["module_tower_group"] = descriptor_to_json(classify(module));
    TowerDescription td = tower_description(module);
    rep["module_tower"] = Json{{"transcendence_degree", td.transcendence_degree},
                               {"algebraic_degree", td.algebraic_degree.get_str()},
                               {"exponential", td.exponential}};
    emit(rep, as_json);
    return 0;
}

int run_tensor_power(const Dcsa& alg, int m, int bound, bool as_json) {
    Dcsa powered = tensor_power(alg, m, bound);
    Json rep;
    rep["command"] = "tensor-power";
    rep["m"] = m;
    rep["result"] = dcsa_to_json(powered);
    emit(rep, as_json);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for differential matrix algebras (M_n(Q(x)), d/dx + inn_P)"};
    app.require_subcommand(1);

    std::string p_arg, z_arg, m_arg;
    std::vector<std::string> tower_arg;
    bool as_json = false;
    int power_m = 2, power_bound = 16;

    auto add_common = [&](CLI::App* cmd, bool needs_tower = true) {
        cmd->add_option("--P", p_arg, "matrix P as JSON (inline or file path)")->required();
        cmd->add_flag("--json", as_json, "emit a JSON report on stdout");
        if (needs_tower)
            cmd->add_option("--tower", tower_arg,
                            "extra exponential generators, e.g. \"(x)^(1/2)\" \"exp(x)\"");
        return cmd;
    };

    auto* assoc = add_common(app.add_subcommand("associated-ode",
                                                "n^2-dimensional module of the algebra"),
                             false);
    auto* solve_cmd = add_common(app.add_subcommand("solve", "fundamental matrix of dY = P*Y"),
                                 false);
    auto* constants = add_common(app.add_subcommand("constants", "basis of { X : D(X) = 0 }"));
    auto* split = add_common(app.add_subcommand("split-check", "splitting certificates"));
    split->add_option("--Z", z_arg, "candidate certificate Z as JSON");
    auto* gauge = add_common(app.add_subcommand("gauge-check",
                                                "gauge transforms and gauge triviality"));
    gauge->add_option("--m", m_arg, "gauge matrix m as JSON");
    auto* ideals_cmd = add_common(app.add_subcommand("ideals",
                                                     "delta-stable subspaces, reductivity, flags"),
                                  false);
    auto* classify_cmd = add_common(app.add_subcommand("classify",
                                                       "Galois descriptor of the exponent lattice"),
                                    false);
    auto* tensor = add_common(app.add_subcommand("tensor-power", "Kronecker-sum tensor power"),
                              false);
    tensor->add_option("--m", power_m, "tensor exponent (default 2)");
    tensor->add_option("--bound", power_bound, "size limit on n^m (default 16)");

    CLI11_PARSE(app, argc, argv);

    try {
        Dcsa alg = load_algebra(p_arg);
        if (assoc->parsed()) return run_associated_ode(alg, as_json);
        if (solve_cmd->parsed()) return run_solve(alg, as_json);
        if (constants->parsed()) return run_constants(alg, tower_arg, as_json);
        if (split->parsed()) return run_split_check(alg, z_arg, tower_arg, as_json);
        if (gauge->parsed()) return run_gauge_check(alg, m_arg, tower_arg, as_json);
        if (ideals_cmd->parsed()) return run_ideals(alg, as_json);
        if (classify_cmd->parsed()) return run_classify(alg, as_json);
        if (tensor->parsed()) return run_tensor_power(alg, power_m, power_bound, as_json);
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const UnsupportedClass& e) {
        std::cerr << "unsupported class: " << e.what() << "\n";
        return 2;
    } catch (const NonSplitDenominator& e) {
        std::cerr << "outside the restricted solver class: " << e.what() << "\n";
        return 2;
    } catch (const NotInClass& e) {
        std::cerr << "outside the restricted solver class: " << e.what() << "\n";
        return 2;
    } catch (const SizeLimit& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return 2;
    } catch (const SingularGauge& e) {
        std::cerr << "singular input: " << e.what() << "\n";
        return 2;
    } catch (const SingularMatrix& e) {
        std::cerr << "singular input: " << e.what() << "\n";
        return 2;
    } catch (const NotInvertible& e) {
        std::cerr << "not invertible in the model: " << e.what() << "\n";
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const DivisionByZero& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        std::cerr << "JSON error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
