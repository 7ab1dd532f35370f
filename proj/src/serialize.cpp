#include "diffalg/serialize.hpp"

#include "diffalg/errors.hpp"
#include "diffalg/parser.hpp"

namespace diffalg {

namespace {

template <class T>
Json matrix_to_json_impl(const Matrix<T>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class T, class F>
Matrix<T> matrix_from_json_impl(const Json& j, F&& parse_entry) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw Error("matrix JSON must be an array of arrays of expression strings");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    Matrix<T> m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols) throw Error("ragged matrix JSON");
        for (int c = 0; c < cols; ++c) {
            const auto& cell = j[i][c];
            if (!cell.is_string()) throw Error("matrix entries must be expression strings");
            m.at(i, c) = parse_entry(cell.template get<std::string>());
        }
    }
    return m;
}

} // namespace

Json matrix_to_json(const Matrix<RatFunc>& m) { return matrix_to_json_impl(m); }
Json matrix_to_json(const Matrix<TowerElem>& m) { return matrix_to_json_impl(m); }

Matrix<RatFunc> matrix_from_json(const Json& j) {
    return matrix_from_json_impl<RatFunc>(j, [](const std::string& s) { return parse_ratfunc(s); });
}

Matrix<TowerElem> tower_matrix_from_json(const Json& j) {
    return matrix_from_json_impl<TowerElem>(j,
                                            [](const std::string& s) { return parse_tower_elem(s); });
}

Dcsa dcsa_from_json(const Json& j) {
    Json pj = j;
    if (j.is_object()) {
        if (!j.contains("P")) throw Error("algebra JSON needs a \"P\" field");
        pj = j["P"];
    }
    Matrix<RatFunc> P = matrix_from_json(pj);
    if (!P.is_square()) throw Error("P must be square");
    if (j.is_object() && j.contains("n") && j["n"].get<int>() != P.rows())
        throw Error("declared n does not match the matrix size");
    return Dcsa{P.rows(), P};
}

Json dcsa_to_json(const Dcsa& alg) { return Json{{"n", alg.n}, {"P", matrix_to_json(alg.P)}}; }

Json descriptor_to_json(const GaloisDescriptor& d) {
    Json factors = Json::array();
    for (const auto& f : d.invariant_factors) factors.push_back(f.get_str());
    Json basis = Json::array();
    for (const auto& v : d.relation_basis) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(x.get_str());
        basis.push_back(std::move(row));
    }
    return Json{{"torus_rank", d.torus_rank},
                {"invariant_factors", factors},
                {"relation_basis", basis}};
}

Json fundamental_report_to_json(const FundamentalReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    j["equation_holds"] = rep.equation_holds;
    j["det_nonzero"] = rep.det_nonzero;
    j["det"] = rep.det.to_string();
    j["residual"] = matrix_to_json(rep.residual);
    if (rep.first_failure)
        j["first_failure"] = Json::array({rep.first_failure->first + 1, rep.first_failure->second + 1});
    return j;
}

} // namespace diffalg
