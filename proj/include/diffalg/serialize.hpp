#ifndef DIFFALG_SERIALIZE_HPP
#define DIFFALG_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "diffalg/dcsa.hpp"
#include "diffalg/diffmod.hpp"
#include "diffalg/galois.hpp"
#include "diffalg/matrix.hpp"

namespace diffalg {

using Json = nlohmann::json;

// Matrices serialize as JSON arrays of expression strings.
Json matrix_to_json(const Matrix<RatFunc>& m);
Json matrix_to_json(const Matrix<TowerElem>& m);
Matrix<RatFunc> matrix_from_json(const Json& j);
Matrix<TowerElem> tower_matrix_from_json(const Json& j);

// { "n": int, "P": [[expr, ...], ...] }; a bare array is accepted as P.
Dcsa dcsa_from_json(const Json& j);
Json dcsa_to_json(const Dcsa& alg);

Json descriptor_to_json(const GaloisDescriptor& d);
Json fundamental_report_to_json(const FundamentalReport& rep);

} // namespace diffalg

#endif
