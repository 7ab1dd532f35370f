#include <doctest.h>

#include "diffalg/parser.hpp"
#include "diffalg/serialize.hpp"
#include "testutil.hpp"

using namespace diffalg;

TEST_CASE("matrix JSON round trip: expression strings re-parse to equal values") {
    auto rng = testutil::make_rng(89);
    for (int t = 0; t < 40; ++t) {
        Matrix<RatFunc> m(2, 3);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = testutil::random_ratfunc(rng);
        Json j = matrix_to_json(m);
        // the report re-parses
        Json reparsed = Json::parse(j.dump());
        CHECK(matrix_from_json(reparsed) == m);
    }
}

TEST_CASE("algebra JSON round trip") {
    Matrix<RatFunc> P(2, 2);
    P.at(0, 0) = parse_ratfunc("1/(4*x)");
    P.at(1, 1) = parse_ratfunc("-1/(4*x)");
    Dcsa alg{2, P};
    Json j = dcsa_to_json(alg);
    Dcsa back = dcsa_from_json(Json::parse(j.dump()));
    CHECK(back.n == 2);
    CHECK(back.P == P);
    // a bare array is accepted as P
    CHECK(dcsa_from_json(j["P"]).P == P);
}

TEST_CASE("tower matrix JSON round trip") {
    Matrix<TowerElem> Z(2, 2);
    Z.at(0, 0) = TowerElem(parse_hyperexp("(x)^(1/4)"));
    Z.at(0, 1) = TowerElem(parse_ratfunc("x+1")) + TowerElem(parse_hyperexp("exp(-1/x)"));
    Z.at(1, 1) = TowerElem(parse_hyperexp("(x)^(-1/4)"));
    Json j = matrix_to_json(Z);
    CHECK(tower_matrix_from_json(Json::parse(j.dump())) == Z);
}

TEST_CASE("malformed matrix JSON is rejected") {
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1,2]]")), Error);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[\"x\"],[\"x\",\"1\"]]")), Error);
    CHECK_THROWS_AS(dcsa_from_json(Json::parse("{\"n\": 3, \"P\": [[\"x\"]]}")), Error);
}
