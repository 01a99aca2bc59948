#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fingeo/serialize.hpp"
#include "fingeo/suites.hpp"

using namespace fingeo;

TEST_CASE("point sets") {
    const PointSet H = hyperoval_conic_nucleus(8);
    const Json j = to_json(H);
    CHECK(j["ambient"]["N"] == 2);
    CHECK(j["ambient"]["Q"] == Json::array({2, 3}));
    CHECK(j["points"].size() == 10);
    CHECK(point_set_from_json(j) == H);
    CHECK(point_set_from_json(Json::parse(j.dump())) == H);
    Json dup = j;
    dup["points"].push_back(dup["points"][0]);
    CHECK_THROWS_AS(point_set_from_json(dup), std::invalid_argument);
}

TEST_CASE("linear sets") {
    const LinearSet L = moore_h_scattered(2, 3, 3, 2);
    const LinearSet M = linear_set_from_json(Json::parse(to_json(L).dump()));
    CHECK(M.basis() == L.basis());
    CHECK(M.r() == L.r());
    CHECK(M.tower().n() == 3);
}

TEST_CASE("codes") {
    const HammingCode C = hypercylinder_code(4, 3);
    const HammingCode D = hamming_code_from_json(Json::parse(to_json(C).dump()));
    CHECK(D.generator() == C.generator());
    CHECK(D.field().order() == 4);

    const RankCode R = cone_rank_code(2, 3, 3, 2, 1);
    const Json jr = to_json(R);
    CHECK(jr["n"] == R.length());
    const RankCode S = rank_code_from_json(jr);
    CHECK(S.generator() == R.generator());
    CHECK(S.tower().n() == 3);
}

TEST_CASE("reports and output is stable") {
    const Report r = verify_ti_formula(2, 2, 2, 1);
    const Json j = to_json(r);
    CHECK(j["theorem"] == "ti-formula");
    CHECK(j["items"].size() == r.items.size());
    CHECK(j.dump() == to_json(verify_ti_formula(2, 2, 2, 1)).dump());
    const auto c = cone(moore_h_scattered(2, 2, 2, 1), 3, 1);
    CHECK(to_json(construction_one(c)).dump() == to_json(construction_one(c)).dump());
}

TEST_CASE("csv") {
    CHECK(distribution_csv({1, 0, 3}, "weight") == "weight,count\n0,1\n2,3\n");
    const std::string p = profile_csv(hyperplane_profile(moore_h_scattered(2, 2, 2, 1)));
    CHECK(p.rfind("weight,size,count\n", 0) == 0);
}
