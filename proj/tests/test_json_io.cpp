#include <doctest.h>

#include <random>

#include "klrtab/fixtures.hpp"
#include "klrtab/json_io.hpp"

using namespace klrtab;

TEST_CASE("tableau json matches the documented encoding") {
    Tableau ex = fixtures::sl6_sample_tableau();
    nlohmann::json j = to_json(ex);
    CHECK(j["shape"] == nlohmann::json({6, 4, 2, 2, 1}));
    CHECK(j["rows"][0] == nlohmann::json({1, 1, 3, 3, 4, 6}));
    CHECK(tableau_from_json(j) == ex);
}

TEST_CASE("ml tableau json matches the documented encoding") {
    MLTableau t = fixtures::sl4_sample_ml();
    nlohmann::json j = to_json(t);
    CHECK(j == nlohmann::json::parse(R"({"n":3,"excess":[[2,3,4],[],[4]]})"));
    CHECK(ml_tableau_from_json(j) == t);
}

TEST_CASE("segment list json uses pairs") {
    SegmentList sl{{5, 1}, {4, 2}};
    nlohmann::json j = to_json(sl);
    CHECK(j == nlohmann::json::parse("[[5,1],[4,2]]"));
    CHECK(segment_list_from_json(j) == sl);
}

TEST_CASE("qchar json round-trips on random characters") {
    const int n = 4;
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        SegmentList sl;
        for (int s = 0; s < 3; ++s) {
            int a = 1 + static_cast<int>(rng() % n);
            int l = static_cast<int>(rng() % (n - a + 2));
            if (l) sl.push_back({a, l});
        }
        QChar c = induced_char(sl, n, trial % 2 == 0);
        CHECK(qchar_from_json(to_json(c)) == c);
    }
}

TEST_CASE("report json carries the verdict") {
    PhiReport r = verify_phi_lambda(Partition({1}), 1);
    nlohmann::json j = to_json(r);
    CHECK(j["pass"] == true);
    CHECK(j["tableaux"] == 2);
}
