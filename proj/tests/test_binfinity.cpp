#include <doctest.h>

#include <random>

#include "klrtab/binfinity.hpp"
#include "klrtab/fixtures.hpp"

using namespace klrtab;

namespace {

MLTableau random_ml(int n, int steps, std::mt19937& rng) {
    MLTableau t = MLTableau::highest(n);
    for (int s = 0; s < steps; ++s) t = ml_f(t, 1 + static_cast<int>(rng() % n));
    return t;
}

}  // namespace

TEST_CASE("highest element has zero weight and no raisings") {
    MLTableau top = MLTableau::highest(3);
    CHECK(ml_wt(top) == Weight::zero(3));
    for (int i = 1; i <= 3; ++i) {
        CHECK(ml_eps(top, i) == 0);
        CHECK_FALSE(ml_e(top, i).has_value());
    }
}

TEST_CASE("rank one lowering grows the first row") {
    MLTableau t = ml_f(MLTableau::highest(1), 1);
    CHECK(t.excess[0] == std::vector<int>{2});
    MLTableau t2 = ml_f(t, 1);
    CHECK(t2.excess[0] == std::vector<int>{2, 2});
}

TEST_CASE("finite window of the sample is the displayed tableau") {
    MLTableau t = fixtures::sl4_sample_ml();
    CHECK(t.finite_tableau() ==
          Tableau::from_rows({{1, 1, 1, 1, 2, 3, 4}, {2, 2, 2}, {3, 4}}));
}

TEST_CASE("weight of the sample marginally large tableau") {
    MLTableau t = fixtures::sl4_sample_ml();
    // excess boxes: row1 {2,3,4}, row3 {4}; drop = 3a1 + 2a2 + 2a3
    CHECK(ml_root_drop(t) == RootVector({3, 2, 2}));
    Weight expect = weight_from_root(RootVector({3, 2, 2}));
    for (auto& c : expect.omega) c = -c;
    CHECK(ml_wt(t) == expect);
}

TEST_CASE("raising inverts lowering on randomized elements") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        MLTableau t = random_ml(n, static_cast<int>(rng() % 10), rng);
        int i = 1 + static_cast<int>(rng() % n);
        MLTableau low = ml_f(t, i);
        auto back = ml_e(low, i);
        REQUIRE(back.has_value());
        CHECK(*back == t);
        auto up = ml_e(t, i);
        if (up) CHECK(ml_f(*up, i) == t);
    }
}

TEST_CASE("raising inverts lowering exhaustively over small supports") {
    // every excess configuration with at most 3 boxes at rank 2
    for (int a1 = 0; a1 <= 3; ++a1)
        for (int a2 = 0; a2 + a1 <= 3; ++a2)
            for (int b1 = 0; b1 + a1 + a2 <= 3; ++b1) {
                std::vector<int> row1;
                row1.insert(row1.end(), static_cast<size_t>(a1), 2);
                row1.insert(row1.end(), static_cast<size_t>(a2), 3);
                std::vector<int> row2(static_cast<size_t>(b1), 3);
                MLTableau t(2, {row1, row2});
                for (int i = 1; i <= 2; ++i) {
                    CHECK(ml_e(ml_f(t, i), i) == t);
                    auto up = ml_e(t, i);
                    if (up) CHECK(ml_f(*up, i) == t);
                }
            }
}

TEST_CASE("operational epsilon equals the signature count") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        MLTableau t = random_ml(n, static_cast<int>(rng() % 9), rng);
        for (int i = 1; i <= n; ++i) {
            int k = 0;
            std::optional<MLTableau> cur = t;
            while ((cur = ml_e(*cur, i))) ++k;
            CHECK(k == ml_eps(t, i));
            CHECK(ml_phi(t, i) == ml_eps(t, i) + ml_wt(t).pairing(i));
        }
    }
}

TEST_CASE("weights follow the lowering operators") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        MLTableau t = random_ml(n, static_cast<int>(rng() % 8), rng);
        int i = 1 + static_cast<int>(rng() % n);
        Weight alpha = weight_from_root(simple_root(i, n));
        CHECK(ml_wt(ml_f(t, i)) == ml_wt(t) - alpha);
    }
}

TEST_CASE("embedding of the sample tableau") {
    Tableau t = fixtures::sl4_embedding_sample();
    MLTableau ml = iota_lambda(t, 3);
    CHECK(ml.excess == std::vector<std::vector<int>>{{2, 2, 3}, {3, 3}, {4}});
    CHECK(ml.finite_tableau() ==
          Tableau::from_rows({{1, 1, 1, 1, 1, 1, 2, 2, 3}, {2, 2, 2, 3, 3}, {3, 4}}));
}

TEST_CASE("embedding maps highest to highest") {
    Partition lambda({3, 1});
    CHECK(iota_lambda(Tableau::highest_weight(lambda), 3) == MLTableau::highest(3));
}

TEST_CASE("psi_infinity of the samples") {
    auto mus = psi_infinity(fixtures::sl4_sample_ml());
    REQUIRE(mus.size() == 3);
    CHECK(mus[0] == Partition({3, 2, 1}));
    CHECK(mus[1] == Partition{});
    CHECK(mus[2] == Partition({1}));
    auto top = psi_infinity(MLTableau::highest(4));
    for (const Partition& mu : top) CHECK(mu == Partition{});
}

TEST_CASE("embedding intertwines structure over a whole small crystal") {
    const int n = 3;
    Partition lambda({2, 1});
    CrystalGraph g = generate_crystal(Tableau::highest_weight(lambda), n);
    Weight lw = tableau_weight(Tableau::highest_weight(lambda), n);
    for (const Tableau& t : g.vertices) {
        MLTableau ml = iota_lambda(t, n);

        // row partitions agree after padding
        auto inf = psi_infinity(ml);
        auto fin = psi_lambda(t, n);
        for (size_t k = 0; k < inf.size(); ++k) {
            Partition expect = k < fin.size() ? fin[k].trimmed() : Partition{};
            CHECK(inf[k] == expect);
        }

        // weight drops by lambda
        CHECK(ml_wt(ml) == tableau_weight(t, n) - lw);

        for (int i = 1; i <= n; ++i) {
            // raising commutes with the embedding
            auto up = tableau_e(t, i, n);
            if (up) {
                auto mlup = ml_e(ml, i);
                REQUIRE(mlup.has_value());
                CHECK(*mlup == iota_lambda(*up, n));
            }
            // lowering commutes whenever it stays inside the image
            auto down = tableau_f(t, i, n);
            if (down) CHECK(ml_f(ml, i) == iota_lambda(*down, n));

            // tensor-rule shape of epsilon in the image
            int eps_finite = tableau_eps(t, i);
            int eps_ml = ml_eps(ml, i);
            int wt_pair = tableau_weight(t, n).pairing(i);
            CHECK(eps_finite == std::max(eps_ml, -wt_pair));
            CHECK(eps_ml <= eps_finite);
        }
    }
}
