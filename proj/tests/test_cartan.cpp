#include <doctest.h>

#include "klrtab/cartan.hpp"

using namespace klrtab;

TEST_CASE("dominant weights convert to partitions by suffix sums") {
    CHECK(dominant_to_partition({2, 2, 0, 1, 1}) == std::vector<int>{6, 4, 2, 2, 1});
    CHECK(dominant_to_partition({0, 0, 0}) == std::vector<int>{0, 0, 0});
    CHECK(dominant_to_partition({1, 1}) == std::vector<int>{2, 1});
    CHECK_THROWS_AS(dominant_to_partition({1, -1}), std::domain_error);
}

TEST_CASE("partition_to_dominant inverts dominant_to_partition") {
    for (std::vector<int> a : {std::vector<int>{2, 2, 0, 1, 1}, std::vector<int>{0, 3, 1, 0, 2},
                               std::vector<int>{0, 0, 0, 0, 0}}) {
        CHECK(partition_to_dominant(dominant_to_partition(a), 5) == a);
    }
}

TEST_CASE("bilinear form agrees with the Cartan matrix") {
    const int n = 5;
    CHECK(bilinear(simple_root(1, n), simple_root(1, n)) == 2);
    CHECK(bilinear(simple_root(1, n), simple_root(3, n)) == 0);
    CHECK(bilinear(simple_root(1, n) + simple_root(2, n), simple_root(2, n)) == 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            CHECK(bilinear(simple_root(i, n), simple_root(j, n)) == cartan_entry(i, j));
    CHECK_THROWS_AS(bilinear(RootVector::zero(2), RootVector::zero(3)), std::domain_error);
}

TEST_CASE("bilinear is symmetric") {
    RootVector a({1, 0, 2, 1});
    RootVector b({0, 3, 1, 0});
    CHECK(bilinear(a, b) == bilinear(b, a));
}

TEST_CASE("word weights count letters and add under concatenation") {
    CHECK(weight_of_word({1, 2, 1}, 3) == RootVector({2, 1, 0}));
    CHECK(weight_of_word({}, 3) == RootVector::zero(3));
    CHECK(weight_of_word({2, 3, 4}, 5) == RootVector({0, 1, 1, 1, 0}));
    CHECK_THROWS_AS(weight_of_word({0}, 3), std::domain_error);
    CHECK_THROWS_AS(weight_of_word({4}, 3), std::domain_error);

    Word u{1, 3, 2}, v{2, 2, 1};
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(weight_of_word(uv, 3) == weight_of_word(u, 3) + weight_of_word(v, 3));
}

TEST_CASE("entry weights pair correctly and sum to zero over a column") {
    const int n = 4;
    Weight total = Weight::zero(n);
    for (int e = 1; e <= n + 1; ++e) total = total + entry_weight(e, n);
    CHECK(total == Weight::zero(n));

    // alpha_i in fundamental-weight coordinates is the i-th Cartan column
    for (int i = 1; i <= n; ++i) {
        Weight diff = entry_weight(i, n) - entry_weight(i + 1, n);
        CHECK(diff == weight_from_root(simple_root(i, n)));
    }
}
