#include <doctest.h>

#include <functional>

#include "klrtab/fixtures.hpp"
#include "klrtab/tableaux.hpp"

using namespace klrtab;

namespace {

// test-side enumeration, independent of the library's counting code
uint64_t brute_count_ssyt(const std::vector<int>& shape, int m) {
    std::vector<std::vector<int>> rows;
    for (int p : shape)
        if (p > 0) rows.emplace_back(static_cast<size_t>(p), 0);
    if (rows.empty()) return 1;
    uint64_t count = 0;
    std::function<void(size_t)> fill = [&](size_t box) {
        size_t seen = 0;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (box < seen + rows[i].size()) {
                size_t j = box - seen;
                int lo = 1;
                if (j > 0) lo = std::max(lo, rows[i][j - 1]);
                if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
                for (int v = lo; v <= m; ++v) {
                    rows[i][j] = v;
                    fill(box + 1);
                }
                return;
            }
            seen += rows[i].size();
        }
        ++count;
    };
    fill(0);
    return count;
}

}  // namespace

TEST_CASE("partition basics") {
    Partition mu({3, 2, 2, 0});
    CHECK(mu.boxes() == 7);
    CHECK(mu.length() == 3);
    CHECK(mu.trimmed().parts == std::vector<int>{3, 2, 2});
    CHECK(mu.conjugate().parts == std::vector<int>{3, 3, 1});
    CHECK(Partition({2, 1}).lowered() == Partition({1}));
    CHECK_THROWS_AS(Partition({1, 2}), std::domain_error);
    CHECK_THROWS_AS(Partition({-1}), std::domain_error);
}

TEST_CASE("transpose_factorial multiplies factorials of conjugate parts") {
    CHECK(transpose_factorial(Partition({2, 1})) == 2);
    CHECK(transpose_factorial(Partition{}) == 1);
    CHECK(transpose_factorial(Partition({1, 1, 1})) == 6);
    CHECK(transpose_factorial(Partition({2, 2})) == 4);
}

TEST_CASE("semistandard validation") {
    Tableau ex = fixtures::sl6_sample_tableau();
    CHECK(validate_ssyt(ex, 5));
    CHECK(validate_ssyt(Tableau::from_rows({{1}}), 1));
    CHECK_FALSE(validate_ssyt(Tableau::from_rows({{1, 1}, {1}}), 2));
    CHECK_FALSE(validate_ssyt(Tableau::from_rows({{3}}), 1));  // entry > n+1
    CHECK_THROWS_AS(Tableau(Partition({2, 2}), {{1, 1}, {2}}), std::domain_error);
}

TEST_CASE("readings of the worked sl6 tableau") {
    Tableau ex = fixtures::sl6_sample_tableau();
    CHECK(middle_eastern_reading(ex) == Word{6, 4, 3, 3, 1, 1, 5, 4, 3, 2, 5, 3, 6, 5, 6});
    CHECK(far_eastern_reading(ex) == Word{6, 4, 3, 5, 3, 4, 1, 3, 5, 6, 1, 2, 3, 5, 6});
}

TEST_CASE("readings of degenerate shapes") {
    Tableau row = Tableau::from_rows({{1, 2, 3}});
    CHECK(middle_eastern_reading(row) == Word{3, 2, 1});
    CHECK(far_eastern_reading(row) == Word{3, 2, 1});
    Tableau col = Tableau::from_rows({{1}, {2}});
    CHECK(middle_eastern_reading(col) == Word{1, 2});
    CHECK(far_eastern_reading(col) == Word{1, 2});
}

TEST_CASE("psi_lambda on the worked tableau") {
    Tableau ex = fixtures::sl6_sample_tableau();
    auto mus = psi_lambda(ex, 5);
    REQUIRE(mus.size() == 5);
    CHECK(mus[0].parts == std::vector<int>{5, 3, 2, 2, 0, 0});
    CHECK(mus[1].parts == std::vector<int>{3, 2, 1, 0});
    CHECK(mus[2].parts == std::vector<int>{2, 0});
    CHECK(mus[3].parts == std::vector<int>{2, 1});
    CHECK(mus[4].parts == std::vector<int>{1});
}

TEST_CASE("psi_lambda of the highest-weight tableau is all zeros") {
    Partition lambda({3, 2, 1});
    auto mus = psi_lambda(Tableau::highest_weight(lambda), 3);
    for (const Partition& mu : mus)
        for (int p : mu.parts) CHECK(p == 0);
}

TEST_CASE("psi_lambda small case by the defining formula") {
    Tableau t = Tableau::from_rows({{1, 2}, {2}});
    auto mus = psi_lambda(t, 2);
    CHECK(mus[0].parts == std::vector<int>{1, 0});
    CHECK(mus[1].parts == std::vector<int>{0});
}

TEST_CASE("psi_inverse round-trips") {
    Tableau ex = fixtures::sl6_sample_tableau();
    CHECK(psi_inverse(ex.shape, psi_lambda(ex, 5), 5) == ex);

    Partition lambda({4, 2, 1});
    Tableau hw = Tableau::highest_weight(lambda);
    std::vector<Partition> zeros{Partition({0, 0, 0, 0}), Partition({0, 0}), Partition({0})};
    CHECK(psi_inverse(lambda, zeros, 3) == hw);

    CHECK_THROWS_AS(psi_inverse(Partition({1, 1}), {Partition({5}), Partition({0})}, 2),
                    reconstruction_error);
}

TEST_CASE("psi_inverse round-trips exhaustively on a small crystal") {
    // all semistandard fillings of (2,1) with entries <= 4
    std::vector<int> shape{2, 1};
    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b)
            for (int c = a + 1; c <= 4; ++c) {
                Tableau t = Tableau::from_rows({{a, b}, {c}});
                if (!validate_ssyt(t, 3)) continue;
                CHECK(psi_inverse(t.shape, psi_lambda(t, 3), 3) == t);
            }
}

TEST_CASE("count_ssyt matches brute enumeration and frozen values") {
    CHECK(count_ssyt(Partition({1}), 2) == BigNat(2));
    CHECK(count_ssyt(Partition({2, 1}), 3) == BigNat(8));
    CHECK(count_ssyt(Partition({2, 2}), 3) == BigNat(6));
    CHECK(count_ssyt(Partition{}, 4) == BigNat(1));
    CHECK(count_ssyt(Partition({1, 1, 1}), 2) == BigNat(0));
    for (std::vector<int> shape : {std::vector<int>{3, 1}, std::vector<int>{2, 2, 1},
                                   std::vector<int>{4}, std::vector<int>{1, 1}}) {
        for (int m = 1; m <= 4; ++m)
            CHECK(count_ssyt(Partition(shape), m) == BigNat(brute_count_ssyt(shape, m)));
    }
}

TEST_CASE("descent data of the worked tableau") {
    Tableau ex = fixtures::sl6_sample_tableau();
    DescentData d = i_T_epsilon_Tplus(ex, 5);
    CHECK(d.letter == 2);
    CHECK(d.multiplicity == 3);
    CHECK(d.raised == Tableau::from_rows({{1, 1, 2, 2, 4, 6}, {2, 2, 4, 5}, {3, 5}, {5, 6}, {6}}));
}

TEST_CASE("descent data small cases") {
    DescentData d1 = i_T_epsilon_Tplus(Tableau::from_rows({{2}}), 2);
    CHECK(d1.letter == 1);
    CHECK(d1.multiplicity == 1);
    CHECK(d1.raised == Tableau::from_rows({{1}}));

    DescentData d2 = i_T_epsilon_Tplus(Tableau::from_rows({{1, 3}, {2}}), 3);
    CHECK(d2.letter == 2);
    CHECK(d2.multiplicity == 1);
    CHECK(d2.raised == Tableau::from_rows({{1, 2}, {2}}));

    CHECK_THROWS_AS(i_T_epsilon_Tplus(Tableau::highest_weight(Partition({2, 1})), 2),
                    std::domain_error);
}

TEST_CASE("descent raises the weight by a multiple of a simple root") {
    // all semistandard fillings of (2,1) with entries <= 4, except the top one
    const int n = 3;
    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b)
            for (int c = a + 1; c <= 4; ++c) {
                Tableau t = Tableau::from_rows({{a, b}, {c}});
                if (!validate_ssyt(t, n)) continue;
                if (t == Tableau::highest_weight(Partition({2, 1}))) continue;
                DescentData d = i_T_epsilon_Tplus(t, n);
                CHECK(d.multiplicity >= 1);
                Weight step = weight_from_root(simple_root(d.letter, n));
                Weight expect = tableau_weight(t, n);
                for (int k = 0; k < d.multiplicity; ++k) expect = expect + step;
                CHECK(tableau_weight(d.raised, n) == expect);
            }
}

TEST_CASE("psi output parts are bounded by the alphabet") {
    Tableau ex = fixtures::sl6_sample_tableau();
    auto mus = psi_lambda(ex, 5);
    for (size_t k = 0; k < mus.size(); ++k)
        for (int p : mus[k].parts) {
            CHECK(p >= 0);
            CHECK(p <= 5 + 1 - static_cast<int>(k) - 1);
        }
}
