#include <doctest.h>

#include <set>

#include "essbasis/errors.hpp"
#include "essbasis/root_system.hpp"

using namespace essbasis;

TEST_CASE("positive root counts match the classical table") {
    auto count = [](char f, int n) { return RootSystem::build(f, n).num_positive(); };
    for (int n = 1; n <= 8; ++n) CHECK(count('A', n) == n * (n + 1) / 2);
    for (int n = 2; n <= 8; ++n) CHECK(count('B', n) == n * n);
    for (int n = 2; n <= 8; ++n) CHECK(count('C', n) == n * n);
    for (int n = 4; n <= 8; ++n) CHECK(count('D', n) == n * (n - 1));
    CHECK(count('E', 6) == 36);
    CHECK(count('E', 7) == 63);
    CHECK(count('E', 8) == 120);
    CHECK(count('F', 4) == 24);
    CHECK(count('G', 2) == 6);
}

TEST_CASE("invalid type/rank pairs are rejected") {
    CHECK_THROWS_AS(RootSystem::build('H', 2), invalid_input);
    CHECK_THROWS_AS(RootSystem::build('G', 3), invalid_input);
    CHECK_THROWS_AS(RootSystem::build('F', 5), invalid_input);
    CHECK_THROWS_AS(RootSystem::build('E', 9), invalid_input);
    CHECK_THROWS_AS(RootSystem::build('E', 5), invalid_input);
    CHECK_THROWS_AS(RootSystem::build('A', 0), invalid_input);
    CHECK_THROWS_AS(RootSystem::build('D', 2), invalid_input);
}

TEST_CASE("A2 has the three expected roots") {
    auto rs = RootSystem::build('A', 2);
    REQUIRE(rs.num_positive() == 3);
    CHECK(rs.root(0) == IVec{1, 0});
    CHECK(rs.root(1) == IVec{0, 1});
    CHECK(rs.root(2) == IVec{1, 1});
}

TEST_CASE("G2 roots in canonical order") {
    auto rs = RootSystem::build('G', 2);
    std::vector<IVec> expect = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    REQUIRE(rs.num_positive() == 6);
    for (int i = 0; i < 6; ++i) CHECK(rs.root(i) == expect[i]);
}

TEST_CASE("A4 canonical enumeration fixes the printed indices") {
    auto rs = RootSystem::build('A', 4);
    // height 2 entries at indices 5, 6, 7 (1-based)
    CHECK(rs.root(4) == IVec{1, 1, 0, 0});
    CHECK(rs.root(5) == IVec{0, 1, 1, 0});
    CHECK(rs.root(6) == IVec{0, 0, 1, 1});
    CHECK(rs.root(7) == IVec{1, 1, 1, 0});
}

TEST_CASE("canonical enumeration: ascending height, descending lex inside") {
    for (auto [f, n] : std::vector<std::pair<char, int>>{
             {'A', 4}, {'B', 3}, {'C', 3}, {'D', 4}, {'F', 4}, {'G', 2}}) {
        auto rs = RootSystem::build(f, n);
        for (int i = 0; i + 1 < rs.num_positive(); ++i) {
            bool ok = rs.height(i) < rs.height(i + 1) ||
                      (rs.height(i) == rs.height(i + 1) && rs.root(i) > rs.root(i + 1));
            CHECK(ok);
        }
    }
}

TEST_CASE("cartan matrix sanity and simple-reflection closure") {
    for (auto [f, n] : std::vector<std::pair<char, int>>{
             {'A', 3}, {'B', 4}, {'C', 4}, {'D', 4}, {'E', 6}, {'F', 4}, {'G', 2}}) {
        auto rs = RootSystem::build(f, n);
        for (int i = 0; i < n; ++i) {
            CHECK(rs.cartan(i, i) == 2);
            for (int j = 0; j < n; ++j)
                if (i != j) CHECK(rs.cartan(i, j) <= 0);
        }
        // s_i permutes the positive roots other than alpha_i
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < rs.num_positive(); ++r) {
                if (rs.height(r) == 1 && rs.root(r)[i] == 1) continue;
                CHECK(rs.is_positive_root(rs.reflect_root(rs.root(r), i)));
            }
        // heights are coordinate sums
        for (int r = 0; r < rs.num_positive(); ++r)
            CHECK(rs.height(r) == coord_sum(rs.root(r)));
    }
}

TEST_CASE("fw conversion round trip and coroot pairings") {
    for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}, {'G', 2}}) {
        auto rs = RootSystem::build(f, n);
        for (int r = 0; r < rs.num_positive(); ++r) {
            // fw coords of a root, converted back to simple-root coords
            Weight fw(n, 0);
            for (int j = 0; j < n; ++j) fw[j] = rs.pairing(rs.root(r), j);
            CHECK(rs.fw_to_root_coords(fw) == rs.root(r));
            // <beta, beta^vee> = 2
            CHECK(rs.fw_pairing(fw, r) == 2);
        }
    }
}

TEST_CASE("G2 fundamental weight conversion is exact") {
    auto rs = RootSystem::build('G', 2);
    CHECK(rs.fw_to_root_coords({1, 0}) == IVec{2, 1});
    CHECK(rs.fw_to_root_coords({0, 1}) == IVec{3, 2});
    CHECK_THROWS_AS(RootSystem::build('A', 2).fw_to_root_coords({1, 0}), invalid_input);
}
