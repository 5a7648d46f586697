#include <doctest.h>

#include <set>

#include "essbasis/errors.hpp"
#include "essbasis/weyl.hpp"

using namespace essbasis;

TEST_CASE("longest word has length N and is reduced") {
    for (auto [f, n] : std::vector<std::pair<char, int>>{
             {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3},
             {'C', 3}, {'D', 4}, {'F', 4}, {'G', 2}}) {
        auto rs = RootSystem::build(f, n);
        WeylWord w0 = longest_word(rs);
        CHECK(static_cast<int>(w0.size()) == rs.num_positive());
        CHECK(is_reduced(rs, w0));
    }
}

TEST_CASE("canonical longest word of A2") {
    auto rs = RootSystem::build('A', 2);
    CHECK(longest_word(rs) == WeylWord{1, 2, 1});
}

TEST_CASE("roots along the longest word hit every positive root once") {
    for (auto [f, n] : std::vector<std::pair<char, int>>{
             {'A', 3}, {'B', 3}, {'C', 2}, {'D', 4}, {'G', 2}}) {
        auto rs = RootSystem::build(f, n);
        auto idxs = roots_along_word(rs, longest_word(rs));
        std::set<int> seen(idxs.begin(), idxs.end());
        CHECK(seen.size() == idxs.size());
        CHECK(static_cast<int>(seen.size()) == rs.num_positive());
    }
}

TEST_CASE("roots along a specific word") {
    auto rs = RootSystem::build('A', 2);
    auto idxs = roots_along_word(rs, {1, 2, 1});
    REQUIRE(idxs.size() == 3);
    CHECK(rs.root(idxs[0]) == IVec{1, 0});
    CHECK(rs.root(idxs[1]) == IVec{1, 1});
    CHECK(rs.root(idxs[2]) == IVec{0, 1});
}

TEST_CASE("single-letter word") {
    auto rs = RootSystem::build('B', 2);
    auto idxs = roots_along_word(rs, {2});
    REQUIRE(idxs.size() == 1);
    CHECK(rs.root(idxs[0]) == IVec{0, 1});
}

TEST_CASE("non-reduced words are rejected") {
    auto rs = RootSystem::build('A', 2);
    CHECK_THROWS_AS(roots_along_word(rs, {1, 1, 2}), invalid_input);
    CHECK_FALSE(is_reduced(rs, {1, 1}));
    CHECK_THROWS_AS(roots_along_word(rs, {0, 1}), invalid_input);
    CHECK_THROWS_AS(roots_along_word(rs, {3}), invalid_input);
}
