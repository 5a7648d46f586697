#include <doctest.h>

#include <algorithm>
#include <random>

#include "essbasis/errors.hpp"
#include "essbasis/orders.hpp"

using namespace essbasis;

TEST_CASE("documented comparisons") {
    auto neglex = order_of(OrderKind::neglex);
    CHECK(neglex.compare({1, 1, 1}, {0, 2, 0}) < 0);  // lex-larger is neglex-smaller
    CHECK(neglex.compare({1, 1, 1}, {1, 1, 1}) == 0);

    auto degrevlex = order_of(OrderKind::degrevlex);
    CHECK(degrevlex.compare({2, 0, 0}, {1, 1, 1}) < 0);  // degree 2 < 3
    CHECK(degrevlex.compare({1, 0, 1}, {0, 2, 0}) < 0);  // tie: last nonzero of a-b positive
    CHECK(degrevlex.compare({2, 0, 0}, {0, 2, 0}) > 0);

    auto lex = order_of(OrderKind::lex);
    CHECK(lex.compare({1, 0, 0}, {0, 9, 9}) > 0);

    auto invlex = order_of(OrderKind::invlex);
    CHECK(invlex.compare({9, 9, 0}, {0, 0, 1}) < 0);
    CHECK(invlex.compare({0, 1, 1}, {1, 0, 1}) > 0);  // rightmost difference wins

    auto deglex = order_of(OrderKind::deglex);
    CHECK(deglex.compare({1, 1, 0}, {0, 0, 1}) > 0);  // degree wins
    CHECK(deglex.compare({1, 0, 1}, {0, 2, 0}) > 0);  // tie: lex

    auto wd = order_of(OrderKind::wdegrevlex, {3, 1, 1});
    CHECK(wd.compare({1, 0, 0}, {0, 1, 1}) > 0);  // weighted degree 3 vs 2
    CHECK(wd.compare({0, 3, 0}, {1, 0, 0}) != 0);
}

TEST_CASE("neglex is the reversal of lex") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(0, 4);
    auto lex = order_of(OrderKind::lex);
    auto neglex = order_of(OrderKind::neglex);
    for (int t = 0; t < 200; ++t) {
        IVec a(5), b(5);
        for (auto& x : a) x = d(rng);
        for (auto& x : b) x = d(rng);
        CHECK(neglex.compare(a, b) == lex.compare(b, a));
    }
}

TEST_CASE("order axioms on random vectors") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(0, 3);
    std::vector<MonomialOrder> orders = {
        order_of(OrderKind::lex),       order_of(OrderKind::invlex),
        order_of(OrderKind::neglex),    order_of(OrderKind::deglex),
        order_of(OrderKind::degrevlex), order_of(OrderKind::wdegrevlex, {1, 2, 1, 3})};
    for (const auto& ord : orders) {
        for (int t = 0; t < 300; ++t) {
            IVec a(4), b(4), c(4);
            for (auto& x : a) x = d(rng);
            for (auto& x : b) x = d(rng);
            for (auto& x : c) x = d(rng);
            // totality and antisymmetry
            CHECK(ord.compare(a, b) == -ord.compare(b, a));
            CHECK((ord.compare(a, b) == 0) == (a == b));
            // transitivity
            if (ord.compare(a, b) <= 0 && ord.compare(b, c) <= 0) CHECK(ord.compare(a, c) <= 0);
            // translation invariance
            CHECK(ord.compare(a, b) == ord.compare(add(a, c), add(b, c)));
        }
    }
}

TEST_CASE("min_of") {
    auto neglex = order_of(OrderKind::neglex);
    CHECK(min_of(neglex, {{1, 1, 1}, {0, 2, 0}}) == IVec{1, 1, 1});
    CHECK(min_of(neglex, {{4, 0, 1}}) == IVec{4, 0, 1});
    for (auto kind : {OrderKind::lex, OrderKind::invlex, OrderKind::neglex, OrderKind::deglex,
                      OrderKind::degrevlex})
        CHECK(min_of(order_of(kind), {{1, 2, 1}}) == IVec{1, 2, 1});
    CHECK_THROWS_AS(min_of(neglex, {}), invalid_input);
    CHECK_THROWS_AS(neglex.compare({1, 2}, {1, 2, 3}), invalid_input);
}

TEST_CASE("parse and print round trip") {
    for (const std::string& name :
         {"lex", "invlex", "neglex", "deglex", "degrevlex", "wdegrevlex:1,2,1"}) {
        auto o = MonomialOrder::parse(name);
        CHECK(o.to_string() == name);
    }
    CHECK_THROWS_AS(MonomialOrder::parse("grevlex"), invalid_input);
    CHECK_THROWS_AS(MonomialOrder::parse("wdegrevlex"), invalid_input);
    CHECK_THROWS_AS(MonomialOrder::parse("lex:1,2"), invalid_input);
    CHECK_THROWS_AS(MonomialOrder::parse("wdegrevlex:0,1"), invalid_input);
}
