#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "essbasis/errors.hpp"
#include "essbasis/essential.hpp"
#include "essbasis/json_io.hpp"

using namespace essbasis;

namespace {

std::shared_ptr<const ChevalleyBasis> make_cb(char f, int n, int conv = +1) {
    return ChevalleyBasis::build(std::make_shared<const RootSystem>(RootSystem::build(f, n)),
                                 conv);
}

// exponents of the given weight space, delta in simple-root coordinates
std::vector<IVec> exponents_at(const RootSystem& rs, const BirationalSequence& seq,
                               const EssentialSet& es, const IVec& delta) {
    std::vector<IVec> out;
    auto roots = sequence_roots(rs, seq);
    for (const IVec& k : es.exponents) {
        IVec d(rs.rank(), 0);
        for (int j = 0; j < seq.length(); ++j)
            for (int i = 0; i < rs.rank(); ++i) d[i] += k[j] * roots[j][i];
        if (d == delta) out.push_back(k);
    }
    return out;
}

}  // namespace

TEST_CASE("candidate exponent enumeration") {
    auto rs = RootSystem::build('A', 2);
    SUBCASE("sl3 lowest weight space, sequence (a1, a1+a2, a2)") {
        auto seq = seq_from_coeffs(rs, {{1, 0}, {1, 1}, {0, 1}});
        auto c = candidate_exponents(rs, seq, {2, 2}, 1000);
        std::set<IVec> got(c.begin(), c.end());
        CHECK(got == std::set<IVec>{{1, 1, 1}, {0, 2, 0}, {2, 0, 2}});
    }
    SUBCASE("sl3 lowest weight space, sequence (a1, a2, a1)") {
        auto seq = seq_from_coeffs(rs, {{1, 0}, {0, 1}, {1, 0}});
        auto c = candidate_exponents(rs, seq, {2, 2}, 1000);
        std::set<IVec> got(c.begin(), c.end());
        CHECK(got == std::set<IVec>{{1, 2, 1}, {2, 2, 0}, {0, 2, 2}});
    }
    SUBCASE("target zero has the single empty solution") {
        auto seq = seq_from_indices(rs, {1, 2, 3});
        auto c = candidate_exponents(rs, seq, {0, 0}, 1000);
        REQUIRE(c.size() == 1);
        CHECK(is_zero(c[0]));
    }
    SUBCASE("budget cap throws") {
        auto seq = seq_from_indices(rs, {1, 2, 3});
        CHECK_THROWS_AS(candidate_exponents(rs, seq, {3, 3}, 2), budget_exceeded);
    }
}

TEST_CASE("minkowski sums") {
    std::set<IVec> a = {{1, 0}, {0, 1}};
    std::set<IVec> zero = {{0, 0}};
    CHECK(minkowski_sum(a, zero) == a);
    CHECK(minkowski_sum({{1, 0}}, {{0, 1}}) == std::set<IVec>{{1, 1}});
    CHECK_THROWS_AS(minkowski_sum({{1, 0}}, {{1, 0, 0}}), invalid_input);
}

TEST_CASE("sl3 worked example: essential exponent of the lowest weight space") {
    auto cb = make_cb('A', 2);
    const auto& rs = cb->rs();
    Weight adjoint = {1, 1};
    IVec lowest = {2, 2};  // lambda - w0(lambda) in root coordinates

    SUBCASE("S = (a1, a1+a2, a2), neglex: exponent (1,1,1)") {
        auto seq = seq_from_coeffs(rs, {{1, 0}, {1, 1}, {0, 1}});
        EssentialEngine engine(cb, seq, order_of(OrderKind::neglex));
        EssentialSet es = engine.essential_direct(adjoint);
        CHECK(es.dimension == 8);
        CHECK(exponents_at(rs, seq, es, lowest) == std::vector<IVec>{{1, 1, 1}});
    }
    SUBCASE("S = (a1+a2, a1, a2), neglex: exponent (2,0,0)") {
        auto seq = seq_from_coeffs(rs, {{1, 1}, {1, 0}, {0, 1}});
        EssentialEngine engine(cb, seq, order_of(OrderKind::neglex));
        EssentialSet es = engine.essential_direct(adjoint);
        CHECK(es.dimension == 8);
        CHECK(exponents_at(rs, seq, es, lowest) == std::vector<IVec>{{2, 0, 0}});
    }
    SUBCASE("S = (a1, a2, a1): exponent (1,2,1) under every order") {
        auto seq = seq_from_coeffs(rs, {{1, 0}, {0, 1}, {1, 0}});
        std::vector<MonomialOrder> orders = {
            order_of(OrderKind::lex),       order_of(OrderKind::invlex),
            order_of(OrderKind::neglex),    order_of(OrderKind::deglex),
            order_of(OrderKind::degrevlex), order_of(OrderKind::wdegrevlex, {1, 1, 1})};
        for (const auto& order : orders) {
            EssentialEngine engine(cb, seq, order);
            EssentialSet es = engine.essential_direct(adjoint);
            CHECK(exponents_at(rs, seq, es, lowest) == std::vector<IVec>{{1, 2, 1}});
        }
    }
}

TEST_CASE("essential set of the trivial module") {
    auto cb = make_cb('A', 2);
    auto [seq, order] = seq_fflv(cb->rs());
    EssentialEngine engine(cb, seq, order);
    EssentialSet es = engine.essential_direct({0, 0});
    CHECK(es.dimension == 1);
    REQUIRE(es.exponents.size() == 1);
    CHECK(is_zero(es.exponents[0]));
    CHECK(es.generators.empty());
}

TEST_CASE("per-weight counts match the multiplicities") {
    auto cb = make_cb('B', 2);
    const auto& rs = cb->rs();
    auto [seq, order] = seq_fflv(rs);
    EssentialEngine engine(cb, seq, order);
    Weight lambda = {1, 1};
    EssentialSet es = engine.essential_direct(lambda);
    CHECK(es.dimension == weyl_dimension(rs, lambda));
    for (const auto& [delta, mult] : weight_multiplicities_by_delta(rs, lambda))
        CHECK(Int(exponents_at(rs, seq, es, delta).size()) == mult);
}

TEST_CASE("oracle equivalence: compute_basis matches essential_direct") {
    std::vector<std::tuple<char, int, Weight>> cases = {
        {'A', 2, {2, 1}}, {'A', 2, {2, 2}}, {'A', 3, {1, 1, 1}},
        {'B', 2, {1, 2}}, {'C', 2, {2, 1}}, {'G', 2, {1, 1}},
    };
    for (const auto& [f, n, lambda] : cases) {
        auto cb = make_cb(f, n);
        for (int preset = 0; preset < 2; ++preset) {
            auto [seq, order] =
                preset == 0 ? seq_fflv(cb->rs()) : seq_string(cb->rs(), longest_word(cb->rs()));
            EssentialEngine engine(cb, seq, order);
            const EssentialSet& fast = engine.compute_basis(lambda);
            EssentialSet direct = engine.essential_direct(lambda);
            CHECK(fast.exponents == direct.exponents);
            CHECK(fast.dimension == weyl_dimension(cb->rs(), lambda));
        }
    }
}

TEST_CASE("Minkowski containment on random pairs") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coord(0, 2);
    for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}}) {
        auto cb = make_cb(f, n);
        auto [seq, order] = seq_fflv(cb->rs());
        EssentialEngine engine(cb, seq, order);
        for (int trial = 0; trial < 10; ++trial) {
            Weight l1(n), l2(n), sum(n);
            for (int i = 0; i < n; ++i) {
                l1[i] = coord(rng);
                l2[i] = coord(rng);
                sum[i] = l1[i] + l2[i];
            }
            const auto& e1 = engine.compute_basis(l1).exponents;
            const auto& e2 = engine.compute_basis(l2).exponents;
            std::set<IVec> big(engine.compute_basis(sum).exponents.begin(),
                               engine.compute_basis(sum).exponents.end());
            auto mk = minkowski_sum(std::set<IVec>(e1.begin(), e1.end()),
                                    std::set<IVec>(e2.begin(), e2.end()));
            for (const IVec& v : mk) CHECK(big.count(v) == 1);
        }
    }
}

TEST_CASE("generator decompositions") {
    SUBCASE("fundamental weights are their own generators") {
        auto cb = make_cb('A', 2);
        auto [seq, order] = seq_fflv(cb->rs());
        EssentialEngine engine(cb, seq, order);
        const EssentialSet& es = engine.compute_basis({1, 0});
        REQUIRE(es.generators.size() == 1);
        CHECK(es.generators[0] == std::pair<Weight, int>{{1, 0}, 1});
        CHECK_FALSE(es.fully_decomposed);
    }
    SUBCASE("generator multiplicities always sum back to lambda") {
        for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}}) {
            auto cb = make_cb(f, n);
            auto [seq, order] = seq_string(cb->rs(), longest_word(cb->rs()));
            EssentialEngine engine(cb, seq, order);
            Weight lambda(n, 1);
            lambda[0] = 2;
            const EssentialSet& es = engine.compute_basis(lambda);
            Weight total(n, 0);
            for (const auto& [w, m] : es.generators)
                for (int i = 0; i < n; ++i) total[i] += m * w[i];
            CHECK(total == lambda);
            if (!es.fully_decomposed) {
                REQUIRE(es.generators.size() == 1);
                CHECK(es.generators[0].first == lambda);
            }
        }
    }
}

TEST_CASE("convention independence: both Chevalley sign choices agree") {
    for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}}) {
        auto seq_and_order = seq_fflv(RootSystem::build(f, n));
        for (const Weight& lambda : std::vector<Weight>{{1, 1}, {2, 1}}) {
            std::vector<std::vector<IVec>> results;
            for (int conv : {+1, -1}) {
                auto cb = make_cb(f, n, conv);
                EssentialEngine engine(cb, seq_and_order.first, seq_and_order.second);
                results.push_back(engine.compute_basis(lambda).exponents);
            }
            CHECK(results[0] == results[1]);
        }
    }
}

TEST_CASE("determinism: identical runs give identical JSON") {
    auto run = []() {
        auto cb = make_cb('A', 2);
        auto [seq, order] = seq_string(cb->rs(), {1, 2, 1});
        EssentialEngine engine(cb, seq, order);
        return basis_to_json(cb->rs(), seq, order, engine.compute_basis({2, 2})).dump();
    };
    std::string a = run(), b = run();
    CHECK(a == b);
    CHECK(json::parse(a).dump() == json::parse(b).dump());
}

TEST_CASE("diagnostics") {
    auto cb = make_cb('A', 2);
    SUBCASE("a non-birational sequence is reported") {
        auto seq = seq_from_indices(cb->rs(), {1});
        EssentialEngine engine(cb, seq, order_of(OrderKind::lex));
        CHECK_THROWS_AS(engine.compute_basis({1, 1}), not_birational);
    }
    SUBCASE("budget exhaustion is reported") {
        auto [seq, order] = seq_fflv(cb->rs());
        EngineOptions opt;
        opt.candidate_cap = 1;
        EssentialEngine engine(cb, seq, order, opt);
        CHECK_THROWS_AS(engine.essential_direct({2, 2}), budget_exceeded);
    }
    SUBCASE("non-dominant weights are rejected") {
        auto [seq, order] = seq_fflv(cb->rs());
        EssentialEngine engine(cb, seq, order);
        CHECK_THROWS_AS(engine.compute_basis({-1, 1}), invalid_input);
    }
}
