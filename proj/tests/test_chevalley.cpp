#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "essbasis/chevalley.hpp"

using namespace essbasis;

namespace {

LieElem elem_sum(LieElem a, const LieElem& b) {
    for (const auto& [k, c] : b) {
        a[k] += c;
        if (a[k] == 0) a.erase(k);
    }
    return a;
}

LieElem jacobiator(const ChevalleyBasis& cb, const LieElem& x, const LieElem& y,
                   const LieElem& z) {
    LieElem s = cb.bracket(x, cb.bracket(y, z));
    s = elem_sum(s, cb.bracket(y, cb.bracket(z, x)));
    s = elem_sum(s, cb.bracket(z, cb.bracket(x, y)));
    return s;
}

std::vector<LieElem> full_basis(const RootSystem& rs) {
    std::vector<LieElem> basis;
    for (int i = 0; i < rs.num_positive(); ++i) {
        basis.push_back(ChevalleyBasis::elem(LieKey::E, i));
        basis.push_back(ChevalleyBasis::elem(LieKey::F, i));
    }
    for (int i = 0; i < rs.rank(); ++i) basis.push_back(ChevalleyBasis::elem(LieKey::H, i));
    return basis;
}

}  // namespace

TEST_CASE("Jacobi identity, exhaustively for rank <= 2 and both sign conventions") {
    for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}}) {
        for (int conv : {+1, -1}) {
            auto rs = std::make_shared<const RootSystem>(RootSystem::build(f, n));
            auto cb = ChevalleyBasis::build(rs, conv);
            auto basis = full_basis(*rs);
            for (const auto& x : basis)
                for (const auto& y : basis)
                    for (const auto& z : basis) CHECK(jacobiator(*cb, x, y, z).empty());
        }
    }
}

TEST_CASE("Jacobi identity, exhaustively for rank 3") {
    for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}}) {
        auto rs = std::make_shared<const RootSystem>(RootSystem::build(f, n));
        auto cb = ChevalleyBasis::build(rs);
        auto basis = full_basis(*rs);
        for (const auto& x : basis)
            for (const auto& y : basis)
                for (const auto& z : basis) CHECK(jacobiator(*cb, x, y, z).empty());
    }
}

TEST_CASE("Jacobi identity, sampled for rank 4") {
    std::mt19937 rng(42);
    for (auto [f, n] :
         std::vector<std::pair<char, int>>{{'A', 4}, {'B', 4}, {'C', 4}, {'D', 4}, {'F', 4}}) {
        auto rs = std::make_shared<const RootSystem>(RootSystem::build(f, n));
        auto cb = ChevalleyBasis::build(rs);
        auto basis = full_basis(*rs);
        std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
        for (int trial = 0; trial < 4000; ++trial) {
            const auto& x = basis[pick(rng)];
            const auto& y = basis[pick(rng)];
            const auto& z = basis[pick(rng)];
            CHECK(jacobiator(*cb, x, y, z).empty());
        }
    }
}

TEST_CASE("structure constants have magnitude p + 1") {
    for (auto [f, n] : std::vector<std::pair<char, int>>{
             {'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'F', 4}, {'G', 2}}) {
        auto rs = std::make_shared<const RootSystem>(RootSystem::build(f, n));
        auto cb = ChevalleyBasis::build(rs);
        for (int a = 0; a < rs->num_positive(); ++a)
            for (int b = 0; b < rs->num_positive(); ++b) {
                if (a == b) continue;
                IVec s = add(rs->root(a), rs->root(b));
                if (!rs->is_positive_root(s)) {
                    CHECK(cb->n_pos(a, b) == 0);
                    continue;
                }
                int p = cb->p_value(rs->root(a), rs->root(b));
                CHECK(std::abs(cb->n_pos(a, b)) == p + 1);
                CHECK(cb->n_pos(a, b) == -cb->n_pos(b, a));
            }
    }
}

TEST_CASE("G2 has constants of magnitude 1, 2 and 3") {
    auto rs = std::make_shared<const RootSystem>(RootSystem::build('G', 2));
    auto cb = ChevalleyBasis::build(rs);
    std::set<int> mags;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            if (cb->n_pos(a, b) != 0) mags.insert(std::abs(cb->n_pos(a, b)));
    CHECK(mags == std::set<int>{1, 2, 3});
    // p for (alpha1, alpha1+alpha2): alpha2 is a root, alpha2 - alpha1 is not
    int i1 = rs->root_index({1, 0}), i12 = rs->root_index({1, 1});
    CHECK(std::abs(cb->n_pos(i1, i12)) == 2);
}

TEST_CASE("A2 bracket table spot checks") {
    auto rs = std::make_shared<const RootSystem>(RootSystem::build('A', 2));
    auto cb = ChevalleyBasis::build(rs);
    int i1 = rs->root_index({1, 0}), i2 = rs->root_index({0, 1}), i12 = rs->root_index({1, 1});

    CHECK(std::abs(cb->n_pos(i1, i2)) == 1);

    // [e1, f1] = h1
    LieElem h = cb->bracket(ChevalleyBasis::elem(LieKey::E, i1), ChevalleyBasis::elem(LieKey::F, i1));
    REQUIRE(h.size() == 1);
    CHECK(h.at({LieKey::H, 0}) == 1);

    // [f1, f2] = +-f_{12}
    LieElem ff = cb->bracket(ChevalleyBasis::elem(LieKey::F, i1), ChevalleyBasis::elem(LieKey::F, i2));
    REQUIRE(ff.size() == 1);
    CHECK(abs(ff.at({LieKey::F, i12})) == 1);

    // [h1, f_{12}] = -<a1+a2, a1^vee> f_{12} = -f_{12}
    LieElem hf = cb->bracket(ChevalleyBasis::elem(LieKey::H, 0), ChevalleyBasis::elem(LieKey::F, i12));
    REQUIRE(hf.size() == 1);
    CHECK(hf.at({LieKey::F, i12}) == -1);

    // [e1, e1] = 0 and [e1, f2] = 0 (a1 - a2 is not a root)
    CHECK(cb->bracket(ChevalleyBasis::elem(LieKey::E, i1), ChevalleyBasis::elem(LieKey::E, i1)).empty());
    CHECK(cb->bracket(ChevalleyBasis::elem(LieKey::E, i1), ChevalleyBasis::elem(LieKey::F, i2)).empty());
}

TEST_CASE("weight grading of brackets") {
    auto rs = std::make_shared<const RootSystem>(RootSystem::build('B', 3));
    auto cb = ChevalleyBasis::build(rs);
    for (int a = 0; a < rs->num_positive(); ++a)
        for (int b = 0; b < rs->num_positive(); ++b) {
            LieElem r = cb->bracket(ChevalleyBasis::elem(LieKey::E, a),
                                    ChevalleyBasis::elem(LieKey::F, b));
            IVec expect = sub(rs->root(a), rs->root(b));
            for (const auto& [k, c] : r) {
                if (k.kind == LieKey::E) CHECK(rs->root(k.index) == expect);
                if (k.kind == LieKey::F) {
                    IVec neg(expect.size());
                    for (std::size_t i = 0; i < expect.size(); ++i) neg[i] = -expect[i];
                    CHECK(rs->root(k.index) == neg);
                }
                if (k.kind == LieKey::H) CHECK(is_zero(expect));
            }
        }
}
