#pragma once

#include <map>
#include <memory>
#include <vector>

#include "essbasis/root_system.hpp"

namespace essbasis {

// Symbolic basis element of the Lie algebra: e_beta / f_beta for a positive
// root index, or h_i for a simple-coroot index.
struct LieKey {
    enum Kind : char { E = 'e', F = 'f', H = 'h' };
    Kind kind;
    int index;
    auto operator<=>(const LieKey&) const = default;
};

// Integer linear combination of basis elements.
using LieElem = std::map<LieKey, Int>;

/**
 * Chevalley basis of the simple Lie algebra attached to a root system:
 * triples (e_beta, f_beta, h_beta) with [e_beta, f_beta] = beta^vee and
 * [e_alpha, e_beta] = N_{alpha,beta} e_{alpha+beta}, |N| = p+1.
 *
 * Signs are fixed by the extraspecial-pair convention relative to the
 * canonical root enumeration: for each non-simple positive root gamma the
 * decomposition gamma = eps + eta with eps minimal gets N_{eps,eta} = p+1
 * (times `extraspecial_sign`), and every other constant follows from the
 * Jacobi identity. All tables are precomputed; lookups are thread-safe.
 */
class ChevalleyBasis {
public:
    // extraspecial_sign in {+1, -1}; -1 gives an alternative valid basis,
    // used to test that downstream results do not depend on the convention.
    static std::shared_ptr<const ChevalleyBasis> build(std::shared_ptr<const RootSystem> rs,
                                                       int extraspecial_sign = +1);

    const RootSystem& rs() const { return *rs_; }
    std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }

    // N_{alpha,beta} for canonical positive-root indices a != b;
    // zero when alpha + beta is not a root.
    int n_pos(int a, int b) const { return npos_[a][b]; }

    // [f_a, f_b] = f_comm(a,b) f_{a+b}; equals -n_pos(a,b).
    int f_comm(int a, int b) const { return -npos_[a][b]; }

    // [e_a, f_b] for a != b: coefficient of e_{a-b} (if root(a)-root(b) is a
    // positive root) or of f_{b-a} (if negative); zero otherwise.
    int mixed(int a, int b) const { return mixed_[a][b]; }

    // Largest k >= 0 with beta - k*alpha a root; alpha, beta in simple-root
    // coordinates (may be negative roots).
    int p_value(const IVec& alpha, const IVec& beta) const;

    // N_{a,b} for arbitrary signed roots (simple-root coordinates) with
    // a + b a root; a + b = 0 is not allowed here.
    int n_signed(const IVec& a, const IVec& b) const;

    // Full Chevalley bracket of symbolic elements.
    LieElem bracket(const LieElem& x, const LieElem& y) const;

    static LieElem elem(LieKey::Kind kind, int index) { return {{{kind, index}, Int(1)}}; }

private:
    explicit ChevalleyBasis(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {}

    LieElem bracket_basis(const LieKey& x, const LieKey& y) const;

    std::shared_ptr<const RootSystem> rs_;
    std::vector<std::vector<int>> npos_;
    std::vector<std::vector<int>> mixed_;
};

}  // namespace essbasis
