#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "essbasis/chevalley.hpp"
#include "essbasis/root_system.hpp"

namespace essbasis {

// Exponent vector of a PBW monomial f_{g1}^{k1} ... f_{gN}^{kN}, indexed by
// the canonical positive-root enumeration.
using PBWMono = std::vector<int>;

// Homogeneous element of a Verma module weight space: sparse integer
// combination of PBW monomials applied to the highest weight vector.
using VermaVector = std::map<PBWMono, Int>;

/**
 * The Verma module M(lambda) realized on PBW monomials, together with the
 * contravariant (Shapovalov) form <f_b x, y> = <x, e_b y>, <v, v> = 1.
 * Pairings of basis monomials are memoized per context. All arithmetic is
 * exact; a context is not safe for concurrent use (run one per thread).
 */
class VermaContext {
public:
    VermaContext(std::shared_ptr<const ChevalleyBasis> cb, Weight lambda);

    const Weight& lambda() const { return lambda_; }
    const RootSystem& rs() const { return cb_->rs(); }
    const ChevalleyBasis& cb() const { return *cb_; }

    // f_{beta} * v, straightened to PBW normal order.
    VermaVector apply_f(int root_idx, const VermaVector& v) const;
    // e_{alpha} * v in M(lambda).
    VermaVector apply_e(int root_idx, const VermaVector& v) const;

    // f_{r1}^{k1} ... f_{rM}^{kM} v_lambda, factors applied right to left.
    VermaVector monomial_vector(const std::vector<int>& seq_root_indices,
                                const IVec& exponents) const;

    // Visits every exponent vector k with sum k_j beta_j = delta together
    // with its monomial vector, built in one prefix-sharing sweep. Throws
    // budget_exceeded once more than `cap` solutions are visited.
    void for_each_monomial_vector(const std::vector<int>& seq_root_indices, const IVec& delta,
                                  long cap,
                                  const std::function<void(const IVec&, const VermaVector&)>& fn)
        const;

    // Contravariant pairing of two PBW basis monomials (0 across weights).
    Int pair_mono(const PBWMono& a, const PBWMono& b) const;
    Int pair_vec(const VermaVector& x, const VermaVector& y) const;

    // e_{gamma_a} applied to a single basis monomial times v_lambda; the
    // returned reference stays valid for the lifetime of the context.
    const VermaVector& e_term(const PBWMono& m, int root_idx) const {
        return e_mono(intern(m), root_idx);
    }

    // Same expansion in interned-id form for hot loops.
    using IdTerms = std::vector<std::pair<int, Int>>;
    const IdTerms& e_term_ids(int mono_id, int root_idx) const;
    int mono_id(const PBWMono& m) const { return intern(m); }

    // All PBW monomials of weight lambda - delta, delta in root coordinates.
    std::vector<PBWMono> pbw_basis(const IVec& delta) const;

    // <lambda - delta, beta^vee> for a positive-root index.
    int h_pairing(const IVec& delta, int root_idx) const;

    // Sum of the root coordinates of all factors; the monomial's drop from lambda.
    IVec delta_of(const PBWMono& m) const;

private:
    int intern(const PBWMono& m) const;
    // f_{gamma_j} times the basis monomial, in normal order (memoized).
    const VermaVector& insert_f(int mono_id, int j) const;
    // e_{gamma_a} times the basis monomial applied to v_lambda (memoized).
    const VermaVector& e_mono(int mono_id, int a) const;
    Int pair_ids(int a, int b) const;

    std::shared_ptr<const ChevalleyBasis> cb_;
    Weight lambda_;
    // monomial interning keeps all memo tables keyed by packed integer ids
    mutable std::map<PBWMono, int> mono_ids_;
    mutable std::deque<PBWMono> monos_;
    mutable std::unordered_map<std::uint64_t, Int> pair_cache_;
    mutable std::unordered_map<std::uint64_t, VermaVector> insert_cache_;
    mutable std::unordered_map<std::uint64_t, VermaVector> e_cache_;
    mutable std::unordered_map<std::uint64_t, IdTerms> e_ids_cache_;
};

/**
 * Weight-space context: the PBW basis of M(lambda)_mu and the Gram matrix of
 * the contravariant form on it. rank(gram) equals the multiplicity of mu in
 * V(lambda).
 */
struct WeightSpaceContext {
    IVec delta;                   // lambda - mu in simple-root coordinates
    std::vector<PBWMono> basis;   // all PBW monomials of weight mu
    std::vector<std::vector<Int>> gram;
};

WeightSpaceContext contravariant_gram(const VermaContext& ctx, const IVec& delta);

// Exact rank of a symmetric integer matrix (fraction-free elimination).
int matrix_rank(std::vector<std::vector<Int>> m);

/**
 * Incremental independence filter over the contravariant form. Vectors are
 * offered one at a time; accept() returns true iff the vector strictly
 * increases the rank of the Gram matrix of the accepted family, i.e. is
 * independent in V(lambda) modulo the vectors accepted before it.
 */
class RankFilter {
public:
    explicit RankFilter(const VermaContext& ctx) : ctx_(&ctx) {}

    bool accept(const VermaVector& v);
    int rank() const { return static_cast<int>(selected_.size()); }

private:
    const VermaContext* ctx_;
    std::vector<VermaVector> selected_;
    RMat ginv_;  // inverse of the Gram matrix of selected_
};

// Spec-shaped wrapper: runs the filter over a list of same-weight vectors.
std::vector<bool> rank_filter(const VermaContext& ctx, const IVec& delta,
                              const std::vector<VermaVector>& vectors);

}  // namespace essbasis
