#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "essbasis/multiplicity.hpp"
#include "essbasis/orders.hpp"
#include "essbasis/sequences.hpp"
#include "essbasis/verma.hpp"

namespace essbasis {

struct EngineOptions {
    long candidate_cap = 1000000;  // per-weight-space candidate count cap
    bool early_exit = false;       // stop the decomposition loop once full
};

/**
 * The set es(S, >, lambda) of essential exponents: one exponent vector per
 * basis vector of V(lambda), together with the Minkowski generator
 * decomposition lambda = sum a_i mu_i with es(lambda) = sum a_i es(mu_i).
 * When no such proper decomposition exists, lambda itself is the generator
 * and fully_decomposed is false.
 */
struct EssentialSet {
    Weight lambda;
    Int dimension;
    std::vector<IVec> exponents;                     // ascending in the order
    std::vector<std::pair<Weight, int>> generators;  // (weight, multiplicity)
    bool fully_decomposed = false;
    std::vector<Weight> visited;  // intermediate weights from the recursion
};

// All k in N^M with sum_j k_j beta_j = delta (simple-root coordinates).
// Throws budget_exceeded once more than `cap` solutions are found.
std::vector<IVec> candidate_exponents(const RootSystem& rs, const BirationalSequence& seq,
                                      const IVec& delta, long cap);

std::set<IVec> minkowski_sum(const std::set<IVec>& a, const std::set<IVec>& b);

// Ascending-by-(coordinate sum, lex) expansion of a generator multiset;
// used for the minimality comparison and for canonical output order.
std::vector<Weight> expand_generators(const std::vector<std::pair<Weight, int>>& gens);
bool generators_less(const std::vector<std::pair<Weight, int>>& a,
                     const std::vector<std::pair<Weight, int>>& b);

/**
 * Engine for one (root system, sequence, order) triple. compute_basis
 * follows the Minkowski-accelerated pipeline with memoization over weights;
 * essential_direct is the plain per-weight-space computation and serves as
 * the oracle for the fast path. An engine (and its memo) is meant to be
 * driven from a single thread; run one engine per thread.
 */
class EssentialEngine {
public:
    EssentialEngine(std::shared_ptr<const ChevalleyBasis> cb, BirationalSequence seq,
                    MonomialOrder order, EngineOptions opt = {});

    const RootSystem& rs() const { return cb_->rs(); }
    const BirationalSequence& sequence() const { return seq_; }
    const MonomialOrder& order() const { return order_; }
    const EngineOptions& options() const { return opt_; }

    // Algorithm-1 path: recursive Minkowski decomposition plus completion.
    const EssentialSet& compute_basis(const Weight& lambda);

    // Direct per-weight-space computation, no decomposition.
    EssentialSet essential_direct(const Weight& lambda) const;

private:
    struct SpaceResult {
        std::vector<IVec> selected;
    };

    // Rank-filter one weight space. `seeds` must already be essential; the
    // scan covers all candidates ascending and stops at `mult` survivors.
    std::vector<IVec> filter_space(const VermaContext& ctx, const IVec& delta, const Int& mult,
                                   const std::vector<IVec>& seeds) const;

    std::shared_ptr<const ChevalleyBasis> cb_;
    BirationalSequence seq_;
    MonomialOrder order_;
    EngineOptions opt_;
    std::map<Weight, std::unique_ptr<EssentialSet>> memo_;
};

}  // namespace essbasis
