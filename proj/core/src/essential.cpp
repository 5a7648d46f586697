#include "essbasis/essential.hpp"

#include <algorithm>

#include "essbasis/errors.hpp"

namespace essbasis {

namespace {

void enumerate_capped(const std::vector<IVec>& roots, std::size_t pos, IVec& remaining, IVec& cur,
                      long cap, std::vector<IVec>& out) {
    if (pos == roots.size()) {
        if (is_zero(remaining)) {
            if (static_cast<long>(out.size()) >= cap)
                throw budget_exceeded("candidate count for a weight space exceeds the cap of " +
                                      std::to_string(cap) +
                                      " (raise with --budget or ESSENTIAL_BUDGET)");
            out.push_back(cur);
        }
        return;
    }
    const IVec& r = roots[pos];
    int bound = -1;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] > 0) {
            int q = remaining[i] / r[i];
            bound = bound < 0 ? q : std::min(bound, q);
        }
    for (int k = 0; k <= bound; ++k) {
        cur[pos] = k;
        enumerate_capped(roots, pos + 1, remaining, cur, cap, out);
        if (k < bound)
            for (std::size_t i = 0; i < r.size(); ++i) remaining[i] -= r[i];
    }
    for (int k = 0; k < bound; ++k)
        for (std::size_t i = 0; i < r.size(); ++i) remaining[i] += r[i];
    cur[pos] = 0;
}

}  // namespace

std::vector<IVec> candidate_exponents(const RootSystem& rs, const BirationalSequence& seq,
                                      const IVec& delta, long cap) {
    std::vector<IVec> roots = sequence_roots(rs, seq);
    IVec remaining = delta;
    IVec cur(seq.length(), 0);
    std::vector<IVec> out;
    enumerate_capped(roots, 0, remaining, cur, cap, out);
    return out;
}

std::set<IVec> minkowski_sum(const std::set<IVec>& a, const std::set<IVec>& b) {
    std::set<IVec> out;
    for (const IVec& x : a) {
        if (!b.empty() && x.size() != b.begin()->size())
            throw invalid_input("Minkowski sum of sets with different vector lengths");
        for (const IVec& y : b) out.insert(add(x, y));
    }
    return out;
}

std::vector<Weight> expand_generators(const std::vector<std::pair<Weight, int>>& gens) {
    std::vector<Weight> list;
    for (const auto& [w, m] : gens)
        for (int i = 0; i < m; ++i) list.push_back(w);
    std::sort(list.begin(), list.end(), [](const Weight& a, const Weight& b) {
        int sa = coord_sum(a), sb = coord_sum(b);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return list;
}

bool generators_less(const std::vector<std::pair<Weight, int>>& a,
                     const std::vector<std::pair<Weight, int>>& b) {
    std::vector<Weight> ea = expand_generators(a), eb = expand_generators(b);
    for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i) {
        int sa = coord_sum(ea[i]), sb = coord_sum(eb[i]);
        if (sa != sb) return sa < sb;
        if (ea[i] != eb[i]) return ea[i] < eb[i];
    }
    return ea.size() < eb.size();
}

namespace {

std::vector<std::pair<Weight, int>> merge_generators(
    const std::vector<std::pair<Weight, int>>& a, const std::vector<std::pair<Weight, int>>& b) {
    std::map<Weight, int> acc;
    for (const auto& [w, m] : a) acc[w] += m;
    for (const auto& [w, m] : b) acc[w] += m;
    return {acc.begin(), acc.end()};
}

}  // namespace

EssentialEngine::EssentialEngine(std::shared_ptr<const ChevalleyBasis> cb, BirationalSequence seq,
                                 MonomialOrder order, EngineOptions opt)
    : cb_(std::move(cb)), seq_(std::move(seq)), order_(std::move(order)), opt_(opt) {
    if (order_.kind == OrderKind::wdegrevlex &&
        static_cast<int>(order_.weights.size()) != seq_.length())
        throw invalid_input("wdegrevlex weight vector does not match the sequence length");
}

namespace {

// Incremental row echelon over the rationals; add() keeps independent rows.
struct Echelon {
    std::vector<RVec> rows;  // each normalized to a leading 1
    std::vector<std::size_t> pivots;

    bool add(RVec z) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Rat f = z[pivots[r]];
            if (f == 0) continue;
            for (std::size_t c = 0; c < z.size(); ++c) {
                z[c] -= f * rows[r][c];
                z[c].canonicalize();
            }
        }
        std::size_t p = 0;
        while (p < z.size() && z[p] == 0) ++p;
        if (p == z.size()) return false;
        Rat lead = z[p];
        for (auto& x : z) {
            x /= lead;
            x.canonicalize();
        }
        rows.push_back(std::move(z));
        pivots.push_back(p);
        return true;
    }
};

/**
 * Rank oracle for one weight space of V(lambda). A vector's image in
 * V(lambda) is its pairing vector against the PBW basis of M(lambda)_mu,
 * which lies in the row space of the Gram matrix; `mult` many Gram rows
 * spanning that row space therefore preserve all ranks, and candidates are
 * tested by a short pairing vector against those probe monomials only.
 */
struct SpaceProbes {
    const VermaContext* ctx;
    std::vector<PBWMono> probes;

    SpaceProbes(const VermaContext& c, const IVec& delta, const Int& mult) : ctx(&c) {
        std::vector<PBWMono> basis = c.pbw_basis(delta);
        const std::size_t B = basis.size();
        // Nonzero-diagonal rows first: null basis monomials give zero rows.
        std::vector<std::size_t> order;
        order.reserve(B);
        std::vector<Int> diag(B);
        for (std::size_t i = 0; i < B; ++i) {
            diag[i] = c.pair_mono(basis[i], basis[i]);
            if (diag[i] != 0) order.push_back(i);
        }
        for (std::size_t i = 0; i < B; ++i)
            if (diag[i] == 0) order.push_back(i);
        Echelon ech;
        for (std::size_t oi : order) {
            if (Int(probes.size()) == mult) break;
            RVec row(B);
            for (std::size_t u = 0; u < B; ++u) row[u] = Rat(c.pair_mono(basis[oi], basis[u]));
            if (ech.add(std::move(row))) probes.push_back(basis[oi]);
        }
        if (Int(probes.size()) != mult)
            throw std::logic_error("Gram rank differs from the Freudenthal multiplicity");
    }

    RVec z(const VermaVector& v) const {
        RVec out(probes.size(), Rat(0));
        for (std::size_t r = 0; r < probes.size(); ++r) {
            Int acc = 0;
            for (const auto& [m, coef] : v) {
                Int p = ctx->pair_mono(m, probes[r]);
                if (p != 0) acc += coef * p;
            }
            out[r] = Rat(acc);
        }
        return out;
    }
};

/**
 * Enumerates all exponents k with sum k_j beta_j = delta and computes their
 * probe pairings without materializing f^k v_lambda: peeling factors off the
 * left moves them as e-operators onto the probe vectors, <f_b x, p> =
 * <x, e_b p>. All probes ride in one bundle with coefficient vectors, the
 * bundles shrink toward the top of the module, and a subtree is pruned
 * outright once every probe has been annihilated.
 */
struct ZSweep {
    using Bundle = std::unordered_map<int, std::vector<Int>>;  // mono id -> coeffs

    const VermaContext* ctx;
    const std::vector<int>* seq;
    std::vector<IVec> roots;
    std::size_t width = 0;  // number of probes
    int empty_id = -1;      // id of the empty monomial
    long cap = 0;
    long count = 0;
    IVec remaining;
    IVec cur;
    std::vector<std::pair<IVec, RVec>>* out;

    Bundle raise(int root_idx, const Bundle& b) const {
        Bundle outb;
        for (const auto& [m, coeffs] : b) {
            for (const auto& [t, c] : ctx->e_term_ids(m, root_idx)) {
                auto [it, fresh] = outb.try_emplace(t);
                if (fresh) it->second.assign(width, Int(0));
                bool alive = false;
                for (std::size_t r = 0; r < width; ++r) {
                    it->second[r] += c * coeffs[r];
                    if (it->second[r] != 0) alive = true;
                }
                if (!alive) outb.erase(it);
            }
        }
        return outb;
    }

    void walk(std::size_t pos, const Bundle& p) {
        if (p.empty()) return;
        if (pos == roots.size()) {
            if (!is_zero(remaining)) return;
            if (count >= cap)
                throw budget_exceeded("candidate count for a weight space exceeds the cap of " +
                                      std::to_string(cap) +
                                      " (raise with --budget or ESSENTIAL_BUDGET)");
            ++count;
            // <v_lambda, P_r> is the coefficient of the empty monomial
            auto it = p.find(empty_id);
            if (it == p.end()) return;
            RVec z(width, Rat(0));
            for (std::size_t r = 0; r < width; ++r) z[r] = Rat(it->second[r]);
            out->emplace_back(cur, std::move(z));
            return;
        }
        const IVec& r = roots[pos];
        int bound = -1;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] > 0) {
                int q = remaining[i] / r[i];
                bound = bound < 0 ? q : std::min(bound, q);
            }
        const Bundle* current = &p;
        Bundle step;
        int subtracted = 0;
        for (int k = 0;; ++k) {
            cur[pos] = k;
            walk(pos + 1, *current);
            if (k == bound) break;
            step = raise((*seq)[pos], *current);
            current = &step;
            for (std::size_t i = 0; i < r.size(); ++i) remaining[i] -= r[i];
            ++subtracted;
            if (step.empty()) break;  // the whole remaining k-range is dead
        }
        for (std::size_t i = 0; i < r.size(); ++i) remaining[i] += r[i] * subtracted;
        cur[pos] = 0;
    }
};

}  // namespace

std::vector<IVec> EssentialEngine::filter_space(const VermaContext& ctx, const IVec& delta,
                                                const Int& mult,
                                                const std::vector<IVec>& seeds) const {
    SpaceProbes probes(ctx, delta, mult);

    // One prefix-sharing sweep computes every candidate's probe pairings;
    // candidates with zero image in V(lambda) are dropped right away,
    // leaving a small family for the ordered rank filter.
    std::vector<std::pair<IVec, RVec>> survivors;
    {
        ZSweep sweep;
        sweep.ctx = &ctx;
        sweep.seq = &seq_.root_indices;
        for (int idx : seq_.root_indices) sweep.roots.push_back(rs().root(idx));
        sweep.width = probes.probes.size();
        sweep.empty_id = ctx.mono_id(PBWMono(rs().num_positive(), 0));
        sweep.cap = opt_.candidate_cap;
        sweep.remaining = delta;
        sweep.cur.assign(seq_.root_indices.size(), 0);
        sweep.out = &survivors;
        ZSweep::Bundle p;
        for (std::size_t r = 0; r < probes.probes.size(); ++r) {
            auto [it, fresh] = p.try_emplace(ctx.mono_id(probes.probes[r]));
            if (fresh) it->second.assign(probes.probes.size(), Int(0));
            it->second[r] = 1;
        }
        sweep.walk(0, p);
    }
    std::sort(survivors.begin(), survivors.end(),
              [this](const auto& x, const auto& y) { return order_.less(x.first, y.first); });

    Echelon ech;
    std::vector<IVec> selected;
    std::set<IVec> seedset(seeds.begin(), seeds.end());
    std::vector<IVec> sorted_seeds(seeds);
    std::sort(sorted_seeds.begin(), sorted_seeds.end(),
              [this](const IVec& x, const IVec& y) { return order_.less(x, y); });
    for (const IVec& k : sorted_seeds) {
        if (!ech.add(probes.z(ctx.monomial_vector(seq_.root_indices, k))))
            throw std::logic_error(
                "internal consistency: a Minkowski-collected exponent failed the rank filter");
        selected.push_back(k);
    }
    if (Int(selected.size()) < mult) {
        for (auto& [k, zv] : survivors) {
            if (seedset.count(k)) continue;
            if (ech.add(std::move(zv))) {
                selected.push_back(k);
                if (Int(selected.size()) == mult) break;
            }
        }
    }
    if (Int(selected.size()) < mult)
        throw not_birational("weight space below its multiplicity (" +
                             std::to_string(selected.size()) + " of " + mult.get_str() +
                             "); the sequence is probably not a birational sequence");
    return selected;
}

EssentialSet EssentialEngine::essential_direct(const Weight& lambda) const {
    if (!is_dominant(lambda)) throw invalid_input("highest weight must be dominant");
    VermaContext ctx(cb_, lambda);
    auto weights = weight_multiplicities_by_delta(rs(), lambda);

    EssentialSet es;
    es.lambda = lambda;
    std::set<IVec> result;
    for (const auto& [delta, mult] : weights) {
        std::vector<IVec> sel = filter_space(ctx, delta, mult, {});
        result.insert(sel.begin(), sel.end());
    }
    es.exponents.assign(result.begin(), result.end());
    std::sort(es.exponents.begin(), es.exponents.end(),
              [this](const IVec& x, const IVec& y) { return order_.less(x, y); });
    es.dimension = Int(es.exponents.size());
    if (!is_zero(lambda)) es.generators = {{lambda, 1}};
    es.fully_decomposed = false;
    return es;
}

const EssentialSet& EssentialEngine::compute_basis(const Weight& lambda) {
    auto hit = memo_.find(lambda);
    if (hit != memo_.end()) return *hit->second;
    if (!is_dominant(lambda)) throw invalid_input("highest weight must be dominant");

    auto decomps = dominant_decompositions(lambda);
    if (decomps.empty()) {
        auto es = std::make_unique<EssentialSet>(essential_direct(lambda));
        return *memo_.emplace(lambda, std::move(es)).first->second;
    }

    Int dim = weyl_dimension(rs(), lambda);
    std::set<IVec> collected;
    std::set<Weight> visited;
    std::optional<std::vector<std::pair<Weight, int>>> best_gens;
    for (const auto& [mu1, mu2] : decomps) {
        const EssentialSet& e1 = compute_basis(mu1);
        const EssentialSet& e2 = compute_basis(mu2);
        visited.insert(mu1);
        visited.insert(mu2);
        visited.insert(e1.visited.begin(), e1.visited.end());
        visited.insert(e2.visited.begin(), e2.visited.end());

        std::set<IVec> pair_sum;
        for (const IVec& x : e1.exponents)
            for (const IVec& y : e2.exponents) pair_sum.insert(add(x, y));
        if (Int(pair_sum.size()) == dim) {
            auto cand = merge_generators(e1.generators, e2.generators);
            if (!best_gens || generators_less(cand, *best_gens)) best_gens = std::move(cand);
        }
        collected.merge(pair_sum);
        if (opt_.early_exit && Int(collected.size()) == dim) break;
    }

    auto es = std::make_unique<EssentialSet>();
    es->lambda = lambda;
    if (Int(collected.size()) < dim) {
        // Some weight spaces are missing monomials: compare per-weight counts
        // with the Freudenthal multiplicities and complete the deficient ones.
        VermaContext ctx(cb_, lambda);
        auto weights = weight_multiplicities_by_delta(rs(), lambda);
        std::map<IVec, std::vector<IVec>> by_delta;
        std::vector<IVec> roots = sequence_roots(rs(), seq_);
        for (const IVec& k : collected) {
            IVec delta(rs().rank(), 0);
            for (int j = 0; j < seq_.length(); ++j)
                for (int i = 0; i < rs().rank(); ++i) delta[i] += k[j] * roots[j][i];
            by_delta[delta].push_back(k);
        }
        for (const auto& [delta, group] : by_delta)
            if (!weights.count(delta))
                throw std::logic_error(
                    "internal consistency: collected exponent outside the weight diagram");
        for (const auto& [delta, mult] : weights) {
            auto it = by_delta.find(delta);
            const std::vector<IVec>& seeds =
                it == by_delta.end() ? std::vector<IVec>{} : it->second;
            if (Int(seeds.size()) == mult) continue;
            if (Int(seeds.size()) > mult)
                throw std::logic_error(
                    "internal consistency: weight space overfilled by Minkowski sums");
            std::vector<IVec> sel = filter_space(ctx, delta, mult, seeds);
            collected.insert(sel.begin(), sel.end());
        }
    }
    if (Int(collected.size()) != dim)
        throw std::logic_error("essential set has wrong cardinality after completion");

    es->exponents.assign(collected.begin(), collected.end());
    std::sort(es->exponents.begin(), es->exponents.end(),
              [this](const IVec& x, const IVec& y) { return order_.less(x, y); });
    es->dimension = dim;
    if (best_gens) {
        es->generators = std::move(*best_gens);
        es->fully_decomposed = true;
    } else {
        es->generators = {{lambda, 1}};
        es->fully_decomposed = false;
    }
    es->visited.assign(visited.begin(), visited.end());
    return *memo_.emplace(lambda, std::move(es)).first->second;
}

}  // namespace essbasis
