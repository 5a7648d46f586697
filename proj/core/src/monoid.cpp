#include "essbasis/monoid.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "essbasis/errors.hpp"

namespace essbasis {

KodairaResult kodaira(EssentialEngine& engine, const Weight& lambda, int degree) {
    if (degree < 1) throw invalid_input("degree must be at least 1");
    if (!is_dominant(lambda) || is_zero(lambda))
        throw invalid_input("highest weight must be dominant and nonzero");
    KodairaResult res;
    res.lambda = lambda;
    res.degree = degree;

    std::vector<std::set<IVec>> es_sets;  // es(k lambda), 1-based offset by 1
    for (int k = 1; k <= degree; ++k) {
        Weight klambda(lambda.size());
        for (std::size_t i = 0; i < lambda.size(); ++i) klambda[i] = k * lambda[i];
        const EssentialSet* es = nullptr;
        try {
            es = &engine.compute_basis(klambda);
        } catch (const budget_exceeded&) {
            res.budget_hit = true;
            break;
        }
        std::set<IVec> current(es->exponents.begin(), es->exponents.end());

        std::set<IVec> reachable;
        for (int l = 1; l <= k - 1; ++l) {
            for (const IVec& x : es_sets[l - 1])
                for (const IVec& y : es_sets[k - l - 1]) reachable.insert(add(x, y));
        }
        KodairaDegree deg;
        deg.k = k;
        deg.dimension = es->dimension;
        deg.monomials = es->exponents;
        for (const IVec& m : current)
            if (!reachable.count(m)) deg.new_generators.push_back(m);
        res.counts.push_back(static_cast<long>(deg.new_generators.size()));
        res.degrees.push_back(std::move(deg));
        es_sets.push_back(std::move(current));
    }
    return res;
}

std::vector<WeylWord> all_reduced_words_w0(const RootSystem& rs) {
    const int n = rs.rank();
    const int N = rs.num_positive();
    std::vector<WeylWord> out;
    WeylWord word;
    // images of the simple roots under the current prefix
    std::vector<IVec> img(n);
    for (int i = 0; i < n; ++i) {
        img[i].assign(n, 0);
        img[i][i] = 1;
    }
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == N) {
            out.push_back(word);
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (!all_nonneg(img[i])) continue;  // w(alpha_i) < 0: not reduced
            std::vector<IVec> saved = img;
            // w' = w s_i acts by alpha_j -> w(alpha_j - cartan(j,i) alpha_i)
            for (int j = 0; j < n; ++j) {
                int c = rs.cartan(j, i);
                for (int t = 0; t < n; ++t) img[j][t] = saved[j][t] - c * saved[i][t];
            }
            word.push_back(i + 1);
            self(self);
            word.pop_back();
            img = std::move(saved);
        }
    };
    rec(rec);
    return out;
}

WeylWord commutation_canonical(const RootSystem& rs, const WeylWord& word) {
    // Greedy lexicographically-least linearization of the dependence order:
    // occurrences of letters i, j commute freely iff cartan(i-1, j-1) == 0.
    const std::size_t L = word.size();
    std::vector<int> indeg(L, 0);
    std::vector<std::vector<int>> succ(L);
    for (std::size_t a = 0; a < L; ++a)
        for (std::size_t b = a + 1; b < L; ++b) {
            int i = word[a] - 1, j = word[b] - 1;
            if (i == j || rs.cartan(i, j) != 0) {
                succ[a].push_back(static_cast<int>(b));
                ++indeg[b];
            }
        }
    WeylWord out;
    out.reserve(L);
    std::vector<bool> used(L, false);
    for (std::size_t step = 0; step < L; ++step) {
        int best = -1;
        for (std::size_t a = 0; a < L; ++a)
            if (!used[a] && indeg[a] == 0 && (best < 0 || word[a] < word[best]))
                best = static_cast<int>(a);
        used[best] = true;
        out.push_back(word[best]);
        for (int b : succ[best]) --indeg[b];
    }
    return out;
}

std::vector<WeylWord> reduced_words_w0(const RootSystem& rs, const ReducedWordOptions& opt) {
    if (rs.rank() > opt.max_rank) {
        double est = 1.0;
        for (int k = 1; k <= rs.num_positive(); ++k) est *= k;
        for (int i = 0; i < rs.num_positive(); ++i) est /= rs.height(i);
        throw budget_exceeded("rank " + std::to_string(rs.rank()) + " exceeds the word budget (" +
                              std::to_string(opt.max_rank) + "); crude product estimate " +
                              std::to_string(static_cast<long long>(est)) +
                              " reduced words, pass --long-run to proceed");
    }
    std::vector<WeylWord> reps;
    std::set<WeylWord> seen;
    for (const WeylWord& w : all_reduced_words_w0(rs)) {
        WeylWord canon = commutation_canonical(rs, w);
        if (seen.insert(canon).second) reps.push_back(canon);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

CensusResult generator_census(std::shared_ptr<const ChevalleyBasis> cb, const Weight& lambda,
                              const CensusOptions& opt) {
    const RootSystem& rs = cb->rs();
    if (!is_dominant(lambda)) throw invalid_input("weight must be dominant");
    CensusResult res;
    res.lambda = lambda;
    res.words = reduced_words_w0(rs, opt.words);
    res.per_word_generators.resize(res.words.size());

    const int threads = std::max(1, opt.threads);
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t w = next.fetch_add(1);
            if (w >= res.words.size()) return;
            try {
                auto [seq, order] = seq_string(rs, res.words[w]);
                EssentialEngine engine(cb, seq, order, opt.engine);
                res.per_word_generators[w] = engine.compute_basis(lambda).generators;
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::map<std::vector<Weight>, std::size_t> index;
    for (const auto& gens : res.per_word_generators) {
        std::vector<Weight> key = expand_generators(gens);
        auto [it, fresh] = index.emplace(key, res.table.size());
        if (fresh)
            res.table.push_back({gens, 1});
        else
            res.table[it->second].frequency += 1;
    }
    std::sort(res.table.begin(), res.table.end(), [](const CensusEntry& a, const CensusEntry& b) {
        if (a.frequency != b.frequency) return a.frequency > b.frequency;
        return generators_less(a.generators, b.generators);
    });
    return res;
}

}  // namespace essbasis
