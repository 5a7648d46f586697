#pragma once

#include <vector>

#include "essbasis/essential.hpp"
#include "essbasis/weyl.hpp"

namespace essbasis {

/**
 * Generators of the truncated monoid for a fixed embedding degree d:
 * for each k <= d the essential set of V(k lambda) and the subset of
 * elements not reachable as Minkowski sums from lower degrees.
 */
struct KodairaDegree {
    int k = 0;
    Int dimension;
    std::vector<IVec> monomials;      // es(S, >, k lambda)
    std::vector<IVec> new_generators; // es(k lambda) \ union of lower-degree sums
};

struct KodairaResult {
    Weight lambda;
    int degree = 0;
    std::vector<KodairaDegree> degrees;
    std::vector<long> counts;  // |new_generators| per degree
    bool budget_hit = false;   // partial result: stopped before `degree`
};

KodairaResult kodaira(EssentialEngine& engine, const Weight& lambda, int degree);

struct ReducedWordOptions {
    int max_rank = 4;  // refuse larger ranks unless raised explicitly
};

// One lexicographically-least representative per commutation class of
// reduced words for the longest element.
std::vector<WeylWord> reduced_words_w0(const RootSystem& rs, const ReducedWordOptions& opt = {});

// All reduced words for the longest element (exponentially many).
std::vector<WeylWord> all_reduced_words_w0(const RootSystem& rs);

// Lexicographically least word in the commutation class of `word`.
WeylWord commutation_canonical(const RootSystem& rs, const WeylWord& word);

struct CensusEntry {
    std::vector<std::pair<Weight, int>> generators;
    long frequency = 0;
};

struct CensusResult {
    Weight lambda;
    std::vector<WeylWord> words;  // class representatives, in enumeration order
    std::vector<std::vector<std::pair<Weight, int>>> per_word_generators;
    std::vector<CensusEntry> table;  // aggregated by generator multiset
};

struct CensusOptions {
    ReducedWordOptions words;
    EngineOptions engine;
    int threads = 1;
};

// For every commutation-class representative, run the string-preset engine
// (neglex) on lambda and collect the generator multisets.
CensusResult generator_census(std::shared_ptr<const ChevalleyBasis> cb, const Weight& lambda,
                              const CensusOptions& opt = {});

}  // namespace essbasis
