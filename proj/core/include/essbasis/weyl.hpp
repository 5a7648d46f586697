#pragma once

#include <vector>

#include "essbasis/root_system.hpp"

namespace essbasis {

// A word in the simple reflections, letters 1..rank.
using WeylWord = std::vector<int>;

// Canonical reduced word for the longest Weyl group element: walk -rho up to
// rho, always reflecting at the smallest simple index with negative pairing.
WeylWord longest_word(const RootSystem& rs);

// beta_k = s_{i1} ... s_{i_{k-1}}(alpha_{i_k}) for k = 1..len(word), as
// canonical positive-root indices. Throws invalid_input if some beta_k is
// negative, which happens exactly when the word is not reduced.
std::vector<int> roots_along_word(const RootSystem& rs, const WeylWord& word);

bool is_reduced(const RootSystem& rs, const WeylWord& word);

void check_word_letters(const RootSystem& rs, const WeylWord& word);

}  // namespace essbasis
