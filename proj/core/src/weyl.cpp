#include "essbasis/weyl.hpp"

#include <string>

#include "essbasis/errors.hpp"

namespace essbasis {

void check_word_letters(const RootSystem& rs, const WeylWord& word) {
    for (int l : word)
        if (l < 1 || l > rs.rank())
            throw invalid_input("word letter " + std::to_string(l) + " out of range 1.." +
                                std::to_string(rs.rank()));
}

WeylWord longest_word(const RootSystem& rs) {
    Weight mu(rs.rank(), -1);  // -rho
    WeylWord word;
    for (;;) {
        int i = 0;
        while (i < rs.rank() && mu[i] >= 0) ++i;
        if (i == rs.rank()) break;
        mu = rs.reflect_fw(mu, i);
        word.push_back(i + 1);
    }
    // The walk crosses each of the N separating hyperplanes exactly once.
    if (static_cast<int>(word.size()) != rs.num_positive())
        throw std::logic_error("longest word has unexpected length");
    return word;
}

std::vector<int> roots_along_word(const RootSystem& rs, const WeylWord& word) {
    check_word_letters(rs, word);
    std::vector<int> out;
    out.reserve(word.size());
    for (std::size_t k = 0; k < word.size(); ++k) {
        IVec v(rs.rank(), 0);
        v[word[k] - 1] = 1;
        for (std::size_t j = k; j-- > 0;) v = rs.reflect_root(v, word[j] - 1);
        int idx = rs.root_index(v);
        if (idx < 0)
            throw invalid_input("word is not reduced: beta_" + std::to_string(k + 1) +
                                " is a negative root");
        out.push_back(idx);
    }
    return out;
}

bool is_reduced(const RootSystem& rs, const WeylWord& word) {
    try {
        roots_along_word(rs, word);
        return true;
    } catch (const invalid_input&) {
        return false;
    }
}

}  // namespace essbasis
