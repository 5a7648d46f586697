#pragma once

#include <string>
#include <utility>
#include <vector>

#include "essbasis/orders.hpp"
#include "essbasis/root_system.hpp"
#include "essbasis/weyl.hpp"

namespace essbasis {

/**
 * A birational sequence: an ordered list of positive roots, repetitions
 * allowed. Whether the sequence is actually birational is not checked;
 * the engine reports a diagnostic downstream if the expected dimension
 * cannot be reached.
 */
struct BirationalSequence {
    std::vector<int> root_indices;  // canonical 0-based indices
    std::string origin = "custom";  // custom | fflv | string | lusztig | nz
    bool partial = false;           // built from a word shorter than N

    int length() const { return static_cast<int>(root_indices.size()); }
};

// The canonical 1-based listing of positive roots, as printed by the CLI.
std::vector<std::string> operators_listing(const RootSystem& rs);

// Sequence from 1-based indices into the canonical listing.
BirationalSequence seq_from_indices(const RootSystem& rs, const std::vector<int>& indices);
// Sequence from coefficient vectors with respect to the simple roots.
BirationalSequence seq_from_coeffs(const RootSystem& rs, const std::vector<IVec>& vectors);

// All positive roots by descending height (ties: reversed canonical
// enumeration); a good enumeration. Default order: degrevlex.
std::pair<BirationalSequence, MonomialOrder> seq_fflv(const RootSystem& rs);

// (alpha_{i1}, ..., alpha_{iN}) for a reduced word; default order neglex.
std::pair<BirationalSequence, MonomialOrder> seq_string(const RootSystem& rs,
                                                        const WeylWord& word);

// Same sequence as seq_string, default order degrevlex.
std::pair<BirationalSequence, MonomialOrder> seq_nz(const RootSystem& rs, const WeylWord& word);

// beta_k = s_{i1}...s_{i_{k-1}}(alpha_{i_k}); default order wdegrevlex with
// the root heights as weights.
std::pair<BirationalSequence, MonomialOrder> seq_lusztig(const RootSystem& rs,
                                                         const WeylWord& word);

// Coefficient vectors of the sequence entries.
std::vector<IVec> sequence_roots(const RootSystem& rs, const BirationalSequence& s);

}  // namespace essbasis
