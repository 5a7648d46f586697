#include "essbasis/sequences.hpp"

#include <algorithm>
#include <sstream>

#include "essbasis/errors.hpp"

namespace essbasis {

std::vector<std::string> operators_listing(const RootSystem& rs) {
    std::vector<std::string> out;
    out.reserve(rs.num_positive());
    for (int i = 0; i < rs.num_positive(); ++i)
        out.push_back(std::to_string(i + 1) + ": " + rs.root_to_string(i));
    return out;
}

BirationalSequence seq_from_indices(const RootSystem& rs, const std::vector<int>& indices) {
    BirationalSequence s;
    for (int idx : indices) {
        if (idx < 1 || idx > rs.num_positive())
            throw invalid_input("root index " + std::to_string(idx) + " out of range 1.." +
                                std::to_string(rs.num_positive()));
        s.root_indices.push_back(idx - 1);
    }
    return s;
}

BirationalSequence seq_from_coeffs(const RootSystem& rs, const std::vector<IVec>& vectors) {
    BirationalSequence s;
    for (const IVec& v : vectors) {
        if (static_cast<int>(v.size()) != rs.rank())
            throw invalid_input("coefficient vector has wrong length");
        int idx = rs.root_index(v);
        if (idx < 0) {
            std::ostringstream os;
            os << "[";
            for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
            os << "] is not a positive root";
            throw invalid_input(os.str());
        }
        s.root_indices.push_back(idx);
    }
    return s;
}

std::pair<BirationalSequence, MonomialOrder> seq_fflv(const RootSystem& rs) {
    BirationalSequence s;
    s.origin = "fflv";
    for (int i = rs.num_positive(); i-- > 0;) s.root_indices.push_back(i);
    return {s, order_of(OrderKind::degrevlex)};
}

namespace {

BirationalSequence simple_word_sequence(const RootSystem& rs, const WeylWord& word,
                                        const char* origin) {
    check_word_letters(rs, word);
    BirationalSequence s;
    s.origin = origin;
    for (int l : word) {
        IVec a(rs.rank(), 0);
        a[l - 1] = 1;
        s.root_indices.push_back(rs.root_index(a));
    }
    s.partial = static_cast<int>(word.size()) < rs.num_positive();
    return s;
}

}  // namespace

std::pair<BirationalSequence, MonomialOrder> seq_string(const RootSystem& rs,
                                                        const WeylWord& word) {
    return {simple_word_sequence(rs, word, "string"), order_of(OrderKind::neglex)};
}

std::pair<BirationalSequence, MonomialOrder> seq_nz(const RootSystem& rs, const WeylWord& word) {
    return {simple_word_sequence(rs, word, "nz"), order_of(OrderKind::degrevlex)};
}

std::pair<BirationalSequence, MonomialOrder> seq_lusztig(const RootSystem& rs,
                                                         const WeylWord& word) {
    BirationalSequence s;
    s.origin = "lusztig";
    s.root_indices = roots_along_word(rs, word);  // rejects non-reduced words
    s.partial = static_cast<int>(word.size()) < rs.num_positive();
    std::vector<int> w;
    for (int idx : s.root_indices) w.push_back(rs.height(idx));
    return {s, order_of(OrderKind::wdegrevlex, std::move(w))};
}

std::vector<IVec> sequence_roots(const RootSystem& rs, const BirationalSequence& s) {
    std::vector<IVec> out;
    out.reserve(s.root_indices.size());
    for (int idx : s.root_indices) out.push_back(rs.root(idx));
    return out;
}

}  // namespace essbasis
