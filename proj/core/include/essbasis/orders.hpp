#pragma once

#include <string>
#include <vector>

#include "essbasis/rational.hpp"

namespace essbasis {

enum class OrderKind { lex, invlex, neglex, deglex, degrevlex, wdegrevlex };

/**
 * A monomial order on exponent vectors of fixed length. All six kinds are
 * strict total orders; the graded kinds compare (weighted) coordinate sums
 * first. Comparisons follow the usual conventions:
 *
 *   lex        a > b iff the first nonzero entry of a-b is positive
 *   neglex     a > b iff b >_lex a
 *   invlex     a > b iff the first nonzero entry of a-b, read from the
 *              right, is positive
 *   deglex     degree first, ties broken by lex
 *   degrevlex  degree first; on ties a > b iff the first nonzero entry of
 *              a-b, read from the right, is negative
 *   wdegrevlex degrevlex with a weighted degree
 */
struct MonomialOrder {
    OrderKind kind = OrderKind::degrevlex;
    std::vector<int> weights;  // used iff kind == wdegrevlex

    // -1 if a < b, 0 if equal, +1 if a > b. Throws on length mismatch.
    int compare(const IVec& a, const IVec& b) const;
    bool less(const IVec& a, const IVec& b) const { return compare(a, b) < 0; }

    static MonomialOrder parse(const std::string& text);
    std::string to_string() const;
};

inline MonomialOrder order_of(OrderKind k, std::vector<int> w = {}) {
    return MonomialOrder{k, std::move(w)};
}

// The unique minimum of a nonempty set of exponent vectors.
IVec min_of(const MonomialOrder& order, const std::vector<IVec>& vecs);

}  // namespace essbasis
