#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <vector>

namespace essbasis {

using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<int>;       // small integer vectors (root/weight coords)
using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;

inline IVec add(const IVec& a, const IVec& b) {
    assert(a.size() == b.size());
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec sub(const IVec& a, const IVec& b) {
    assert(a.size() == b.size());
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline int coord_sum(const IVec& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

inline bool all_nonneg(const IVec& a) {
    for (int x : a)
        if (x < 0) return false;
    return true;
}

inline bool is_zero(const IVec& a) {
    for (int x : a)
        if (x != 0) return false;
    return true;
}

// Solves M x = rhs by Gaussian elimination over the rationals.
// M must be square and nonsingular.
RVec solve_rational(RMat m, RVec rhs);

}  // namespace essbasis
