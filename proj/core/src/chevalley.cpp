#include "essbasis/chevalley.hpp"

#include <stdexcept>

namespace essbasis {

namespace {

IVec negate(const IVec& v) {
    IVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

bool is_positive(const IVec& v) {
    // A root has all coordinates of one sign.
    for (int x : v)
        if (x != 0) return x > 0;
    return false;
}

// exact integer division with a consistency check
int exact_div(long num, long den) {
    if (den == 0 || num % den != 0)
        throw std::logic_error("structure constant derivation: non-exact division");
    return static_cast<int>(num / den);
}

}  // namespace

int ChevalleyBasis::p_value(const IVec& alpha, const IVec& beta) const {
    int p = 0;
    IVec v = beta;
    for (;;) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= alpha[i];
        if (!rs_->is_root(v)) break;
        ++p;
    }
    return p;
}

int ChevalleyBasis::n_signed(const IVec& a, const IVec& b) const {
    IVec sum = add(a, b);
    if (!rs_->is_root(sum)) return 0;
    bool pa = is_positive(a), pb = is_positive(b);
    if (pa && pb) {
        int i = rs_->root_index(a), j = rs_->root_index(b);
        return npos_[i][j];
    }
    if (!pa && !pb) return -n_signed(negate(a), negate(b));
    // Mixed pair: reduce through the cyclic relation for a + b + c = 0,
    //   N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b),
    // picking the cyclic pair whose entries have equal sign.
    IVec c = negate(sum);
    if (is_positive(c) == pa) {
        // (c, a) has equal signs: N_{a,b} = N_{c,a} (c,c)/(b,b)
        return exact_div(static_cast<long>(n_signed(c, a)) * rs_->norm2(c), rs_->norm2(b));
    }
    // (b, c) has equal signs: N_{a,b} = N_{b,c} (c,c)/(a,a)
    return exact_div(static_cast<long>(n_signed(b, c)) * rs_->norm2(c), rs_->norm2(a));
}

std::shared_ptr<const ChevalleyBasis> ChevalleyBasis::build(std::shared_ptr<const RootSystem> rs,
                                                            int extraspecial_sign) {
    if (extraspecial_sign != 1 && extraspecial_sign != -1)
        throw std::invalid_argument("extraspecial_sign must be +1 or -1");
    auto cb = std::shared_ptr<ChevalleyBasis>(new ChevalleyBasis(std::move(rs)));
    const RootSystem& R = *cb->rs_;
    const int N = R.num_positive();
    cb->npos_.assign(N, std::vector<int>(N, 0));

    // Fill N_{alpha,beta} for positive pairs, ascending in ht(alpha + beta).
    // The canonical enumeration is height-compatible, so walking gamma in
    // index order keeps every reference strictly below the current level.
    for (int g = 0; g < N; ++g) {
        const IVec& gamma = R.root(g);
        if (R.height(g) == 1) continue;
        // Extraspecial pair: minimal eps with gamma - eps a positive root.
        int eps = -1, eta = -1;
        for (int a = 0; a < N; ++a) {
            IVec rest = sub(gamma, R.root(a));
            int b = R.root_index(rest);
            if (b >= 0) {
                eps = a;
                eta = b;
                break;
            }
        }
        if (eps < 0) throw std::logic_error("no decomposition of a non-simple root");
        cb->npos_[eps][eta] =
            extraspecial_sign * (cb->p_value(R.root(eps), R.root(eta)) + 1);
        cb->npos_[eta][eps] = -cb->npos_[eps][eta];

        // Remaining special pairs (alpha, beta), alpha < beta, derived from
        //   [f_eps, [e_alpha, e_beta]] = [[f_eps, e_alpha], e_beta]
        //                              + [e_alpha, [f_eps, e_beta]],
        // whose three sides are multiples of e_eta.
        for (int a = eps + 1; a < N; ++a) {
            IVec rest = sub(gamma, R.root(a));
            int b = R.root_index(rest);
            if (b < 0 || a >= b) continue;
            const IVec& alpha = R.root(a);
            const IVec& beta = R.root(b);
            long rhs = 0;
            IVec d1 = sub(alpha, R.root(eps));  // alpha - eps
            if (R.is_root(d1)) {
                // [[f_eps, e_alpha], e_beta] = -Nc(alpha,-eps) N(alpha-eps, beta) e_eta
                int c1 = cb->n_signed(alpha, negate(R.root(eps)));
                int c2 = cb->npos_[R.root_index(d1)][b];
                rhs += -static_cast<long>(c1) * c2;
            }
            IVec d2 = sub(beta, R.root(eps));  // beta - eps
            if (R.is_root(d2)) {
                // [e_alpha, [f_eps, e_beta]] = -Nc(beta,-eps) N(alpha, beta-eps) e_eta
                int c1 = cb->n_signed(beta, negate(R.root(eps)));
                int c2 = cb->npos_[a][R.root_index(d2)];
                rhs += -static_cast<long>(c1) * c2;
            }
            // LHS = N_{alpha,beta} [f_eps, e_gamma]
            //     = N_{alpha,beta} * N_{eps,eta} (eta,eta)/(gamma,gamma) e_eta
            long lhs_coeff = static_cast<long>(cb->npos_[eps][eta]) * R.norm2(R.root(eta));
            int val = exact_div(rhs * R.norm2(gamma), lhs_coeff);
            cb->npos_[a][b] = val;
            cb->npos_[b][a] = -val;
        }
    }

    // Mixed table: [e_a, f_b] coefficients for a != b.
    cb->mixed_.assign(N, std::vector<int>(N, 0));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            if (a == b) continue;
            IVec d = sub(R.root(a), R.root(b));
            if (R.is_root(d)) cb->mixed_[a][b] = cb->n_signed(R.root(a), negate(R.root(b)));
        }
    return cb;
}

LieElem ChevalleyBasis::bracket_basis(const LieKey& x, const LieKey& y) const {
    const RootSystem& R = *rs_;
    LieElem out;
    auto addterm = [&out](LieKey k, Int c) {
        if (c == 0) return;
        auto [it, fresh] = out.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    };

    if (x.kind == LieKey::H && y.kind == LieKey::H) return out;
    if (x.kind == LieKey::H) {
        // [h_i, e_beta] = <beta, alpha_i^vee> e_beta, and -<...> on f's.
        int pr = R.pairing(R.root(y.index), x.index);
        addterm(y, y.kind == LieKey::E ? pr : -pr);
        return out;
    }
    if (y.kind == LieKey::H) {
        LieElem flip = bracket_basis(y, x);
        for (auto& [k, c] : flip) addterm(k, -c);
        return out;
    }

    const IVec& ra = R.root(x.index);
    const IVec& rb = R.root(y.index);
    if (x.kind == LieKey::E && y.kind == LieKey::E) {
        IVec s = add(ra, rb);
        if (rs_->is_positive_root(s)) addterm({LieKey::E, R.root_index(s)}, npos_[x.index][y.index]);
        return out;
    }
    if (x.kind == LieKey::F && y.kind == LieKey::F) {
        IVec s = add(ra, rb);
        if (rs_->is_positive_root(s)) addterm({LieKey::F, R.root_index(s)}, -npos_[x.index][y.index]);
        return out;
    }
    if (x.kind == LieKey::F && y.kind == LieKey::E) {
        LieElem flip = bracket_basis(y, x);
        for (auto& [k, c] : flip) addterm(k, -c);
        return out;
    }
    // [e_a, f_b]
    if (x.index == y.index) {
        const IVec& cv = R.coroot(x.index);
        for (int i = 0; i < R.rank(); ++i) addterm({LieKey::H, i}, cv[i]);
        return out;
    }
    int c = mixed_[x.index][y.index];
    if (c != 0) {
        IVec d = sub(ra, rb);
        if (is_positive(d))
            addterm({LieKey::E, R.root_index(d)}, c);
        else
            addterm({LieKey::F, R.root_index(negate(d))}, c);
    }
    return out;
}

LieElem ChevalleyBasis::bracket(const LieElem& x, const LieElem& y) const {
    LieElem out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            LieElem term = bracket_basis(kx, ky);
            for (const auto& [k, c] : term) {
                Int v = cx * cy * c;
                auto [it, fresh] = out.emplace(k, v);
                if (!fresh) {
                    it->second += v;
                    if (it->second == 0) out.erase(it);
                }
            }
        }
    return out;
}

}  // namespace essbasis
