#include "essbasis/verma.hpp"

#include <algorithm>

#include "essbasis/errors.hpp"

namespace essbasis {

namespace {

void add_term(VermaVector& out, const PBWMono& m, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = out.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
}

int first_support(const PBWMono& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) return static_cast<int>(i);
    return static_cast<int>(m.size());
}

}  // namespace

VermaContext::VermaContext(std::shared_ptr<const ChevalleyBasis> cb, Weight lambda)
    : cb_(std::move(cb)), lambda_(std::move(lambda)) {
    if (static_cast<int>(lambda_.size()) != cb_->rs().rank())
        throw invalid_input("weight has wrong length");
}

IVec VermaContext::delta_of(const PBWMono& m) const {
    const RootSystem& R = rs();
    IVec d(R.rank(), 0);
    for (int l = 0; l < static_cast<int>(m.size()); ++l) {
        if (m[l] == 0) continue;
        const IVec& r = R.root(l);
        for (int i = 0; i < R.rank(); ++i) d[i] += m[l] * r[i];
    }
    return d;
}

int VermaContext::h_pairing(const IVec& delta, int root_idx) const {
    const RootSystem& R = rs();
    int s = R.fw_pairing(lambda_, root_idx);
    const IVec& cv = R.coroot(root_idx);
    for (int j = 0; j < R.rank(); ++j) {
        if (delta[j] == 0) continue;
        // <alpha_j, beta^vee> = sum_i coroot_i * cartan(j, i)
        int pr = 0;
        for (int i = 0; i < R.rank(); ++i) pr += cv[i] * R.cartan(j, i);
        s -= delta[j] * pr;
    }
    return s;
}

int VermaContext::intern(const PBWMono& m) const {
    auto [it, fresh] = mono_ids_.emplace(m, static_cast<int>(monos_.size()));
    if (fresh) monos_.push_back(m);
    return it->second;
}

namespace {

std::uint64_t memo_key(int mono_id, int root_idx) {
    return (static_cast<std::uint64_t>(mono_id) << 16) | static_cast<std::uint16_t>(root_idx);
}

void add_scaled(VermaVector& out, const VermaVector& src, const Int& coeff) {
    for (const auto& [m, c] : src) add_term(out, m, coeff * c);
}

}  // namespace

// Multiply f_{gamma_j} into a normal monomial from the left.
// f_j f_i = f_i f_j + [f_j, f_i], and [f_j, f_i] = -N_{j,i} f_{i+j}.
const VermaVector& VermaContext::insert_f(int mono_id, int j) const {
    std::uint64_t key = memo_key(mono_id, j);
    auto hit = insert_cache_.find(key);
    if (hit != insert_cache_.end()) return hit->second;

    const PBWMono m = monos_[mono_id];  // by value: the deque may grow below
    VermaVector out;
    int i = first_support(m);
    if (j <= i) {
        PBWMono t = m;
        t[j] += 1;
        out.emplace(std::move(t), Int(1));
    } else {
        PBWMono rest = m;
        rest[i] -= 1;
        int rest_id = intern(rest);
        // every term below has support >= i, so prepending f_i is an increment
        for (const auto& [t, c] : insert_f(rest_id, j)) {
            PBWMono u = t;
            u[i] += 1;
            add_term(out, u, c);
        }
        const RootSystem& R = rs();
        IVec s = add(R.root(i), R.root(j));
        int k = R.root_index(s);
        if (k >= 0) add_scaled(out, insert_f(rest_id, k), Int(cb_->f_comm(j, i)));
    }
    return insert_cache_.emplace(key, std::move(out)).first->second;
}

VermaVector VermaContext::apply_f(int root_idx, const VermaVector& v) const {
    VermaVector out;
    for (const auto& [m, c] : v) add_scaled(out, insert_f(intern(m), root_idx), c);
    return out;
}

// e_a f_i = f_i e_a + [e_a, f_i]; e_a annihilates v_lambda.
const VermaVector& VermaContext::e_mono(int mono_id, int a) const {
    std::uint64_t key = memo_key(mono_id, a);
    auto hit = e_cache_.find(key);
    if (hit != e_cache_.end()) return hit->second;

    const PBWMono m = monos_[mono_id];
    VermaVector out;
    int i = first_support(m);
    if (i == static_cast<int>(m.size()))
        return e_cache_.emplace(key, std::move(out)).first->second;
    PBWMono rest = m;
    rest[i] -= 1;
    int rest_id = intern(rest);

    for (const auto& [t, c] : e_mono(rest_id, a)) add_scaled(out, insert_f(intern(t), i), c);

    if (a == i) {
        // [e_a, f_a] = h_a acting on f^rest v_lambda by its weight
        add_term(out, rest, Int(h_pairing(delta_of(rest), a)));
    } else if (int c = cb_->mixed(a, i); c != 0) {
        const RootSystem& R = rs();
        IVec d = sub(R.root(a), R.root(i));
        if (all_nonneg(d)) {
            add_scaled(out, e_mono(rest_id, R.root_index(d)), Int(c));
        } else {
            for (int& x : d) x = -x;
            add_scaled(out, insert_f(rest_id, R.root_index(d)), Int(c));
        }
    }
    return e_cache_.emplace(key, std::move(out)).first->second;
}

VermaVector VermaContext::apply_e(int root_idx, const VermaVector& v) const {
    VermaVector out;
    for (const auto& [m, c] : v) add_scaled(out, e_mono(intern(m), root_idx), c);
    return out;
}

const VermaContext::IdTerms& VermaContext::e_term_ids(int mono_id, int root_idx) const {
    std::uint64_t key = memo_key(mono_id, root_idx);
    auto hit = e_ids_cache_.find(key);
    if (hit != e_ids_cache_.end()) return hit->second;
    IdTerms terms;
    for (const auto& [m, c] : e_mono(mono_id, root_idx)) terms.emplace_back(intern(m), c);
    return e_ids_cache_.emplace(key, std::move(terms)).first->second;
}

VermaVector VermaContext::monomial_vector(const std::vector<int>& seq_root_indices,
                                          const IVec& exponents) const {
    if (seq_root_indices.size() != exponents.size())
        throw invalid_input("exponent vector does not match the sequence length");
    VermaVector v{{PBWMono(rs().num_positive(), 0), Int(1)}};
    for (std::size_t j = seq_root_indices.size(); j-- > 0;)
        for (int rep = 0; rep < exponents[j]; ++rep) v = apply_f(seq_root_indices[j], v);
    return v;
}

namespace {

struct SharedDfs {
    const VermaContext* ctx;
    const std::vector<int>* seq;
    std::vector<IVec> roots;
    long cap = 0;
    long count = 0;
    IVec remaining;
    IVec cur;
    const std::function<void(const IVec&, const VermaVector&)>* fn;

    // Walk positions right to left so that the partial product
    // f_{pos+1}^{k} ... f_{M}^{k} v_lambda is shared between siblings.
    void walk(int pos, const VermaVector& v) {
        if (pos < 0) {
            if (!is_zero(remaining)) return;
            if (count >= cap)
                throw budget_exceeded("candidate count for a weight space exceeds the cap of " +
                                      std::to_string(cap) +
                                      " (raise with --budget or ESSENTIAL_BUDGET)");
            ++count;
            (*fn)(cur, v);
            return;
        }
        const IVec& r = roots[pos];
        int bound = -1;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] > 0) {
                int q = remaining[i] / r[i];
                bound = bound < 0 ? q : std::min(bound, q);
            }
        VermaVector step = v;
        for (int k = 0;; ++k) {
            cur[pos] = k;
            walk(pos - 1, step);
            if (k == bound) break;
            step = ctx->apply_f((*seq)[pos], step);
            for (std::size_t i = 0; i < r.size(); ++i) remaining[i] -= r[i];
        }
        for (int k = 0; k < bound; ++k)
            for (std::size_t i = 0; i < r.size(); ++i) remaining[i] += r[i];
        cur[pos] = 0;
    }
};

}  // namespace

void VermaContext::for_each_monomial_vector(
    const std::vector<int>& seq_root_indices, const IVec& delta, long cap,
    const std::function<void(const IVec&, const VermaVector&)>& fn) const {
    SharedDfs dfs;
    dfs.ctx = this;
    dfs.seq = &seq_root_indices;
    for (int idx : seq_root_indices) dfs.roots.push_back(rs().root(idx));
    dfs.cap = cap;
    dfs.remaining = delta;
    dfs.cur.assign(seq_root_indices.size(), 0);
    dfs.fn = &fn;
    dfs.walk(static_cast<int>(seq_root_indices.size()) - 1,
             VermaVector{{PBWMono(rs().num_positive(), 0), Int(1)}});
}

Int VermaContext::pair_ids(int a, int b) const {
    if (a > b) std::swap(a, b);  // the form is symmetric
    std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    auto hit = pair_cache_.find(key);
    if (hit != pair_cache_.end()) return hit->second;

    PBWMono ma = monos_[a];
    int ia = first_support(ma);
    Int acc = 0;
    if (ia == static_cast<int>(ma.size())) {
        acc = first_support(monos_[b]) == ia ? 1 : 0;
    } else if (delta_of(ma) != delta_of(monos_[b])) {
        acc = 0;
    } else {
        // <f_t x, y> = <x, e_t y> with t the leading factor of the left side
        ma[ia] -= 1;
        int rest_id = intern(ma);
        // mapped values in the memo tables are reference-stable under growth
        const VermaVector& ey = e_mono(b, ia);
        for (const auto& [m, c] : ey) acc += c * pair_ids(rest_id, intern(m));
    }
    pair_cache_.emplace(key, acc);
    return acc;
}

Int VermaContext::pair_mono(const PBWMono& a, const PBWMono& b) const {
    return pair_ids(intern(a), intern(b));
}

Int VermaContext::pair_vec(const VermaVector& x, const VermaVector& y) const {
    std::vector<std::pair<int, const Int*>> ix, iy;
    ix.reserve(x.size());
    iy.reserve(y.size());
    for (const auto& [m, c] : x) ix.emplace_back(intern(m), &c);
    for (const auto& [m, c] : y) iy.emplace_back(intern(m), &c);
    Int acc = 0;
    for (const auto& [ia, ca] : ix)
        for (const auto& [ib, cb2] : iy) {
            Int p = pair_ids(ia, ib);
            if (p != 0) acc += (*ca) * (*cb2) * p;
        }
    return acc;
}

namespace {

void enumerate_rec(const std::vector<IVec>& roots, std::size_t pos, IVec& remaining, IVec& cur,
                   std::vector<IVec>& out) {
    if (pos == roots.size()) {
        if (is_zero(remaining)) out.push_back(cur);
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
        enumerate_rec(roots, pos + 1, remaining, cur, out);
        if (k < bound)
            for (std::size_t i = 0; i < r.size(); ++i) remaining[i] -= r[i];
    }
    for (int k = 0; k < bound; ++k)
        for (std::size_t i = 0; i < r.size(); ++i) remaining[i] += r[i];
    cur[pos] = 0;
}

}  // namespace

std::vector<PBWMono> VermaContext::pbw_basis(const IVec& delta) const {
    const RootSystem& R = rs();
    std::vector<IVec> roots(R.positive_roots());
    IVec remaining = delta;
    IVec cur(R.num_positive(), 0);
    std::vector<PBWMono> out;
    enumerate_rec(roots, 0, remaining, cur, out);
    return out;
}

WeightSpaceContext contravariant_gram(const VermaContext& ctx, const IVec& delta) {
    WeightSpaceContext w;
    w.delta = delta;
    w.basis = ctx.pbw_basis(delta);
    const std::size_t n = w.basis.size();
    w.gram.assign(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            w.gram[i][j] = w.gram[j][i] = ctx.pair_mono(w.basis[i], w.basis[j]);
    return w;
}

int matrix_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t rr = 0;
    for (std::size_t c = 0; c < cols && rr < rows; ++c) {
        std::size_t piv = rr;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rr]);
        for (std::size_t r = rr + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            // fraction-free row update
            Int a = m[rr][c], b = m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * a - m[rr][k] * b;
        }
        ++rr;
        ++rank;
    }
    return rank;
}

bool RankFilter::accept(const VermaVector& v) {
    // The form is positive semidefinite on M(lambda) for dominant integral
    // lambda, so null vectors lie in the radical and can be dropped before
    // pairing against the selected family. (If this ever mis-rejected, the
    // per-space multiplicity check downstream would fail loudly.)
    Rat d(ctx_->pair_vec(v, v));
    if (d == 0) return false;

    const std::size_t t = selected_.size();
    RVec a(t);
    for (std::size_t l = 0; l < t; ++l) a[l] = Rat(ctx_->pair_vec(v, selected_[l]));

    // Schur complement s = d - a^T G^-1 a decides rank growth.
    RVec x(t, Rat(0));
    for (std::size_t r = 0; r < t; ++r) {
        for (std::size_t c = 0; c < t; ++c) x[r] += ginv_[r][c] * a[c];
        x[r].canonicalize();
    }
    Rat s = d;
    for (std::size_t r = 0; r < t; ++r) s -= a[r] * x[r];
    s.canonicalize();
    if (s == 0) return false;

    RMat g2(t + 1, RVec(t + 1, Rat(0)));
    for (std::size_t r = 0; r < t; ++r) {
        for (std::size_t c = 0; c < t; ++c) {
            g2[r][c] = ginv_[r][c] + x[r] * x[c] / s;
            g2[r][c].canonicalize();
        }
        g2[r][t] = -x[r] / s;
        g2[t][r] = g2[r][t];
    }
    g2[t][t] = 1 / s;
    ginv_ = std::move(g2);
    selected_.push_back(v);
    return true;
}

std::vector<bool> rank_filter(const VermaContext& ctx, const IVec& delta,
                              const std::vector<VermaVector>& vectors) {
    for (const auto& v : vectors)
        if (!v.empty() && ctx.delta_of(v.begin()->first) != delta)
            throw invalid_input("vector weight does not match the weight-space context");
    RankFilter f(ctx);
    std::vector<bool> out;
    out.reserve(vectors.size());
    for (const auto& v : vectors) out.push_back(f.accept(v));
    return out;
}

}  // namespace essbasis
