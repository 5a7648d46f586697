#include "essbasis/multiplicity.hpp"

#include <algorithm>

#include "essbasis/errors.hpp"

namespace essbasis {

Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != rs.rank())
        throw invalid_input("weight has wrong length");
    if (!is_dominant(lambda)) throw invalid_input("weight is not dominant");
    Weight lr(lambda);
    for (int& c : lr) c += 1;  // lambda + rho
    Weight rho(rs.rank(), 1);
    Int num = 1, den = 1;
    for (int b = 0; b < rs.num_positive(); ++b) {
        num *= rs.fw_pairing(lr, b);
        den *= rs.fw_pairing(rho, b);
    }
    Int dim = num / den;
    if (dim * den != num) throw std::logic_error("Weyl dimension is not integral");
    return dim;
}

namespace {

// (v, beta) for v in simple-root coordinates, beta a positive-root index.
long root_inner(const RootSystem& rs, const IVec& v, int beta_idx) {
    const IVec& b = rs.root(beta_idx);
    long s = 0;
    for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j) s += static_cast<long>(v[i]) * b[j] * rs.sym(i, j);
    return s;
}

// (lambda, beta) for lambda in fw coordinates.
long fw_root_inner(const RootSystem& rs, const Weight& fw, int beta_idx) {
    const IVec& b = rs.root(beta_idx);
    long s = 0;
    for (int j = 0; j < rs.rank(); ++j) s += static_cast<long>(fw[j]) * b[j] * rs.d(j);
    return s;
}

}  // namespace

std::map<IVec, Int> weight_multiplicities_by_delta(const RootSystem& rs, const Weight& lambda) {
    if (!is_dominant(lambda)) throw invalid_input("weight is not dominant");
    const int n = rs.rank();
    // Bounding box: lambda - mu <= lambda - w0(lambda) coordinatewise.
    Weight low = rs.lowest_orbit_weight(lambda);
    Weight diff(n);
    for (int i = 0; i < n; ++i) diff[i] = lambda[i] - low[i];
    IVec box = rs.fw_to_root_coords(diff);

    int max_h = coord_sum(box);
    std::vector<std::vector<IVec>> by_level(max_h + 1);
    {
        IVec c(n, 0);
        for (;;) {
            by_level[coord_sum(c)].push_back(c);
            int i = 0;
            while (i < n && c[i] == box[i]) c[i++] = 0;
            if (i == n) break;
            c[i] += 1;
        }
    }

    std::map<IVec, Int> mult;
    mult[IVec(n, 0)] = 1;
    for (int h = 1; h <= max_h; ++h) {
        for (const IVec& c : by_level[h]) {
            // Freudenthal: [(l+r,l+r) - (m+r,m+r)] mult(m) = 2 sum (m + k b, b) mult(m + k b).
            Int rhs = 0;
            for (int b = 0; b < rs.num_positive(); ++b) {
                const IVec& beta = rs.root(b);
                long lam_beta = fw_root_inner(rs, lambda, b);
                IVec up = c;
                for (int k = 1;; ++k) {
                    bool ok = true;
                    for (int i = 0; i < n; ++i) {
                        up[i] -= beta[i];
                        if (up[i] < 0) ok = false;
                    }
                    if (!ok) break;
                    auto it = mult.find(up);
                    if (it != mult.end()) {
                        long inner = lam_beta - root_inner(rs, up, b);  // (mu + k beta, beta)
                        rhs += Int(inner) * it->second;
                    }
                }
            }
            if (rhs == 0) continue;
            rhs *= 2;
            // denominator (lambda + mu + 2 rho, lambda - mu)
            Weight fw_sum(n);  // fw coords of lambda + mu + 2 rho
            for (int i = 0; i < n; ++i) {
                int drop = 0;
                for (int j = 0; j < n; ++j) drop += c[j] * rs.cartan(j, i);
                fw_sum[i] = 2 * lambda[i] - drop + 2;
            }
            long den = 0;
            for (int j = 0; j < n; ++j) den += static_cast<long>(fw_sum[j]) * c[j] * rs.d(j);
            if (den == 0) throw std::logic_error("Freudenthal denominator vanished unexpectedly");
            Int m = rhs / den;
            if (m * den != rhs) throw std::logic_error("Freudenthal division is not exact");
            if (m != 0) mult[c] = m;
        }
    }
    return mult;
}

std::map<Weight, Int> freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda) {
    std::map<Weight, Int> out;
    for (const auto& [c, m] : weight_multiplicities_by_delta(rs, lambda)) {
        Weight mu(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) {
            int drop = 0;
            for (int j = 0; j < rs.rank(); ++j) drop += c[j] * rs.cartan(j, i);
            mu[i] = lambda[i] - drop;
        }
        out[mu] = m;
    }
    return out;
}

std::vector<std::pair<Weight, Weight>> dominant_decompositions(const Weight& lambda) {
    const int n = static_cast<int>(lambda.size());
    std::vector<std::pair<Weight, Weight>> out;
    Weight mu(n, 0);
    for (;;) {
        int i = 0;
        while (i < n && mu[i] == lambda[i]) mu[i++] = 0;
        if (i == n) break;
        mu[i] += 1;
        Weight nu(n);
        for (int k = 0; k < n; ++k) nu[k] = lambda[k] - mu[k];
        if (!is_zero(mu) && !is_zero(nu) && mu <= nu) out.emplace_back(mu, nu);
    }
    return out;
}

}  // namespace essbasis
