#include "essbasis/root_system.hpp"

#include <algorithm>
#include <sstream>

#include "essbasis/errors.hpp"

namespace essbasis {

RVec solve_rational(RMat m, RVec rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw invalid_input("singular matrix in rational solve");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    RVec x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = rhs[i] / m[i][i];
        x[i].canonicalize();
    }
    return x;
}

namespace {

struct Diagram {
    std::vector<IVec> cartan;
    std::vector<int> d;
};

// cartan[i][j] = <alpha_i, alpha_j^vee>; d[i] = (alpha_i, alpha_i)/2, short = 1.
Diagram make_diagram(char family, int n) {
    auto chain = [&](int len) {
        std::vector<IVec> c(len, IVec(len, 0));
        for (int i = 0; i < len; ++i) {
            c[i][i] = 2;
            if (i + 1 < len) c[i][i + 1] = c[i + 1][i] = -1;
        }
        return c;
    };
    switch (family) {
        case 'A': {
            if (n < 1) throw invalid_input("type A requires rank >= 1");
            return {chain(n), std::vector<int>(n, 1)};
        }
        case 'B': {
            if (n < 2) throw invalid_input("type B requires rank >= 2");
            auto c = chain(n);
            c[n - 2][n - 1] = -2;  // alpha_n is the short root
            std::vector<int> d(n, 2);
            d[n - 1] = 1;
            return {c, d};
        }
        case 'C': {
            if (n < 2) throw invalid_input("type C requires rank >= 2");
            auto c = chain(n);
            c[n - 1][n - 2] = -2;  // alpha_n is the long root
            std::vector<int> d(n, 1);
            d[n - 1] = 2;
            return {c, d};
        }
        case 'D': {
            if (n < 3) throw invalid_input("type D requires rank >= 3");
            auto c = chain(n);
            c[n - 1][n - 2] = c[n - 2][n - 1] = 0;
            c[n - 1][n - 3] = c[n - 3][n - 1] = -1;
            return {c, std::vector<int>(n, 1)};
        }
        case 'E': {
            if (n < 6 || n > 8) throw invalid_input("type E requires rank 6, 7 or 8");
            // Bourbaki numbering: chain 1-3-4-5-...-n, node 2 attached to node 4.
            std::vector<IVec> c(n, IVec(n, 0));
            for (int i = 0; i < n; ++i) c[i][i] = 2;
            auto link = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            return {c, std::vector<int>(n, 1)};
        }
        case 'F': {
            if (n != 4) throw invalid_input("type F requires rank 4");
            auto c = chain(4);
            c[1][2] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            return {c, {2, 2, 1, 1}};
        }
        case 'G': {
            if (n != 2) throw invalid_input("type G requires rank 2");
            // alpha_1 short, alpha_2 long; highest root 3a1 + 2a2.
            return {{{2, -1}, {-3, 2}}, {1, 3}};
        }
        default:
            throw invalid_input(std::string("unknown type '") + family + "'");
    }
}

}  // namespace

RootSystem RootSystem::build(char family, int rank) {
    Diagram dg = make_diagram(family, rank);
    RootSystem rs;
    rs.family_ = family;
    rs.rank_ = rank;
    rs.cartan_ = std::move(dg.cartan);
    rs.d_ = std::move(dg.d);

    // Close the simple roots under root-string addition, height by height.
    std::map<IVec, int> seen;  // root -> height
    std::vector<std::vector<IVec>> by_height(1);
    for (int i = 0; i < rank; ++i) {
        IVec a(rank, 0);
        a[i] = 1;
        seen[a] = 1;
        by_height[0].push_back(a);
    }
    for (int h = 1; !by_height[h - 1].empty(); ++h) {
        by_height.push_back({});
        for (const IVec& beta : by_height[h - 1]) {
            for (int i = 0; i < rank; ++i) {
                // alpha_i-string through beta: p - q = <beta, alpha_i^vee>.
                int p = 0;
                IVec down = beta;
                for (;;) {
                    down[i] -= 1;
                    if (down[i] < 0 || !seen.count(down)) break;
                    ++p;
                }
                int q = p - rs.pairing(beta, i);
                if (q >= 1) {
                    IVec up = beta;
                    up[i] += 1;
                    if (!seen.count(up)) {
                        seen[up] = h + 1;
                        by_height[h].push_back(up);
                    }
                }
            }
        }
    }

    for (auto& level : by_height) {
        // Canonical order within one height: descending lexicographic.
        std::sort(level.begin(), level.end(), std::greater<IVec>());
        for (auto& r : level) {
            rs.index_[r] = static_cast<int>(rs.roots_.size());
            rs.heights_.push_back(coord_sum(r));
            rs.roots_.push_back(std::move(r));
        }
    }

    // beta^vee = sum_i m_i d_i / d_beta * alpha_i^vee.
    for (const IVec& beta : rs.roots_) {
        int dbeta2 = rs.norm2(beta);  // = 2 d_beta
        IVec cv(rank);
        for (int i = 0; i < rank; ++i) {
            int num = beta[i] * rs.d_[i] * 2;
            if (num % dbeta2 != 0) throw std::logic_error("non-integral coroot");
            cv[i] = num / dbeta2;
        }
        rs.coroots_.push_back(std::move(cv));
    }

    // (C^T)^-1 for fw -> simple-root coordinate conversion.
    RMat ct(rank, RVec(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) ct[i][j] = rs.cartan_[j][i];
    rs.inv_cartan_t_.assign(rank, RVec(rank));
    for (int col = 0; col < rank; ++col) {
        RVec e(rank, Rat(0));
        e[col] = 1;
        RVec x = solve_rational(ct, e);
        for (int rrow = 0; rrow < rank; ++rrow) rs.inv_cartan_t_[rrow][col] = x[rrow];
    }
    return rs;
}

int RootSystem::norm2(const IVec& v) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) s += v[i] * v[j] * sym(i, j);
    return s;
}

int RootSystem::root_index(const IVec& coords) const {
    auto it = index_.find(coords);
    return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const IVec& coords) const {
    if (index_.count(coords)) return true;
    IVec neg(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) neg[i] = -coords[i];
    return index_.count(neg) != 0;
}

int RootSystem::pairing(const IVec& root_coords, int j) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) s += root_coords[i] * cartan_[i][j];
    return s;
}

IVec RootSystem::reflect_root(const IVec& v, int j) const {
    IVec r = v;
    r[j] -= pairing(v, j);
    return r;
}

Weight RootSystem::reflect_fw(const Weight& fw, int j) const {
    Weight r = fw;
    int c = fw[j];
    for (int k = 0; k < rank_; ++k) r[k] -= c * cartan_[j][k];
    return r;
}

int RootSystem::fw_pairing(const Weight& fw, int root_idx) const {
    const IVec& cv = coroots_[root_idx];
    int s = 0;
    for (int i = 0; i < rank_; ++i) s += fw[i] * cv[i];
    return s;
}

RVec RootSystem::fw_to_root_coords_rat(const Weight& fw) const {
    RVec x(rank_, Rat(0));
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < rank_; ++j) x[i] += inv_cartan_t_[i][j] * fw[j];
        x[i].canonicalize();
    }
    return x;
}

IVec RootSystem::fw_to_root_coords(const Weight& fw) const {
    RVec x = fw_to_root_coords_rat(fw);
    IVec r(rank_);
    for (int i = 0; i < rank_; ++i) {
        if (x[i].get_den() != 1) throw invalid_input("weight is not in the root lattice");
        r[i] = static_cast<int>(x[i].get_num().get_si());
    }
    return r;
}

Weight RootSystem::lowest_orbit_weight(const Weight& fw) const {
    Weight w = fw;
    for (;;) {
        int i = 0;
        while (i < rank_ && w[i] <= 0) ++i;
        if (i == rank_) return w;
        w = reflect_fw(w, i);
    }
}

Weight RootSystem::dominant_orbit_weight(const Weight& fw) const {
    Weight w = fw;
    for (;;) {
        int i = 0;
        while (i < rank_ && w[i] >= 0) ++i;
        if (i == rank_) return w;
        w = reflect_fw(w, i);
    }
}

std::string RootSystem::root_to_string(int idx, const std::string& alpha) const {
    const IVec& r = roots_[idx];
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < rank_; ++i) {
        if (r[i] == 0) continue;
        if (!first) os << " + ";
        if (r[i] != 1) os << r[i];
        os << alpha << (i + 1);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace essbasis
