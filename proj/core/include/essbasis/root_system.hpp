#pragma once

#include <map>
#include <string>
#include <vector>

#include "essbasis/rational.hpp"

namespace essbasis {

// A weight, stored as integer coefficients in the fundamental weights.
using Weight = IVec;

inline bool is_dominant(const Weight& w) { return all_nonneg(w); }

/**
 * Root system of a simple complex Lie algebra of type A-G.
 *
 * Roots are stored as integer coefficient vectors in the simple roots.
 * The Cartan matrix convention is cartan(i,j) = <alpha_i, alpha_j^vee>,
 * so row i gives alpha_i in fundamental-weight coordinates.
 *
 * Positive roots are enumerated canonically: ascending by height, and
 * within one height descending lexicographically on the coefficient
 * vector. All indices into this enumeration are 0-based internally;
 * user-facing listings are printed 1-based.
 *
 * Immutable after construction; safe for concurrent use.
 */
class RootSystem {
public:
    static RootSystem build(char family, int rank);

    char family() const { return family_; }
    int rank() const { return rank_; }
    int num_positive() const { return static_cast<int>(roots_.size()); }

    const std::vector<IVec>& positive_roots() const { return roots_; }
    const IVec& root(int idx) const { return roots_[idx]; }
    int height(int idx) const { return heights_[idx]; }
    const std::vector<int>& heights() const { return heights_; }

    int cartan(int i, int j) const { return cartan_[i][j]; }
    const std::vector<IVec>& cartan_matrix() const { return cartan_; }

    // Half squared length of alpha_i, normalized so short roots have d = 1.
    int d(int i) const { return d_[i]; }
    // (alpha_i, alpha_j) in the invariant form, = cartan(i,j) * d(j).
    int sym(int i, int j) const { return cartan_[i][j] * d_[j]; }
    // (v, v) for v in simple-root coordinates.
    int norm2(const IVec& v) const;

    // Index of a positive root in the canonical enumeration, -1 if absent.
    int root_index(const IVec& coords) const;
    bool is_positive_root(const IVec& coords) const { return root_index(coords) >= 0; }
    bool is_root(const IVec& coords) const;

    // <v, alpha_j^vee> for v in simple-root coordinates.
    int pairing(const IVec& root_coords, int j) const;
    // s_j acting on simple-root coordinates.
    IVec reflect_root(const IVec& v, int j) const;

    // alpha_i in fundamental-weight coordinates (row i of the Cartan matrix).
    IVec simple_root_fw(int i) const { return cartan_[i]; }
    // s_j acting on fundamental-weight coordinates.
    Weight reflect_fw(const Weight& fw, int j) const;

    // beta^vee as integer coefficients in the simple coroots.
    const IVec& coroot(int idx) const { return coroots_[idx]; }
    // <lambda, beta^vee> for lambda in fw coordinates.
    int fw_pairing(const Weight& fw, int root_idx) const;

    // Coordinates of a root-lattice element given in fw coordinates.
    // Throws invalid_input if the weight is not in the root lattice.
    IVec fw_to_root_coords(const Weight& fw) const;
    RVec fw_to_root_coords_rat(const Weight& fw) const;

    // The antidominant Weyl-orbit representative w0(fw) of a weight.
    Weight lowest_orbit_weight(const Weight& fw) const;
    // The dominant Weyl-orbit representative of a weight.
    Weight dominant_orbit_weight(const Weight& fw) const;

    // Pretty printer: "3a1 + 2a2" style with the given variable symbol.
    std::string root_to_string(int idx, const std::string& alpha = "α") const;

    std::string type_string() const { return std::string(1, family_) + std::to_string(rank_); }

private:
    RootSystem() = default;

    char family_ = 'A';
    int rank_ = 0;
    std::vector<IVec> cartan_;
    std::vector<int> d_;
    std::vector<IVec> roots_;
    std::vector<int> heights_;
    std::vector<IVec> coroots_;
    std::map<IVec, int> index_;
    RMat inv_cartan_t_;  // (C^T)^-1, maps fw coords to simple-root coords
};

}  // namespace essbasis
