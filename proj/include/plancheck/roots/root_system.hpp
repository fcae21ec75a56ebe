#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace plancheck {

enum class Family { B, C, D };

std::string family_name(Family f);

using Weight = std::vector<int>;

/// Classical root system in the standard coordinates e_1..e_rank of the
/// (dual) maximal torus; characters are written additively as integer vectors.
struct RootSystem {
    Family family;
    int rank;
    std::vector<Weight> roots;

    /// Roots that are positive for the lexicographic order on coordinates.
    std::vector<Weight> positive_roots() const;
    /// Dimension of the Lie algebra, |roots| + rank.
    int lie_algebra_dimension() const { return static_cast<int>(roots.size()) + rank; }
};

/// B_a: {±e_i} ∪ {±e_i±e_j}; C_a: {±2e_i} ∪ {±e_i±e_j}; D_k: {±e_i±e_j}.
RootSystem build_root_system(Family family, int rank);

/// Signed permutation acting on torus coordinates: (w·t)_i = t_{perm[i]}^{signs[i]}.
struct WeylElement {
    std::vector<int> perm;
    std::vector<int> signs;

    static WeylElement identity(int rank);
    int rank() const { return static_cast<int>(perm.size()); }
    int sign_product() const;
    friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

/// |W|: 2^a a! for B_a and C_a, 2^{k-1} k! for D_k.
std::int64_t weyl_group_order(const RootSystem& rs);

/// Fundamental degrees: (2, 4, ..., 2a) for B_a/C_a, (2, 4, ..., 2k-2, k) for D_k.
std::vector<int> degrees(const RootSystem& rs);

/// Action on characters dual to the action on the torus, so that
/// (w·t)^λ = t^{act_on_weight(w, λ)}.
Weight act_on_weight(const WeylElement& w, std::span<const int> weight);

/// Whether `w` lies in W(rs).  For type D the sign product must be +1 unless
/// `with_outer` admits the extra involution of O_{2k}.
bool is_weyl_element(const RootSystem& rs, const WeylElement& w, bool with_outer = false);

/// All elements of W (rank <= 4).  With `with_outer` set, type D also gets the
/// odd sign changes coming from the disconnected orthogonal group.
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, bool with_outer = false);

WeylElement random_weyl_element(const RootSystem& rs, std::mt19937_64& rng, bool with_outer = false);

}  // namespace plancheck
