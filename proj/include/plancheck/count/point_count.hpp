#pragma once

#include <string>
#include <vector>

#include "plancheck/algebra/laurent_poly.hpp"
#include "plancheck/algebra/rational_function.hpp"

namespace plancheck {

enum class GroupFamily { Sp, SO_odd, SO_even_split, O_odd, O_even_split };

std::string group_family_name(GroupFamily f);

/// Split classical group over F_q.  `rank`: a for Sp_{2a}, m for SO_{2m+1} /
/// O_{2m+1}, k for SO⁺_{2k} / O⁺_{2k}.
struct GroupSpec {
    GroupFamily family;
    int rank;
    long q;

    /// Size of the defining matrices.
    int matrix_size() const;
    int dimension() const;
    void validate() const;
};

bool is_odd_prime_power(long q);

Integer group_order(const GroupSpec& spec);
/// q^{-dim} |G(F_q)|.
Rational tamagawa_volume(const GroupSpec& spec);
/// |G(F_q)| as a Laurent polynomial in u = q^{-1/2} (q itself is u^{-2}).
LaurentPoly group_order_symbolic(GroupFamily family, int rank);

/// |O_{2k}(F_q)| / (|O_{2k-2a+1}(F_q)| q^{dim U}).
Rational x_point_count(int k, int a, long q);
/// Δ_{D_k}(1) · q^{-dim X} · |X(F_q)|.
Rational x_volume_renormalized(int k, int a, long q);
/// Same quantities as rational functions of u = q^{-1/2}.
RationalFunction x_point_count_symbolic(int k, int a);
RationalFunction x_volume_renormalized_symbolic(int k, int a);

/// Gram matrix of the split form used by `family` (antidiagonal ones, or
/// antidiagonal ±1 for Sp), as integers.
std::vector<std::vector<int>> split_gram(GroupFamily family, int rank);

/// Number of g in GL_N(F_q) with g^T J g = J (and det g = 1 if requested),
/// by column-wise backtracking.  q must be a prime, q^{N²} <= 5·10^7.
long long brute_force_order(const std::vector<std::vector<int>>& gram, long q, bool determinant_one);

}  // namespace plancheck
