#pragma once

#include <map>
#include <string>
#include <vector>

#include "plancheck/lfactors/graded_character.hpp"
#include "plancheck/lie/qmatrix.hpp"

namespace plancheck {

enum class Flavor { orthogonal, symplectic };

struct Partition {
    std::vector<int> parts;
    Flavor flavor;

    int size() const;
    /// Parts weakly decreasing and positive; even parts of an orthogonal
    /// partition (odd parts of a symplectic one) occur with even multiplicity.
    bool is_valid() const;
    /// [m, 1, ..., 1] (including [m] and the all-ones partition).
    bool is_hook() const;
    std::vector<int> transpose() const;
    std::string to_string() const;
};

/// [m, 1^{n-m}] of the given flavor.
Partition hook_partition(int m, int n, Flavor flavor);

/// dim of the centralizer of a nilpotent of Jordan type p in so_N or sp_N:
/// ½Σ(λ'_i)² ∓ ½#{odd parts}.
int centralizer_dimension_formula(const Partition& p);

/// so_N for the split form with antidiagonal Gram matrix of ones, or sp_N with
/// Gram J_{i,N-1-i} = +1 (i < N/2), -1 (i >= N/2).
struct MatrixLieAlgebra {
    Flavor flavor;
    int N;
    QMatrix gram;
    std::vector<QMatrix> basis;

    std::size_t dimension() const { return basis.size(); }
    /// x^T J + J x = 0.
    bool contains(const QMatrix& x) const;
    /// Coordinates of x in `basis`; throws if x is not in the algebra.
    QVector coordinates(const QMatrix& x) const;
};

MatrixLieAlgebra build_algebra(Flavor flavor, int N);

struct Sl2Triple {
    QMatrix e, h, f;

    /// [h,e] = 2e, [h,f] = -2f, [e,f] = h, h diagonal.
    bool relations_hold() const;
    /// Diagonal of h as integers.
    std::vector<int> h_weights() const;
};

/// Standard triple for a hook partition with diagonal h; throws for invalid
/// or non-hook partitions.
Sl2Triple sl2_from_partition(const MatrixLieAlgebra& alg, const Partition& p);

/// Jordan block sizes of a nilpotent matrix, from ranks of its powers.
std::vector<int> jordan_type(const QMatrix& nilpotent);

/// ad(h)-weight → dimension, for diagonal integral h.
std::map<int, int> grading_decomposition(const MatrixLieAlgebra& alg, const QMatrix& h);

/// Basis of {x in alg : [e, x] = 0}.
std::vector<QMatrix> centralizer(const MatrixLieAlgebra& alg, const QMatrix& e);

/// Trace-form complement of the embedded so_{2a+1} inside so_{2k}^e for the
/// hook [2k-2a-1, 1^{2a+1}], decomposed under the so_{2a+1} Cartan torus and
/// the grading ad-weight + 2.
GradedCharacter slice_V_X(int k, int a);

/// (k-a-1, k-a-2, ..., 1, 0, ..., 0) of length k.
std::vector<int> rho_L_of_X(int k, int a);

struct HookCase {
    int k = 0;
    int a = 0;
    Partition gamma;       // [2a-1, 1^{2k-2a+1}]
    Partition gamma_dual;  // [2k-2a-1, 1^{2a+1}]
    int dimU = 0;
    int dimL = 0;
    int dimX = 0;
};

HookCase x_geometry(int k, int a);

void require_hook_range(int k, int a);

}  // namespace plancheck
