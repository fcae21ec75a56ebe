#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <vector>

#include "plancheck/algebra/rational.hpp"
#include "plancheck/lfactors/graded_character.hpp"

namespace plancheck {

/// θ ∈ [0,1)^a with t_j = exp(2πiθ_j).
struct TorusPoint {
    std::vector<double> angles;

    std::vector<std::complex<double>> coordinates() const;
    int rank() const { return static_cast<int>(angles.size()); }
};

/// Product lattice rule with `resolution` points per circle.  Each θ_1-row is
/// summed by one worker; rows are then combined by a fixed pairwise tree, so
/// the result does not depend on `jobs`.
struct QuadratureSpec {
    int resolution = 0;
    int jobs = 1;

    /// Power of two, at least 8.
    void validate() const;
};

constexpr int max_quadrature_rank = 3;
constexpr long long max_quadrature_points = 512LL * 512 * 512;

using TorusFunction = std::function<double(const TorusPoint&)>;

/// Mean of f over the N^a lattice {j/N}.
double integrate_torus(const TorusFunction& f, int a, const QuadratureSpec& spec);

struct QuadratureResult {
    double value = 0;
    /// Value at half the resolution, for the convergence check.
    double coarse_value = 0;
    int resolution = 0;
    bool converged = false;
};

/// integrate_torus at N and N/2; converged iff |I(N) - I(N/2)| <= tolerance · max(1, |I(N)|).
QuadratureResult integrate_torus_checked(const TorusFunction& f, int a, const QuadratureSpec& spec,
                                         double tolerance);

/// (1/|W|) · ∏_{α∈Φ(B_a)} (1 - t^α) / [(1 - 1/q)^a ∏_{α∈Φ(B_a)} (1 - t^α/q)], evaluated
/// through the real form over positive roots.
double macdonald_density(int a, long q, const TorusPoint& t);

/// Same density as (1/|W|) · L(1, t, Ad) / L(0, t, g/a) through complex
/// L-factors; throws PoleError on root hyperplanes.
std::complex<double> macdonald_density_complex(int a, long q, const TorusPoint& t);

/// (1/|W|) · ∏_{α∈Φ(B_a)} (1 - t^α) / det(1 - (t, q^{-1/2}) | V): the spectral
/// density of the basic function of X for the graded slice V.
double slice_density(const GradedCharacter& slice, long q, const TorusPoint& t);

/// Exact rank-one mass (1/2)∮ (2 - t - 1/t)/[(1-c)(1-ct)(1-c/t)] dt/(2πit) = 1/(1 - c²).
Rational residue_mass_rank1(const Rational& c);

/// ∫ macdonald_density over the compact torus.
double plancherel_mass(int a, long q, const QuadratureSpec& spec);

/// CSV with header theta_1,...,theta_a,density and one row per lattice point
/// (θ_1 slowest), numbers printed with 17 significant digits.
void write_density_csv(std::ostream& out, int a, int resolution, const TorusFunction& density);

/// Shortest round-trip decimal text of x (at most 17 significant digits).
std::string format_double(double x);

}  // namespace plancheck
