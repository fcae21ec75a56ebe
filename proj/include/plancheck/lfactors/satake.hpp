#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "plancheck/algebra/rational.hpp"
#include "plancheck/roots/root_system.hpp"

namespace plancheck {

/// Exact nonzero complex number modulus · exp(2πi · turn) with rational
/// modulus > 0 and rational turn in [0, 1).  Covers rational values, roots of
/// unity and integral powers of q, closed under products and inverses.
struct ExactCoordinate {
    Rational modulus = 1;
    Rational turn = 0;

    static ExactCoordinate from_rational(const Rational& x);
    static ExactCoordinate root_of_unity(const Rational& turn);

    ExactCoordinate inverse() const;
    ExactCoordinate pow(long n) const;
    bool is_real() const { return turn == 0 || turn == Rational(1, 2); }
    /// Value as a rational; throws if not real.
    Rational to_rational() const;
    std::complex<double> to_complex() const;
    std::string to_string() const;

    friend ExactCoordinate operator*(const ExactCoordinate& x, const ExactCoordinate& y);
    friend bool operator==(const ExactCoordinate&, const ExactCoordinate&) = default;
    friend bool operator<(const ExactCoordinate& x, const ExactCoordinate& y);
};

enum class SatakeMode { exact, numeric };

/// Point of a dual maximal torus, stored in coordinates t_1..t_rank.
class SatakeParam {
public:
    static SatakeParam exact(std::vector<ExactCoordinate> coordinates);
    static SatakeParam numeric(std::vector<std::complex<double>> coordinates);
    /// Exact unitary point t_j = exp(2πi turns_j).
    static SatakeParam unitary(const std::vector<Rational>& turns);
    /// Numeric unitary point t_j = exp(2πi θ_j).
    static SatakeParam from_angles(std::span<const double> theta);

    SatakeMode mode() const { return mode_; }
    int rank() const;
    const std::vector<ExactCoordinate>& exact_coordinates() const;
    const std::vector<std::complex<double>>& numeric_coordinates() const;
    /// Same point in numeric mode.
    SatakeParam to_numeric() const;
    bool is_unitary(double tolerance = 1e-12) const;

    /// t^w.
    ExactCoordinate character_exact(std::span<const int> weight) const;
    std::complex<double> character_numeric(std::span<const int> weight) const;

private:
    SatakeMode mode_ = SatakeMode::numeric;
    std::vector<ExactCoordinate> exact_;
    std::vector<std::complex<double>> numeric_;
};

/// (w·t)_i = t_{perm[i]}^{signs[i]}.
SatakeParam weyl_act(const WeylElement& w, const SatakeParam& t);

}  // namespace plancheck
