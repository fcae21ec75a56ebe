#include "plancheck/lfactors/satake.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "plancheck/algebra/errors.hpp"

namespace plancheck {

namespace {

Rational fractional_part(const Rational& x) {
    mpz_class floor_value;
    mpz_fdiv_q(floor_value.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rational(floor_value);
}

}  // namespace

ExactCoordinate ExactCoordinate::from_rational(const Rational& x) {
    if (x == 0) throw ParameterError("torus coordinates must be nonzero");
    return x > 0 ? ExactCoordinate{x, 0} : ExactCoordinate{-x, Rational(1, 2)};
}

ExactCoordinate ExactCoordinate::root_of_unity(const Rational& turn) { return {1, fractional_part(turn)}; }

ExactCoordinate ExactCoordinate::inverse() const { return {1 / modulus, fractional_part(-turn)}; }

ExactCoordinate ExactCoordinate::pow(long n) const {
    return {plancheck::pow(modulus, n), fractional_part(turn * Rational(n))};
}

Rational ExactCoordinate::to_rational() const {
    if (!is_real()) throw std::domain_error("coordinate " + to_string() + " is not real");
    return turn == 0 ? modulus : Rational(-modulus);
}

std::complex<double> ExactCoordinate::to_complex() const {
    if (turn == 0) return {to_double(modulus), 0.0};
    if (turn == Rational(1, 2)) return {-to_double(modulus), 0.0};
    return std::polar(to_double(modulus), 2.0 * std::numbers::pi * to_double(turn));
}

std::string ExactCoordinate::to_string() const {
    if (turn == 0) return plancheck::to_string(modulus);
    return plancheck::to_string(modulus) + "*exp(2*pi*i*" + plancheck::to_string(turn) + ")";
}

ExactCoordinate operator*(const ExactCoordinate& x, const ExactCoordinate& y) {
    return {x.modulus * y.modulus, fractional_part(x.turn + y.turn)};
}

bool operator<(const ExactCoordinate& x, const ExactCoordinate& y) {
    if (x.modulus != y.modulus) return x.modulus < y.modulus;
    return x.turn < y.turn;
}

SatakeParam SatakeParam::exact(std::vector<ExactCoordinate> coordinates) {
    for (const auto& c : coordinates) {
        if (c.modulus <= 0) throw ParameterError("torus coordinates must be nonzero");
    }
    SatakeParam t;
    t.mode_ = SatakeMode::exact;
    t.exact_ = std::move(coordinates);
    return t;
}

SatakeParam SatakeParam::numeric(std::vector<std::complex<double>> coordinates) {
    for (const auto& c : coordinates) {
        if (c == 0.0) throw ParameterError("torus coordinates must be nonzero");
    }
    SatakeParam t;
    t.mode_ = SatakeMode::numeric;
    t.numeric_ = std::move(coordinates);
    return t;
}

SatakeParam SatakeParam::unitary(const std::vector<Rational>& turns) {
    std::vector<ExactCoordinate> c;
    for (const auto& x : turns) c.push_back(ExactCoordinate::root_of_unity(x));
    return exact(std::move(c));
}

SatakeParam SatakeParam::from_angles(std::span<const double> theta) {
    std::vector<std::complex<double>> c;
    for (double x : theta) c.push_back(std::polar(1.0, 2.0 * std::numbers::pi * x));
    return numeric(std::move(c));
}

int SatakeParam::rank() const {
    return static_cast<int>(mode_ == SatakeMode::exact ? exact_.size() : numeric_.size());
}

const std::vector<ExactCoordinate>& SatakeParam::exact_coordinates() const {
    if (mode_ != SatakeMode::exact) throw std::logic_error("Satake parameter is numeric");
    return exact_;
}

const std::vector<std::complex<double>>& SatakeParam::numeric_coordinates() const {
    if (mode_ != SatakeMode::numeric) throw std::logic_error("Satake parameter is exact");
    return numeric_;
}

SatakeParam SatakeParam::to_numeric() const {
    if (mode_ == SatakeMode::numeric) return *this;
    std::vector<std::complex<double>> c;
    for (const auto& x : exact_) c.push_back(x.to_complex());
    return numeric(std::move(c));
}

bool SatakeParam::is_unitary(double tolerance) const {
    if (mode_ == SatakeMode::exact) {
        for (const auto& c : exact_) {
            if (c.modulus != 1) return false;
        }
        return true;
    }
    for (const auto& c : numeric_) {
        if (std::abs(std::abs(c) - 1.0) > tolerance) return false;
    }
    return true;
}

ExactCoordinate SatakeParam::character_exact(std::span<const int> weight) const {
    const auto& c = exact_coordinates();
    if (weight.size() != c.size()) throw ParameterError("weight length does not match torus rank");
    ExactCoordinate out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (weight[i] != 0) out = out * c[i].pow(weight[i]);
    }
    return out;
}

std::complex<double> SatakeParam::character_numeric(std::span<const int> weight) const {
    if (mode_ == SatakeMode::exact) return character_exact(weight).to_complex();
    if (weight.size() != numeric_.size()) throw ParameterError("weight length does not match torus rank");
    std::complex<double> out = 1.0;
    for (std::size_t i = 0; i < numeric_.size(); ++i) {
        if (weight[i] > 0) {
            for (int j = 0; j < weight[i]; ++j) out *= numeric_[i];
        } else {
            for (int j = 0; j < -weight[i]; ++j) out /= numeric_[i];
        }
    }
    return out;
}

SatakeParam weyl_act(const WeylElement& w, const SatakeParam& t) {
    if (w.rank() != t.rank()) throw ParameterError("Weyl element and Satake parameter ranks differ");
    const auto n = static_cast<std::size_t>(t.rank());
    if (t.mode() == SatakeMode::exact) {
        std::vector<ExactCoordinate> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& src = t.exact_coordinates()[static_cast<std::size_t>(w.perm[i])];
            out[i] = w.signs[i] > 0 ? src : src.inverse();
        }
        return SatakeParam::exact(std::move(out));
    }
    std::vector<std::complex<double>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& src = t.numeric_coordinates()[static_cast<std::size_t>(w.perm[i])];
        out[i] = w.signs[i] > 0 ? src : 1.0 / src;
    }
    return SatakeParam::numeric(std::move(out));
}

}  // namespace plancheck
