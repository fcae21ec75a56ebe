#include "plancheck/lfactors/l_factors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "plancheck/algebra/errors.hpp"

namespace plancheck {

namespace {

void require_q(long q) {
    if (q < 2) throw ParameterError("q must be at least 2");
}

/// ∏ (1 - t^w u^{e(entry)})^{-m}.
template <typename UExponent>
RationalFunction det_product(const GradedCharacter& chi, UExponent u_exp) {
    const auto nvars = static_cast<std::size_t>(chi.rank()) + 1;
    LaurentPoly num(nvars, 1), den(nvars, 1);
    for (const auto& e : chi.entries()) {
        Exponent x(nvars, 0);
        x[0] = u_exp(e);
        std::copy(e.weight.begin(), e.weight.end(), x.begin() + 1);
        const LaurentPoly factor = LaurentPoly(nvars, 1) - LaurentPoly::monomial(x);
        if (factor.is_zero()) throw PoleError("L-factor has an identically vanishing factor");
        if (e.multiplicity > 0) {
            den *= factor.pow(static_cast<unsigned>(e.multiplicity));
        } else {
            num *= factor.pow(static_cast<unsigned>(-e.multiplicity));
        }
    }
    return RationalFunction(num, den);
}

template <typename UExponent>
LValue det_value(const GradedCharacter& chi, const SatakeParam& t, long q, UExponent u_exp) {
    require_q(q);
    if (t.rank() != chi.rank()) throw ParameterError("Satake parameter rank does not match character");
    if (t.mode() == SatakeMode::exact) {
        Rational value = 1;
        for (const auto& e : chi.entries()) {
            const Rational x = t.character_exact(e.weight).to_rational() * q_power(q, Rational(-u_exp(e), 2));
            if (x == 1) throw PoleError("L-factor pole: t^w q^{-s} = 1");
            value *= pow(1 - x, -e.multiplicity);
        }
        return value;
    }
    std::complex<double> value = 1.0;
    for (const auto& e : chi.entries()) {
        const std::complex<double> x =
            t.character_numeric(e.weight) * std::pow(static_cast<double>(q), -0.5 * u_exp(e));
        const std::complex<double> factor = 1.0 - x;
        if (factor == 0.0) throw PoleError("L-factor pole: t^w q^{-s} = 1");
        for (int i = 0; i < std::abs(e.multiplicity); ++i) value = e.multiplicity > 0 ? value / factor : value * factor;
    }
    return value;
}

}  // namespace

int u_exponent(const Rational& s) {
    const Rational twice = 2 * s;
    if (twice.get_den() != 1) throw ParameterError("s must be a half-integer, got " + to_string(s));
    return static_cast<int>(twice.get_num().get_si());
}

Rational q_power(long q, const Rational& x) {
    require_q(q);
    const int twice = u_exponent(x);
    if (twice % 2 == 0) return pow(Rational(q), twice / 2);
    Rational root;
    if (!exact_sqrt(Rational(q), root)) {
        throw std::domain_error("q^(" + to_string(x) + ") is irrational for q = " + std::to_string(q));
    }
    return pow(root, twice);
}

Rational zeta(const Rational& s, long q) {
    if (s == 0) throw ParameterError("zeta(0) is a pole");
    return 1 / (1 - q_power(q, -s));
}

RationalFunction zeta_symbolic(const Rational& s, std::size_t nvars) {
    if (s == 0) throw ParameterError("zeta(0) is a pole");
    const LaurentPoly one(nvars, 1);
    return RationalFunction(one, one - LaurentPoly::variable(0, nvars, u_exponent(s)));
}

Rational motive_delta(Family family, int rank, long q) {
    Rational out = 1;
    for (int d : degrees(build_root_system(family, rank))) out *= zeta(d, q);
    return out;
}

RationalFunction motive_delta_symbolic(Family family, int rank, std::size_t nvars) {
    RationalFunction out(nvars, 1);
    for (int d : degrees(build_root_system(family, rank))) out = out * zeta_symbolic(d, nvars);
    return out;
}

RationalFunction l_factor(const GradedCharacter& chi, const Rational& s) {
    const int e = u_exponent(s);
    return det_product(chi, [e](const CharacterEntry&) { return e; });
}

LValue l_factor(const GradedCharacter& chi, const Rational& s, const SatakeParam& t, long q) {
    const int e = u_exponent(s);
    return det_value(chi, t, q, [e](const CharacterEntry&) { return e; });
}

RationalFunction graded_l_value(const GradedCharacter& chi) {
    return det_product(chi, [](const CharacterEntry& e) { return e.grade; });
}

LValue graded_l_value(const GradedCharacter& chi, const SatakeParam& t, long q) {
    return det_value(chi, t, q, [](const CharacterEntry& e) { return e.grade; });
}

SatakeParam lift_satake(const SatakeParam& t, int k, long q) {
    const int a = t.rank();
    if (a < 1 || a > k - 1) throw ParameterError("require 1 <= a <= k-1");
    require_q(q);
    if (t.mode() == SatakeMode::exact) {
        auto c = t.exact_coordinates();
        for (int j = k - a - 1; j >= 0; --j) c.push_back({pow(Rational(q), j), 0});
        return SatakeParam::exact(std::move(c));
    }
    auto c = t.numeric_coordinates();
    for (int j = k - a - 1; j >= 0; --j) c.emplace_back(std::pow(static_cast<double>(q), j), 0.0);
    return SatakeParam::numeric(std::move(c));
}

std::vector<int> q_exponents(const SatakeParam& t, long q) {
    require_q(q);
    std::vector<int> out;
    for (const auto& c : t.exact_coordinates()) {
        Rational m = c.modulus;
        int e = 0;
        while (m >= q && mpz_divisible_ui_p(m.get_num_mpz_t(), static_cast<unsigned long>(q)) && m.get_den() == 1) {
            m /= q;
            ++e;
        }
        while (m < 1 && m.get_num() == 1 && mpz_divisible_ui_p(m.get_den_mpz_t(), static_cast<unsigned long>(q))) {
            m *= q;
            --e;
        }
        if (m != 1) throw std::domain_error("coordinate modulus " + to_string(c.modulus) + " is not a power of q");
        out.push_back(e);
    }
    return out;
}

std::vector<ExactCoordinate> eigenvalue_multiset(const GradedCharacter& chi, const SatakeParam& t) {
    std::vector<ExactCoordinate> out;
    for (const auto& e : chi.entries()) {
        if (e.multiplicity < 0) throw ParameterError("eigenvalue multiset needs an effective character");
        const ExactCoordinate v = t.character_exact(e.weight);
        out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace plancheck
