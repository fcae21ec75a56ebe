#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "plancheck/algebra/rational_function.hpp"
#include "plancheck/lfactors/graded_character.hpp"
#include "plancheck/lfactors/satake.hpp"

namespace plancheck {

/// 2s for a half-integer s; throws ParameterError otherwise.
int u_exponent(const Rational& s);

/// q^x for half-integral x, exact; throws std::domain_error when irrational.
Rational q_power(long q, const Rational& x);

/// ζ_F(s) = 1/(1 - q^{-s}).
Rational zeta(const Rational& s, long q);
/// 1/(1 - u^{2s}) in the variables (u, t_1, ..., t_{nvars-1}).
RationalFunction zeta_symbolic(const Rational& s, std::size_t nvars = 1);

/// Δ(1) = ∏ ζ(d) over the degrees d of the given type.
Rational motive_delta(Family family, int rank, long q);
RationalFunction motive_delta_symbolic(Family family, int rank, std::size_t nvars = 1);

using LValue = std::variant<Rational, std::complex<double>>;

/// ∏_{(w, ·, m)} (1 - t^w u^{2s})^{-m} as a rational function in (u, t).
RationalFunction l_factor(const GradedCharacter& chi, const Rational& s);
/// Same product at a point.  Exact-mode points give a Rational (every factor
/// must be real); numeric-mode points give a complex double.
LValue l_factor(const GradedCharacter& chi, const Rational& s, const SatakeParam& t, long q);

/// ∏_{(w, g, m)} (1 - t^w u^g)^{-m}: every summand evaluated at s = g/2.
RationalFunction graded_l_value(const GradedCharacter& chi);
LValue graded_l_value(const GradedCharacter& chi, const SatakeParam& t, long q);

/// (t_1, ..., t_a, q^{k-a-1}, ..., q, 1).
SatakeParam lift_satake(const SatakeParam& t, int k, long q);

/// log_q |t_i| for every coordinate of an exact-mode parameter; throws if some
/// modulus is not an integral power of q.
std::vector<int> q_exponents(const SatakeParam& t, long q);

/// Values t^w with multiplicity (grades ignored), sorted.
std::vector<ExactCoordinate> eigenvalue_multiset(const GradedCharacter& chi, const SatakeParam& t);

}  // namespace plancheck
