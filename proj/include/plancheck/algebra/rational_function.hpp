#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>

#include "plancheck/algebra/laurent_poly.hpp"

namespace plancheck {

/// Greatest common divisor of two polynomials (nonnegative exponents) over Q,
/// normalized to leading coefficient 1 in lex order.  gcd(0, 0) = 0.
LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Quotient of Laurent polynomials in (u, t1, ..., ta), always held in
/// canonical form:
///   - numerator = (Laurent monomial) * P, denominator = Q, where P and Q are
///     polynomials not divisible by any variable,
///   - gcd(P, Q) = 1,
///   - Q has leading coefficient 1 in lex order on (u, t1, ..., ta).
/// Zero is 0/1.  Two rational functions are equal iff their canonical forms
/// coincide term by term.
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(0, 1) {}
    explicit RationalFunction(const LaurentPoly& numerator);
    RationalFunction(const LaurentPoly& numerator, const LaurentPoly& denominator);
    RationalFunction(std::size_t num_vars, const Rational& constant);

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }
    std::size_t num_vars() const { return std::max(num_.num_vars(), den_.num_vars()); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction inverse() const;
    RationalFunction pow(int n) const;
    RationalFunction substitute_signed_permutation(std::size_t first_var, std::span<const int> perm,
                                                   std::span<const int> signs) const;

    /// Exact value at a rational point; throws PoleError if the denominator vanishes.
    Rational evaluate(std::span<const Rational> point) const;
    std::complex<double> evaluate(std::span<const std::complex<double>> point) const;
    /// Exact value at u = q^{-1/2}, t_i = t[i-1].
    Rational evaluate_q(const Rational& q, std::span<const Rational> t) const;

    /// "(numerator)/(denominator)" with both sides in LaurentPoly canonical text.
    std::string to_string() const;
    static RationalFunction parse(const std::string& text);

    friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
    friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g);
    friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);
    friend RationalFunction operator/(const RationalFunction& f, const RationalFunction& g);
    friend RationalFunction operator-(const RationalFunction& f);
    /// Structural equality of canonical forms.
    friend bool operator==(const RationalFunction& f, const RationalFunction& g);

private:
    struct Canonical {};
    RationalFunction(LaurentPoly numerator, LaurentPoly denominator, Canonical)
        : num_(std::move(numerator)), den_(std::move(denominator)) {}
    void canonicalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

enum class RfOp { add, mul, div };

RationalFunction rf_arith(const RationalFunction& f, const RationalFunction& g, RfOp op);

/// f == g as functions.  A deterministic randomized evaluation at
/// `random_points` rational points may decide "not equal" early; "equal" is
/// always decided by exact cross-multiplication.
bool rf_equal(const RationalFunction& f, const RationalFunction& g, int random_points = 20,
              std::uint64_t seed = 0x5eed);

}  // namespace plancheck
