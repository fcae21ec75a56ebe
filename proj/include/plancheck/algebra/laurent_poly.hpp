#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plancheck/algebra/rational.hpp"

namespace plancheck {

/// Integer exponent vector; entry 0 is the exponent of u = q^{-1/2}, entry i >= 1 that of t_i.
using Exponent = std::vector<int>;

/// Name of the variable at position `index`: "u" for 0, "t<i>" otherwise.
std::string variable_name(std::size_t index);

/// Multivariate Laurent polynomial over Q in the variables (u, t1, ..., ta).
///
/// Terms are kept in a map keyed by exponent vector under lexicographic order,
/// so the leading term (largest in lex order) is the last entry.  Zero
/// coefficients are never stored.  Binary operations between polynomials in a
/// different number of variables pad the shorter one with zero exponents.
class LaurentPoly {
public:
    using TermMap = std::map<Exponent, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t num_vars) : num_vars_(num_vars) {}
    LaurentPoly(std::size_t num_vars, const Rational& constant);

    static LaurentPoly monomial(Exponent exponent, const Rational& coeff = 1);
    static LaurentPoly variable(std::size_t index, std::size_t num_vars, int power = 1);

    std::size_t num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// True when every exponent is nonnegative.
    bool is_polynomial() const;

    Rational coefficient(const Exponent& exponent) const;
    Rational constant_term() const;
    const Exponent& leading_exponent() const;
    const Rational& leading_coefficient() const;

    /// Componentwise minimum / maximum exponent (zeros for the zero polynomial).
    Exponent min_exponents() const;
    Exponent max_exponents() const;

    LaurentPoly padded(std::size_t num_vars) const;
    LaurentPoly times_monomial(const Exponent& shift) const;
    LaurentPoly scaled(const Rational& factor) const;
    LaurentPoly pow(unsigned n) const;

    /// Substitutes t_i -> t_{perm[i]}^{signs[i]} for i = 0..perm.size()-1, where
    /// t_i is variable `first_var + i`.
    LaurentPoly substitute_signed_permutation(std::size_t first_var, std::span<const int> perm,
                                              std::span<const int> signs) const;

    /// Exact quotient for polynomials (nonnegative exponents), or nullopt if the
    /// divisor does not divide this polynomial.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

    Rational evaluate(std::span<const Rational> point) const;
    std::complex<double> evaluate(std::span<const std::complex<double>> point) const;
    /// Exact value with u = q^{-1/2} and t_i = t[i-1].  Odd powers of u require
    /// q to be a perfect square.
    Rational evaluate_q(const Rational& q, std::span<const Rational> t) const;

    /// Canonical text: terms in descending lex order, `coeff*u^j*t1^e1...`,
    /// joined by " + ".  The zero polynomial prints as "0".
    std::string to_string() const;
    /// Reads canonical text; also accepts " - " between terms and a leading
    /// "-" on a monomial ("u^2 - t1").
    static LaurentPoly parse(const std::string& text, std::size_t num_vars = 0);

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a) { return a.scaled(-1); }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
    void add_term(const Exponent& exponent, const Rational& coeff);
    void widen(std::size_t num_vars);

    std::size_t num_vars_ = 0;
    TermMap terms_;
};

}  // namespace plancheck
