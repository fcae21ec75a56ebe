#include "plancheck/algebra/rational_function.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>

#include "plancheck/algebra/errors.hpp"

namespace plancheck {

namespace {

// Recursive polynomial GCD over Q.  Polynomials are viewed as univariate in
// variable `v` with coefficients in Q[x_{v+1}, ...]; the primitive
// pseudo-remainder sequence is run on primitive parts and the contents are
// handled by recursion on v + 1.

int degree_in(const LaurentPoly& p, std::size_t v) {
    int d = -1;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
    return d;
}

LaurentPoly coeff_in(const LaurentPoly& p, std::size_t v, int d) {
    LaurentPoly out(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] != d) continue;
        Exponent f = e;
        f[v] = 0;
        out += LaurentPoly::monomial(std::move(f), c);
    }
    return out;
}

LaurentPoly x_power(std::size_t v, std::size_t n, int d) {
    Exponent e(n, 0);
    e[v] = d;
    return LaurentPoly::monomial(std::move(e));
}

LaurentPoly monic(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(1 / p.leading_coefficient());
}

// Scales p to integer coefficients with gcd 1 and positive leading coefficient.
LaurentPoly integer_primitive(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1;
    Integer num_gcd = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (p.leading_coefficient() < 0) factor = -factor;
    return p.scaled(factor);
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = a.divide_exact(b);
    if (!q) throw std::logic_error("internal: expected exact polynomial division");
    return *q;
}

bool free_of_from(const LaurentPoly& p, std::size_t v) {
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = v; i < e.size(); ++i) {
            if (e[i] != 0) return false;
        }
    }
    return true;
}

LaurentPoly gcd_from(const LaurentPoly& a, const LaurentPoly& b, std::size_t v);

// Dense univariate polynomial over Q, index = degree.
using Dense = std::vector<Rational>;

Dense univariate_image(const LaurentPoly& p, std::size_t v, const std::vector<Rational>& point) {
    Dense out(static_cast<std::size_t>(std::max(degree_in(p, v), 0)) + 1);
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i != v && e[i] != 0) term *= plancheck::pow(point[i], e[i]);
        }
        out[static_cast<std::size_t>(e[v])] += term;
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

std::size_t dense_gcd_degree(Dense a, Dense b) {
    auto trim = [](Dense& x) {
        while (!x.empty() && x.back() == 0) x.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        while (a.size() >= b.size() && !a.empty()) {
            const Rational f = a.back() / b.back();
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
            a.pop_back();
            trim(a);
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

// Sound coprimality certificate in variable v: at a point where both leading
// coefficients in v survive, a constant image gcd means gcd(a, b) is free of v.
bool images_coprime_in(const LaurentPoly& a, const LaurentPoly& b, std::size_t v) {
    std::mt19937_64 rng(0x9cdU + v);
    std::uniform_int_distribution<long> dist(-997, 997);
    const int da = degree_in(a, v);
    const int db = degree_in(b, v);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<Rational> point(a.num_vars());
        for (auto& x : point) {
            do {
                x = dist(rng);
            } while (x == 0);
        }
        const Dense ia = univariate_image(a, v, point);
        const Dense ib = univariate_image(b, v, point);
        if (static_cast<int>(ia.size()) - 1 != da || static_cast<int>(ib.size()) - 1 != db) continue;
        return dense_gcd_degree(ia, ib) == 0;
    }
    return false;
}

LaurentPoly content_in(const LaurentPoly& p, std::size_t v) {
    const std::size_t n = p.num_vars();
    LaurentPoly g(n);
    const int deg = degree_in(p, v);
    for (int d = deg; d >= 0; --d) {
        LaurentPoly c = coeff_in(p, v, d);
        if (c.is_zero()) continue;
        g = g.is_zero() ? monic(c) : gcd_from(g, c, v + 1);
        if (g.is_constant()) return LaurentPoly(n, 1);
    }
    return g;
}

LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b, std::size_t v) {
    const std::size_t n = a.num_vars();
    const int db = degree_in(b, v);
    const LaurentPoly lb = coeff_in(b, v, db);
    int da = degree_in(a, v);
    while (!a.is_zero() && da >= db) {
        const LaurentPoly la = coeff_in(a, v, da);
        a = lb * a - la * x_power(v, n, da - db) * b;
        da = degree_in(a, v);
    }
    return a;
}

Integer integer_content(const LaurentPoly& p) {
    Integer g = 0;
    for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    return g;
}

Integer max_norm(const LaurentPoly& p) {
    Integer m = 0;
    for (const auto& [e, c] : p.terms()) {
        Integer x = abs(c.get_num());
        if (x > m) m = x;
    }
    return m;
}

LaurentPoly evaluate_variable(const LaurentPoly& p, std::size_t w, const Integer& xi) {
    LaurentPoly out(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        Exponent f = e;
        f[w] = 0;
        out += LaurentPoly::monomial(std::move(f), c * Rational(ipow(xi, static_cast<unsigned long>(e[w]))));
    }
    return out;
}

// Symmetric residue of x modulo m, in (-m/2, m/2].
Integer symmetric_mod(const Integer& x, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    return r;
}

// Recovers G from its image h = G(x_w = xi) by xi-adic expansion.
LaurentPoly xi_adic_reconstruct(LaurentPoly h, std::size_t w, const Integer& xi) {
    const std::size_t n = h.num_vars();
    LaurentPoly out(n);
    int power = 0;
    while (!h.is_zero()) {
        LaurentPoly digit(n);
        for (const auto& [e, c] : h.terms()) {
            Integer r = symmetric_mod(c.get_num(), xi);
            if (r != 0) digit += LaurentPoly::monomial(e, Rational(r));
        }
        out += digit * x_power(w, n, power);
        h = (h - digit).scaled(Rational(1) / Rational(xi));
        ++power;
    }
    return out;
}

bool divides(const LaurentPoly& d, const LaurentPoly& p) { return p.divide_exact(d).has_value(); }

// Heuristic GCD (Char, Geddes and Gonnet) for integer polynomials free of
// variables below v.  Every candidate is certified by exact division; nullopt
// means the heuristic gave up and the caller must fall back.
std::optional<LaurentPoly> heuristic_gcd(LaurentPoly a, LaurentPoly b, std::size_t v, int depth = 0) {
    const std::size_t n = std::max(a.num_vars(), b.num_vars());
    a = a.padded(n);
    b = b.padded(n);
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    const Integer ca = integer_content(a);
    const Integer cb = integer_content(b);
    Integer c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.is_constant() || b.is_constant()) return LaurentPoly(n, Rational(c));
    a = a.scaled(Rational(1) / Rational(ca));
    b = b.scaled(Rational(1) / Rational(cb));

    std::size_t w = v;
    while (w < n && degree_in(a, w) <= 0 && degree_in(b, w) <= 0) ++w;
    if (w >= n) return LaurentPoly(n, Rational(c));

    const Integer na = max_norm(a);
    const Integer nb = max_norm(b);
    Integer xi = 2 * (na < nb ? na : nb) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        const LaurentPoly ia = evaluate_variable(a, w, xi);
        const LaurentPoly ib = evaluate_variable(b, w, xi);
        if (!ia.is_zero() && !ib.is_zero()) {
            auto h = heuristic_gcd(ia, ib, w + 1, depth + 1);
            if (!h) return std::nullopt;
            LaurentPoly g = xi_adic_reconstruct(*h, w, xi);
            if (!g.is_zero()) {
                g = g.scaled(Rational(1) / Rational(integer_content(g)));
                if (divides(g, a) && divides(g, b)) return g.scaled(Rational(c));
            }
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

LaurentPoly gcd_from(const LaurentPoly& a0, const LaurentPoly& b0, std::size_t v) {
    const std::size_t n = std::max(a0.num_vars(), b0.num_vars());
    LaurentPoly a = a0.padded(n);
    LaurentPoly b = b0.padded(n);
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    while (v < n && degree_in(a, v) <= 0 && degree_in(b, v) <= 0) ++v;
    if (v >= n || a.is_constant() || b.is_constant()) return LaurentPoly(n, 1);
    if (free_of_from(a, v) || free_of_from(b, v)) return LaurentPoly(n, 1);

    a = integer_primitive(a);
    b = integer_primitive(b);
    if (auto g = heuristic_gcd(a, b, v)) return monic(*g);

    const LaurentPoly ca = content_in(a, v);
    const LaurentPoly cb = content_in(b, v);
    LaurentPoly content_gcd = gcd_from(ca, cb, v + 1);
    if (images_coprime_in(a, b, v)) return monic(content_gcd);
    a = integer_primitive(exact_quotient(a, ca));
    b = integer_primitive(exact_quotient(b, cb));
    if (degree_in(a, v) < degree_in(b, v)) std::swap(a, b);

    LaurentPoly prim_gcd(n, 1);
    while (true) {
        if (degree_in(b, v) == 0) {
            // b is a nonzero element of the coefficient ring; the primitive parts are coprime.
            break;
        }
        LaurentPoly r = pseudo_remainder(a, b, v);
        if (r.is_zero()) {
            prim_gcd = b;
            break;
        }
        a = std::move(b);
        b = integer_primitive(exact_quotient(r, content_in(r, v)));
    }
    return monic(content_gcd * prim_gcd);
}

LaurentPoly shift_to_polynomial(const LaurentPoly& p, Exponent& removed) {
    removed = p.min_exponents();
    Exponent neg(removed.size());
    std::transform(removed.begin(), removed.end(), neg.begin(), [](int x) { return -x; });
    return p.times_monomial(neg);
}

}  // namespace

LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    const std::size_t n = std::max(a.num_vars(), b.num_vars());
    if (a.is_zero() && b.is_zero()) return LaurentPoly(n);
    if (!a.is_polynomial() || !b.is_polynomial()) {
        throw std::invalid_argument("polynomial_gcd requires nonnegative exponents");
    }
    return gcd_from(a.padded(n), b.padded(n), 0);
}

RationalFunction::RationalFunction(const LaurentPoly& numerator)
    : num_(numerator), den_(numerator.num_vars(), 1) {
    canonicalize();
}

RationalFunction::RationalFunction(const LaurentPoly& numerator, const LaurentPoly& denominator)
    : num_(numerator), den_(denominator) {
    if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    canonicalize();
}

RationalFunction::RationalFunction(std::size_t num_vars, const Rational& constant)
    : num_(num_vars, constant), den_(num_vars, 1) {}

void RationalFunction::canonicalize() {
    const std::size_t n = std::max(num_.num_vars(), den_.num_vars());
    if (num_.is_zero()) {
        num_ = LaurentPoly(n);
        den_ = LaurentPoly(n, 1);
        return;
    }
    Exponent num_shift, den_shift;
    LaurentPoly p = shift_to_polynomial(num_.padded(n), num_shift);
    LaurentPoly q = shift_to_polynomial(den_.padded(n), den_shift);
    if (!p.is_constant() && !q.is_constant()) {
        const LaurentPoly g = gcd_from(p, q, 0);
        if (!g.is_constant()) {
            p = exact_quotient(p, g);
            q = exact_quotient(q, g);
        }
    }
    const Rational lead = q.leading_coefficient();
    Exponent shift(n);
    for (std::size_t i = 0; i < n; ++i) shift[i] = num_shift[i] - den_shift[i];
    num_ = p.scaled(1 / lead).times_monomial(shift);
    den_ = q.scaled(1 / lead);
}

RationalFunction RationalFunction::inverse() const {
    if (num_.is_zero()) throw DivisionByZeroError("inverse of the zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    return RationalFunction(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)),
                            Canonical{});
}

RationalFunction RationalFunction::substitute_signed_permutation(std::size_t first_var,
                                                                 std::span<const int> perm,
                                                                 std::span<const int> signs) const {
    return RationalFunction(num_.substitute_signed_permutation(first_var, perm, signs),
                            den_.substitute_signed_permutation(first_var, perm, signs));
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
    const Rational d = den_.evaluate(point);
    if (d == 0) throw PoleError("denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

Rational RationalFunction::evaluate_q(const Rational& q, std::span<const Rational> t) const {
    const Rational d = den_.evaluate_q(q, t);
    if (d == 0) throw PoleError("denominator vanishes at the evaluation point");
    return num_.evaluate_q(q, t) / d;
}

std::complex<double> RationalFunction::evaluate(std::span<const std::complex<double>> point) const {
    const std::complex<double> d = den_.evaluate(point);
    if (d == 0.0) throw PoleError("denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction RationalFunction::parse(const std::string& text) {
    const auto mid = text.find(")/(");
    if (text.size() < 7 || text.front() != '(' || text.back() != ')' || mid == std::string::npos) {
        throw std::invalid_argument("rational function text must look like '(num)/(den)'");
    }
    LaurentPoly num = LaurentPoly::parse(text.substr(1, mid - 1));
    LaurentPoly den = LaurentPoly::parse(text.substr(mid + 3, text.size() - mid - 4));
    return RationalFunction(num, den);
}

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
    if (f.den_ == g.den_) return RationalFunction(f.num_ + g.num_, f.den_);
    return RationalFunction(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RationalFunction operator-(const RationalFunction& f) {
    return RationalFunction(f.num_.scaled(-1), f.den_, RationalFunction::Canonical{});
}

RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) { return f + (-g); }

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
    return RationalFunction(f.num_ * g.num_, f.den_ * g.den_);
}

RationalFunction operator/(const RationalFunction& f, const RationalFunction& g) {
    if (g.is_zero()) throw DivisionByZeroError("division by the zero rational function");
    return RationalFunction(f.num_ * g.den_, f.den_ * g.num_);
}

bool operator==(const RationalFunction& f, const RationalFunction& g) {
    return f.num_ == g.num_ && f.den_ == g.den_;
}

RationalFunction rf_arith(const RationalFunction& f, const RationalFunction& g, RfOp op) {
    switch (op) {
        case RfOp::add:
            return f + g;
        case RfOp::mul:
            return f * g;
        case RfOp::div:
            return f / g;
    }
    throw std::invalid_argument("unknown rational-function operation");
}

bool rf_equal(const RationalFunction& f, const RationalFunction& g, int random_points, std::uint64_t seed) {
    const std::size_t n = std::max(f.num_vars(), g.num_vars());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num_dist(-10000, 10000);
    std::uniform_int_distribution<long> den_dist(1, 10000);
    std::vector<Rational> point(n);
    for (int trial = 0; trial < random_points; ++trial) {
        for (auto& x : point) {
            do {
                x = make_rational(num_dist(rng), den_dist(rng));
            } while (x == 0);
        }
        const Rational fd = f.denominator().evaluate(point);
        const Rational gd = g.denominator().evaluate(point);
        if (fd == 0 || gd == 0) continue;  // pole: reject the point
        if (f.numerator().evaluate(point) * gd != g.numerator().evaluate(point) * fd) return false;
    }
    return f.numerator() * g.denominator() == g.numerator() * f.denominator();
}

}  // namespace plancheck
