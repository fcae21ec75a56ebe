#include "plancheck/algebra/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "plancheck/algebra/errors.hpp"

namespace plancheck {

std::string variable_name(std::size_t index) {
    return index == 0 ? std::string("u") : "t" + std::to_string(index);
}

namespace {

std::size_t parse_variable_index(const std::string& name) {
    if (name == "u") return 0;
    if (name.size() >= 2 && name[0] == 't' &&
        std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c); })) {
        const auto idx = std::stoul(name.substr(1));
        if (idx == 0) throw std::invalid_argument("variable t0 does not exist");
        return idx;
    }
    throw std::invalid_argument("unknown variable '" + name + "'");
}

template <typename T>
T int_power(T base, int exp, const T& one) {
    if (exp < 0) {
        base = one / base;
        exp = -exp;
    }
    T out = one;
    while (exp > 0) {
        if (exp & 1) out *= base;
        base *= base;
        exp >>= 1;
    }
    return out;
}

}  // namespace

LaurentPoly::LaurentPoly(std::size_t num_vars, const Rational& constant) : num_vars_(num_vars) {
    if (constant != 0) terms_.emplace(Exponent(num_vars, 0), constant);
}

LaurentPoly LaurentPoly::monomial(Exponent exponent, const Rational& coeff) {
    LaurentPoly p(exponent.size());
    if (coeff != 0) p.terms_.emplace(std::move(exponent), coeff);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t index, std::size_t num_vars, int power) {
    if (index >= num_vars) throw std::out_of_range("variable index out of range");
    Exponent e(num_vars, 0);
    e[index] = power;
    return monomial(std::move(e));
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentPoly::is_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
        return std::all_of(t.first.begin(), t.first.end(), [](int x) { return x >= 0; });
    });
}

Rational LaurentPoly::coefficient(const Exponent& exponent) const {
    Exponent key = exponent;
    key.resize(std::max(key.size(), num_vars_), 0);
    if (key.size() > num_vars_ &&
        std::any_of(key.begin() + static_cast<long>(num_vars_), key.end(), [](int x) { return x != 0; })) {
        return 0;
    }
    key.resize(num_vars_);
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::constant_term() const { return coefficient(Exponent(num_vars_, 0)); }

const Exponent& LaurentPoly::leading_exponent() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const Rational& LaurentPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

Exponent LaurentPoly::min_exponents() const {
    Exponent out(num_vars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < num_vars_; ++i) out[i] = first ? e[i] : std::min(out[i], e[i]);
        first = false;
    }
    return out;
}

Exponent LaurentPoly::max_exponents() const {
    Exponent out(num_vars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < num_vars_; ++i) out[i] = first ? e[i] : std::max(out[i], e[i]);
        first = false;
    }
    return out;
}

void LaurentPoly::widen(std::size_t num_vars) {
    if (num_vars <= num_vars_) return;
    TermMap widened;
    for (auto& [e, c] : terms_) {
        Exponent w = e;
        w.resize(num_vars, 0);
        widened.emplace(std::move(w), c);
    }
    terms_ = std::move(widened);
    num_vars_ = num_vars;
}

LaurentPoly LaurentPoly::padded(std::size_t num_vars) const {
    if (num_vars < num_vars_) throw std::invalid_argument("cannot drop variables by padding");
    LaurentPoly out = *this;
    out.widen(num_vars);
    return out;
}

void LaurentPoly::add_term(const Exponent& exponent, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::times_monomial(const Exponent& shift) const {
    const std::size_t n = std::max(num_vars_, shift.size());
    LaurentPoly out(n);
    for (const auto& [e, c] : terms_) {
        Exponent s(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = (i < e.size() ? e[i] : 0) + (i < shift.size() ? shift[i] : 0);
        }
        out.terms_.emplace(std::move(s), c);
    }
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& factor) const {
    if (factor == 0) return LaurentPoly(num_vars_);
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c *= factor;
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly out(num_vars_, 1);
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1U) out *= base;
        n >>= 1U;
        if (n > 0) base *= base;
    }
    return out;
}

LaurentPoly LaurentPoly::substitute_signed_permutation(std::size_t first_var, std::span<const int> perm,
                                                       std::span<const int> signs) const {
    if (perm.size() != signs.size()) throw std::invalid_argument("permutation/sign length mismatch");
    const std::size_t n = std::max(num_vars_, first_var + perm.size());
    LaurentPoly out(n);
    for (const auto& [e, c] : terms_) {
        Exponent src = e;
        src.resize(n, 0);
        Exponent dst = src;
        for (std::size_t i = 0; i < perm.size(); ++i) dst[first_var + i] = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            dst[first_var + static_cast<std::size_t>(perm[i])] += signs[i] * src[first_var + i];
        }
        out.add_term(dst, c);
    }
    return out;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZeroError("division by the zero polynomial");
    const std::size_t n = std::max(num_vars_, divisor.num_vars_);
    LaurentPoly rem = padded(n);
    const LaurentPoly d = divisor.padded(n);
    if (!rem.is_polynomial() || !d.is_polynomial()) {
        throw std::invalid_argument("divide_exact requires polynomials");
    }
    const Exponent& lead = d.leading_exponent();
    const Rational& lead_c = d.leading_coefficient();
    LaurentPoly quotient(n);
    while (!rem.is_zero()) {
        const Exponent& re = rem.leading_exponent();
        Exponent shift(n);
        for (std::size_t i = 0; i < n; ++i) {
            shift[i] = re[i] - lead[i];
            if (shift[i] < 0) return std::nullopt;
        }
        const Rational factor = rem.leading_coefficient() / lead_c;
        quotient.add_term(shift, factor);
        rem -= d.times_monomial(shift).scaled(factor);
    }
    return quotient;
}

Rational LaurentPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() < num_vars_) throw std::invalid_argument("evaluation point misses variables");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < num_vars_; ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0 && point[i] == 0) throw PoleError("negative power of a variable set to zero");
            term *= plancheck::pow(point[i], e[i]);
        }
        sum += term;
    }
    return sum;
}

std::complex<double> LaurentPoly::evaluate(std::span<const std::complex<double>> point) const {
    if (point.size() < num_vars_) throw std::invalid_argument("evaluation point misses variables");
    const std::complex<double> one(1.0, 0.0);
    std::complex<double> sum(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> term(c.get_d(), 0.0);
        for (std::size_t i = 0; i < num_vars_; ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0 && point[i] == 0.0) throw PoleError("negative power of a variable set to zero");
            term *= int_power(point[i], e[i], one);
        }
        sum += term;
    }
    return sum;
}

Rational LaurentPoly::evaluate_q(const Rational& q, std::span<const Rational> t) const {
    if (q <= 0) throw std::domain_error("q must be positive");
    if (t.size() + 1 < num_vars_) throw std::invalid_argument("evaluation point misses variables");
    Rational sqrt_q;
    const bool square = exact_sqrt(q, sqrt_q);
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        if (num_vars_ > 0 && e[0] != 0) {
            if (e[0] % 2 == 0) {
                term *= plancheck::pow(q, -e[0] / 2);
            } else if (square) {
                term *= plancheck::pow(sqrt_q, -e[0]);
            } else {
                throw std::domain_error("odd power of u = q^{-1/2} is irrational for q = " + q.get_str());
            }
        }
        for (std::size_t i = 1; i < num_vars_; ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0 && t[i - 1] == 0) throw PoleError("negative power of a variable set to zero");
            term *= plancheck::pow(t[i - 1], e[i]);
        }
        sum += term;
    }
    return sum;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.get_str();
        for (std::size_t i = 0; i < num_vars_; ++i) {
            const int x = it->first[i];
            if (x == 0) continue;
            os << '*' << variable_name(i);
            if (x != 1) os << '^' << x;
        }
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text, std::size_t num_vars) {
    std::vector<std::pair<Exponent, Rational>> parsed;
    std::size_t width = num_vars;
    std::size_t pos = 0;
    bool negate = false;
    auto strict_int = [](const std::string& s) {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad exponent '" + s + "'");
        return v;
    };
    while (pos <= text.size()) {
        const std::size_t plus = text.find(" + ", pos), minus = text.find(" - ", pos);
        const std::size_t next = std::min(plus, minus);
        std::string term = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (term.empty()) throw std::invalid_argument("empty term in polynomial text");
        Rational coeff = negate ? -1 : 1;
        if (term[0] == '-' && term.size() > 1 && std::isalpha(static_cast<unsigned char>(term[1]))) {
            coeff = -coeff;
            term.erase(0, 1);
        }
        Exponent e;
        std::stringstream ts(term);
        std::string factor;
        bool first = true;
        while (std::getline(ts, factor, '*')) {
            if (factor.empty()) throw std::invalid_argument("empty factor in '" + term + "'");
            if (first && !std::isalpha(static_cast<unsigned char>(factor[0]))) {
                coeff *= parse_rational(factor);
            } else {
                const auto caret = factor.find('^');
                const auto idx = parse_variable_index(factor.substr(0, caret));
                const int power = caret == std::string::npos ? 1 : strict_int(factor.substr(caret + 1));
                if (e.size() <= idx) e.resize(idx + 1, 0);
                e[idx] += power;
            }
            first = false;
        }
        width = std::max(width, e.size());
        parsed.emplace_back(std::move(e), coeff);
        if (next == std::string::npos) break;
        negate = next == minus;
        pos = next + 3;
    }
    LaurentPoly out(width);
    for (auto& [e, c] : parsed) {
        if (c == 0) continue;
        e.resize(width, 0);
        out.add_term(e, c);
    }
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    widen(other.num_vars_);
    if (other.num_vars_ == num_vars_) {
        for (const auto& [e, c] : other.terms_) add_term(e, c);
    } else {
        for (const auto& [e, c] : other.terms_) {
            Exponent w = e;
            w.resize(num_vars_, 0);
            add_term(w, c);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += other.scaled(-1); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    const std::size_t n = std::max(a.num_vars_, b.num_vars_);
    LaurentPoly out(n);
    Exponent e(n);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) {
                e[i] = (i < ea.size() ? ea[i] : 0) + (i < eb.size() ? eb[i] : 0);
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.num_vars_ == b.num_vars_) return a.terms_ == b.terms_;
    const std::size_t n = std::max(a.num_vars_, b.num_vars_);
    return a.padded(n).terms_ == b.padded(n).terms_;
}

}  // namespace plancheck
