#include "plancheck/algebra/rational.hpp"

#include <stdexcept>

namespace plancheck {

Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    if (r.get_den() == 0) {
        throw std::domain_error("zero denominator in '" + text + "'");
    }
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) { return r.get_str(); }

Integer ipow(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational pow(const Rational& base, long exp) {
    if (exp >= 0) {
        Rational out(ipow(base.get_num(), static_cast<unsigned long>(exp)),
                     ipow(base.get_den(), static_cast<unsigned long>(exp)));
        out.canonicalize();
        return out;
    }
    if (base == 0) {
        throw std::domain_error("zero raised to a negative power");
    }
    const auto e = static_cast<unsigned long>(-exp);
    Rational out(ipow(base.get_den(), e), ipow(base.get_num(), e));
    out.canonicalize();
    return out;
}

double to_double(const Rational& r) { return r.get_d(); }

bool exact_sqrt(const Rational& r, Rational& root) {
    if (r < 0) return false;
    const Integer& num = r.get_num();
    const Integer& den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return false;
    }
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), den.get_mpz_t());
    root = Rational(n, d);
    root.canonicalize();
    return true;
}

}  // namespace plancheck
