#include "plancheck/count/point_count.hpp"

#include <cmath>
#include <functional>

#include "plancheck/algebra/errors.hpp"
#include "plancheck/lfactors/l_factors.hpp"
#include "plancheck/lie/lie_algebra.hpp"

namespace plancheck {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

bool is_orthogonal_group(GroupFamily f) { return f == GroupFamily::O_odd || f == GroupFamily::O_even_split; }

/// |G| = q^{power} · ∏_{d} (q^d - 1) in terms of u = q^{-1/2}.
LaurentPoly order_in_u(int power, const std::vector<int>& factors) {
    LaurentPoly out = LaurentPoly::variable(0, 1, -2 * power);
    for (int d : factors) out *= LaurentPoly::variable(0, 1, -2 * d) - LaurentPoly(1, 1);
    return out;
}

/// (q-power, list of d in ∏(q^d - 1)) for the connected group.
std::pair<int, std::vector<int>> order_data(GroupFamily family, int r) {
    std::vector<int> factors;
    switch (family) {
        case GroupFamily::Sp:
        case GroupFamily::SO_odd:
        case GroupFamily::O_odd:
            for (int j = 1; j <= r; ++j) factors.push_back(2 * j);
            return {r * r, factors};
        case GroupFamily::SO_even_split:
        case GroupFamily::O_even_split:
            factors.push_back(r);
            for (int j = 1; j <= r - 1; ++j) factors.push_back(2 * j);
            return {r * (r - 1), factors};
    }
    throw std::logic_error("unknown group family");
}

long long mod(long long x, long q) {
    x %= q;
    return x < 0 ? x + q : x;
}

long long determinant_mod(std::vector<std::vector<long long>> m, long q) {
    const std::size_t n = m.size();
    long long det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = mod(-det, q);
        }
        det = mod(det * m[c][c], q);
        long long inv = 1;
        for (long long x = m[c][c], e = q - 2; e > 0; e >>= 1, x = x * x % q) {
            if (e & 1) inv = inv * x % q;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            const long long f = m[i][c] * inv % q;
            for (std::size_t j = c; j < n; ++j) m[i][j] = mod(m[i][j] - f * m[c][j], q);
        }
    }
    return det;
}

}  // namespace

std::string group_family_name(GroupFamily f) {
    switch (f) {
        case GroupFamily::Sp:
            return "Sp";
        case GroupFamily::SO_odd:
            return "SO_odd";
        case GroupFamily::SO_even_split:
            return "SO_even_split";
        case GroupFamily::O_odd:
            return "O_odd";
        case GroupFamily::O_even_split:
            return "O_even_split";
    }
    return "?";
}

bool is_odd_prime_power(long q) {
    if (q < 3 || q % 2 == 0) return false;
    long p = 3;
    while (q % p != 0) p += 2;
    while (q % p == 0) q /= p;
    return q == 1 && is_prime(p);
}

int GroupSpec::matrix_size() const {
    switch (family) {
        case GroupFamily::Sp:
        case GroupFamily::SO_even_split:
        case GroupFamily::O_even_split:
            return 2 * rank;
        case GroupFamily::SO_odd:
        case GroupFamily::O_odd:
            return 2 * rank + 1;
    }
    return 0;
}

int GroupSpec::dimension() const {
    const int n = matrix_size();
    return family == GroupFamily::Sp ? n * (n + 1) / 2 : n * (n - 1) / 2;
}

void GroupSpec::validate() const {
    if (!is_odd_prime_power(q)) throw ParameterError("q must be an odd prime power >= 3, got " + std::to_string(q));
    const bool even = family == GroupFamily::SO_even_split || family == GroupFamily::O_even_split;
    const int min_rank = (family == GroupFamily::Sp || even) ? 1 : 0;
    if (rank < min_rank) throw ParameterError("invalid rank for " + group_family_name(family));
}

Integer group_order(const GroupSpec& spec) {
    spec.validate();
    const auto [power, factors] = order_data(spec.family, spec.rank);
    const Integer q(spec.q);
    Integer out = ipow(q, static_cast<unsigned long>(power));
    for (int d : factors) out *= ipow(q, static_cast<unsigned long>(d)) - 1;
    return is_orthogonal_group(spec.family) ? Integer(2 * out) : out;
}

Rational tamagawa_volume(const GroupSpec& spec) {
    return Rational(group_order(spec)) / Rational(ipow(Integer(spec.q), static_cast<unsigned long>(spec.dimension())));
}

LaurentPoly group_order_symbolic(GroupFamily family, int rank) {
    const auto [power, factors] = order_data(family, rank);
    LaurentPoly out = order_in_u(power, factors);
    return is_orthogonal_group(family) ? out.scaled(2) : out;
}

Rational x_point_count(int k, int a, long q) {
    const HookCase c = x_geometry(k, a);
    const Integer g = group_order({GroupFamily::O_even_split, k, q});
    const Integer l = group_order({GroupFamily::O_odd, k - a, q});
    return Rational(g) / Rational(l * ipow(Integer(q), static_cast<unsigned long>(c.dimU)));
}

Rational x_volume_renormalized(int k, int a, long q) {
    const HookCase c = x_geometry(k, a);
    return motive_delta(Family::D, k, q) * x_point_count(k, a, q) /
           Rational(ipow(Integer(q), static_cast<unsigned long>(c.dimX)));
}

RationalFunction x_point_count_symbolic(int k, int a) {
    const HookCase c = x_geometry(k, a);
    const LaurentPoly g = group_order_symbolic(GroupFamily::O_even_split, k);
    const LaurentPoly l = group_order_symbolic(GroupFamily::O_odd, k - a);
    return RationalFunction(g, l * LaurentPoly::variable(0, 1, -2 * c.dimU));
}

RationalFunction x_volume_renormalized_symbolic(int k, int a) {
    const HookCase c = x_geometry(k, a);
    return motive_delta_symbolic(Family::D, k) * x_point_count_symbolic(k, a) *
           RationalFunction(LaurentPoly::variable(0, 1, 2 * c.dimX));
}

std::vector<std::vector<int>> split_gram(GroupFamily family, int rank) {
    const int n = GroupSpec{family, rank, 3}.matrix_size();
    std::vector<std::vector<int>> j(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        j[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - 1 - i)] =
            (family == GroupFamily::Sp && i >= n / 2) ? -1 : 1;
    }
    return j;
}

long long brute_force_order(const std::vector<std::vector<int>>& gram, long q, bool determinant_one) {
    if (!is_prime(q)) throw ParameterError("brute force needs a prime field");
    const std::size_t n = gram.size();
    if (n == 0 || static_cast<double>(n * n) * std::log(static_cast<double>(q)) > std::log(5e7)) {
        throw ParameterError("brute force size cap exceeded (q^{N^2} > 5e7)");
    }
    std::vector<std::vector<long long>> J(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) J[i][j] = mod(gram[i][j], q);
    }
    long long vectors = 1;
    for (std::size_t i = 0; i < n; ++i) vectors *= q;

    // columns[j] is the j-th column of g; g^T J g = J means B(col_i, col_j) = J_ij.
    std::vector<std::vector<long long>> columns(n, std::vector<long long>(n));
    auto form = [&](const std::vector<long long>& x, const std::vector<long long>& y) {
        long long s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) s += x[i] * J[i][j] * y[j];
        }
        return mod(s, q);
    };
    long long count = 0;
    std::function<void(std::size_t)> extend = [&](std::size_t c) {
        if (c == n) {
            if (determinant_one) {
                std::vector<std::vector<long long>> g(n, std::vector<long long>(n));
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) g[i][j] = columns[j][i];
                }
                if (determinant_mod(g, q) != 1) return;
            }
            ++count;
            return;
        }
        for (long long code = 0; code < vectors; ++code) {
            long long rest = code;
            for (std::size_t i = 0; i < n; ++i) {
                columns[c][i] = rest % q;
                rest /= q;
            }
            bool ok = form(columns[c], columns[c]) == J[c][c];
            for (std::size_t i = 0; ok && i < c; ++i) {
                ok = form(columns[i], columns[c]) == J[i][c] && form(columns[c], columns[i]) == J[c][i];
            }
            if (ok) extend(c + 1);
        }
    };
    extend(0);
    return count;
}

}  // namespace plancheck
