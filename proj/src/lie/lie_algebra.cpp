#include "plancheck/lie/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "plancheck/algebra/errors.hpp"

namespace plancheck {

namespace {

using Entry = std::pair<std::size_t, std::size_t>;

QVector matrix_times(const QMatrix& x, const QVector& v) {
    QVector out(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (x(i, j) != 0 && v[j] != 0) out[i] += x(i, j) * v[j];
        }
    }
    return out;
}

/// Basis of the subspace of span(xs) cut out by the linear conditions
/// `conditions(x)` = 0, each returning a vector of values.
template <typename Conditions>
std::vector<QMatrix> subspace_where(const std::vector<QMatrix>& xs, Conditions conditions) {
    if (xs.empty()) return {};
    std::vector<QVector> columns;
    for (const auto& x : xs) columns.push_back(conditions(x));
    if (columns[0].empty()) return xs;
    std::vector<QMatrix> out;
    for (const auto& c : kernel(from_columns(columns))) out.push_back(combine(xs, c));
    return out;
}

/// Rank of the projection of span(xs) onto the given matrix entries.
std::size_t projected_rank(const std::vector<QMatrix>& xs, const std::vector<Entry>& entries) {
    if (xs.empty() || entries.empty()) return 0;
    QMatrix m(xs.size(), entries.size());
    for (std::size_t r = 0; r < xs.size(); ++r) {
        for (std::size_t c = 0; c < entries.size(); ++c) m(r, c) = xs[r](entries[c].first, entries[c].second);
    }
    return rank(std::move(m));
}

/// Independent spanning set of span(xs) restricted to the given entries.
std::vector<QMatrix> projected_basis(const std::vector<QMatrix>& xs, const std::vector<Entry>& entries, std::size_t n) {
    if (xs.empty() || entries.empty()) return {};
    QMatrix m(xs.size(), entries.size());
    for (std::size_t r = 0; r < xs.size(); ++r) {
        for (std::size_t c = 0; c < entries.size(); ++c) m(r, c) = xs[r](entries[c].first, entries[c].second);
    }
    const auto pivots = row_reduce(m);
    std::vector<QMatrix> out;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        QMatrix x(n, n);
        for (std::size_t c = 0; c < entries.size(); ++c) x(entries[c].first, entries[c].second) = m(r, c);
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<Entry> entries_of_weight(const std::vector<int>& h, int weight) {
    std::vector<Entry> out;
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = 0; j < h.size(); ++j) {
            if (h[i] - h[j] == weight) out.emplace_back(i, j);
        }
    }
    return out;
}

/// E_ij - E_{N-1-j,N-1-i}: spans so_N for the antidiagonal Gram matrix.
QMatrix so_unit(std::size_t n, std::size_t i, std::size_t j) {
    return QMatrix::unit(n, i, j) - QMatrix::unit(n, n - 1 - j, n - 1 - i);
}

/// Projection A ↦ (A - J^{-1} A^T J)/2 onto the isometry algebra of J.
QMatrix project_to(const MatrixLieAlgebra& alg, const QMatrix& a) {
    // J^{-1} = J^T for both Gram matrices used here.
    QMatrix adj = alg.gram.transpose() * a.transpose() * alg.gram;
    return Rational(1, 2) * (a - adj);
}

struct HookTriple {
    Sl2Triple triple;
    /// Basis of the sl2-irreducible summand of the standard space carrying the hook part.
    std::vector<QVector> string_vectors;
};

HookTriple build_hook_triple(const MatrixLieAlgebra& alg, const Partition& p) {
    if (!p.is_valid() || p.flavor != alg.flavor || p.size() != alg.N) {
        throw ParameterError("invalid partition " + p.to_string() + " for this algebra");
    }
    if (!p.is_hook()) throw ParameterError("only hook-type partitions are supported: " + p.to_string());
    const auto n = static_cast<std::size_t>(alg.N);
    const int m = p.parts[0];
    HookTriple out;
    out.triple = {QMatrix(n, n), QMatrix(n, n), QMatrix(n, n)};
    if (m == 1) {
        if (alg.flavor == Flavor::orthogonal) {
            QVector v0(n);
            if (n % 2 == 0) {
                v0[n / 2 - 1] = 1;
                v0[n / 2] = 1;
            } else {
                v0[n / 2] = 1;
            }
            out.string_vectors.push_back(v0);
        }
        return out;
    }

    std::vector<int> h(n, 0);
    QMatrix e(n, n);
    auto basis_vector = [n](std::size_t i) {
        QVector v(n);
        v[i] = 1;
        return v;
    };
    if (alg.flavor == Flavor::orthogonal) {
        const auto r = static_cast<std::size_t>((m - 1) / 2);
        for (std::size_t q = 0; q < r; ++q) {
            h[q] = static_cast<int>(2 * (r - q));
            h[n - 1 - q] = -h[q];
        }
        for (std::size_t q = 0; q + 1 < r; ++q) e += so_unit(n, q, q + 1);
        QVector v0(n);
        if (n % 2 == 0) {
            e += so_unit(n, r - 1, n / 2 - 1);
            e += so_unit(n, r - 1, n / 2);
            v0[n / 2 - 1] = 1;
            v0[n / 2] = 1;
        } else {
            e += so_unit(n, r - 1, n / 2);
            v0[n / 2] = 1;
        }
        for (std::size_t q = 0; q < r; ++q) out.string_vectors.push_back(basis_vector(q));
        out.string_vectors.push_back(v0);
        for (std::size_t q = 0; q < r; ++q) out.string_vectors.push_back(basis_vector(n - 1 - q));
    } else {
        const auto r = static_cast<std::size_t>(m / 2);
        for (std::size_t q = 0; q < r; ++q) {
            h[q] = static_cast<int>(2 * (r - q) - 1);
            h[n - 1 - q] = -h[q];
        }
        for (std::size_t q = 0; q + 1 < r; ++q) e += Rational(2) * project_to(alg, QMatrix::unit(n, q, q + 1));
        e += QMatrix::unit(n, r - 1, n - r);
        for (std::size_t q = 0; q < r; ++q) out.string_vectors.push_back(basis_vector(q));
        for (std::size_t q = 0; q < r; ++q) out.string_vectors.push_back(basis_vector(n - 1 - q));
    }

    const QMatrix hm = QMatrix::diagonal(h);
    // f is the unique element of g_{-2} with [e, f] = h.
    auto minus_two = projected_basis(alg.basis, entries_of_weight(h, -2), n);
    std::vector<QVector> columns;
    for (const auto& y : minus_two) columns.push_back(commutator(e, y).flat());
    auto c = solve(from_columns(columns), hm.flat());
    if (!c) throw std::logic_error("no sl2 partner f for partition " + p.to_string());
    out.triple = {e, hm, combine(minus_two, *c)};
    if (!out.triple.relations_hold()) throw std::logic_error("sl2 relations fail for " + p.to_string());
    return out;
}

}  // namespace

int Partition::size() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

bool Partition::is_valid() const {
    if (parts.empty()) return false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1 || (i > 0 && parts[i] > parts[i - 1])) return false;
    }
    std::map<int, int> mult;
    for (int x : parts) ++mult[x];
    const int bad_parity = flavor == Flavor::orthogonal ? 0 : 1;
    for (const auto& [part, count] : mult) {
        if (part % 2 == bad_parity && count % 2 != 0) return false;
    }
    return true;
}

bool Partition::is_hook() const {
    return std::all_of(parts.begin() + (parts.empty() ? 0 : 1), parts.end(), [](int x) { return x == 1; });
}

std::vector<int> Partition::transpose() const {
    std::vector<int> out;
    if (parts.empty()) return out;
    for (int j = 1; j <= parts[0]; ++j) {
        out.push_back(static_cast<int>(std::count_if(parts.begin(), parts.end(), [j](int x) { return x >= j; })));
    }
    return out;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
    out << "]";
    return out.str();
}

Partition hook_partition(int m, int n, Flavor flavor) {
    if (m < 1 || m > n) throw ParameterError("invalid hook [" + std::to_string(m) + ", 1^...] of size " + std::to_string(n));
    Partition p{{m}, flavor};
    p.parts.insert(p.parts.end(), static_cast<std::size_t>(n - m), 1);
    return p;
}

int centralizer_dimension_formula(const Partition& p) {
    int squares = 0;
    for (int x : p.transpose()) squares += x * x;
    const int odd = static_cast<int>(std::count_if(p.parts.begin(), p.parts.end(), [](int x) { return x % 2 != 0; }));
    return p.flavor == Flavor::orthogonal ? (squares - odd) / 2 : (squares + odd) / 2;
}

bool MatrixLieAlgebra::contains(const QMatrix& x) const {
    return (x.transpose() * gram + gram * x).is_zero();
}

QVector MatrixLieAlgebra::coordinates(const QMatrix& x) const {
    std::vector<QVector> columns;
    for (const auto& b : basis) columns.push_back(b.flat());
    auto c = solve(from_columns(columns), x.flat());
    if (!c) throw ParameterError("matrix is not in the algebra");
    return *c;
}

MatrixLieAlgebra build_algebra(Flavor flavor, int N) {
    if (N < 2 || (flavor == Flavor::symplectic && N % 2 != 0)) {
        throw ParameterError("invalid dimension " + std::to_string(N));
    }
    const auto n = static_cast<std::size_t>(N);
    MatrixLieAlgebra alg{flavor, N, QMatrix(n, n), {}};
    for (std::size_t i = 0; i < n; ++i) {
        alg.gram(i, n - 1 - i) = (flavor == Flavor::symplectic && i >= n / 2) ? -1 : 1;
    }
    if (flavor == Flavor::orthogonal) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; i + j + 2 <= n; ++j) alg.basis.push_back(so_unit(n, i, j));
        }
        return alg;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // P(E_ij) and P(E_{N-1-j,N-1-i}) agree up to sign; keep one of each pair.
            const std::size_t ii = n - 1 - j, jj = n - 1 - i;
            if (std::make_pair(ii, jj) < std::make_pair(i, j)) continue;
            alg.basis.push_back(Rational(2) * project_to(alg, QMatrix::unit(n, i, j)));
        }
    }
    return alg;
}

bool Sl2Triple::relations_hold() const {
    return h.is_diagonal() && commutator(h, e) == Rational(2) * e && commutator(h, f) == Rational(-2) * f &&
           commutator(e, f) == h;
}

std::vector<int> Sl2Triple::h_weights() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        if (h(i, i).get_den() != 1) throw std::logic_error("non-integral h");
        out.push_back(static_cast<int>(h(i, i).get_num().get_si()));
    }
    return out;
}

Sl2Triple sl2_from_partition(const MatrixLieAlgebra& alg, const Partition& p) {
    return build_hook_triple(alg, p).triple;
}

std::vector<int> jordan_type(const QMatrix& nilpotent) {
    const std::size_t n = nilpotent.rows();
    std::vector<std::size_t> ranks{n};
    QMatrix power = QMatrix::identity(n);
    while (ranks.back() > 0) {
        power = power * nilpotent;
        const std::size_t r = rank(power);
        if (r == ranks.back()) throw std::invalid_argument("matrix is not nilpotent");
        ranks.push_back(r);
    }
    // at_least[j] = number of blocks of size >= j+1
    std::vector<int> parts;
    for (std::size_t j = 1; j < ranks.size(); ++j) {
        const std::size_t at_least = ranks[j - 1] - ranks[j];
        const std::size_t longer = j + 1 < ranks.size() ? ranks[j] - ranks[j + 1] : 0;
        parts.insert(parts.end(), at_least - longer, static_cast<int>(j));
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

std::map<int, int> grading_decomposition(const MatrixLieAlgebra& alg, const QMatrix& h) {
    const auto n = static_cast<std::size_t>(alg.N);
    std::vector<int> diag;
    for (std::size_t i = 0; i < n; ++i) diag.push_back(static_cast<int>(h(i, i).get_num().get_si()));
    std::set<int> weights;
    for (int x : diag) {
        for (int y : diag) weights.insert(x - y);
    }
    std::map<int, int> out;
    for (int w : weights) {
        const auto d = projected_rank(alg.basis, entries_of_weight(diag, w));
        if (d > 0) out[w] = static_cast<int>(d);
    }
    return out;
}

std::vector<QMatrix> centralizer(const MatrixLieAlgebra& alg, const QMatrix& e) {
    return subspace_where(alg.basis, [&](const QMatrix& x) { return commutator(e, x).flat(); });
}

void require_hook_range(int k, int a) {
    if (a < 1 || a > k - 1) {
        throw ParameterError("require 1 <= a <= k-1 (got k=" + std::to_string(k) + ", a=" + std::to_string(a) + ")");
    }
}

GradedCharacter slice_V_X(int k, int a) {
    require_hook_range(k, a);
    const int N = 2 * k;
    const auto n = static_cast<std::size_t>(N);
    const auto r = static_cast<std::size_t>(k - a - 1);
    const MatrixLieAlgebra g = build_algebra(Flavor::orthogonal, N);
    const HookTriple hook = build_hook_triple(g, hook_partition(2 * k - 2 * a - 1, N, Flavor::orthogonal));
    const std::vector<int> h = hook.triple.h_weights();

    // so(W): isometries of the trivial isotypic part W, i.e. elements killing the hook string.
    const auto so_w = subspace_where(g.basis, [&](const QMatrix& x) {
        QVector values;
        for (const auto& s : hook.string_vectors) {
            auto image = matrix_times(x, s);
            values.insert(values.end(), image.begin(), image.end());
        }
        return values;
    });
    if (so_w.size() != static_cast<std::size_t>(a * (2 * a + 1))) {
        throw std::logic_error("embedded so_{2a+1} has dimension " + std::to_string(so_w.size()));
    }

    const auto g_e = centralizer(g, hook.triple.e);
    const auto v_x = subspace_where(g_e, [&](const QMatrix& x) {
        QVector values;
        for (const auto& y : so_w) values.push_back(trace_pairing(x, y));
        return values;
    });

    // Cartan torus of so(W): H_p = E_pp - E_{N-1-p,N-1-p}, p = r..k-2, coordinate p - r.
    auto torus_weight = [&](std::size_t i) {
        Weight w(static_cast<std::size_t>(a), 0);
        for (std::size_t p = r; p + 2 <= static_cast<std::size_t>(k); ++p) {
            if (i == p) w[p - r] += 1;
            if (i == n - 1 - p) w[p - r] -= 1;
        }
        return w;
    };
    std::map<std::pair<Weight, int>, std::vector<Entry>> keyed;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Weight w = torus_weight(i);
            const Weight wj = torus_weight(j);
            for (std::size_t c = 0; c < w.size(); ++c) w[c] -= wj[c];
            keyed[{w, h[i] - h[j] + 2}].emplace_back(i, j);
        }
    }
    GradedCharacter out(a);
    std::size_t total = 0;
    for (const auto& [key, entries] : keyed) {
        const auto mult = projected_rank(v_x, entries);
        if (mult == 0) continue;
        if (key.second % 2 != 0) throw std::logic_error("slice has a summand in odd grade " + std::to_string(key.second));
        out.add(key.first, key.second, static_cast<int>(mult));
        total += mult;
    }
    if (total != v_x.size()) throw std::logic_error("slice is not a sum of torus/grade weight spaces");
    return out;
}

std::vector<int> rho_L_of_X(int k, int a) {
    require_hook_range(k, a);
    std::vector<int> out(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k - a - 1; ++i) out[static_cast<std::size_t>(i)] = k - a - 1 - i;
    return out;
}

HookCase x_geometry(int k, int a) {
    require_hook_range(k, a);
    HookCase c;
    c.k = k;
    c.a = a;
    c.gamma = hook_partition(2 * a - 1, 2 * k, Flavor::orthogonal);
    c.gamma_dual = hook_partition(2 * k - 2 * a - 1, 2 * k, Flavor::orthogonal);
    const MatrixLieAlgebra g = build_algebra(Flavor::orthogonal, 2 * k);
    const Sl2Triple t = sl2_from_partition(g, c.gamma);
    for (const auto& [w, d] : grading_decomposition(g, t.h)) {
        if (w > 0) c.dimU += d;
    }
    c.dimL = (2 * k - 2 * a + 1) * (2 * k - 2 * a) / 2;
    c.dimX = k * (2 * k - 1) - c.dimL - c.dimU;
    return c;
}

}  // namespace plancheck
