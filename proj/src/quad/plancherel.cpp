#include "plancheck/quad/plancherel.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <thread>

#include "plancheck/algebra/errors.hpp"
#include "plancheck/lfactors/l_factors.hpp"

namespace plancheck {

namespace {

/// Pairwise sum in a fixed order.
double tree_sum(std::vector<double>& values) {
    if (values.empty()) return 0.0;
    std::size_t n = values.size();
    while (n > 1) {
        const std::size_t half = (n + 1) / 2;
        for (std::size_t i = 0; i + half < n; ++i) values[i] += values[i + half];
        n = half;
    }
    return values[0];
}

long long int_pow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

void require_rank(int a) {
    if (a < 1 || a > max_quadrature_rank) throw ParameterError("quadrature supports 1 <= a <= 3");
}

double phase(const Weight& root, const TorusPoint& t) {
    double s = 0;
    for (std::size_t i = 0; i < root.size(); ++i) s += root[i] * t.angles[i];
    return 2.0 * std::numbers::pi * s;
}

struct TypeB {
    std::vector<Weight> positive_roots;
    double weyl_order;
};

const TypeB& type_b(int a) {
    static const std::vector<TypeB> table = [] {
        std::vector<TypeB> out;
        for (int r = 1; r <= max_quadrature_rank; ++r) {
            const auto rs = build_root_system(Family::B, r);
            out.push_back({rs.positive_roots(), static_cast<double>(weyl_group_order(rs))});
        }
        return out;
    }();
    require_rank(a);
    return table[static_cast<std::size_t>(a - 1)];
}

/// ∏_{α∈Φ(B_a)} (1 - t^α) / |W(B_a)|, as a product of |1 - t^α|² over positive roots.
double weyl_denominator_over_order(int a, const TorusPoint& t) {
    const TypeB& b = type_b(a);
    double value = 1.0 / b.weyl_order;
    for (const auto& root : b.positive_roots) value *= 2.0 - 2.0 * std::cos(phase(root, t));
    return value;
}

}  // namespace

std::vector<std::complex<double>> TorusPoint::coordinates() const {
    std::vector<std::complex<double>> out;
    for (double x : angles) out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * x));
    return out;
}

void QuadratureSpec::validate() const {
    if (resolution < 8 || (resolution & (resolution - 1)) != 0) {
        throw ParameterError("quadrature resolution must be a power of two >= 8, got " + std::to_string(resolution));
    }
    if (jobs < 1) throw ParameterError("jobs must be positive");
}

double integrate_torus(const TorusFunction& f, int a, const QuadratureSpec& spec) {
    require_rank(a);
    spec.validate();
    const int n = spec.resolution;
    const long long row_size = int_pow(n, a - 1);
    if (row_size * n > max_quadrature_points) throw ParameterError("quadrature grid exceeds 512^3 points");

    std::vector<double> rows(static_cast<std::size_t>(n));
    std::atomic<int> next_row{0};
    auto worker = [&] {
        TorusPoint t{std::vector<double>(static_cast<std::size_t>(a))};
        std::vector<double> values(static_cast<std::size_t>(row_size));
        for (int i = next_row++; i < n; i = next_row++) {
            t.angles[0] = static_cast<double>(i) / n;
            for (long long idx = 0; idx < row_size; ++idx) {
                long long rest = idx;
                for (int d = a - 1; d >= 1; --d) {
                    t.angles[static_cast<std::size_t>(d)] = static_cast<double>(rest % n) / n;
                    rest /= n;
                }
                values[static_cast<std::size_t>(idx)] = f(t);
            }
            rows[static_cast<std::size_t>(i)] = tree_sum(values);
        }
    };
    const int jobs = std::min(spec.jobs, n);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    return tree_sum(rows) / static_cast<double>(row_size * n);
}

QuadratureResult integrate_torus_checked(const TorusFunction& f, int a, const QuadratureSpec& spec,
                                         double tolerance) {
    QuadratureResult r;
    r.resolution = spec.resolution;
    r.value = integrate_torus(f, a, spec);
    QuadratureSpec coarse = spec;
    coarse.resolution = spec.resolution / 2;
    r.coarse_value = coarse.resolution >= 8 ? integrate_torus(f, a, coarse) : r.value;
    r.converged = std::abs(r.value - r.coarse_value) <= tolerance * std::max(1.0, std::abs(r.value));
    return r;
}

double macdonald_density(int a, long q, const TorusPoint& t) {
    if (q < 2) throw ParameterError("q must be at least 2");
    if (t.rank() != a) throw ParameterError("torus point has wrong rank");
    const double c = 1.0 / static_cast<double>(q);
    double value = weyl_denominator_over_order(a, t) / std::pow(1.0 - c, a);
    for (const auto& root : type_b(a).positive_roots) {
        value /= 1.0 - 2.0 * c * std::cos(phase(root, t)) + c * c;
    }
    return value;
}

std::complex<double> macdonald_density_complex(int a, long q, const TorusPoint& t) {
    const auto param = SatakeParam::numeric(t.coordinates());
    const auto ad = std::get<std::complex<double>>(l_factor(adjoint_char(Family::B, a), 1, param, q));
    const auto g_mod_a = std::get<std::complex<double>>(l_factor(g_mod_a_char(Family::B, a), 0, param, q));
    const auto order = static_cast<double>(weyl_group_order(build_root_system(Family::B, a)));
    return ad / g_mod_a / order;
}

double slice_density(const GradedCharacter& slice, long q, const TorusPoint& t) {
    const int a = slice.rank();
    if (t.rank() != a) throw ParameterError("torus point has wrong rank");
    const auto param = SatakeParam::numeric(t.coordinates());
    const auto l = std::get<std::complex<double>>(graded_l_value(slice, param, q));
    return weyl_denominator_over_order(a, t) * l.real();
}

Rational residue_mass_rank1(const Rational& c) {
    if (c <= 0 || c >= 1) throw ParameterError("residue oracle needs 0 < c < 1");
    // Residues of the integrand at t = c and t = 0, halved.
    const Rational at_c = -1 / (c * (1 + c));
    const Rational at_zero = 1 / (c * (1 - c));
    return (at_c + at_zero) / 2;
}

double plancherel_mass(int a, long q, const QuadratureSpec& spec) {
    return integrate_torus([a, q](const TorusPoint& t) { return macdonald_density(a, q, t); }, a, spec);
}

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) throw std::runtime_error("float formatting failed");
    return std::string(buf, end);
}

void write_density_csv(std::ostream& out, int a, int resolution, const TorusFunction& density) {
    require_rank(a);
    QuadratureSpec{resolution, 1}.validate();
    for (int d = 1; d <= a; ++d) out << "theta_" << d << ",";
    out << "density\n";
    const long long total = int_pow(resolution, a);
    TorusPoint t{std::vector<double>(static_cast<std::size_t>(a))};
    for (long long idx = 0; idx < total; ++idx) {
        long long rest = idx;
        for (int d = a - 1; d >= 0; --d) {
            t.angles[static_cast<std::size_t>(d)] = static_cast<double>(rest % resolution) / resolution;
            rest /= resolution;
        }
        for (double x : t.angles) out << format_double(x) << ",";
        out << format_double(density(t)) << "\n";
    }
}

}  // namespace plancheck
