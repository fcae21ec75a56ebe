#include "plancheck/verify/suite.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

#include "plancheck/algebra/errors.hpp"
#include "plancheck/count/point_count.hpp"
#include "plancheck/lfactors/l_factors.hpp"
#include "plancheck/lie/lie_algebra.hpp"

namespace plancheck {

namespace {

constexpr int max_suite_k = 6;

void require_rank_for_quadrature(int a) {
    if (a < 1 || a > max_quadrature_rank) throw ParameterError("numerical identities need 1 <= a <= 3");
}

void require_k(int k, int a) {
    require_hook_range(k, a);
    if (k > max_suite_k) throw ParameterError("k must be at most 6");
}

/// Fixed torus points for post-mortem output.
std::vector<TorusPoint> sample_points(int a) {
    std::vector<TorusPoint> out;
    for (int i = 0; i < 5; ++i) {
        TorusPoint t;
        for (int j = 0; j < a; ++j) t.angles.push_back(std::fmod(0.1 + 0.2 * i + 0.13 * j, 1.0));
        out.push_back(std::move(t));
    }
    return out;
}

/// Fills the numeric comparison fields and the pass flag.
void compare_numeric(VerificationReport& r, double lhs, const Rational& rhs, double tolerance, bool converged,
                     bool allow_two_power) {
    const double rhs_value = to_double(rhs);
    r.lhs = format_double(lhs);
    r.rhs = to_string(rhs);
    r.lhs_numeric = lhs;
    r.rhs_numeric = rhs_value;
    r.abs_err = std::abs(lhs - rhs_value);
    r.rel_err = *r.abs_err / std::abs(rhs_value);
    r.tolerance = tolerance;
    r.two_power_flag = two_power_flag(lhs, rhs_value);
    r.pass = *r.rel_err <= tolerance && (r.two_power_flag == 0 || allow_two_power);
    if (!converged) {
        r.pass = false;
        r.error = "quadrature not converged: halving the resolution moves the value by more than the tolerance";
    }
}

class Id3Integrand {
public:
    Id3Integrand(int k, int a, long q)
        : k_(k), a_(a), q_(q), std_(std_char(Family::B, a)), adjoint_(adjoint_char(Family::B, a)) {
        for (int j = 1; j <= k - a - 1; ++j) zetas_ *= to_double(zeta(2 * j, q));
    }

    double operator()(const TorusPoint& t) const {
        const auto param = SatakeParam::numeric(t.coordinates());
        const auto l_std = std::get<std::complex<double>>(l_factor(std_, k_ - a_, param, q_));
        const auto l_ad = std::get<std::complex<double>>(l_factor(adjoint_, 1, param, q_));
        return (l_std / l_ad).real() * zetas_ * macdonald_density(a_, q_, t);
    }

private:
    int k_, a_;
    long q_;
    GradedCharacter std_, adjoint_;
    double zetas_ = 1;
};

std::string join_ints(const std::vector<int>& xs) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
    out << ")";
    return out.str();
}

nlohmann::ordered_json report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json key;
    if (r.key.k > 0) key["k"] = r.key.k;
    key["a"] = r.key.a;
    if (r.key.q) {
        key["q"] = *r.key.q;
    } else {
        key["q"] = "symbolic";
    }
    j["case"] = key;
    j["id"] = identity_name(r.id);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    if (r.lhs_numeric) j["lhs_numeric"] = *r.lhs_numeric;
    if (r.rhs_numeric) j["rhs_numeric"] = *r.rhs_numeric;
    if (r.abs_err) {
        j["abs_err"] = *r.abs_err;
        j["rel_err"] = *r.rel_err;
    } else {
        j["abs_err"] = "exact";
        j["rel_err"] = "exact";
    }
    if (r.tolerance) j["tolerance"] = *r.tolerance;
    if (r.resolution) {
        j["resolution"] = *r.resolution;
    } else {
        j["resolution"] = "n/a";
    }
    j["status"] = r.pass ? "pass" : "fail";
    j["two_power_flag"] = r.two_power_flag;
    if (!r.error.empty()) j["error"] = r.error;
    if (!r.samples.empty()) {
        auto& samples = j["samples"] = nlohmann::ordered_json::array();
        for (const auto& s : r.samples) samples.push_back({{"theta", s.theta}, {"integrand", s.integrand}});
    }
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string optional_number(const std::optional<double>& x, const std::string& absent) {
    return x ? format_double(*x) : absent;
}

}  // namespace

std::string identity_name(IdentityId id) { return "ID" + std::to_string(static_cast<int>(id)); }

IdentityId parse_identity(const std::string& text) {
    std::string digits = text;
    if (digits.size() > 2 && (digits.rfind("ID", 0) == 0 || digits.rfind("id", 0) == 0)) digits = digits.substr(2);
    if (digits.size() == 1 && digits[0] >= '1' && digits[0] <= '5') return static_cast<IdentityId>(digits[0] - '0');
    throw ParameterError("unknown identity '" + text + "' (expected 1..5)");
}

double SuiteOptions::tolerance_for(int a) const {
    if (tolerance_override) return *tolerance_override;
    require_rank_for_quadrature(a);
    return tolerance[a - 1];
}

QuadratureSpec SuiteOptions::quadrature_for(int a) const {
    require_rank_for_quadrature(a);
    return {resolution_override ? *resolution_override : resolution[a - 1], jobs};
}

int two_power_flag(double lhs, double rhs) {
    if (!(lhs > 0) || !(rhs > 0)) return 0;
    const double log2_ratio = std::log2(lhs / rhs);
    const double n = std::round(log2_ratio);
    if (n == 0 || std::abs(log2_ratio - n) > 1e-9) return 0;
    return static_cast<int>(n);
}

VerificationReport verify_id1(int a, long q, const SuiteOptions& options) {
    VerificationReport r;
    r.id = IdentityId::ID1;
    r.key = {0, a, q};
    const QuadratureSpec spec = options.quadrature_for(a);
    const double tol = options.tolerance_for(a);
    r.resolution = spec.resolution;
    const Rational rhs = 1 / tamagawa_volume({GroupFamily::Sp, a, q});
    auto f = [a, q](const TorusPoint& t) { return macdonald_density(a, q, t); };
    const auto result = integrate_torus_checked(f, a, spec, tol);
    compare_numeric(r, result.value, rhs, tol, result.converged, options.allow_two_power);
    if (rhs != motive_delta(Family::C, a, q)) {
        r.pass = false;
        r.error = "1/vol(Sp_2a) differs from the motive factor";
    }
    if (!r.pass) {
        for (auto& t : sample_points(a)) r.samples.push_back({t.angles, f(t)});
    }
    return r;
}

VerificationReport verify_id2(int k, int a) {
    require_k(k, a);
    VerificationReport r;
    r.id = IdentityId::ID2;
    r.key = {k, a, std::nullopt};
    const RationalFunction lhs = graded_l_value(slice_V_X(k, a));
    RationalFunction rhs = l_factor(std_char(Family::B, a), k - a);
    const auto nvars = static_cast<std::size_t>(a) + 1;
    for (int j = 1; j <= k - a - 1; ++j) rhs = rhs * zeta_symbolic(2 * j, nvars);
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.pass = rf_equal(lhs, rhs);
    return r;
}

double id3_integrand(int k, int a, long q, const TorusPoint& t) { return Id3Integrand(k, a, q)(t); }

VerificationReport verify_id3(int k, int a, long q, const SuiteOptions& options) {
    require_k(k, a);
    VerificationReport r;
    r.id = IdentityId::ID3;
    r.key = {k, a, q};
    const QuadratureSpec spec = options.quadrature_for(a);
    const double tol = options.tolerance_for(a);
    r.resolution = spec.resolution;
    const Rational rhs = x_volume_renormalized(k, a, q);
    const Id3Integrand f(k, a, q);
    const auto result = integrate_torus_checked(f, a, spec, tol);
    compare_numeric(r, result.value, rhs, tol, result.converged, options.allow_two_power);
    if (!r.pass) {
        for (auto& t : sample_points(a)) r.samples.push_back({t.angles, f(t)});
    }
    return r;
}

VerificationReport verify_id4(int k, int a) {
    require_k(k, a);
    VerificationReport r;
    r.id = IdentityId::ID4;
    r.key = {k, a, std::nullopt};
    const GradedCharacter oracle = slice_V_X(k, a);
    const GradedCharacter closed = slice_closed_form(k, a);
    r.lhs = oracle.describe();
    r.rhs = closed.describe();
    r.pass = oracle == closed && oracle.dimension() == k + a;
    return r;
}

VerificationReport verify_id5(int k, int a, long q) {
    require_k(k, a);
    VerificationReport r;
    r.id = IdentityId::ID5;
    r.key = {k, a, q};
    std::mt19937_64 rng(static_cast<std::uint64_t>(1000003 * k + 1009 * a + q));
    std::uniform_int_distribution<int> numerator(0, 9972);
    bool multisets_match = true;
    std::vector<int> exponents;
    for (int i = 0; i < 10; ++i) {
        std::vector<Rational> turns;
        for (int j = 0; j < a; ++j) turns.push_back(make_rational(numerator(rng), 9973));
        const SatakeParam t = SatakeParam::unitary(turns);
        const SatakeParam lifted = lift_satake(t, k, q);
        exponents = q_exponents(lifted, q);
        auto lhs = eigenvalue_multiset(std_char(Family::D, k), lifted);
        auto rhs = eigenvalue_multiset(std_char(Family::B, a), t);
        for (int j = 1; j <= k - a - 1; ++j) {
            rhs.push_back({pow(Rational(q), j), 0});
            rhs.push_back({pow(Rational(q), -j), 0});
        }
        rhs.push_back({1, 0});
        std::sort(rhs.begin(), rhs.end());
        multisets_match = multisets_match && lhs == rhs;
    }
    // The pushforward lands in A^∨/W; compare the dominant representative.
    for (auto& e : exponents) e = std::abs(e);
    std::sort(exponents.rbegin(), exponents.rend());
    const auto rho = rho_L_of_X(k, a);
    r.lhs = join_ints(exponents);
    r.rhs = join_ints(rho);
    r.pass = exponents == rho && multisets_match;
    if (!multisets_match) r.error = "std eigenvalue multiset differs at the lifted parameter";
    return r;
}

std::vector<VerificationReport> run_suite(const std::vector<SuiteCase>& cases, const SuiteOptions& options) {
    std::vector<VerificationReport> out;
    for (const auto& c : cases) {
        try {
            const auto needs_q = [&] {
                if (!c.key.q) throw ParameterError(identity_name(c.id) + " needs a value of q");
                return *c.key.q;
            };
            switch (c.id) {
                case IdentityId::ID1:
                    out.push_back(verify_id1(c.key.a, needs_q(), options));
                    break;
                case IdentityId::ID2:
                    out.push_back(verify_id2(c.key.k, c.key.a));
                    break;
                case IdentityId::ID3:
                    out.push_back(verify_id3(c.key.k, c.key.a, needs_q(), options));
                    break;
                case IdentityId::ID4:
                    out.push_back(verify_id4(c.key.k, c.key.a));
                    break;
                case IdentityId::ID5:
                    out.push_back(verify_id5(c.key.k, c.key.a, needs_q()));
                    break;
            }
        } catch (const std::exception& e) {
            VerificationReport r;
            r.id = c.id;
            r.key = c.key;
            r.pass = false;
            r.error = e.what();
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<SuiteCase> build_cases(const std::vector<IdentityId>& ids, const std::vector<std::pair<int, int>>& ka,
                                   const std::vector<long>& qs) {
    std::set<int> id_set;
    for (auto id : ids) id_set.insert(static_cast<int>(id));
    std::vector<SuiteCase> out;
    for (int raw : id_set) {
        const auto id = static_cast<IdentityId>(raw);
        if (id == IdentityId::ID1) {
            std::set<int> ranks;
            for (const auto& [k, a] : ka) ranks.insert(a);
            for (int a : ranks) {
                if (a > max_quadrature_rank) continue;
                for (long q : qs) out.push_back({id, {0, a, q}});
            }
            continue;
        }
        for (const auto& [k, a] : ka) {
            if (id == IdentityId::ID2 || id == IdentityId::ID4) {
                out.push_back({id, {k, a, std::nullopt}});
                continue;
            }
            if (id == IdentityId::ID3 && a > max_quadrature_rank) continue;
            for (long q : qs) out.push_back({id, {k, a, q}});
        }
    }
    return out;
}

std::vector<std::pair<int, int>> hook_scan(int kmin, int kmax) {
    std::vector<std::pair<int, int>> out;
    for (int k = kmin; k <= kmax; ++k) {
        for (int a = 1; a <= k - 1; ++a) out.emplace_back(k, a);
    }
    return out;
}

std::vector<SuiteCase> default_suite() {
    std::vector<SuiteCase> out;
    for (auto [a, q] : std::vector<std::pair<int, long>>{{1, 3}, {1, 5}, {2, 3}, {3, 3}}) {
        out.push_back({IdentityId::ID1, {0, a, q}});
    }
    for (const auto& [k, a] : hook_scan(3, 6)) out.push_back({IdentityId::ID2, {k, a, std::nullopt}});
    for (auto [k, a, q] : std::vector<std::tuple<int, int, long>>{{3, 1, 3}, {3, 1, 5}, {4, 2, 3}, {5, 2, 3}}) {
        out.push_back({IdentityId::ID3, {k, a, q}});
    }
    for (const auto& [k, a] : hook_scan(2, 6)) out.push_back({IdentityId::ID4, {k, a, std::nullopt}});
    for (const auto& [k, a] : hook_scan(2, 6)) out.push_back({IdentityId::ID5, {k, a, 3}});
    return out;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    out << "id,k,a,q,lhs,rhs,abs_err,rel_err,tolerance,resolution,status,two_power_flag,error\n";
    for (const auto& r : reports) {
        out << identity_name(r.id) << "," << (r.key.k > 0 ? std::to_string(r.key.k) : "") << "," << r.key.a << ","
            << (r.key.q ? std::to_string(*r.key.q) : "symbolic") << "," << csv_field(r.lhs) << "," << csv_field(r.rhs)
            << "," << optional_number(r.abs_err, "exact") << "," << optional_number(r.rel_err, "exact") << ","
            << optional_number(r.tolerance, "") << "," << (r.resolution ? std::to_string(*r.resolution) : "n/a") << ","
            << (r.pass ? "pass" : "fail") << "," << r.two_power_flag << "," << csv_field(r.error) << "\n";
    }
    return out.str();
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    for (const auto& r : reports) {
        out << (r.pass ? "PASS " : "FAIL ") << identity_name(r.id) << " ";
        if (r.key.k > 0) out << "k=" << r.key.k << " ";
        out << "a=" << r.key.a << " q=" << (r.key.q ? std::to_string(*r.key.q) : "symbolic");
        if (r.rel_err) {
            out << "  lhs=" << r.lhs << " rhs=" << r.rhs << " rel_err=" << format_double(*r.rel_err);
        } else if (!r.lhs.empty() && r.lhs.size() < 80) {
            out << "  " << r.lhs << (r.pass ? " == " : " != ") << r.rhs;
        } else if (!r.lhs.empty()) {
            out << "  exact";
        }
        if (r.resolution) out << " N=" << *r.resolution;
        if (r.two_power_flag != 0) out << " two_power_flag=" << r.two_power_flag;
        if (!r.error.empty()) out << "  error: " << r.error;
        out << "\n";
    }
    return out.str();
}

}  // namespace plancheck
