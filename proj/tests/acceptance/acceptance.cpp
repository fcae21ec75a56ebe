// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "plancheck/count/point_count.hpp"
#include "plancheck/lfactors/l_factors.hpp"
#include "plancheck/lie/lie_algebra.hpp"
#include "plancheck/quad/plancherel.hpp"
#include "plancheck/verify/suite.hpp"

using namespace plancheck;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool run_criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d: %s (%.2f s)%s\n", out.pass ? "PASS" : "FAIL", id, title.c_str(), seconds_since(start),
                out.detail.str().c_str());
    std::fflush(stdout);
    return out.pass;
}

TorusPoint random_point(int a, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    TorusPoint t;
    for (int i = 0; i < a; ++i) t.angles.push_back(u(rng));
    return t;
}

TorusPoint act_on_angles(const WeylElement& w, const TorusPoint& t) {
    TorusPoint moved{std::vector<double>(t.angles.size())};
    for (std::size_t j = 0; j < t.angles.size(); ++j) {
        moved.angles[j] = w.signs[j] * t.angles[static_cast<std::size_t>(w.perm[j])];
    }
    return moved;
}

double abs_diff(const VerificationReport& r) { return std::abs(*r.lhs_numeric - *r.rhs_numeric); }

void criterion_id1_rank_one(Outcome& out) {
    for (long q : {3L, 5L}) {
        const auto start = std::chrono::steady_clock::now();
        const double mass = plancherel_mass(1, q, {4096, 1});
        const double elapsed = seconds_since(start);
        const Rational oracle = residue_mass_rank1(Rational(1, q));
        const double err = std::abs(mass - to_double(oracle));
        out.detail << " q=" << q << " mass=" << format_double(mass) << " oracle=" << oracle.get_str()
                   << " err=" << format_double(err);
        out.require(err <= 1e-10, "q=" + std::to_string(q) + " within 1e-10");
        out.require(elapsed < 1.0, "q=" + std::to_string(q) + " under 1 s");
    }
    out.require(residue_mass_rank1(Rational(1, 3)) == Rational(9, 8), "oracle 9/8");
    out.require(residue_mass_rank1(Rational(1, 5)) == Rational(25, 24), "oracle 25/24");
}

void criterion_id1_rank_two(Outcome& out) {
    const auto start = std::chrono::steady_clock::now();
    const double mass = plancherel_mass(2, 3, {512, 1});
    const Rational expected = make_rational(729, 640);
    const double err = std::abs(mass - to_double(expected));
    out.detail << " mass=" << format_double(mass) << " err=" << format_double(err);
    out.require(err <= 1e-8, "within 1e-8 of 729/640");
    out.require(1 / tamagawa_volume({GroupFamily::Sp, 2, 3}) == expected, "729/640 = 1/vol(Sp4(Z_3))");
    out.require(seconds_since(start) < 30.0, "under 30 s");
}

void criterion_id2(Outcome& out) {
    const auto start = std::chrono::steady_clock::now();
    int cases = 0;
    for (const auto& [k, a] : hook_scan(3, 6)) {
        const auto r = verify_id2(k, a);
        ++cases;
        out.require(r.pass && !r.abs_err, "ID2 k=" + std::to_string(k) + " a=" + std::to_string(a) + " " + r.error);
    }
    out.detail << " cases=" << cases;
    out.require(cases == 14, "14 hooks with 3 <= k <= 6");
    out.require(seconds_since(start) < 10.0, "under 10 s");
}

void criterion_id3(Outcome& out) {
    const auto start = std::chrono::steady_clock::now();
    struct Case {
        int k, a;
        long q;
        const char* exact;  // empty when only the runtime exact side is known
        double tol;
    };
    const std::vector<Case> cases{{3, 1, 3, "729/640", 1e-8},
                                  {3, 1, 5, "15625/14976", 1e-8},
                                  {4, 2, 3, "", 1e-6},
                                  {5, 2, 3, "", 1e-6}};
    for (const auto& c : cases) {
        const std::string tag = "(" + std::to_string(c.k) + "," + std::to_string(c.a) + "," + std::to_string(c.q) + ")";
        SuiteOptions base;
        const auto r = verify_id3(c.k, c.a, c.q, base);
        SuiteOptions doubled;
        doubled.resolution_override = 2 * base.quadrature_for(c.a).resolution;
        const auto r2 = verify_id3(c.k, c.a, c.q, doubled);
        out.require(r.error.empty() && r2.error.empty(), tag + " evaluated");
        if (!r.error.empty() || !r2.error.empty()) continue;
        const double err = abs_diff(r);
        const double err2 = abs_diff(r2);
        out.detail << " " << tag << " rhs=" << r.rhs << " err=" << format_double(err) << " err@2N=" << format_double(err2);
        if (*c.exact) out.require(r.rhs == c.exact, tag + " exact side " + c.exact);
        out.require(r.rhs == to_string(x_volume_renormalized(c.k, c.a, c.q)), tag + " rhs from point counts");
        out.require(err <= c.tol, tag + " within tolerance");
        out.require(err2 <= c.tol, tag + " within tolerance at doubled resolution");
        out.require(r.two_power_flag == 0 && r2.two_power_flag == 0, tag + " two_power_flag = 0");
    }
    out.require(seconds_since(start) < 120.0, "under 2 min");
}

void criterion_id4(Outcome& out) {
    const auto start = std::chrono::steady_clock::now();
    int cases = 0;
    for (const auto& [k, a] : hook_scan(2, 6)) {
        const auto r = verify_id4(k, a);
        const auto slice = slice_V_X(k, a);
        ++cases;
        const std::string tag = "k=" + std::to_string(k) + " a=" + std::to_string(a);
        out.require(r.pass, "ID4 " + tag + " " + r.error);
        out.require(slice == slice_closed_form(k, a), "closed form " + tag);
        out.require(slice.dimension() == k + a, "dim V_X = k + a at " + tag);
    }
    out.detail << " cases=" << cases;
    out.require(seconds_since(start) < 60.0, "under 1 min");
}

void criterion_id5(Outcome& out) {
    int cases = 0;
    for (const auto& [k, a] : hook_scan(2, 6)) {
        for (long q : {3L, 5L}) {
            const auto r = verify_id5(k, a, q);
            ++cases;
            out.require(r.pass, "ID5 k=" + std::to_string(k) + " a=" + std::to_string(a) + " q=" + std::to_string(q) +
                                    " " + r.error);
        }
    }
    out.detail << " cases=" << cases;
}

void criterion_properties(Outcome& out) {
    std::mt19937_64 rng(20261018);
    long long checks = 0;

    // Weyl invariance: densities numerically, graded L-values symbolically.
    for (int a = 1; a <= 3; ++a) {
        const auto group = enumerate_weyl_group(build_root_system(Family::B, a));
        for (int i = 0; i < 20; ++i) {
            const auto t = random_point(a, rng);
            for (long q : {3L, 5L}) {
                const double base = macdonald_density(a, q, t);
                const auto slice = slice_closed_form(a + 2, a);
                const double sbase = slice_density(slice, q, t);
                for (const auto& w : group) {
                    const auto moved = act_on_angles(w, t);
                    out.require(std::abs(macdonald_density(a, q, moved) - base) <= 1e-12 * std::max(1.0, base),
                                "Macdonald density Weyl invariance");
                    out.require(std::abs(slice_density(slice, q, moved) - sbase) <= 1e-12 * std::max(1.0, std::abs(sbase)),
                                "slice density Weyl invariance");
                    checks += 2;
                }
            }
        }
        for (int k = a + 1; k <= 6; ++k) {
            const RationalFunction l = graded_l_value(slice_V_X(k, a));
            for (const auto& w : group) {
                out.require(l.substitute_signed_permutation(1, w.perm, w.signs) == l, "symbolic L-value Weyl invariance");
                ++checks;
            }
        }
    }

    // Nonnegativity on 10^4 random points per rank.
    for (int a = 1; a <= 3; ++a) {
        const auto slice = slice_closed_form(a + 1, a);
        for (int i = 0; i < 10000; ++i) {
            const auto t = random_point(a, rng);
            out.require(macdonald_density(a, 3, t) >= 0.0, "Macdonald density nonnegative");
            out.require(slice_density(slice, 3, t) >= 0.0, "slice density nonnegative");
            checks += 2;
        }
    }

    for (int a = 1; a <= 4; ++a) {
        for (long q : {3L, 5L, 9L}) {
            out.require(group_order({GroupFamily::SO_odd, a, q}) == group_order({GroupFamily::Sp, a, q}), "|SO_2a+1| = |Sp_2a|");
            ++checks;
        }
    }

    // Split SO_2 is a torus with no root system of type D, so D starts at rank 2.
    for (int r = 1; r <= 6; ++r) {
        for (long q : {3L, 5L}) {
            out.require(tamagawa_volume({GroupFamily::Sp, r, q}) * motive_delta(Family::C, r, q) == 1, "vol*Delta Sp");
            out.require(tamagawa_volume({GroupFamily::SO_odd, r, q}) * motive_delta(Family::B, r, q) == 1, "vol*Delta SO odd");
            checks += 2;
            if (r >= 2) {
                out.require(tamagawa_volume({GroupFamily::SO_even_split, r, q}) * motive_delta(Family::D, r, q) == 1,
                            "vol*Delta SO even");
                ++checks;
            }
        }
    }

    struct BruteCase {
        GroupFamily family;
        int rank;
        long q;
    };
    // Every classical group with N <= 3 over F_3, plus the 2x2 groups over F_5.
    const std::vector<BruteCase> brute{
        {GroupFamily::SO_odd, 0, 3},       {GroupFamily::O_odd, 0, 3},        {GroupFamily::Sp, 1, 3},
        {GroupFamily::SO_even_split, 1, 3}, {GroupFamily::O_even_split, 1, 3}, {GroupFamily::SO_odd, 1, 3},
        {GroupFamily::O_odd, 1, 3},        {GroupFamily::Sp, 1, 5},           {GroupFamily::SO_even_split, 1, 5},
        {GroupFamily::O_even_split, 1, 5},
    };
    for (const auto& c : brute) {
        const bool det_one = c.family == GroupFamily::SO_odd || c.family == GroupFamily::SO_even_split;
        const Integer counted(static_cast<long>(brute_force_order(split_gram(c.family, c.rank), c.q, det_one)));
        out.require(counted == group_order({c.family, c.rank, c.q}),
                    "brute force " + group_family_name(c.family) + " rank " + std::to_string(c.rank));
        ++checks;
    }
    out.detail << " checks=" << checks;
}

void criterion_determinism(Outcome& out) {
    const auto start = std::chrono::steady_clock::now();
    const auto cases = default_suite();
    const auto first = run_suite(cases);
    const double single_run = seconds_since(start);
    const std::string json1 = reports_to_json(first);
    const std::string json2 = reports_to_json(run_suite(cases));
    SuiteOptions threaded;
    threaded.jobs = 4;
    const std::string json3 = reports_to_json(run_suite(cases, threaded));
    out.detail << " cases=" << cases.size() << " bytes=" << json1.size() << " single_run=" << format_double(single_run) << "s";
    out.require(json1 == json2, "two runs byte-identical");
    out.require(json1 == json3, "jobs=4 byte-identical to jobs=1");
    out.require(all_pass(first), "default suite all pass");
    for (const auto& r : first) out.require(r.two_power_flag == 0, "two_power_flag = 0 in default suite");
    out.require(single_run < 300.0, "one default-suite run under 5 min");
}

}  // namespace

int main() {
    bool ok = true;
    ok &= run_criterion(1, "rank-one Plancherel mass = 9/8, 25/24", criterion_id1_rank_one);
    ok &= run_criterion(2, "rank-two Plancherel mass = 729/640 = 1/vol", criterion_id1_rank_two);
    ok &= run_criterion(3, "graded L-value of V_X exact for 3 <= k <= 6", criterion_id2);
    ok &= run_criterion(4, "spectral integral = renormalized volume of X(o)", criterion_id3);
    ok &= run_criterion(5, "matrix slice = closed form for k <= 6", criterion_id4);
    ok &= run_criterion(6, "lifted Satake parameters for k <= 6", criterion_id5);
    ok &= run_criterion(7, "property suites", criterion_properties);
    ok &= run_criterion(8, "default suite deterministic and under 5 min", criterion_determinism);
    std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return ok ? 0 : 1;
}
