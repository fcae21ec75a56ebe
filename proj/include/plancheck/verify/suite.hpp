#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plancheck/quad/plancherel.hpp"

namespace plancheck {

/// The five identities:
///   ID1  Plancherel mass of Sp_{2a} = 1/vol(Sp_{2a}(o)),
///   ID2  graded L-value of V_X = L(k-a, std) · ∏ ζ(2j), symbolically,
///   ID3  spectral integral of the basic function = renormalized vol(X(o)),
///   ID4  matrix slice V_X = closed form,
///   ID5  lift of Satake parameters: q-exponents and std eigenvalues.
enum class IdentityId { ID1 = 1, ID2, ID3, ID4, ID5 };

std::string identity_name(IdentityId id);
IdentityId parse_identity(const std::string& text);

struct CaseKey {
    /// 0 when the identity does not depend on k (ID1).
    int k = 0;
    int a = 0;
    /// Absent for symbolic checks.
    std::optional<long> q;

    friend bool operator==(const CaseKey&, const CaseKey&) = default;
};

struct SamplePoint {
    std::vector<double> theta;
    double integrand = 0;
};

struct VerificationReport {
    CaseKey key;
    IdentityId id = IdentityId::ID1;
    /// Exact text of each side, or shortest round-trip decimal.
    std::string lhs;
    std::string rhs;
    std::optional<double> lhs_numeric;
    std::optional<double> rhs_numeric;
    /// Absent means the comparison was exact.
    std::optional<double> abs_err;
    std::optional<double> rel_err;
    std::optional<double> tolerance;
    std::optional<int> resolution;
    bool pass = false;
    int two_power_flag = 0;
    std::string error;
    /// Integrand values recorded when a numerical identity fails.
    std::vector<SamplePoint> samples;
};

struct SuiteOptions {
    /// Per-rank defaults, indexed by a - 1.
    double tolerance[3] = {1e-10, 1e-8, 1e-5};
    int resolution[3] = {4096, 512, 128};
    /// Replaces the per-rank tolerance when set.
    std::optional<double> tolerance_override;
    /// Replaces the per-rank resolution when set.
    std::optional<int> resolution_override;
    bool allow_two_power = false;
    int jobs = 1;

    double tolerance_for(int a) const;
    QuadratureSpec quadrature_for(int a) const;
};

/// Nonzero n when lhs/rhs is exactly 2^n up to 1e-9 relative slack, else 0.
int two_power_flag(double lhs, double rhs);

VerificationReport verify_id1(int a, long q, const SuiteOptions& options = {});
VerificationReport verify_id2(int k, int a);
VerificationReport verify_id3(int k, int a, long q, const SuiteOptions& options = {});
VerificationReport verify_id4(int k, int a);
VerificationReport verify_id5(int k, int a, long q);

/// Spectral integrand of the basic function against the Macdonald density:
/// (L(k-a, t, std) / L(1, t, Ad)) · ∏_{j<k-a} ζ(2j) · macdonald_density(t).
double id3_integrand(int k, int a, long q, const TorusPoint& t);

struct SuiteCase {
    IdentityId id;
    CaseKey key;
};

/// Runs every case in order; exceptions become failing reports carrying the
/// message, so one bad case does not stop the suite.
std::vector<VerificationReport> run_suite(const std::vector<SuiteCase>& cases, const SuiteOptions& options = {});

/// Cases for the given identities over (k, a) pairs and q values, ordered by
/// identity, then k, a, q.  ID1 uses the distinct a values (a <= 3); ID3 is
/// restricted to a <= 3; ID2/ID4 are symbolic and ignore q.
std::vector<SuiteCase> build_cases(const std::vector<IdentityId>& ids, const std::vector<std::pair<int, int>>& ka,
                                   const std::vector<long>& qs);
/// All (k, a) with 1 <= a <= k-1 and kmin <= k <= kmax.
std::vector<std::pair<int, int>> hook_scan(int kmin, int kmax);
std::vector<SuiteCase> default_suite();

bool all_pass(const std::vector<VerificationReport>& reports);

/// JSON array of reports, 2-space indented.
std::string reports_to_json(const std::vector<VerificationReport>& reports);
/// Header plus one row per report.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);
/// One line per report.
std::string reports_to_text(const std::vector<VerificationReport>& reports);

}  // namespace plancheck
