// plancheck: slice display, density dumps and identity verification.
//
//   plancheck slice --k 5 --a 2
//   plancheck density --k 3 --a 1 --q 3 --resolution 1024 --out d.csv
//   plancheck verify --k 3 --a 1 --q 3 --ids 1,2,3,4,5 --json report.json
//
// Exit status: 0 all checks pass, 1 a verification failed, 2 usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plancheck/algebra/errors.hpp"
#include "plancheck/count/point_count.hpp"
#include "plancheck/io/io.hpp"
#include "plancheck/lie/lie_algebra.hpp"
#include "plancheck/quad/plancherel.hpp"
#include "plancheck/verify/suite.hpp"

using namespace plancheck;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CacheFlags {
    bool no_cache = false;
    std::string cache_dir;
};

GradedCharacter load_slice(int k, int a, const CacheFlags& flags, const std::optional<std::string>& config_dir) {
    require_hook_range(k, a);
    if (flags.no_cache) return slice_V_X(k, a);
    const auto dir = !flags.cache_dir.empty() ? std::filesystem::path(flags.cache_dir) : SliceCache::default_dir(config_dir);
    return SliceCache(dir).get_or_compute(k, a);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write " + path);
    out << text;
    if (!out) throw ParameterError("write failed for " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numerical checks of unramified Plancherel identities for hook-type slices"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key = value configuration file")->check(CLI::ExistingFile);

    int k = 0;
    int a = 0;
    CacheFlags cache;

    auto* slice_cmd = app.add_subcommand("slice", "print the graded slice V_X for the hook [2a+1, 1^(2k-2a-1)]");
    slice_cmd->add_option("--k", k, "half the size of the orthogonal group")->required();
    slice_cmd->add_option("--a", a, "rank of the symplectic side")->required();
    slice_cmd->add_flag("--no-cache", cache.no_cache, "always recompute");
    slice_cmd->add_option("--cache-dir", cache.cache_dir, "slice cache directory");

    long density_q = 3;
    int density_resolution = 0;
    std::string density_out;
    auto* density_cmd = app.add_subcommand("density", "dump the spectral density on the torus lattice as CSV");
    density_cmd->add_option("--k", k)->required();
    density_cmd->add_option("--a", a)->required();
    density_cmd->add_option("--q", density_q, "residue field size");
    density_cmd->add_option("--resolution", density_resolution, "points per torus direction (power of two)");
    density_cmd->add_option("--out", density_out, "CSV path (stdout when omitted)");
    density_cmd->add_flag("--no-cache", cache.no_cache);
    density_cmd->add_option("--cache-dir", cache.cache_dir);

    std::vector<long> qs;
    std::string ids_text;
    std::optional<double> tol;
    std::optional<int> resolution;
    std::optional<int> jobs;
    bool scan = false;
    int kmin = 2;
    int kmax = 6;
    std::string json_path;
    std::string csv_path;
    std::string format_text;
    bool allow_two_power = false;
    auto* verify_cmd = app.add_subcommand("verify", "run identity checks; default suite when no case is selected");
    auto* k_opt = verify_cmd->add_option("--k", k);
    auto* a_opt = verify_cmd->add_option("--a", a);
    verify_cmd->add_option("--q", qs, "comma-separated q values")->delimiter(',');
    verify_cmd->add_option("--ids", ids_text, "comma-separated identities, e.g. 1,3 or ID2");
    verify_cmd->add_option("--tol", tol, "tolerance for numerical identities");
    verify_cmd->add_option("--resolution", resolution, "quadrature points per direction");
    verify_cmd->add_option("--jobs", jobs, "quadrature worker threads");
    auto* scan_flag = verify_cmd->add_flag("--scan", scan, "all hooks with kmin <= k <= kmax");
    verify_cmd->add_option("--kmin", kmin);
    verify_cmd->add_option("--kmax", kmax);
    verify_cmd->add_option("--json", json_path, "write the JSON report here");
    verify_cmd->add_option("--csv", csv_path, "write the CSV summary here");
    verify_cmd->add_option("--format", format_text, "stdout format: text, json or csv");
    verify_cmd->add_flag("--allow-two-power", allow_two_power, "accept lhs/rhs = 2^n as a pass");
    k_opt->needs(a_opt);
    a_opt->needs(k_opt);
    scan_flag->excludes(k_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        Config config;
        if (!config_path.empty()) config = load_config(config_path);

        if (*slice_cmd) {
            const auto slice = load_slice(k, a, cache, config.cache_dir);
            std::cout << slice.describe() << "\n" << slice_to_json(k, a, slice);
            return 0;
        }

        if (*density_cmd) {
            if (a > max_quadrature_rank) throw ParameterError("density needs a <= " + std::to_string(max_quadrature_rank));
            GroupSpec{GroupFamily::Sp, a, density_q}.validate();
            const auto slice = load_slice(k, a, cache, config.cache_dir);
            const int n = density_resolution > 0 ? density_resolution : config.suite.quadrature_for(a).resolution;
            const auto density = [&](const TorusPoint& t) { return slice_density(slice, density_q, t); };
            if (density_out.empty()) {
                write_density_csv(std::cout, a, n, density);
            } else {
                std::ofstream out(density_out);
                if (!out) throw ParameterError("cannot write " + density_out);
                write_density_csv(out, a, n, density);
            }
            return 0;
        }

        SuiteOptions options = config.suite;
        if (tol) options.tolerance_override = *tol;
        if (resolution) options.resolution_override = *resolution;
        if (jobs) options.jobs = *jobs;
        if (allow_two_power) options.allow_two_power = true;
        const OutputFormat format = format_text.empty() ? config.format : parse_output_format(format_text);
        Config checked = config;
        checked.suite = options;
        if (!qs.empty()) checked.q_values = qs;
        checked.validate();

        std::vector<IdentityId> ids;
        if (!ids_text.empty()) {
            std::stringstream items(ids_text);
            std::string item;
            while (std::getline(items, item, ',')) ids.push_back(parse_identity(item));
        } else {
            ids = {IdentityId::ID1, IdentityId::ID2, IdentityId::ID3, IdentityId::ID4, IdentityId::ID5};
        }

        std::vector<SuiteCase> cases;
        if (scan || *k_opt) {
            if (*k_opt) require_hook_range(k, a);
            const auto ka = scan ? hook_scan(kmin, kmax) : std::vector<std::pair<int, int>>{{k, a}};
            cases = build_cases(ids, ka, checked.q_values);
        } else {
            for (const auto& c : default_suite()) {
                if (std::find(ids.begin(), ids.end(), c.id) != ids.end()) cases.push_back(c);
            }
        }

        const auto reports = run_suite(cases, options);
        switch (format) {
            case OutputFormat::text:
                std::cout << reports_to_text(reports);
                break;
            case OutputFormat::json:
                std::cout << reports_to_json(reports);
                break;
            case OutputFormat::csv:
                std::cout << reports_to_csv(reports);
                break;
        }
        if (!json_path.empty()) write_file(json_path, reports_to_json(reports));
        if (!csv_path.empty()) write_file(csv_path, reports_to_csv(reports));
        return all_pass(reports) ? 0 : kExitFailure;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
