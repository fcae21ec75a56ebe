#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "plancheck/lfactors/graded_character.hpp"
#include "plancheck/verify/suite.hpp"

namespace plancheck {

/// {"k": .., "a": .., "entries": [{"weight": [..], "grade": n, "mult": m}, ...]}
std::string slice_to_json(int k, int a, const GradedCharacter& slice);
/// Inverse of slice_to_json; throws std::runtime_error on malformed text or a
/// (k, a) mismatch.
GradedCharacter slice_from_json(const std::string& text, int k, int a);

/// Directory of slice_k<k>_a<a>.json files.  The cache only short-cuts
/// slice_V_X; a hit returns exactly what recomputation would.
class SliceCache {
public:
    explicit SliceCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// PLANCHECK_CACHE_DIR if set, else `fallback`.
    static std::filesystem::path default_dir(const std::optional<std::string>& fallback = std::nullopt);

    std::filesystem::path file_for(int k, int a) const;
    std::optional<GradedCharacter> load(int k, int a) const;
    void store(int k, int a, const GradedCharacter& slice) const;
    /// Cached value if present, else compute and store.  `hit` reports which.
    GradedCharacter get_or_compute(int k, int a, bool* hit = nullptr) const;

private:
    std::filesystem::path dir_;
};

enum class OutputFormat { text, json, csv };

OutputFormat parse_output_format(const std::string& text);

/// Settings read from a `key = value` file ('#' starts a comment):
///   q = 3,5                  default q list
///   resolution_a1 = 4096     (also _a2, _a3), powers of two
///   tolerance_a1 = 1e-10     (also _a2, _a3)
///   tolerance = 1e-9         overrides the per-rank tolerances
///   cache_dir = path
///   format = json|csv|text
///   allow_two_power = true|false
///   jobs = 4
struct Config {
    std::vector<long> q_values{3};
    SuiteOptions suite;
    std::optional<std::string> cache_dir;
    OutputFormat format = OutputFormat::text;

    void validate() const;
};

Config parse_config(std::istream& in);
Config load_config(const std::filesystem::path& path);

}  // namespace plancheck
