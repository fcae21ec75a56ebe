#include "plancheck/io/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "plancheck/algebra/errors.hpp"
#include "plancheck/count/point_count.hpp"
#include "plancheck/lie/lie_algebra.hpp"

namespace plancheck {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
    std::istringstream in(value);
    T x{};
    in >> x;
    if (!in || !in.eof()) throw ParameterError("config: bad value for '" + key + "': " + value);
    return x;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ParameterError("config: bad boolean for '" + key + "': " + value);
}

}  // namespace

std::string slice_to_json(int k, int a, const GradedCharacter& slice) {
    nlohmann::ordered_json j;
    j["k"] = k;
    j["a"] = a;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : slice.entries()) {
        j["entries"].push_back({{"weight", e.weight}, {"grade", e.grade}, {"mult", e.multiplicity}});
    }
    return j.dump(2) + "\n";
}

GradedCharacter slice_from_json(const std::string& text, int k, int a) {
    try {
        const auto j = nlohmann::json::parse(text);
        if (j.at("k").get<int>() != k || j.at("a").get<int>() != a) {
            throw std::runtime_error("slice cache entry is for a different (k, a)");
        }
        std::vector<CharacterEntry> entries;
        for (const auto& e : j.at("entries")) {
            entries.push_back({e.at("weight").get<Weight>(), e.at("grade").get<int>(), e.at("mult").get<int>()});
        }
        return GradedCharacter(a, std::move(entries));
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed slice cache entry: ") + e.what());
    }
}

std::filesystem::path SliceCache::default_dir(const std::optional<std::string>& fallback) {
    if (const char* env = std::getenv("PLANCHECK_CACHE_DIR"); env != nullptr && *env != '\0') return env;
    return fallback ? std::filesystem::path(*fallback) : std::filesystem::path(".plancheck-cache");
}

std::filesystem::path SliceCache::file_for(int k, int a) const {
    return dir_ / ("slice_k" + std::to_string(k) + "_a" + std::to_string(a) + ".json");
}

std::optional<GradedCharacter> SliceCache::load(int k, int a) const {
    std::ifstream in(file_for(k, a));
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return slice_from_json(buf.str(), k, a);
    } catch (const std::runtime_error&) {
        return std::nullopt;  // unreadable entries are recomputed and overwritten
    }
}

void SliceCache::store(int k, int a, const GradedCharacter& slice) const {
    std::filesystem::create_directories(dir_);
    const auto target = file_for(k, a);
    const auto tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write slice cache file " + tmp);
        out << slice_to_json(k, a, slice);
    }
    std::filesystem::rename(tmp, target);
}

GradedCharacter SliceCache::get_or_compute(int k, int a, bool* hit) const {
    require_hook_range(k, a);
    if (auto cached = load(k, a)) {
        if (hit) *hit = true;
        return *cached;
    }
    if (hit) *hit = false;
    GradedCharacter slice = slice_V_X(k, a);
    store(k, a, slice);
    return slice;
}

OutputFormat parse_output_format(const std::string& text) {
    if (text == "text") return OutputFormat::text;
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    throw ParameterError("unknown output format '" + text + "' (text, json, csv)");
}

void Config::validate() const {
    if (q_values.empty()) throw ParameterError("config: empty q list");
    for (long q : q_values) {
        if (!is_odd_prime_power(q)) throw ParameterError("config: q must be an odd prime power >= 3, got " + std::to_string(q));
    }
    for (int a = 1; a <= 3; ++a) suite.quadrature_for(a).validate();
    if (suite.resolution_override) QuadratureSpec{*suite.resolution_override, 1}.validate();
    if (suite.jobs < 1) throw ParameterError("config: jobs must be positive");
}

Config parse_config(std::istream& in) {
    Config c;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParameterError("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "q") {
            c.q_values.clear();
            std::stringstream items(value);
            std::string item;
            while (std::getline(items, item, ',')) c.q_values.push_back(parse_number<long>(key, trim(item)));
        } else if (key.rfind("resolution_a", 0) == 0 || key.rfind("tolerance_a", 0) == 0) {
            const int a = parse_number<int>(key, key.substr(key.find("_a") + 2));
            if (a < 1 || a > 3) throw ParameterError("config: unknown key '" + key + "'");
            if (key[0] == 'r') {
                c.suite.resolution[a - 1] = parse_number<int>(key, value);
            } else {
                c.suite.tolerance[a - 1] = parse_number<double>(key, value);
            }
        } else if (key == "tolerance") {
            c.suite.tolerance_override = parse_number<double>(key, value);
        } else if (key == "cache_dir") {
            c.cache_dir = value;
        } else if (key == "format") {
            c.format = parse_output_format(value);
        } else if (key == "allow_two_power") {
            c.suite.allow_two_power = parse_bool(key, value);
        } else if (key == "jobs") {
            c.suite.jobs = parse_number<int>(key, value);
        } else {
            throw ParameterError("config: unknown key '" + key + "'");
        }
    }
    c.validate();
    return c;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot read config file " + path.string());
    return parse_config(in);
}

}  // namespace plancheck
