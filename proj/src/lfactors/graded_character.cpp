#include "plancheck/lfactors/graded_character.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "plancheck/algebra/errors.hpp"

namespace plancheck {

GradedCharacter::GradedCharacter(int rank, std::vector<CharacterEntry> entries)
    : rank_(rank), entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (static_cast<int>(e.weight.size()) != rank_) throw ParameterError("character weight has wrong length");
    }
    normalize();
}

void GradedCharacter::normalize() {
    std::map<std::pair<Weight, int>, int> merged;
    for (const auto& e : entries_) merged[{e.weight, e.grade}] += e.multiplicity;
    entries_.clear();
    for (const auto& [key, m] : merged) {
        if (m != 0) entries_.push_back({key.first, key.second, m});
    }
}

int GradedCharacter::dimension() const {
    int d = 0;
    for (const auto& e : entries_) d += e.multiplicity;
    return d;
}

bool GradedCharacter::is_self_dual() const {
    GradedCharacter dual(rank_);
    for (const auto& e : entries_) {
        Weight w = e.weight;
        for (auto& x : w) x = -x;
        dual.entries_.push_back({w, e.grade, e.multiplicity});
    }
    dual.normalize();
    return dual == *this;
}

bool GradedCharacter::is_effective() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.multiplicity > 0; });
}

void GradedCharacter::add(const Weight& weight, int grade, int multiplicity) {
    if (static_cast<int>(weight.size()) != rank_) throw ParameterError("character weight has wrong length");
    entries_.push_back({weight, grade, multiplicity});
    normalize();
}

GradedCharacter GradedCharacter::with_grade(int grade) const {
    GradedCharacter out = *this;
    for (auto& e : out.entries_) e.grade = grade;
    out.normalize();
    return out;
}

GradedCharacter GradedCharacter::restricted_to_grade(int grade) const {
    GradedCharacter out(rank_);
    for (const auto& e : entries_) {
        if (e.grade == grade) out.entries_.push_back(e);
    }
    return out;
}

std::vector<int> GradedCharacter::grades() const {
    std::vector<int> out;
    for (const auto& e : entries_) out.push_back(e.grade);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string GradedCharacter::describe() const {
    std::vector<std::string> std_parts, triv_parts, raw_parts;
    const GradedCharacter std_b = rank_ >= 1 ? std_char(Family::B, rank_) : GradedCharacter(0);
    for (int g : grades()) {
        GradedCharacter piece = restricted_to_grade(g);
        const std::string at = "@" + std::to_string(g);
        if (rank_ >= 1) {
            // Peel off copies of std_{2a+1}; only the zero weight can remain.
            while (true) {
                GradedCharacter rest = piece - std_b.with_grade(g);
                if (!rest.is_effective()) break;
                std_parts.push_back("std_" + std::to_string(2 * rank_ + 1) + at);
                piece = rest;
            }
        }
        for (const auto& e : piece.entries_) {
            const bool zero = std::all_of(e.weight.begin(), e.weight.end(), [](int x) { return x == 0; });
            if (zero && e.multiplicity > 0) {
                for (int i = 0; i < e.multiplicity; ++i) triv_parts.push_back("triv" + at);
                continue;
            }
            std::ostringstream raw;
            raw << e.multiplicity << "*[";
            for (std::size_t i = 0; i < e.weight.size(); ++i) raw << (i ? "," : "") << e.weight[i];
            raw << "]" << at;
            raw_parts.push_back(raw.str());
        }
    }
    std::vector<std::string> all = std_parts;
    all.insert(all.end(), triv_parts.begin(), triv_parts.end());
    all.insert(all.end(), raw_parts.begin(), raw_parts.end());
    std::ostringstream out;
    for (std::size_t i = 0; i < all.size(); ++i) out << (i ? " + " : "") << all[i];
    if (all.empty()) out << "0";
    out << " (dim " << dimension() << ")";
    return out.str();
}

GradedCharacter operator+(const GradedCharacter& x, const GradedCharacter& y) {
    if (x.rank_ != y.rank_) throw ParameterError("character ranks differ");
    GradedCharacter out = x;
    out.entries_.insert(out.entries_.end(), y.entries_.begin(), y.entries_.end());
    out.normalize();
    return out;
}

GradedCharacter operator-(const GradedCharacter& x, const GradedCharacter& y) {
    GradedCharacter neg = y;
    for (auto& e : neg.entries_) e.multiplicity = -e.multiplicity;
    return x + neg;
}

GradedCharacter trivial_char(int rank, int grade, int multiplicity) {
    return GradedCharacter(rank, {{Weight(static_cast<std::size_t>(rank), 0), grade, multiplicity}});
}

GradedCharacter std_char(Family family, int rank) {
    if (rank < 1) throw ParameterError("rank must be positive");
    if (family == Family::C) throw ParameterError("std_char supports types B and D");
    GradedCharacter out(rank);
    for (int i = 0; i < rank; ++i) {
        for (int s : {1, -1}) {
            Weight w(static_cast<std::size_t>(rank), 0);
            w[static_cast<std::size_t>(i)] = s;
            out.add(w, 0);
        }
    }
    if (family == Family::B) out.add(Weight(static_cast<std::size_t>(rank), 0), 0);
    return out;
}

GradedCharacter g_mod_a_char(Family family, int rank) {
    if (family != Family::B) throw ParameterError("g/a character is only used for type B");
    std::vector<CharacterEntry> entries;
    for (const auto& root : build_root_system(family, rank).roots) entries.push_back({root, 0, 1});
    return GradedCharacter(rank, std::move(entries));
}

GradedCharacter adjoint_char(Family family, int rank) {
    return g_mod_a_char(family, rank) + trivial_char(rank, 0, rank);
}

GradedCharacter slice_closed_form(int k, int a) {
    if (a < 1 || a > k - 1) throw ParameterError("require 1 <= a <= k-1");
    GradedCharacter out = std_char(Family::B, a).with_grade(2 * k - 2 * a);
    for (int j = 1; j <= k - a - 1; ++j) out = out + trivial_char(a, 4 * j);
    return out;
}

}  // namespace plancheck
