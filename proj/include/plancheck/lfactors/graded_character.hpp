#pragma once

#include <string>
#include <vector>

#include "plancheck/roots/root_system.hpp"

namespace plancheck {

struct CharacterEntry {
    Weight weight;
    int grade = 0;
    int multiplicity = 1;

    friend auto operator<=>(const CharacterEntry&, const CharacterEntry&) = default;
};

/// Virtual representation of a dual torus of the given rank, with an integer
/// grading.  Entries are kept merged and sorted by (weight, grade); zero
/// multiplicities are dropped, so equality is equality of multisets.
class GradedCharacter {
public:
    explicit GradedCharacter(int rank = 0) : rank_(rank) {}
    GradedCharacter(int rank, std::vector<CharacterEntry> entries);

    int rank() const { return rank_; }
    const std::vector<CharacterEntry>& entries() const { return entries_; }
    /// Sum of multiplicities.
    int dimension() const;
    bool is_empty() const { return entries_.empty(); }
    /// Closed under weight negation within each grade.
    bool is_self_dual() const;
    bool is_effective() const;

    void add(const Weight& weight, int grade, int multiplicity = 1);
    GradedCharacter with_grade(int grade) const;
    GradedCharacter restricted_to_grade(int grade) const;
    std::vector<int> grades() const;

    /// Summary such as "std_5@6 + triv@4 + triv@8 (dim 7)"; grade pieces that
    /// are neither the type-B standard character nor trivial are listed raw.
    std::string describe() const;

    friend GradedCharacter operator+(const GradedCharacter& x, const GradedCharacter& y);
    friend GradedCharacter operator-(const GradedCharacter& x, const GradedCharacter& y);
    friend bool operator==(const GradedCharacter&, const GradedCharacter&) = default;

private:
    void normalize();

    int rank_;
    std::vector<CharacterEntry> entries_;
};

GradedCharacter trivial_char(int rank, int grade, int multiplicity = 1);

/// B_a: {±e_i} ∪ {0}; D_k: {±e_i}; grade 0.
GradedCharacter std_char(Family family, int rank);
/// Roots of B_a together with `rank` zero weights.
GradedCharacter adjoint_char(Family family, int rank);
/// Roots of B_a only.
GradedCharacter g_mod_a_char(Family family, int rank);

/// std_{2a+1} at grade 2k-2a plus triv at grades 4, 8, ..., 4(k-a-1).
GradedCharacter slice_closed_form(int k, int a);

}  // namespace plancheck
