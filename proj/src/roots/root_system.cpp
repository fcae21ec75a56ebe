#include "plancheck/roots/root_system.hpp"

#include <algorithm>
#include <numeric>

#include "plancheck/algebra/errors.hpp"

namespace plancheck {

std::string family_name(Family f) {
    switch (f) {
        case Family::B:
            return "B";
        case Family::C:
            return "C";
        case Family::D:
            return "D";
    }
    return "?";
}

std::vector<Weight> RootSystem::positive_roots() const {
    std::vector<Weight> out;
    for (const auto& r : roots) {
        auto first = std::find_if(r.begin(), r.end(), [](int x) { return x != 0; });
        if (first != r.end() && *first > 0) out.push_back(r);
    }
    return out;
}

RootSystem build_root_system(Family family, int rank) {
    if (rank < 1 || (family == Family::D && rank < 2)) {
        throw ParameterError("invalid rank " + std::to_string(rank) + " for type " + family_name(family));
    }
    RootSystem rs{family, rank, {}};
    const auto n = static_cast<std::size_t>(rank);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (int si : {1, -1}) {
                for (int sj : {1, -1}) {
                    Weight w(n, 0);
                    w[i] = si;
                    w[j] = sj;
                    rs.roots.push_back(std::move(w));
                }
            }
        }
    }
    if (family != Family::D) {
        const int scale = family == Family::B ? 1 : 2;
        for (std::size_t i = 0; i < n; ++i) {
            for (int s : {1, -1}) {
                Weight w(n, 0);
                w[i] = s * scale;
                rs.roots.push_back(std::move(w));
            }
        }
    }
    std::sort(rs.roots.begin(), rs.roots.end());
    return rs;
}

WeylElement WeylElement::identity(int rank) {
    WeylElement w;
    w.perm.resize(static_cast<std::size_t>(rank));
    std::iota(w.perm.begin(), w.perm.end(), 0);
    w.signs.assign(static_cast<std::size_t>(rank), 1);
    return w;
}

int WeylElement::sign_product() const {
    return std::accumulate(signs.begin(), signs.end(), 1, std::multiplies<>());
}

std::int64_t weyl_group_order(const RootSystem& rs) {
    std::int64_t order = 1;
    for (int i = 2; i <= rs.rank; ++i) order *= i;
    const int sign_bits = rs.family == Family::D ? rs.rank - 1 : rs.rank;
    return order << sign_bits;
}

std::vector<int> degrees(const RootSystem& rs) {
    std::vector<int> out;
    const int evens = rs.family == Family::D ? rs.rank - 1 : rs.rank;
    for (int j = 1; j <= evens; ++j) out.push_back(2 * j);
    if (rs.family == Family::D) out.push_back(rs.rank);
    return out;
}

Weight act_on_weight(const WeylElement& w, std::span<const int> weight) {
    Weight out(weight.size(), 0);
    for (std::size_t i = 0; i < weight.size(); ++i) {
        out[static_cast<std::size_t>(w.perm[i])] += w.signs[i] * weight[i];
    }
    return out;
}

bool is_weyl_element(const RootSystem& rs, const WeylElement& w, bool with_outer) {
    if (w.rank() != rs.rank || w.signs.size() != w.perm.size()) return false;
    std::vector<int> sorted = w.perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < rs.rank; ++i) {
        if (sorted[static_cast<std::size_t>(i)] != i) return false;
    }
    if (std::any_of(w.signs.begin(), w.signs.end(), [](int s) { return s != 1 && s != -1; })) return false;
    return rs.family != Family::D || with_outer || w.sign_product() == 1;
}

std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, bool with_outer) {
    if (rs.rank > 4) throw ParameterError("explicit Weyl group enumeration is limited to rank <= 4");
    std::vector<WeylElement> out;
    WeylElement w = WeylElement::identity(rs.rank);
    do {
        for (unsigned mask = 0; mask < (1U << rs.rank); ++mask) {
            for (int i = 0; i < rs.rank; ++i) {
                w.signs[static_cast<std::size_t>(i)] = (mask >> i) & 1U ? -1 : 1;
            }
            if (is_weyl_element(rs, w, with_outer)) out.push_back(w);
        }
    } while (std::next_permutation(w.perm.begin(), w.perm.end()));
    return out;
}

WeylElement random_weyl_element(const RootSystem& rs, std::mt19937_64& rng, bool with_outer) {
    WeylElement w = WeylElement::identity(rs.rank);
    std::shuffle(w.perm.begin(), w.perm.end(), rng);
    std::bernoulli_distribution flip(0.5);
    for (auto& s : w.signs) s = flip(rng) ? -1 : 1;
    if (rs.family == Family::D && !with_outer && w.sign_product() != 1) w.signs[0] = -w.signs[0];
    return w;
}

}  // namespace plancheck
