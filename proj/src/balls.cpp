#include "pbm/balls.hpp"

#include <algorithm>

#include "pbm/submodule.hpp"

namespace pbm {

namespace {

void require_space_ideal(const BlockSpace& space, const Ideal& ideal) {
    if (!space.pomset().is_ideal(ideal.multiset()))
        throw Error(Errc::NotAnIdeal, "'" + ideal.to_string() + "' is not an ideal of the space's pomset");
}

void require_radius(const BlockSpace& space, int radius) {
    const int top = space.blocks() * space.max_lee();
    if (radius < 0 || radius > top)
        throw Error(Errc::OutOfRange, "radius " + std::to_string(radius) + " outside 0.." + std::to_string(top));
}

// <supp(center - v)> lies in I exactly when supp(center - v) does, since I is
// down-closed; so it is enough to compare each block's largest Lee weight with
// the count of I there.
bool generated_within(const BlockSpace& space, const BlockVector& center, const BlockVector& v, const Ideal& ideal) {
    const int m = space.modulus();
    std::size_t pos = 0;
    for (int i = 1; i <= space.blocks(); ++i) {
        const int limit = ideal.count(i);
        for (int t = 0; t < space.block_length(i); ++t, ++pos) {
            const Residue d = (center.coords[pos] + static_cast<Residue>(m) - v.coords[pos]) % static_cast<Residue>(m);
            if (lee_weight(d, m) > limit) return false;
        }
    }
    return true;
}

}  // namespace

bool in_ideal_ball(const BlockSpace& space, const BlockVector& center, const BlockVector& v, const Ideal& ideal) {
    require_space_ideal(space, ideal);
    if (center.coords.size() != v.coords.size() || static_cast<int>(v.coords.size()) != space.length())
        throw Error(Errc::DimensionMismatch, "vectors do not belong to this space");
    return generated_within(space, center, v, ideal);
}

std::vector<BlockVector> ideal_ball(const BlockSpace& space, const BlockVector& center, const Ideal& ideal) {
    require_space_ideal(space, ideal);
    std::vector<BlockVector> out;
    space.for_each_vector([&](const BlockVector& v) {
        if (generated_within(space, center, v, ideal)) out.push_back(v);
    });
    return out;
}

std::vector<BlockVector> ideal_sphere(const BlockSpace& space, const BlockVector& center, const Ideal& ideal) {
    require_space_ideal(space, ideal);
    std::vector<BlockVector> out;
    space.for_each_vector([&](const BlockVector& v) {
        if (space.support_ideal(space.sub(center, v)) == ideal) out.push_back(v);
    });
    return out;
}

std::vector<BlockVector> radius_ball(const BlockSpace& space, const BlockVector& center, int radius) {
    require_radius(space, radius);
    std::vector<BlockVector> out;
    space.for_each_vector([&](const BlockVector& v) {
        if (space.distance(center, v) <= radius) out.push_back(v);
    });
    return out;
}

std::vector<BlockVector> radius_sphere(const BlockSpace& space, const BlockVector& center, int radius) {
    require_radius(space, radius);
    std::vector<BlockVector> out;
    space.for_each_vector([&](const BlockVector& v) {
        if (space.distance(center, v) == radius) out.push_back(v);
    });
    return out;
}

Count ideal_sphere_size(const BlockSpace& space, const Ideal& ideal) {
    require_space_ideal(space, ideal);
    const Count m = static_cast<Count>(space.modulus());
    const int h = space.max_lee();
    const Count top_residues = space.modulus() % 2 == 1 ? 2 : 1;
    const Multiset top = space.pomset().maximal_elements(ideal);
    Count total = 1;
    for (int i = 1; i <= space.blocks(); ++i) {
        const int c = ideal.count(i);
        if (c == 0) continue;
        const auto k = static_cast<unsigned>(space.block_length(i));
        Count factor;
        if (top.count(i) == 0) {
            factor = checked_pow(m, k);
        } else if (c == h) {
            factor = checked_sub(checked_pow(m, k), checked_pow(m - top_residues, k));
        } else {
            factor = checked_sub(checked_pow(2 * c + 1, k), checked_pow(2 * c - 1, k));
        }
        total = checked_mul(total, factor);
    }
    return total;
}

Count radius_sphere_size(const BlockSpace& space, int radius) {
    require_radius(space, radius);
    if (radius == 0) return 1;
    Count total = 0;
    const auto& pomset = space.pomset();
    for (int j = 1; j <= std::min(radius, space.blocks()); ++j)
        for (const auto& ideal : pomset.ideals_by_maximal_count(radius, j))
            total = checked_add(total, ideal_sphere_size(space, ideal));
    return total;
}

Count radius_ball_size(const BlockSpace& space, int radius) {
    require_radius(space, radius);
    Count total = 1;
    for (int i = 1; i <= radius; ++i) total = checked_add(total, radius_sphere_size(space, i));
    return total;
}

Count ideal_ball_size(const BlockSpace& space, const Ideal& ideal) {
    require_space_ideal(space, ideal);
    const int h = space.max_lee();
    Count total = 1;
    for (int i = 1; i <= space.blocks(); ++i) {
        const int c = ideal.count(i);
        if (c == 0) continue;
        const auto k = static_cast<unsigned>(space.block_length(i));
        const Count base = c == h ? static_cast<Count>(space.modulus()) : static_cast<Count>(2 * c + 1);
        total = checked_mul(total, checked_pow(base, k));
    }
    return total;
}

FullCountBallReport full_count_ball_structure(const BlockSpace& space, const Ideal& ideal) {
    require_space_ideal(space, ideal);
    if (!ideal.is_full_count())
        throw Error(Errc::NotFullCount, "'" + ideal.to_string() + "' has a root below full count");

    FullCountBallReport report;
    const auto ball = ideal_ball(space, space.zero(), ideal);
    report.size = ball.size();
    report.submodule = closed_under_addition(space, ball);

    unsigned root_length = 0;
    for (int i : ideal.root_set()) root_length += space.block_length(i);
    const Count m = static_cast<Count>(space.modulus());
    report.expected_size = checked_pow(m, root_length);
    report.expected_coset_count = checked_pow(m, static_cast<unsigned>(space.length()) - root_length);

    // Sweep the space, opening a new class at every unassigned vector.
    VectorSet assigned(space);
    bool disjoint = true;
    space.for_each_vector([&](const BlockVector& u) {
        if (assigned.contains(u)) return;
        ++report.coset_count;
        for (const auto& b : ball)
            if (!assigned.insert(space.add(u, b))) disjoint = false;
    });
    report.cosets_partition = disjoint && assigned.size() == space.cardinality();

    report.translates_match = true;
    const Count last = space.cardinality() - 1;
    for (Count r : {Count{1} % space.cardinality(), last / 2, last}) {
        const BlockVector u = space.unrank(r);
        auto shifted = ball;
        for (auto& b : shifted) b = space.add(u, b);
        std::sort(shifted.begin(), shifted.end(), [&](const BlockVector& a, const BlockVector& b) {
            return space.rank(a) < space.rank(b);
        });
        if (ideal_ball(space, u, ideal) != shifted) report.translates_match = false;
    }

    const auto perp = orthogonal_complement(space, greedy_generators(space, ball));
    const BlockSpace dual = space.dual();
    const Ideal dual_ideal = space.pomset().complement_ideal(ideal);
    report.perp_matches_dual = perp == ideal_ball(dual, dual.zero(), dual_ideal);
    return report;
}

std::optional<std::pair<BlockVector, BlockVector>> nonlinearity_witness(const BlockSpace& space, const Ideal& ideal) {
    require_space_ideal(space, ideal);
    const BlockVector zero = space.zero();
    for (int p = 0; p < space.length(); ++p)
        for (int a = 1; a < space.modulus(); ++a)
            for (int b = a; b < space.modulus(); ++b) {
                BlockVector u = zero, v = zero;
                u.coords[p] = static_cast<Residue>(a);
                v.coords[p] = static_cast<Residue>(b);
                if (!in_ideal_ball(space, zero, u, ideal) || !in_ideal_ball(space, zero, v, ideal)) continue;
                if (!in_ideal_ball(space, zero, space.add(u, v), ideal)) return std::make_pair(u, v);
            }
    return std::nullopt;
}

std::map<Multiset, Count> support_ideal_histogram(const BlockSpace& space) {
    std::map<Multiset, Count> histogram;
    space.for_each_vector([&](const BlockVector& v) { ++histogram[space.support_ideal(v).multiset()]; });
    return histogram;
}

}  // namespace pbm
