#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pbm/block_space.hpp"

namespace pbm {

/// v lies in the I-ball around `center`: the ideal generated by the block
/// support of center - v is contained in I.
bool in_ideal_ball(const BlockSpace& space, const BlockVector& center, const BlockVector& v, const Ideal& ideal);

// Exhaustive membership scans, odometer order. All require an enumerable space.
std::vector<BlockVector> ideal_ball(const BlockSpace& space, const BlockVector& center, const Ideal& ideal);
std::vector<BlockVector> ideal_sphere(const BlockSpace& space, const BlockVector& center, const Ideal& ideal);
std::vector<BlockVector> radius_ball(const BlockSpace& space, const BlockVector& center, int radius);
std::vector<BlockVector> radius_sphere(const BlockSpace& space, const BlockVector& center, int radius);

/**
 * Closed-form size of the I-sphere: a product over the maximal elements of
 * I of the number of blocks with that exact largest Lee weight, times m^k
 * for every non-maximal block of I.
 *
 * For a maximal element i of count c and block length k the factor is
 * (2c+1)^k - (2c-1)^k below full count, and m^k - (m-N)^k at full count,
 * where N is the number of residues of Lee weight floor(m/2) (2 for odd m,
 * 1 for even m).
 */
Count ideal_sphere_size(const BlockSpace& space, const Ideal& ideal);

/// Sum of ideal_sphere_size over all ideals of cardinality r, grouped by the
/// number j = 1..min(r, n) of maximal elements. Radius 0 gives 1.
Count radius_sphere_size(const BlockSpace& space, int radius);
/// 1 + sum of the sphere sizes for radii 1..r. Independent of the center.
Count radius_ball_size(const BlockSpace& space, int radius);

/// prod over partial-count roots of (1 + 2c_i)^{k_i}, times m^{k_j} for each
/// full-count root.
Count ideal_ball_size(const BlockSpace& space, const Ideal& ideal);

struct FullCountBallReport {
    bool submodule = false;
    Count size = 0;
    Count expected_size = 0;
    /// Translates u + B_I are pairwise identical or disjoint and cover the space.
    bool cosets_partition = false;
    Count coset_count = 0;
    Count expected_coset_count = 0;
    /// B_I(u) computed by membership equals u + B_I at the sampled centers.
    bool translates_match = false;
    /// The orthogonal complement of B_I equals the I^c-ball of the dual space.
    bool perp_matches_dual = false;

    bool holds() const {
        return submodule && size == expected_size && cosets_partition && coset_count == expected_coset_count &&
               translates_match && perp_matches_dual;
    }
};

/// Checks the structure of B_I for a full-count ideal by exhaustive scans.
/// Throws Errc::NotFullCount.
FullCountBallReport full_count_ball_structure(const BlockSpace& space, const Ideal& ideal);

/// A pair u, v in B_I with u + v outside B_I, searched among single-coordinate
/// vectors. Empty when none exists there (always the case for full-count ideals).
std::optional<std::pair<BlockVector, BlockVector>> nonlinearity_witness(const BlockSpace& space, const Ideal& ideal);

/// Number of vectors of the space generating each ideal, by one full scan.
std::map<Multiset, Count> support_ideal_histogram(const BlockSpace& space);

}  // namespace pbm
