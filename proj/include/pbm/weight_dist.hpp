#pragma once

#include <vector>

#include "pbm/block_space.hpp"

namespace pbm {

/// Number of residues of Z_m with Lee weight exactly r (1, 2, or 1 at r = m/2 for even m).
Count lee_shell_size(int m, int r);

/// Number of vectors in Z_m^k whose largest Lee weight is exactly r:
/// (2r - 1 + |D_r|)^k - (2r - 1)^k, and 1 for r = 0.
Count max_lee_shell_size(int m, int k, int r);

struct WeightDistribution {
    /// shells[r] = number of vectors of weight r, r = 0..n*floor(m/2).
    std::vector<Count> shells;

    Count total() const;
    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Closed form: sum over ideals I of cardinality r of
/// prod_{maximal i} |D_{c_i}^{k_i}| * m^{sum of k over non-maximal roots}.
Count shell_size(const BlockSpace& space, int r);
WeightDistribution weight_distribution(const BlockSpace& space);

/// Exhaustive scan. `threads` splits the rank range; the result does not depend on it.
Count shell_size_bruteforce(const BlockSpace& space, int r, unsigned threads = 1);
WeightDistribution weight_distribution_bruteforce(const BlockSpace& space, unsigned threads = 1);

/// The top shell r = n*floor(m/2), read off the unique full ideal.
Count top_shell_size(const BlockSpace& space);
/// Specialization for unit blocks: prod |D_{c_i}| * m^{l - j}. Throws Errc::NonUnitBlocks.
Count shell_size_unit_blocks(const BlockSpace& space, int r);
/// Specialization for uniform blocks of length k: prod |D_{c_i}^k| * m^{k(l - j)}.
/// Throws Errc::NonUniformBlocks.
Count shell_size_uniform_blocks(const BlockSpace& space, int r);

/**
 * Chain closed form. With r = t*floor(m/2) + s, 0 < s <= floor(m/2), the
 * unique ideal of cardinality r fills the bottom t chain elements and gives
 * count s to the next one, so |A_r| = m^{k of the t filled blocks} * |D_s^{k}|
 * for the block holding the partial count.
 *
 * Note: the exponent covers the filled (non-maximal) blocks only; including
 * the top block as well disagrees with the exhaustive count.
 * Throws Errc::NotAChain.
 */
Count chain_shell_size(const BlockSpace& space, int r);

/// Distribution under the weighted-coordinates poset weight (unit blocks only).
WeightDistribution pw_weight_distribution(const BlockSpace& space);
/// Compares the two scans shell by shell. Throws Errc::NonUnitBlocks.
bool pw_distribution_equals_pomset(const BlockSpace& space);

}  // namespace pbm
