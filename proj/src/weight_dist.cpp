#include "pbm/weight_dist.hpp"

#include <algorithm>
#include <thread>

namespace pbm {

namespace {

void require_shell(const BlockSpace& space, int r) {
    const int top = space.blocks() * space.max_lee();
    if (r < 0 || r > top) throw Error(Errc::OutOfRange, "weight " + std::to_string(r) + " outside 0.." + std::to_string(top));
}

// Sum over ideals of cardinality r; `factor(i, c, k)` for a maximal element, m^k otherwise.
template <class MaximalFactor>
Count sum_over_ideals(const BlockSpace& space, int r, MaximalFactor&& factor) {
    require_shell(space, r);
    if (r == 0) return 1;
    const Count m = static_cast<Count>(space.modulus());
    Count total = 0;
    for (const auto& ideal : space.pomset().ideals_of_cardinality(r)) {
        const Multiset top = space.pomset().maximal_elements(ideal);
        Count term = 1;
        for (int i = 1; i <= space.blocks(); ++i) {
            const int c = ideal.count(i);
            if (c == 0) continue;
            const int k = space.block_length(i);
            term = checked_mul(term, top.count(i) > 0 ? factor(c, k) : checked_pow(m, static_cast<unsigned>(k)));
        }
        total = checked_add(total, term);
    }
    return total;
}

}  // namespace

Count lee_shell_size(int m, int r) {
    if (r < 0 || r > m / 2) throw Error(Errc::OutOfRange, "Lee weight " + std::to_string(r) + " outside 0.." + std::to_string(m / 2));
    if (r == 0) return 1;
    if (m % 2 == 0 && r == m / 2) return 1;
    return 2;
}

Count max_lee_shell_size(int m, int k, int r) {
    if (k < 1) throw Error(Errc::OutOfRange, "block length must be positive");
    const Count d = lee_shell_size(m, r);
    if (r == 0) return 1;
    const auto below = static_cast<Count>(2 * r - 1);
    return checked_sub(checked_pow(below + d, static_cast<unsigned>(k)), checked_pow(below, static_cast<unsigned>(k)));
}

Count WeightDistribution::total() const {
    Count sum = 0;
    for (Count a : shells) sum = checked_add(sum, a);
    return sum;
}

Count shell_size(const BlockSpace& space, int r) {
    const int m = space.modulus();
    return sum_over_ideals(space, r, [m](int c, int k) { return max_lee_shell_size(m, k, c); });
}

WeightDistribution weight_distribution(const BlockSpace& space) {
    WeightDistribution dist;
    for (int r = 0; r <= space.blocks() * space.max_lee(); ++r) dist.shells.push_back(shell_size(space, r));
    return dist;
}

WeightDistribution weight_distribution_bruteforce(const BlockSpace& space, unsigned threads) {
    space.require_enumerable();
    threads = std::max(1u, threads);
    const std::size_t shells = static_cast<std::size_t>(space.blocks() * space.max_lee()) + 1;
    const Count total = space.cardinality();
    std::vector<std::vector<Count>> partial(threads, std::vector<Count>(shells, 0));
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            const Count first = total * t / threads;
            const Count last = total * (t + 1) / threads;
            workers.emplace_back([&space, &partial, t, first, last] {
                space.for_each_vector(first, last, [&](const BlockVector& v) { ++partial[t][space.weight(v)]; });
            });
        }
    }
    WeightDistribution dist;
    dist.shells.assign(shells, 0);
    for (const auto& part : partial)
        for (std::size_t r = 0; r < shells; ++r) dist.shells[r] += part[r];
    return dist;
}

Count shell_size_bruteforce(const BlockSpace& space, int r, unsigned threads) {
    require_shell(space, r);
    return weight_distribution_bruteforce(space, threads).shells[r];
}

Count top_shell_size(const BlockSpace& space) {
    const Ideal full = space.pomset().full_ideal();
    const Multiset top = space.pomset().maximal_elements(full);
    const Count m = static_cast<Count>(space.modulus());
    Count total = 1;
    for (int i = 1; i <= space.blocks(); ++i) {
        const auto k = space.block_length(i);
        total = checked_mul(total, top.count(i) > 0 ? max_lee_shell_size(space.modulus(), k, space.max_lee())
                                                    : checked_pow(m, static_cast<unsigned>(k)));
    }
    return total;
}

Count shell_size_unit_blocks(const BlockSpace& space, int r) {
    if (!space.unit_blocks()) throw Error(Errc::NonUnitBlocks, "every block must have length 1");
    const int m = space.modulus();
    return sum_over_ideals(space, r, [m](int c, int) { return lee_shell_size(m, c); });
}

Count shell_size_uniform_blocks(const BlockSpace& space, int r) {
    if (!space.uniform_blocks()) throw Error(Errc::NonUniformBlocks, "blocks must share one length");
    const int m = space.modulus();
    // Per maximal element the factor is the block shell |D_c^k|; the product of
    // scalar shells raised to the k-th power would only count blocks whose
    // every entry has weight exactly c.
    return sum_over_ideals(space, r, [m](int c, int k) { return max_lee_shell_size(m, k, c); });
}

Count chain_shell_size(const BlockSpace& space, int r) {
    require_shell(space, r);
    const auto order = space.pomset().chain_order();
    if (r == 0) return 1;
    const int h = space.max_lee();
    const int filled = (r - 1) / h;
    const int partial = r - filled * h;
    unsigned filled_length = 0;
    for (int t = 0; t < filled; ++t) filled_length += static_cast<unsigned>(space.block_length(order[t]));
    return checked_mul(checked_pow(static_cast<Count>(space.modulus()), filled_length),
                       max_lee_shell_size(space.modulus(), space.block_length(order[filled]), partial));
}

WeightDistribution pw_weight_distribution(const BlockSpace& space) {
    if (!space.unit_blocks()) throw Error(Errc::NonUnitBlocks, "every block must have length 1");
    WeightDistribution dist;
    dist.shells.assign(static_cast<std::size_t>(space.blocks() * space.max_lee()) + 1, 0);
    space.for_each_vector([&](const BlockVector& v) { ++dist.shells[space.pw_weight(v)]; });
    return dist;
}

bool pw_distribution_equals_pomset(const BlockSpace& space) {
    return pw_weight_distribution(space) == weight_distribution_bruteforce(space);
}

}  // namespace pbm
