#pragma once

#include <vector>

#include "pbm/block_space.hpp"

namespace pbm {

/// Membership bitmap over the odometer ranks of an enumerable space.
class VectorSet {
public:
    explicit VectorSet(const BlockSpace& space);
    VectorSet(const BlockSpace& space, const std::vector<BlockVector>& members);

    bool contains(const BlockVector& v) const { return bits_[space_->rank(v)] != 0; }
    /// Returns false when already present.
    bool insert(const BlockVector& v);
    std::size_t size() const noexcept { return size_; }

private:
    const BlockSpace* space_;
    std::vector<char> bits_;
    std::size_t size_ = 0;
};

/// Elements of `set` that are not in the span of the earlier picks, in input order.
std::vector<BlockVector> greedy_generators(const BlockSpace& space, const std::vector<BlockVector>& set);

/// Every Z_m-combination of the generators, in discovery order (starts with 0).
std::vector<BlockVector> span_of(const BlockSpace& space, const std::vector<BlockVector>& generators);

/// True iff the nonempty set is closed under addition (hence a submodule of Z_m^N).
bool closed_under_addition(const BlockSpace& space, const std::vector<BlockVector>& set);

/// All vectors whose flat dot product with every generator is 0 mod m, odometer order.
std::vector<BlockVector> orthogonal_complement(const BlockSpace& space, const std::vector<BlockVector>& generators);

}  // namespace pbm
