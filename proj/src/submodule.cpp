#include "pbm/submodule.hpp"

namespace pbm {

VectorSet::VectorSet(const BlockSpace& space) : space_(&space) {
    space.require_enumerable();
    bits_.assign(space.cardinality(), 0);
}

VectorSet::VectorSet(const BlockSpace& space, const std::vector<BlockVector>& members) : VectorSet(space) {
    for (const auto& v : members) insert(v);
}

bool VectorSet::insert(const BlockVector& v) {
    char& bit = bits_[space_->rank(v)];
    if (bit) return false;
    bit = 1;
    ++size_;
    return true;
}

namespace {

// Extends `members` (closed under the previous generators) by multiples of g.
void extend_span(const BlockSpace& space, VectorSet& seen, std::vector<BlockVector>& members, const BlockVector& g) {
    const std::size_t before = members.size();
    for (std::size_t idx = 0; idx < before; ++idx) {
        BlockVector t = members[idx];
        for (int a = 1; a < space.modulus(); ++a) {
            t = space.add(t, g);
            if (seen.insert(t)) members.push_back(t);
        }
    }
}

}  // namespace

std::vector<BlockVector> greedy_generators(const BlockSpace& space, const std::vector<BlockVector>& set) {
    VectorSet seen(space);
    std::vector<BlockVector> members{space.zero()};
    seen.insert(space.zero());
    std::vector<BlockVector> gens;
    for (const auto& v : set) {
        if (seen.contains(v)) continue;
        gens.push_back(v);
        extend_span(space, seen, members, v);
    }
    return gens;
}

std::vector<BlockVector> span_of(const BlockSpace& space, const std::vector<BlockVector>& generators) {
    VectorSet seen(space);
    std::vector<BlockVector> members{space.zero()};
    seen.insert(space.zero());
    for (const auto& g : generators) extend_span(space, seen, members, g);
    return members;
}

bool closed_under_addition(const BlockSpace& space, const std::vector<BlockVector>& set) {
    if (set.empty()) return false;
    VectorSet in_set(space, set);
    // S is closed iff span(S) == S; the span is grown one generator at a time
    // and rejected as soon as it leaves S.
    if (!in_set.contains(space.zero())) return false;
    VectorSet seen(space);
    std::vector<BlockVector> members{space.zero()};
    seen.insert(space.zero());
    for (const auto& v : set) {
        if (seen.contains(v)) continue;
        const std::size_t before = members.size();
        extend_span(space, seen, members, v);
        for (std::size_t i = before; i < members.size(); ++i)
            if (!in_set.contains(members[i])) return false;
    }
    return true;
}

std::vector<BlockVector> orthogonal_complement(const BlockSpace& space, const std::vector<BlockVector>& generators) {
    std::vector<BlockVector> out;
    space.for_each_vector([&](const BlockVector& v) {
        for (const auto& g : generators)
            if (space.dot(v, g) != 0) return;
        out.push_back(v);
    });
    return out;
}

}  // namespace pbm
