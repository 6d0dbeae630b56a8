#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbm/errors.hpp"
#include "pbm/multiset.hpp"
#include "pbm/pomset.hpp"

namespace pbm {

using Residue = std::uint32_t;

/// A flat vector of N residues; block boundaries come from the owning BlockSpace.
struct BlockVector {
    std::vector<Residue> coords;

    friend bool operator==(const BlockVector&, const BlockVector&) = default;
    friend auto operator<=>(const BlockVector&, const BlockVector&) = default;
};

/// min(x, m - x) for 0 <= x < m.
int lee_weight(Residue x, int m);

/// Largest Lee weight among the entries; 0 exactly for the zero block.
int block_max_lee(std::span<const Residue> block, int m);

/**
 * Z_m^N split into n blocks of lengths k_1..k_n, with a pomset of height
 * floor(m/2) ordering the blocks.
 *
 * Full-space iteration is odometer order (last coordinate fastest). Any scan
 * of the space refuses to start when m^N exceeds the enumeration cap.
 */
class BlockSpace {
public:
    static constexpr std::uint64_t kDefaultCap = 10'000'000;

    BlockSpace(int m, Pomset pomset, std::vector<int> block_lengths);

    int modulus() const noexcept { return m_; }
    /// floor(m/2), the largest Lee weight and the pomset height.
    int max_lee() const noexcept { return m_ / 2; }
    const Pomset& pomset() const noexcept { return pomset_; }
    int blocks() const noexcept { return static_cast<int>(lengths_.size()); }
    int length() const noexcept { return length_; }
    std::span<const int> block_lengths() const noexcept { return lengths_; }
    int block_length(int i) const;
    bool unit_blocks() const noexcept;
    bool uniform_blocks() const noexcept;

    std::uint64_t cap() const noexcept { return cap_; }
    BlockSpace with_cap(std::uint64_t cap) const;
    /// Same modulus and blocks, order reversed.
    BlockSpace dual() const;

    /// m^N; throws Errc::Overflow when it does not fit 64 bits.
    Count cardinality() const;
    bool enumerable() const noexcept;
    /// Throws Errc::SpaceTooLarge when m^N exceeds the cap.
    void require_enumerable() const;

    BlockVector zero() const;
    /// Reduces each value mod m; throws Errc::DimensionMismatch on wrong length.
    BlockVector vector(std::span<const long long> values) const;
    BlockVector vector(std::initializer_list<long long> values) const;
    BlockVector parse_vector(std::string_view literal) const;
    std::string format(const BlockVector& v) const;

    std::span<const Residue> block(const BlockVector& v, int i) const;

    BlockVector add(const BlockVector& a, const BlockVector& b) const;
    BlockVector sub(const BlockVector& a, const BlockVector& b) const;
    BlockVector neg(const BlockVector& a) const;
    BlockVector scale(Residue s, const BlockVector& a) const;
    /// Sum over all N coordinates of a_i b_i mod m.
    Residue dot(const BlockVector& a, const BlockVector& b) const;

    /// Multiset assigning each nonzero block its largest Lee weight.
    Multiset support(const BlockVector& v) const;
    /// Ideal generated by the block support.
    Ideal support_ideal(const BlockVector& v) const;
    /// Cardinality of the ideal generated by the block support.
    int weight(const BlockVector& v) const;
    int distance(const BlockVector& a, const BlockVector& b) const;

    /// Number of blocks in the down-set of the nonzero blocks, ignoring counts.
    int poset_weight(const BlockVector& v) const;
    int poset_distance(const BlockVector& a, const BlockVector& b) const;

    /// Weighted-coordinates poset weight: Lee weight on the maximal elements of
    /// the down-set of the support, floor(m/2) on the rest. Unit blocks only.
    int pw_weight(const BlockVector& v) const;

    /// Odometer rank in 0..m^N-1.
    std::uint64_t rank(const BlockVector& v) const;
    BlockVector unrank(std::uint64_t index) const;

    /// Visits every vector with rank in [first, last) in odometer order. The
    /// callback receives a buffer that is overwritten on the next step.
    template <class F>
    void for_each_vector(std::uint64_t first, std::uint64_t last, F&& visit) const {
        require_enumerable();
        if (first >= last) return;
        BlockVector v = unrank(first);
        for (std::uint64_t r = first; r < last; ++r) {
            visit(static_cast<const BlockVector&>(v));
            for (int i = length_ - 1; i >= 0; --i) {
                if (++v.coords[i] < static_cast<Residue>(m_)) break;
                v.coords[i] = 0;
            }
        }
    }

    template <class F>
    void for_each_vector(F&& visit) const {
        require_enumerable();
        for_each_vector(0, cardinality(), std::forward<F>(visit));
    }

    friend bool operator==(const BlockSpace& a, const BlockSpace& b) {
        return a.m_ == b.m_ && a.pomset_ == b.pomset_ && a.lengths_ == b.lengths_;
    }

private:
    void require_member(const BlockVector& v) const;

    int m_;
    Pomset pomset_;
    std::vector<int> lengths_;
    std::vector<int> offsets_;
    int length_ = 0;
    std::uint64_t cap_ = kDefaultCap;
};

}  // namespace pbm
