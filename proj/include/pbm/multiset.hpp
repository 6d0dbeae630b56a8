#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pbm {

/**
 * A multiset over the ground set [n] = {1, ..., n} in which every element
 * occurs at most `height` times.
 *
 * Indices are 1-based on the public surface. Binary operations require both
 * operands to share (n, height) and throw Errc::DimensionMismatch otherwise.
 */
class Multiset {
public:
    /// The empty multiset.
    Multiset(int n, int height);
    Multiset(int n, int height, std::vector<int> counts);

    /// Every element at full count `height`.
    static Multiset full(int n, int height);

    /// Parses `count/index` tokens separated by whitespace, e.g. "3/1 1/3".
    /// "{}" or an empty string is the empty multiset; repeated indices are rejected.
    static Multiset parse(std::string_view literal, int n, int height);

    int size() const noexcept { return static_cast<int>(counts_.size()); }
    int height() const noexcept { return height_; }

    int count(int index) const;
    void set(int index, int count);
    std::span<const int> counts() const noexcept { return counts_; }

    int cardinality() const noexcept;
    std::vector<int> root_set() const;
    bool empty() const noexcept { return cardinality() == 0; }

    /// Tokens in increasing index order; "{}" when empty.
    std::string to_string() const;

    friend bool operator==(const Multiset&, const Multiset&) = default;
    friend auto operator<=>(const Multiset&, const Multiset&) = default;

private:
    int height_;
    std::vector<int> counts_;
};

bool is_submset(const Multiset& a, const Multiset& b);

/// Pointwise min(a + b, height).
Multiset mset_sum(const Multiset& a, const Multiset& b);
/// Pointwise max(a - b, 0).
Multiset mset_diff(const Multiset& a, const Multiset& b);
Multiset mset_union(const Multiset& a, const Multiset& b);
Multiset mset_intersection(const Multiset& a, const Multiset& b);
Multiset complement(const Multiset& a);

}  // namespace pbm
