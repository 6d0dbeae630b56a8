#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pbm/multiset.hpp"

namespace pbm {

/// A multiset that satisfies the down-closure law of some pomset.
/// Instances are only produced by Pomset, which validates the law.
class Ideal {
public:
    const Multiset& multiset() const noexcept { return counts_; }
    int count(int index) const { return counts_.count(index); }
    int cardinality() const noexcept { return counts_.cardinality(); }
    std::vector<int> root_set() const { return counts_.root_set(); }
    int size() const noexcept { return counts_.size(); }
    int height() const noexcept { return counts_.height(); }

    /// Every root element carries the full height.
    bool is_full_count() const noexcept;

    std::string to_string() const { return counts_.to_string(); }

    friend bool operator==(const Ideal&, const Ideal&) = default;
    friend auto operator<=>(const Ideal&, const Ideal&) = default;

private:
    friend class Pomset;
    explicit Ideal(Multiset counts) : counts_(std::move(counts)) {}

    Multiset counts_;
};

/**
 * A partially ordered regular multiset of height h on [n].
 *
 * Every relation pair of a regular pomset carries full count, so the order is
 * stored as a strict partial order on [n]: the transitive closure of the
 * pairs given at construction. Immutable after construction.
 */
class Pomset {
public:
    /// `below` holds pairs (i, j) meaning i lies strictly below j (1-based).
    /// Throws Errc::IndexOutOfRange or Errc::CycleDetected.
    static Pomset make(int n, int height, std::span<const std::pair<int, int>> below);
    static Pomset antichain(int n, int height);
    /// 1 < 2 < ... < n.
    static Pomset chain(int n, int height);

    int size() const noexcept { return n_; }
    int height() const noexcept { return height_; }

    /// i strictly below j.
    bool less(int i, int j) const;
    bool comparable(int i, int j) const { return less(i, j) || less(j, i); }

    /// Every pair of the closure, lexicographic.
    std::vector<std::pair<int, int>> relations() const;
    /// Covering pairs only (Hasse diagram), lexicographic.
    std::vector<std::pair<int, int>> cover_relations() const;

    bool is_chain() const;
    bool is_antichain() const;
    /// Elements bottom to top. Throws Errc::NotAChain.
    std::vector<int> chain_order() const;
    /// Elements with nothing strictly below them, ascending.
    std::vector<int> minimal_elements() const;
    /// Elements with nothing strictly above them, ascending.
    std::vector<int> maximal_elements() const;
    /// A topological order, ties broken by smallest index.
    std::vector<int> linear_extension() const;

    /// Same elements, order reversed.
    Pomset dual() const;

    Multiset empty_multiset() const { return Multiset(n_, height_); }
    Multiset full_multiset() const { return Multiset::full(n_, height_); }

    bool is_ideal(const Multiset& m) const;
    /// Wraps `m` as an Ideal; throws Errc::NotAnIdeal when the down-closure law fails.
    Ideal ideal(const Multiset& m) const;
    Ideal ideal(std::string_view literal) const { return ideal(Multiset::parse(literal, n_, height_)); }
    Ideal empty_ideal() const { return Ideal(empty_multiset()); }
    Ideal full_ideal() const { return Ideal(full_multiset()); }

    /// Smallest ideal containing `m`: keeps each positive count and fills
    /// everything strictly below it to full height.
    Ideal generate(const Multiset& m) const;

    /// Root elements with nothing of the ideal strictly above them, counts kept.
    Multiset maximal_elements(const Ideal& ideal) const;

    /// The complement of an ideal, as an ideal of dual().
    Ideal complement_ideal(const Ideal& ideal) const;

    /// All ideals of cardinality t in increasing lexicographic order of counts.
    std::vector<Ideal> ideals_of_cardinality(int t) const;
    /// Ideals of cardinality t whose maximal elements number exactly j.
    std::vector<Ideal> ideals_by_maximal_count(int t, int j) const;
    /// Every ideal, by cardinality then lexicographic.
    std::vector<Ideal> all_ideals() const;

    /// A sub-ideal of cardinality s, obtained by repeatedly decrementing the
    /// largest-index maximal element.
    Ideal shrink(const Ideal& ideal, int s) const;

    friend bool operator==(const Pomset&, const Pomset&) = default;

private:
    Pomset(int n, int height, std::vector<std::vector<char>> below);

    void require_shape(const Multiset& m) const;
    void for_each_ideal(int target, const std::function<void(const std::vector<int>&)>& visit) const;

    int n_;
    int height_;
    std::vector<std::vector<char>> below_;  // below_[i][j]: i < j, 0-based
};

}  // namespace pbm
