#include "pbm/pomset.hpp"

#include <algorithm>

#include "pbm/errors.hpp"

namespace pbm {

bool Ideal::is_full_count() const noexcept {
    for (int c : counts_.counts())
        if (c != 0 && c != counts_.height()) return false;
    return true;
}

Pomset::Pomset(int n, int height, std::vector<std::vector<char>> below)
    : n_(n), height_(height), below_(std::move(below)) {}

Pomset Pomset::make(int n, int height, std::span<const std::pair<int, int>> below) {
    if (n < 1) throw Error(Errc::InvalidArgument, "pomset needs at least one element");
    if (height < 1) throw Error(Errc::InvalidArgument, "pomset height must be positive");
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (auto [i, j] : below) {
        if (i < 1 || i > n || j < 1 || j > n)
            throw Error(Errc::IndexOutOfRange,
                        "relation " + std::to_string(i) + "<" + std::to_string(j) + " outside 1.." + std::to_string(n));
        if (i == j) throw Error(Errc::CycleDetected, "element " + std::to_string(i) + " placed below itself");
        rel[i - 1][j - 1] = 1;
    }
    // Warshall closure
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (rel[i][k])
                for (int j = 0; j < n; ++j)
                    if (rel[k][j]) rel[i][j] = 1;
    for (int i = 0; i < n; ++i)
        if (rel[i][i]) throw Error(Errc::CycleDetected, "order relation has a cycle through " + std::to_string(i + 1));
    return Pomset(n, height, std::move(rel));
}

Pomset Pomset::antichain(int n, int height) { return make(n, height, {}); }

Pomset Pomset::chain(int n, int height) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
    return make(n, height, pairs);
}

bool Pomset::less(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw Error(Errc::IndexOutOfRange, "element outside 1.." + std::to_string(n_));
    return below_[i - 1][j - 1] != 0;
}

std::vector<std::pair<int, int>> Pomset::relations() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (below_[i][j]) out.emplace_back(i + 1, j + 1);
    return out;
}

std::vector<std::pair<int, int>> Pomset::cover_relations() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (!below_[i][j]) continue;
            bool covered = true;
            for (int k = 0; k < n_ && covered; ++k)
                if (below_[i][k] && below_[k][j]) covered = false;
            if (covered) out.emplace_back(i + 1, j + 1);
        }
    return out;
}

bool Pomset::is_chain() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (!below_[i][j] && !below_[j][i]) return false;
    return true;
}

bool Pomset::is_antichain() const {
    for (const auto& row : below_)
        for (char c : row)
            if (c) return false;
    return true;
}

std::vector<int> Pomset::chain_order() const {
    if (!is_chain()) throw Error(Errc::NotAChain, "pomset order is not total");
    return linear_extension();
}

std::vector<int> Pomset::linear_extension() const {
    std::vector<int> order;
    std::vector<char> placed(n_, 0);
    while (static_cast<int>(order.size()) < n_) {
        for (int j = 0; j < n_; ++j) {
            if (placed[j]) continue;
            bool ready = true;
            for (int i = 0; i < n_ && ready; ++i)
                if (below_[i][j] && !placed[i]) ready = false;
            if (ready) {
                placed[j] = 1;
                order.push_back(j + 1);
                break;
            }
        }
    }
    return order;
}

Pomset Pomset::dual() const {
    std::vector<std::vector<char>> rel(n_, std::vector<char>(n_, 0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) rel[j][i] = below_[i][j];
    return Pomset(n_, height_, std::move(rel));
}

void Pomset::require_shape(const Multiset& m) const {
    if (m.size() != n_ || m.height() != height_)
        throw Error(Errc::DimensionMismatch, "multiset over (n=" + std::to_string(m.size()) + ", h=" +
                                                 std::to_string(m.height()) + ") used with pomset (n=" +
                                                 std::to_string(n_) + ", h=" + std::to_string(height_) + ")");
}

bool Pomset::is_ideal(const Multiset& m) const {
    require_shape(m);
    const auto c = m.counts();
    for (int j = 0; j < n_; ++j) {
        if (c[j] == 0) continue;
        for (int i = 0; i < n_; ++i)
            if (below_[i][j] && c[i] != height_) return false;
    }
    return true;
}

Ideal Pomset::ideal(const Multiset& m) const {
    if (!is_ideal(m)) throw Error(Errc::NotAnIdeal, "'" + m.to_string() + "' is not down-closed");
    return Ideal(m);
}

Ideal Pomset::generate(const Multiset& m) const {
    require_shape(m);
    std::vector<int> out(m.counts().begin(), m.counts().end());
    const auto c = m.counts();
    for (int j = 0; j < n_; ++j) {
        if (c[j] == 0) continue;
        for (int i = 0; i < n_; ++i)
            if (below_[i][j]) out[i] = height_;
    }
    return Ideal(Multiset(n_, height_, std::move(out)));
}

std::vector<int> Pomset::minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i) {
        bool minimal = true;
        for (int j = 0; j < n_ && minimal; ++j)
            if (below_[j][i]) minimal = false;
        if (minimal) out.push_back(i + 1);
    }
    return out;
}

std::vector<int> Pomset::maximal_elements() const { return dual().minimal_elements(); }

Multiset Pomset::maximal_elements(const Ideal& ideal) const {
    require_shape(ideal.multiset());
    const auto c = ideal.multiset().counts();
    std::vector<int> out(n_, 0);
    for (int i = 0; i < n_; ++i) {
        if (c[i] == 0) continue;
        bool maximal = true;
        for (int j = 0; j < n_ && maximal; ++j)
            if (c[j] > 0 && below_[i][j]) maximal = false;
        if (maximal) out[i] = c[i];
    }
    return Multiset(n_, height_, std::move(out));
}

Ideal Pomset::complement_ideal(const Ideal& ideal) const {
    if (!is_ideal(ideal.multiset()))
        throw Error(Errc::NotAnIdeal, "'" + ideal.to_string() + "' is not an ideal of this pomset");
    return dual().ideal(complement(ideal.multiset()));
}

void Pomset::for_each_ideal(int target, const std::function<void(const std::vector<int>&)>& visit) const {
    const auto order = linear_extension();
    std::vector<int> counts(n_, 0);
    std::function<void(int, int)> recurse = [&](int pos, int used) {
        if (pos == n_) {
            if (target < 0 || used == target) visit(counts);
            return;
        }
        if (target >= 0 && target - used > height_ * (n_ - pos)) return;
        const int e = order[pos] - 1;
        bool open = true;
        for (int i = 0; i < n_ && open; ++i)
            if (below_[i][e] && counts[i] != height_) open = false;
        int top = open ? height_ : 0;
        if (target >= 0) top = std::min(top, target - used);
        for (int c = 0; c <= top; ++c) {
            counts[e] = c;
            recurse(pos + 1, used + c);
        }
        counts[e] = 0;
    };
    recurse(0, 0);
}

std::vector<Ideal> Pomset::ideals_of_cardinality(int t) const {
    if (t < 0 || t > n_ * height_)
        throw Error(Errc::OutOfRange, "cardinality " + std::to_string(t) + " outside 0.." + std::to_string(n_ * height_));
    std::vector<Ideal> out;
    for_each_ideal(t, [&](const std::vector<int>& c) { out.push_back(Ideal(Multiset(n_, height_, c))); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Ideal> Pomset::ideals_by_maximal_count(int t, int j) const {
    if (t < 0 || t > n_ * height_)
        throw Error(Errc::OutOfRange, "cardinality " + std::to_string(t) + " outside 0.." + std::to_string(n_ * height_));
    if (j < 1 || j > std::min(t, n_))
        throw Error(Errc::OutOfRange, "maximal-element count " + std::to_string(j) + " outside 1.." +
                                          std::to_string(std::min(t, n_)));
    std::vector<Ideal> out;
    for (auto& ideal : ideals_of_cardinality(t))
        if (static_cast<int>(maximal_elements(ideal).root_set().size()) == j) out.push_back(std::move(ideal));
    return out;
}

std::vector<Ideal> Pomset::all_ideals() const {
    std::vector<Ideal> out;
    for_each_ideal(-1, [&](const std::vector<int>& c) { out.push_back(Ideal(Multiset(n_, height_, c))); });
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
        return a < b;
    });
    return out;
}

Ideal Pomset::shrink(const Ideal& ideal, int s) const {
    if (!is_ideal(ideal.multiset()))
        throw Error(Errc::NotAnIdeal, "'" + ideal.to_string() + "' is not an ideal of this pomset");
    if (s < 0 || s > ideal.cardinality())
        throw Error(Errc::OutOfRange, "target " + std::to_string(s) + " outside 0.." + std::to_string(ideal.cardinality()));
    Multiset current = ideal.multiset();
    for (int remaining = ideal.cardinality() - s; remaining > 0; --remaining) {
        const auto top = maximal_elements(Ideal(current)).root_set();
        const int e = top.back();
        current.set(e, current.count(e) - 1);
    }
    return Ideal(std::move(current));
}

}  // namespace pbm
