#include "pbm/block_space.hpp"

#include <algorithm>
#include <sstream>

namespace pbm {

int lee_weight(Residue x, int m) {
    const int v = static_cast<int>(x % static_cast<Residue>(m));
    return std::min(v, m - v);
}

int block_max_lee(std::span<const Residue> block, int m) {
    int best = 0;
    for (Residue x : block) best = std::max(best, lee_weight(x, m));
    return best;
}

BlockSpace::BlockSpace(int m, Pomset pomset, std::vector<int> block_lengths)
    : m_(m), pomset_(std::move(pomset)), lengths_(std::move(block_lengths)) {
    if (m_ < 2) throw Error(Errc::InvalidArgument, "modulus must be at least 2");
    if (pomset_.height() != m_ / 2)
        throw Error(Errc::DimensionMismatch, "pomset height " + std::to_string(pomset_.height()) +
                                                 " differs from floor(m/2) = " + std::to_string(m_ / 2));
    if (static_cast<int>(lengths_.size()) != pomset_.size())
        throw Error(Errc::DimensionMismatch, std::to_string(lengths_.size()) + " block lengths for a pomset on " +
                                                 std::to_string(pomset_.size()) + " elements");
    for (int k : lengths_) {
        if (k < 1) throw Error(Errc::InvalidArgument, "block lengths must be positive");
        offsets_.push_back(length_);
        length_ += k;
    }
}

int BlockSpace::block_length(int i) const {
    if (i < 1 || i > blocks()) throw Error(Errc::IndexOutOfRange, "block " + std::to_string(i));
    return lengths_[i - 1];
}

bool BlockSpace::unit_blocks() const noexcept {
    return std::all_of(lengths_.begin(), lengths_.end(), [](int k) { return k == 1; });
}

bool BlockSpace::uniform_blocks() const noexcept {
    return std::all_of(lengths_.begin(), lengths_.end(), [&](int k) { return k == lengths_.front(); });
}

BlockSpace BlockSpace::with_cap(std::uint64_t cap) const {
    BlockSpace copy = *this;
    copy.cap_ = cap;
    return copy;
}

BlockSpace BlockSpace::dual() const { return BlockSpace(m_, pomset_.dual(), lengths_).with_cap(cap_); }

Count BlockSpace::cardinality() const { return checked_pow(static_cast<Count>(m_), static_cast<unsigned>(length_)); }

bool BlockSpace::enumerable() const noexcept {
    Count total = 1;
    for (int i = 0; i < length_; ++i) {
        if (__builtin_mul_overflow(total, static_cast<Count>(m_), &total)) return false;
        if (total > cap_) return false;
    }
    return true;
}

void BlockSpace::require_enumerable() const {
    if (!enumerable())
        throw Error(Errc::SpaceTooLarge, std::to_string(m_) + "^" + std::to_string(length_) +
                                             " vectors exceed the enumeration cap " + std::to_string(cap_));
}

BlockVector BlockSpace::zero() const { return BlockVector{std::vector<Residue>(length_, 0)}; }

BlockVector BlockSpace::vector(std::span<const long long> values) const {
    if (static_cast<int>(values.size()) != length_)
        throw Error(Errc::DimensionMismatch,
                    "vector has " + std::to_string(values.size()) + " entries, space needs " + std::to_string(length_));
    BlockVector v;
    v.coords.reserve(values.size());
    for (long long x : values) {
        long long r = x % m_;
        if (r < 0) r += m_;
        v.coords.push_back(static_cast<Residue>(r));
    }
    return v;
}

BlockVector BlockSpace::vector(std::initializer_list<long long> values) const {
    return vector(std::span<const long long>(values.begin(), values.size()));
}

BlockVector BlockSpace::parse_vector(std::string_view literal) const {
    std::istringstream in{std::string(literal)};
    std::vector<long long> values;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        long long x = 0;
        try {
            x = std::stoll(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || token.empty()) throw Error(Errc::Parse, "bad residue '" + token + "'");
        values.push_back(x);
    }
    return vector(values);
}

std::string BlockSpace::format(const BlockVector& v) const {
    std::string out;
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v.coords[i]);
    }
    return out;
}

void BlockSpace::require_member(const BlockVector& v) const {
    if (static_cast<int>(v.coords.size()) != length_)
        throw Error(Errc::DimensionMismatch,
                    "vector of length " + std::to_string(v.coords.size()) + " in a space of length " + std::to_string(length_));
}

std::span<const Residue> BlockSpace::block(const BlockVector& v, int i) const {
    require_member(v);
    if (i < 1 || i > blocks()) throw Error(Errc::IndexOutOfRange, "block " + std::to_string(i));
    return std::span<const Residue>(v.coords).subspan(offsets_[i - 1], lengths_[i - 1]);
}

BlockVector BlockSpace::add(const BlockVector& a, const BlockVector& b) const {
    require_member(a);
    require_member(b);
    BlockVector r = a;
    for (int i = 0; i < length_; ++i) r.coords[i] = (a.coords[i] + b.coords[i]) % m_;
    return r;
}

BlockVector BlockSpace::sub(const BlockVector& a, const BlockVector& b) const {
    require_member(a);
    require_member(b);
    BlockVector r = a;
    for (int i = 0; i < length_; ++i) r.coords[i] = (a.coords[i] + m_ - b.coords[i]) % m_;
    return r;
}

BlockVector BlockSpace::neg(const BlockVector& a) const { return sub(zero(), a); }

BlockVector BlockSpace::scale(Residue s, const BlockVector& a) const {
    require_member(a);
    BlockVector r = a;
    const std::uint64_t factor = s % m_;
    for (int i = 0; i < length_; ++i) r.coords[i] = static_cast<Residue>((factor * a.coords[i]) % m_);
    return r;
}

Residue BlockSpace::dot(const BlockVector& a, const BlockVector& b) const {
    require_member(a);
    require_member(b);
    std::uint64_t acc = 0;
    for (int i = 0; i < length_; ++i) acc = (acc + static_cast<std::uint64_t>(a.coords[i]) * b.coords[i]) % m_;
    return static_cast<Residue>(acc);
}

Multiset BlockSpace::support(const BlockVector& v) const {
    require_member(v);
    std::vector<int> counts(blocks());
    for (int i = 0; i < blocks(); ++i)
        counts[i] = block_max_lee(std::span<const Residue>(v.coords).subspan(offsets_[i], lengths_[i]), m_);
    return Multiset(blocks(), max_lee(), std::move(counts));
}

Ideal BlockSpace::support_ideal(const BlockVector& v) const { return pomset_.generate(support(v)); }

int BlockSpace::weight(const BlockVector& v) const { return support_ideal(v).cardinality(); }

int BlockSpace::distance(const BlockVector& a, const BlockVector& b) const { return weight(sub(a, b)); }

int BlockSpace::poset_weight(const BlockVector& v) const {
    const auto s = support(v);
    int total = 0;
    for (int j = 1; j <= blocks(); ++j) {
        bool in_downset = s.count(j) > 0;
        for (int i = 1; i <= blocks() && !in_downset; ++i)
            if (s.count(i) > 0 && pomset_.less(j, i)) in_downset = true;
        total += in_downset ? 1 : 0;
    }
    return total;
}

int BlockSpace::poset_distance(const BlockVector& a, const BlockVector& b) const { return poset_weight(sub(a, b)); }

int BlockSpace::pw_weight(const BlockVector& v) const {
    if (!unit_blocks()) throw Error(Errc::NonUnitBlocks, "weighted-coordinates weight needs every block of length 1");
    require_member(v);
    // down-set of the nonzero coordinates, then split into maximal / non-maximal
    std::vector<char> in_downset(blocks(), 0);
    for (int i = 0; i < blocks(); ++i) {
        if (v.coords[i] == 0) continue;
        in_downset[i] = 1;
        for (int j = 0; j < blocks(); ++j)
            if (pomset_.less(j + 1, i + 1)) in_downset[j] = 1;
    }
    int total = 0;
    for (int i = 0; i < blocks(); ++i) {
        if (!in_downset[i]) continue;
        bool maximal = true;
        for (int j = 0; j < blocks() && maximal; ++j)
            if (in_downset[j] && pomset_.less(i + 1, j + 1)) maximal = false;
        total += maximal ? lee_weight(v.coords[i], m_) : max_lee();
    }
    return total;
}

std::uint64_t BlockSpace::rank(const BlockVector& v) const {
    require_member(v);
    std::uint64_t r = 0;
    for (Residue x : v.coords) r = checked_add(checked_mul(r, static_cast<Count>(m_)), x);
    return r;
}

BlockVector BlockSpace::unrank(std::uint64_t index) const {
    BlockVector v = zero();
    for (int i = length_ - 1; i >= 0; --i) {
        v.coords[i] = static_cast<Residue>(index % m_);
        index /= m_;
    }
    if (index != 0) throw Error(Errc::OutOfRange, "rank exceeds m^N");
    return v;
}

}  // namespace pbm
