#include "pbm/multiset.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "pbm/errors.hpp"

namespace pbm {

namespace {

void require_same_shape(const Multiset& a, const Multiset& b) {
    if (a.size() != b.size() || a.height() != b.height())
        throw Error(Errc::DimensionMismatch, "multisets over (n=" + std::to_string(a.size()) +
                                                 ", h=" + std::to_string(a.height()) + ") and (n=" +
                                                 std::to_string(b.size()) + ", h=" + std::to_string(b.height()) +
                                                 ")");
}

template <class F>
Multiset pointwise(const Multiset& a, const Multiset& b, F&& f) {
    require_same_shape(a, b);
    std::vector<int> out(a.size());
    for (int i = 0; i < a.size(); ++i) out[i] = f(a.counts()[i], b.counts()[i]);
    return Multiset(a.size(), a.height(), std::move(out));
}

int parse_int(std::string_view text, std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw Error(Errc::Parse, "bad multiset token '" + std::string(token) + "'");
    return value;
}

}  // namespace

Multiset::Multiset(int n, int height) : Multiset(n, height, std::vector<int>(n > 0 ? n : 0, 0)) {}

Multiset::Multiset(int n, int height, std::vector<int> counts) : height_(height), counts_(std::move(counts)) {
    if (n < 1) throw Error(Errc::InvalidArgument, "ground set size must be positive");
    if (height < 1) throw Error(Errc::InvalidArgument, "height must be positive");
    if (static_cast<int>(counts_.size()) != n)
        throw Error(Errc::DimensionMismatch, "expected " + std::to_string(n) + " counts");
    for (int c : counts_)
        if (c < 0 || c > height_)
            throw Error(Errc::OutOfRange, "count " + std::to_string(c) + " outside 0.." + std::to_string(height_));
}

Multiset Multiset::full(int n, int height) { return Multiset(n, height, std::vector<int>(n, height)); }

Multiset Multiset::parse(std::string_view literal, int n, int height) {
    Multiset result(n, height);
    std::vector<bool> seen(n, false);
    std::istringstream in{std::string(literal)};
    std::string token;
    while (in >> token) {
        if (token == "{}") continue;
        auto slash = token.find('/');
        if (slash == std::string::npos) throw Error(Errc::Parse, "expected count/index, got '" + token + "'");
        std::string_view view(token);
        int count = parse_int(view.substr(0, slash), token);
        int index = parse_int(view.substr(slash + 1), token);
        if (index < 1 || index > n)
            throw Error(Errc::IndexOutOfRange, "index " + std::to_string(index) + " not in 1.." + std::to_string(n));
        if (seen[index - 1]) throw Error(Errc::Parse, "index " + std::to_string(index) + " repeated");
        seen[index - 1] = true;
        result.set(index, count);
    }
    return result;
}

int Multiset::count(int index) const {
    if (index < 1 || index > size())
        throw Error(Errc::IndexOutOfRange, "index " + std::to_string(index) + " not in 1.." + std::to_string(size()));
    return counts_[index - 1];
}

void Multiset::set(int index, int count) {
    if (index < 1 || index > size())
        throw Error(Errc::IndexOutOfRange, "index " + std::to_string(index) + " not in 1.." + std::to_string(size()));
    if (count < 0 || count > height_)
        throw Error(Errc::OutOfRange, "count " + std::to_string(count) + " outside 0.." + std::to_string(height_));
    counts_[index - 1] = count;
}

int Multiset::cardinality() const noexcept { return std::accumulate(counts_.begin(), counts_.end(), 0); }

std::vector<int> Multiset::root_set() const {
    std::vector<int> roots;
    for (int i = 0; i < size(); ++i)
        if (counts_[i] > 0) roots.push_back(i + 1);
    return roots;
}

std::string Multiset::to_string() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (counts_[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += std::to_string(counts_[i]) + "/" + std::to_string(i + 1);
    }
    return out.empty() ? "{}" : out;
}

bool is_submset(const Multiset& a, const Multiset& b) {
    require_same_shape(a, b);
    for (int i = 0; i < a.size(); ++i)
        if (a.counts()[i] > b.counts()[i]) return false;
    return true;
}

Multiset mset_sum(const Multiset& a, const Multiset& b) {
    const int h = a.height();
    return pointwise(a, b, [h](int x, int y) { return std::min(x + y, h); });
}

Multiset mset_diff(const Multiset& a, const Multiset& b) {
    return pointwise(a, b, [](int x, int y) { return std::max(x - y, 0); });
}

Multiset mset_union(const Multiset& a, const Multiset& b) {
    return pointwise(a, b, [](int x, int y) { return std::max(x, y); });
}

Multiset mset_intersection(const Multiset& a, const Multiset& b) {
    return pointwise(a, b, [](int x, int y) { return std::min(x, y); });
}

Multiset complement(const Multiset& a) {
    std::vector<int> out(a.size());
    for (int i = 0; i < a.size(); ++i) out[i] = a.height() - a.counts()[i];
    return Multiset(a.size(), a.height(), std::move(out));
}

}  // namespace pbm
