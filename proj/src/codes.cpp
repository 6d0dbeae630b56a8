#include "pbm/codes.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "pbm/balls.hpp"
#include "pbm/submodule.hpp"

namespace pbm {

namespace {

int weight_in(const BlockSpace& space, const BlockVector& v, Metric metric) {
    return metric == Metric::PomsetBlock ? space.weight(v) : space.poset_weight(v);
}

int pairwise_min_distance(const Code& code, Metric metric) {
    const auto& space = code.space();
    const auto& w = code.words();
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, weight_in(space, space.sub(w[i], w[j]), metric));
    return best;
}

// A one-word code has no distance; for the Singleton bound it behaves as if
// its distance exceeded every weight.
int distance_or_beyond(const Code& code, Metric metric) {
    if (code.size() == 1) {
        const auto& s = code.space();
        return metric == Metric::PomsetBlock ? s.blocks() * s.max_lee() + 1 : s.blocks() + 1;
    }
    return min_distance(code, metric);
}

// Cartesian product of per-coordinate residue choices, in lexicographic order.
std::vector<BlockVector> product_words(const BlockSpace& space, const std::vector<std::vector<Residue>>& choices) {
    Count total = 1;
    for (const auto& c : choices) total = checked_mul(total, c.size());
    if (total > space.cap())
        throw Error(Errc::SpaceTooLarge, "code of " + std::to_string(total) + " words exceeds the cap of " + std::to_string(space.cap()));
    std::vector<BlockVector> out;
    out.reserve(total);
    std::vector<std::size_t> idx(choices.size(), 0);
    BlockVector v = space.zero();
    for (std::size_t i = 0; i < choices.size(); ++i) v.coords[i] = choices[i][0];
    for (Count n = 0; n < total; ++n) {
        out.push_back(v);
        for (std::size_t i = choices.size(); i-- > 0;) {
            if (++idx[i] < choices[i].size()) {
                v.coords[i] = choices[i][idx[i]];
                break;
            }
            idx[i] = 0;
            v.coords[i] = choices[i][0];
        }
    }
    return out;
}

// Marks each translate c + offset. Stops early when `stop_on_collision` and two balls meet.
PerfectnessCertificate mark_balls(const Code& code, const std::vector<BlockVector>& offsets, bool stop_on_collision) {
    const auto& space = code.space();
    space.require_enumerable();
    const Count card = space.cardinality();
    std::vector<std::int64_t> owner(card, -1);
    Count covered = 0;
    PerfectnessCertificate cert;
    const auto& words = code.words();
    for (std::size_t ci = 0; ci < words.size(); ++ci) {
        for (const auto& o : offsets) {
            const BlockVector x = space.add(words[ci], o);
            auto& slot = owner[space.rank(x)];
            if (slot < 0) {
                slot = static_cast<std::int64_t>(ci);
                ++covered;
            } else if (cert.disjoint) {
                cert.disjoint = false;
                cert.witness = x;
                cert.colliding = std::make_pair(words[static_cast<std::size_t>(slot)], words[ci]);
                if (stop_on_collision) return cert;
            }
        }
        if (!cert.disjoint && covered == card) break;
    }
    if (covered < card) {
        cert.covering = false;
        if (cert.disjoint) {
            for (Count r = 0; r < card; ++r)
                if (owner[r] < 0) {
                    cert.witness = space.unrank(r);
                    break;
                }
        }
    }
    return cert;
}

std::vector<int> require_chain_uniform(const BlockSpace& space) {
    auto order = space.pomset().chain_order();
    if (!space.uniform_blocks()) throw Error(Errc::NonUniformBlocks, "blocks must share one length");
    return order;
}

// Full-count ideal on the first s elements of a chain.
Ideal chain_prefix(const Pomset& pomset, const std::vector<int>& order, int s) {
    Multiset ms = pomset.empty_multiset();
    for (int t = 0; t < s; ++t) ms.set(order[t], pomset.height());
    return pomset.ideal(ms);
}

// q with |C| = m^q, or BadCardinality.
int exact_log(const Code& code) {
    const int m = code.space().modulus();
    const int q = ceil_log(code.size(), m);
    if (checked_pow(static_cast<Count>(m), static_cast<unsigned>(q)) != code.size())
        throw Error(Errc::BadCardinality, "code size " + std::to_string(code.size()) + " is not a power of " + std::to_string(m));
    return q;
}

}  // namespace

Code Code::from_words(const BlockSpace& space, std::vector<BlockVector> words) {
    if (words.empty()) throw Error(Errc::InvalidArgument, "a code needs at least one codeword");
    for (auto& w : words) {
        if (static_cast<int>(w.coords.size()) != space.length())
            throw Error(Errc::DimensionMismatch, "codeword has " + std::to_string(w.coords.size()) + " coordinates, expected " +
                                                     std::to_string(space.length()));
        for (auto& x : w.coords) x %= static_cast<Residue>(space.modulus());
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    const bool linear = space.enumerable() && closed_under_addition(space, words);
    return Code(space, std::move(words), linear);
}

Code Code::span(const BlockSpace& space, const std::vector<BlockVector>& generators) {
    return from_words(space, span_of(space, generators));
}

bool Code::contains(const BlockVector& v) const { return std::binary_search(words_.begin(), words_.end(), v); }

int min_distance(const Code& code, Metric metric) {
    if (code.size() < 2) throw Error(Errc::SingletonCode, "minimum distance needs at least two codewords");
    if (!code.linear()) return pairwise_min_distance(code, metric);
    int best = std::numeric_limits<int>::max();
    for (const auto& w : code.words()) {
        const int wt = weight_in(code.space(), w, metric);
        if (wt > 0) best = std::min(best, wt);
    }
    if (code.size() <= 2000 && pairwise_min_distance(code, metric) != best)
        throw std::logic_error("minimum weight disagrees with minimum pairwise distance on a linear code");
    return best;
}

int ceil_log(Count size, int m) {
    if (size == 0) throw Error(Errc::InvalidArgument, "log of zero");
    int e = 0;
    for (Count p = 1; p < size; p = checked_mul(p, static_cast<Count>(m))) ++e;
    return e;
}

Code construct_perfect_full(const BlockSpace& space, const Ideal& ideal) {
    if (!ideal.is_full_count())
        throw Error(Errc::NotFullCount, "ideal " + ideal.to_string() + " has a root below full count");
    return construct_perfect_partial(space, ideal);
}

Code construct_perfect_partial(const BlockSpace& space, const Ideal& ideal) {
    const int m = space.modulus();
    const int h = space.max_lee();
    space.pomset().ideal(ideal.multiset());
    std::vector<Residue> all(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) all[x] = static_cast<Residue>(x);
    std::vector<std::vector<Residue>> choices;
    for (int i = 1; i <= space.blocks(); ++i) {
        const int c = ideal.count(i);
        std::vector<Residue> block;
        if (c == 0) {
            block = all;
        } else if (c == h) {
            block = {0};
        } else {
            const int step = 2 * c + 1;
            if (m % step != 0)
                throw Error(Errc::DivisibilityFails, "element " + std::to_string(i) + " has count " + std::to_string(c) + ", and " +
                                                         std::to_string(step) + " does not divide " + std::to_string(m));
            for (int x = 0; x < m; x += step) block.push_back(static_cast<Residue>(x));
        }
        for (int j = 0; j < space.block_length(i); ++j) choices.push_back(block);
    }
    return Code::from_words(space, product_words(space, choices));
}

Count perfect_partial_size(const BlockSpace& space, const Ideal& ideal) {
    const auto m = static_cast<Count>(space.modulus());
    Count total = 1;
    for (int i = 1; i <= space.blocks(); ++i) {
        const int c = ideal.count(i);
        const auto k = static_cast<unsigned>(space.block_length(i));
        if (c == 0)
            total = checked_mul(total, checked_pow(m, k));
        else if (c < space.max_lee())
            total = checked_mul(total, checked_pow(m / static_cast<Count>(2 * c + 1), k));
    }
    return total;
}

PerfectnessCertificate verify_perfect(const Code& code, const Ideal& ideal) {
    return mark_balls(code, ideal_ball(code.space(), code.space().zero(), ideal), false);
}

PerfectnessCertificate verify_perfect(const Code& code, int radius) {
    return mark_balls(code, radius_ball(code.space(), code.space().zero(), radius), false);
}

Code dual_code(const Code& code) {
    if (!code.linear()) throw Error(Errc::NotLinear, "the dual is only taken for linear codes");
    const auto& space = code.space();
    return Code::from_words(space.dual(), orthogonal_complement(space, greedy_generators(space, code.words())));
}

PerpDualityReport check_perp_duality(const Code& code, const Ideal& ideal) {
    if (!ideal.is_full_count())
        throw Error(Errc::NotFullCount, "ideal " + ideal.to_string() + " has a root below full count");
    const Code perp = dual_code(code);
    PerpDualityReport report;
    report.code_perfect = verify_perfect(code, ideal).perfect();
    report.dual_perfect = verify_perfect(perp, code.space().pomset().complement_ideal(ideal)).perfect();
    return report;
}

int packing_radius_bruteforce(const Code& code) {
    const auto& space = code.space();
    const int top = space.blocks() * space.max_lee();
    if (code.size() == 1) return top;
    for (int r = 1; r <= top; ++r)
        if (!mark_balls(code, radius_ball(space, space.zero(), r), true).disjoint) return r - 1;
    return top;
}

int packing_radius_chain_formula(const Code& code) {
    code.space().pomset().chain_order();
    return code.space().max_lee() * (distance_or_beyond(code, Metric::PosetBlock) - 1);
}

SingletonReport singleton_check(const Code& code, Metric metric) {
    const auto& space = code.space();
    const auto order = space.pomset().chain_order();
    SingletonReport rep;
    rep.distance = distance_or_beyond(code, metric);
    rep.r = metric == Metric::PomsetBlock ? (rep.distance - 1) / space.max_lee() : rep.distance - 1;
    rep.r = std::min(rep.r, space.blocks());
    rep.prefix.assign(order.begin(), order.begin() + rep.r);
    for (int i : rep.prefix) rep.lhs += space.block_length(i);
    rep.rhs = space.length() - ceil_log(code.size(), space.modulus());
    return rep;
}

bool is_mds(const Code& code, Metric metric) { return singleton_check(code, metric).mds(); }

PosetMdsReport mds_implies_poset_mds(const Code& code) {
    const auto pm = singleton_check(code, Metric::PomsetBlock);
    const auto p = singleton_check(code, Metric::PosetBlock);
    PosetMdsReport rep;
    rep.pm_mds = pm.mds();
    rep.p_mds = p.mds();
    rep.distance_inequality = (pm.distance - 1) / code.space().max_lee() <= p.distance - 1;
    return rep;
}

MdsPerfectReport mds_iperfect_bridge(const Code& code) {
    const auto& space = code.space();
    const auto order = require_chain_uniform(space);
    const int k = space.block_length(order[0]);
    MdsPerfectReport rep;
    rep.q = exact_log(code);
    if (rep.q % k != 0)
        throw Error(Errc::BadCardinality, "log_m |C| = " + std::to_string(rep.q) + " is not a multiple of the block length " +
                                              std::to_string(k));
    rep.ideal = chain_prefix(space.pomset(), order, space.blocks() - rep.q / k);
    rep.mds = is_mds(code);
    rep.iperfect = verify_perfect(code, *rep.ideal).perfect();
    return rep;
}

ImplicationReport iperfect_implies_mds(const Code& code, const Ideal& ideal) {
    ImplicationReport rep;
    rep.hypothesis = verify_perfect(code, ideal).perfect();
    rep.conclusion = is_mds(code);
    return rep;
}

DistanceBracket mds_distance_bracket(const Code& code) {
    const auto& space = code.space();
    const auto order = require_chain_uniform(space);
    const int k = space.block_length(order[0]);
    const auto rep = singleton_check(code);
    DistanceBracket b;
    b.mds = rep.mds();
    b.distance = rep.distance;
    b.applicable = rep.rhs % k == 0;
    const int r = rep.rhs / k;
    b.lower = space.max_lee() * r + 1;
    b.upper = space.max_lee() * (r + 1);
    return b;
}

DualityReport duality_equivalence(const Code& code) {
    if (!code.linear()) throw Error(Errc::NotLinear, "duality needs a linear code");
    const auto bridge = mds_iperfect_bridge(code);
    const Code perp = dual_code(code);
    DualityReport rep;
    rep.mds = bridge.mds;
    rep.iperfect = bridge.iperfect;
    rep.dual_iperfect = verify_perfect(perp, code.space().pomset().complement_ideal(*bridge.ideal)).perfect();
    rep.dual_mds = is_mds(perp);
    return rep;
}

RepetitionCodes repetition_codes(const BlockSpace& space) {
    require_chain_uniform(space);
    const int m = space.modulus();
    const int n = space.length();
    BlockVector ones = space.zero();
    for (auto& x : ones.coords) x = 1;
    RepetitionCodes codes{Code::span(space, {ones}), std::nullopt};
    if (n % (m - 1) == 0) {
        BlockVector runs = space.zero();
        const int run = n / (m - 1);
        for (int i = 0; i < n; ++i) runs.coords[i] = static_cast<Residue>(1 + i / run);
        codes.block = Code::span(space, {runs});
    }
    return codes;
}

}  // namespace pbm
