#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pbm/block_space.hpp"

namespace pbm {

/// A nonempty set of codewords of one block space, kept sorted and deduplicated.
class Code {
public:
    /// Throws Errc::InvalidArgument when empty, Errc::DimensionMismatch on a wrong length.
    static Code from_words(const BlockSpace& space, std::vector<BlockVector> words);
    /// All Z_m-combinations of the generators (0 alone for no generators).
    static Code span(const BlockSpace& space, const std::vector<BlockVector>& generators);

    const BlockSpace& space() const noexcept { return space_; }
    const std::vector<BlockVector>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    /// Verified closed under addition. Always false on spaces above the cap.
    bool linear() const noexcept { return linear_; }
    bool contains(const BlockVector& v) const;

    friend bool operator==(const Code& a, const Code& b) { return a.space_ == b.space_ && a.words_ == b.words_; }

private:
    Code(BlockSpace space, std::vector<BlockVector> words, bool linear)
        : space_(std::move(space)), words_(std::move(words)), linear_(linear) {}

    BlockSpace space_;
    std::vector<BlockVector> words_;
    bool linear_;
};

enum class Metric { PomsetBlock, PosetBlock };

/// Smallest distance between two distinct codewords. Throws Errc::SingletonCode.
int min_distance(const Code& code, Metric metric = Metric::PomsetBlock);

/// Smallest e with m^e >= size.
int ceil_log(Count size, int m);

// Perfect codes

/// Zero on every root block of I, free elsewhere. Throws Errc::NotFullCount.
Code construct_perfect_full(const BlockSpace& space, const Ideal& ideal);
/// Zero on full-count roots, multiples of 2t+1 on each root of count t < floor(m/2),
/// free elsewhere. Throws Errc::DivisibilityFails when 2t+1 does not divide m.
Code construct_perfect_partial(const BlockSpace& space, const Ideal& ideal);
/// |D| predicted for construct_perfect_partial: prod (m/(2t+1))^k over partial
/// roots, times m^k per block outside the root set.
Count perfect_partial_size(const BlockSpace& space, const Ideal& ideal);

struct PerfectnessCertificate {
    bool disjoint = true;
    bool covering = true;
    /// First vector reached twice, or else the first uncovered vector in odometer order.
    std::optional<BlockVector> witness;
    /// The two codewords whose balls meet at the witness.
    std::optional<std::pair<BlockVector, BlockVector>> colliding;

    bool perfect() const { return disjoint && covering; }
};

PerfectnessCertificate verify_perfect(const Code& code, const Ideal& ideal);
PerfectnessCertificate verify_perfect(const Code& code, int radius);

// Duality

/// Vectors orthogonal to every codeword, as a code of the dual space. Throws Errc::NotLinear.
Code dual_code(const Code& code);

struct PerpDualityReport {
    bool code_perfect = false;  ///< C is I-perfect
    bool dual_perfect = false;  ///< C-perp is I^c-perfect in the dual space
    bool holds() const { return code_perfect == dual_perfect; }
};

/// Throws Errc::NotLinear, Errc::NotFullCount.
PerpDualityReport check_perp_duality(const Code& code, const Ideal& ideal);

// Chain pomsets

/// Largest r whose r-balls around the codewords are pairwise disjoint
/// (n*floor(m/2) for a single codeword).
int packing_radius_bruteforce(const Code& code);
/// floor(m/2) * (d_(P,pi)(C) - 1). Throws Errc::NotAChain.
int packing_radius_chain_formula(const Code& code);

struct SingletonReport {
    int distance = 0;
    int r = 0;                ///< size of the chain prefix J*
    std::vector<int> prefix;  ///< J*, bottom first
    int lhs = 0;              ///< sum of block lengths over J*
    int rhs = 0;              ///< N - ceil(log_m |C|)
    bool bound_holds() const { return lhs <= rhs; }
    bool mds() const { return lhs == rhs; }
};

/// For PomsetBlock r = floor((d-1)/floor(m/2)); for PosetBlock r = d - 1.
/// Throws Errc::NotAChain.
SingletonReport singleton_check(const Code& code, Metric metric = Metric::PomsetBlock);
bool is_mds(const Code& code, Metric metric = Metric::PomsetBlock);

struct PosetMdsReport {
    bool pm_mds = false;
    bool p_mds = false;
    /// floor((d_(Pm,pi) - 1)/floor(m/2)) <= d_(P,pi) - 1
    bool distance_inequality = false;
    bool holds() const { return (!pm_mds || p_mds) && distance_inequality; }
};

PosetMdsReport mds_implies_poset_mds(const Code& code);

struct MdsPerfectReport {
    int q = 0;  ///< |C| = m^q
    std::optional<Ideal> ideal;  ///< chain prefix of n - q/k full blocks
    bool mds = false;
    bool iperfect = false;
    bool forward_holds() const { return !mds || iperfect; }
    bool converse_holds() const { return !iperfect || mds; }
};

/// MDS versus perfection for the full-count chain prefix of n - q/k blocks.
/// Requires a chain, uniform blocks, |C| = m^q with k | q (Errc::NotAChain,
/// Errc::NonUniformBlocks, Errc::BadCardinality).
MdsPerfectReport mds_iperfect_bridge(const Code& code);

struct ImplicationReport {
    bool hypothesis = false;
    bool conclusion = false;
    bool holds() const { return !hypothesis || conclusion; }
};

/// Is an I-perfect code MDS? Hypothesis: I-perfect; conclusion: MDS.
ImplicationReport iperfect_implies_mds(const Code& code, const Ideal& ideal);

struct DistanceBracket {
    bool mds = false;
    bool applicable = false;  ///< k divides N - ceil(log_m |C|)
    int distance = 0;
    int lower = 0;  ///< floor(m/2)*r + 1
    int upper = 0;  ///< floor(m/2)*(r + 1)
    bool in_bracket() const { return applicable && lower <= distance && distance <= upper; }
    bool holds() const { return !mds || in_bracket(); }
};

/// Throws Errc::NotAChain, Errc::NonUniformBlocks.
DistanceBracket mds_distance_bracket(const Code& code);

struct DualityReport {
    bool mds = false;            ///< C is MDS
    bool iperfect = false;       ///< C is I-perfect for the prefix of n - q/k blocks
    bool dual_iperfect = false;  ///< C-perp is I^c-perfect in the dual chain
    bool dual_mds = false;       ///< C-perp is MDS in the dual chain
    bool all_equal() const { return mds == iperfect && iperfect == dual_iperfect && dual_iperfect == dual_mds; }
};

/// Throws Errc::NotAChain, Errc::NonUniformBlocks, Errc::NotLinear, Errc::BadCardinality.
DualityReport duality_equivalence(const Code& code);

struct RepetitionCodes {
    Code unit;   ///< span of the all-ones vector
    /// span of (1..1, 2..2, ..., m-1..m-1) with runs of length N/(m-1);
    /// absent when m - 1 does not divide N.
    std::optional<Code> block;
};

/// Throws Errc::NotAChain, Errc::NonUniformBlocks.
RepetitionCodes repetition_codes(const BlockSpace& space);

}  // namespace pbm
