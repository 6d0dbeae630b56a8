#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pbm/balls.hpp"
#include "pbm/codes.hpp"
#include "pbm/text_format.hpp"
#include "pbm/weight_dist.hpp"

using namespace pbm;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInvalid = 2;

const char* kGrammar = R"(
Space file (one directive per line, '#' starts a comment):
  m <modulus>              modulus m >= 2; the pomset height is floor(m/2)
  blocks <k1> ... <kn>     block lengths, N = k1 + ... + kn
  order <i<j> ...          optional, repeatable; i<j<k chains allowed; absent = antichain
Vector literal: N residues separated by spaces, e.g. "0 1 4"; values are reduced mod m.
Ideal literal: count/index tokens, e.g. "2/1 1/2"; omitted indices have count 0; "{}" is empty.
Code file: first line 'explicit' then one codeword per line,
           or 'linear' then generator rows (expanded to their span).
Exit status: 0 the property holds, 1 it fails (certificate printed), 2 invalid input.
)";

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Context {
    std::uint64_t cap = BlockSpace::kDefaultCap;
    std::string space_path;
    std::string code_path;

    BlockSpace space() const { return load_space(space_path).with_cap(cap); }
};

// ---- weight ---------------------------------------------------------------

int run_weight(const Context& ctx, const std::vector<std::string>& vector, bool poset) {
    const auto s = ctx.space();
    const auto v = s.parse_vector(join(vector));
    std::cout << (poset ? s.poset_weight(v) : s.weight(v)) << "\n";
    return kHolds;
}

// ---- ideals ---------------------------------------------------------------

int run_ideals(const Context& ctx, std::optional<int> card, std::optional<int> max_count) {
    const auto s = ctx.space();
    const auto& p = s.pomset();
    std::vector<Ideal> ideals;
    if (card && max_count)
        ideals = p.ideals_by_maximal_count(*card, *max_count);
    else if (card)
        ideals = p.ideals_of_cardinality(*card);
    else
        ideals = p.all_ideals();
    for (const auto& i : ideals) {
        if (max_count && !card && static_cast<int>(p.maximal_elements(i).root_set().size()) != *max_count) continue;
        std::cout << i.to_string() << "\t" << i.cardinality() << "\t" << p.maximal_elements(i).to_string() << "\t"
                  << (i.is_full_count() ? "full" : "partial") << "\n";
    }
    return kHolds;
}

// ---- ballsize -------------------------------------------------------------

int run_ballsize(const Context& ctx, const std::string& ideal_literal, std::optional<int> radius, bool sphere, bool enumerate,
                 const std::string& center_literal) {
    const auto s = ctx.space();
    const auto center = center_literal.empty() ? s.zero() : s.parse_vector(center_literal);
    Count formula = 0;
    std::optional<Count> scanned;
    if (radius) {
        formula = sphere ? radius_sphere_size(s, *radius) : radius_ball_size(s, *radius);
        if (enumerate) scanned = (sphere ? radius_sphere(s, center, *radius) : radius_ball(s, center, *radius)).size();
    } else {
        const auto i = s.pomset().ideal(ideal_literal);
        formula = sphere ? ideal_sphere_size(s, i) : ideal_ball_size(s, i);
        if (enumerate) scanned = (sphere ? ideal_sphere(s, center, i) : ideal_ball(s, center, i)).size();
    }
    std::cout << "formula\t" << formula << "\n";
    if (!scanned) return kHolds;
    std::cout << "enumerated\t" << *scanned << "\n";
    if (*scanned != formula) {
        std::cerr << "formula and enumeration disagree\n";
        return kFails;
    }
    return kHolds;
}

// ---- wdist ----------------------------------------------------------------

int run_wdist(const Context& ctx, bool use_oracle, unsigned threads) {
    const auto s = ctx.space();
    const auto dist = use_oracle ? weight_distribution_bruteforce(s, threads) : weight_distribution(s);
    for (std::size_t r = 0; r < dist.shells.size(); ++r) std::cout << r << "\t" << dist.shells[r] << "\n";
    std::cout << "# total " << dist.total() << "\n";
    return kHolds;
}

// ---- perfect --------------------------------------------------------------

void print_certificate(const BlockSpace& s, const PerfectnessCertificate& cert) {
    std::cout << "disjoint\t" << yes_no(cert.disjoint) << "\n";
    std::cout << "covering\t" << yes_no(cert.covering) << "\n";
    std::cout << "perfect\t" << yes_no(cert.perfect()) << "\n";
    if (cert.witness) std::cout << "witness\t" << s.format(*cert.witness) << "\n";
    if (cert.colliding)
        std::cout << "colliding\t" << s.format(cert.colliding->first) << "\t" << s.format(cert.colliding->second) << "\n";
}

int run_perfect_construct(const Context& ctx, const std::string& ideal_literal, const std::string& out_path) {
    const auto s = ctx.space();
    const auto i = s.pomset().ideal(ideal_literal);
    const auto code = i.is_full_count() ? construct_perfect_full(s, i) : construct_perfect_partial(s, i);
    const auto text = format_code(code);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error(Errc::InvalidArgument, "cannot write '" + out_path + "'");
        out << text;
    }
    std::cerr << code.size() << " codewords\n";
    return kHolds;
}

int run_perfect_verify(const Context& ctx, const std::string& ideal_literal, std::optional<int> radius) {
    const auto s = ctx.space();
    const auto code = load_code(s, ctx.code_path);
    const auto cert = radius ? verify_perfect(code, *radius) : verify_perfect(code, s.pomset().ideal(ideal_literal));
    print_certificate(s, cert);
    return cert.perfect() ? kHolds : kFails;
}

// ---- mds / dual / packrad / duality4 --------------------------------------

int run_mds(const Context& ctx, bool poset) {
    const auto s = ctx.space();
    const auto code = load_code(s, ctx.code_path);
    const auto rep = singleton_check(code, poset ? Metric::PosetBlock : Metric::PomsetBlock);
    std::string prefix;
    for (int i : rep.prefix) prefix += (prefix.empty() ? "" : " ") + std::to_string(i);
    std::cout << "size\t" << code.size() << "\n";
    std::cout << "distance\t" << rep.distance << "\n";
    std::cout << "r\t" << rep.r << "\n";
    std::cout << "prefix\t" << (prefix.empty() ? "{}" : prefix) << "\n";
    std::cout << "lhs\t" << rep.lhs << "\n";
    std::cout << "rhs\t" << rep.rhs << "\n";
    std::cout << "bound\t" << (rep.bound_holds() ? "holds" : "violated") << "\n";
    std::cout << "mds\t" << yes_no(rep.mds()) << "\n";
    return rep.mds() ? kHolds : kFails;
}

int run_dual(const Context& ctx, const std::string& space_out) {
    const auto s = ctx.space();
    const auto perp = dual_code(load_code(s, ctx.code_path));
    if (!space_out.empty()) {
        std::ofstream out(space_out, std::ios::binary);
        if (!out) throw Error(Errc::InvalidArgument, "cannot write '" + space_out + "'");
        out << format_space(perp.space());
    }
    std::cout << format_code(perp);
    std::cerr << perp.size() << " codewords in the dual\n";
    return kHolds;
}

int run_packrad(const Context& ctx) {
    const auto s = ctx.space();
    const auto code = load_code(s, ctx.code_path);
    const int brute = packing_radius_bruteforce(code);
    std::cout << "bruteforce\t" << brute << "\n";
    if (!s.pomset().is_chain()) return kHolds;
    const int formula = packing_radius_chain_formula(code);
    std::cout << "chain-formula\t" << formula << "\n";
    if (formula != brute) {
        std::cerr << "the chain formula disagrees with the exhaustive packing radius\n";
        return kFails;
    }
    return kHolds;
}

int run_duality4(const Context& ctx) {
    const auto s = ctx.space();
    const auto rep = duality_equivalence(load_code(s, ctx.code_path));
    std::cout << "code-mds\t" << yes_no(rep.mds) << "\n";
    std::cout << "code-ideal-perfect\t" << yes_no(rep.iperfect) << "\n";
    std::cout << "dual-complement-perfect\t" << yes_no(rep.dual_iperfect) << "\n";
    std::cout << "dual-mds\t" << yes_no(rep.dual_mds) << "\n";
    std::cout << "all-equal\t" << yes_no(rep.all_equal()) << "\n";
    return rep.all_equal() ? kHolds : kFails;
}

// ---- selftest -------------------------------------------------------------

class Table {
public:
    void row(const std::string& name, const std::string& formula, const std::string& oracle, bool pass) {
        std::cout << name << "\t" << formula << "\t" << oracle << "\t" << (pass ? "pass" : "FAIL") << "\n";
        all_ &= pass;
    }
    void row(const std::string& name, Count formula, Count oracle) {
        row(name, std::to_string(formula), std::to_string(oracle), formula == oracle);
    }
    bool all() const { return all_; }

private:
    bool all_ = true;
};

int run_selftest(const Context& ctx) {
    const auto s = ctx.space();
    s.require_enumerable();
    const auto& p = s.pomset();
    const int top = s.blocks() * s.max_lee();
    Table t;
    std::cout << "check\tformula\toracle\tverdict\n";

    const auto hist = support_ideal_histogram(s);
    auto sphere_scan = [&](const Ideal& i) {
        const auto it = hist.find(i.multiset());
        return it == hist.end() ? Count{0} : it->second;
    };
    const auto ideals = p.all_ideals();

    // Exact I-spheres and I-balls, every ideal; the columns carry the sums,
    // the verdict requires agreement ideal by ideal.
    Count sf = 0, so = 0, bf = 0, bo = 0;
    bool spheres_ok = true, balls_ok = true;
    for (const auto& i : ideals) {
        const Count f = ideal_sphere_size(s, i), o = sphere_scan(i);
        sf += f;
        so += o;
        spheres_ok &= f == o;
        Count inside = 0;
        for (const auto& j : ideals)
            if (is_submset(j.multiset(), i.multiset())) inside += sphere_scan(j);
        const Count g = ideal_ball_size(s, i);
        bf += g;
        bo += inside;
        balls_ok &= g == inside;
    }
    t.row("ideal sphere sizes over " + std::to_string(ideals.size()) + " ideals", std::to_string(sf), std::to_string(so), spheres_ok);
    t.row("ideal ball sizes over " + std::to_string(ideals.size()) + " ideals", std::to_string(bf), std::to_string(bo), balls_ok);

    const auto scan = weight_distribution_bruteforce(s);
    Count below = 0;
    for (int r = 0; r <= top; ++r) {
        below += scan.shells[r];
        t.row("radius sphere |S_" + std::to_string(r) + "|", radius_sphere_size(s, r), scan.shells[r]);
        t.row("radius ball |B_" + std::to_string(r) + "|", radius_ball_size(s, r), below);
    }

    std::map<int, bool> lengths;
    for (int k : s.block_lengths()) lengths[k] = true;
    for (const auto& [k, unused] : lengths) {
        Count total = 0;
        for (int r = 0; r <= s.max_lee(); ++r) total += max_lee_shell_size(s.modulus(), k, r);
        t.row("block shells sum, k=" + std::to_string(k), total, checked_pow(s.modulus(), k));
    }

    for (int r = 0; r <= top; ++r) t.row("weight shell A_" + std::to_string(r), shell_size(s, r), scan.shells[r]);
    t.row("weight shells total", weight_distribution(s).total(), s.cardinality());
    t.row("top shell from the full ideal", top_shell_size(s), scan.shells[top]);
    if (s.unit_blocks()) {
        const auto pw = pw_weight_distribution(s);
        t.row("weighted-coordinates distribution", "-", "-", pw == scan);
    }
    if (p.is_chain()) {
        bool ok = true;
        for (int r = 0; r <= top; ++r) ok &= chain_shell_size(s, r) == scan.shells[r];
        t.row("chain shell closed form", "-", "-", ok);
    }

    Count full = 0, structured = 0;
    for (const auto& i : ideals) {
        if (!i.is_full_count()) continue;
        ++full;
        if (full_count_ball_structure(s, i).holds()) ++structured;
    }
    t.row("full-count balls are submodules with dual complements", full, structured);

    Count partial = 0, witnessed = 0;
    for (const auto& i : ideals) {
        if (i.is_full_count()) continue;
        ++partial;
        if (nonlinearity_witness(s, i)) ++witnessed;
    }
    t.row("partial-count balls not closed under addition", partial, witnessed);

    return t.all() ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pomset block metric toolkit over Z_m^N"};
    app.footer(kGrammar);
    app.require_subcommand(1);
    Context ctx;
    app.add_option("--cap", ctx.cap, "Largest space size any scan may enumerate")->default_val(BlockSpace::kDefaultCap);

    auto add_space = [&](CLI::App* sub) { sub->add_option("space", ctx.space_path, "Space file")->required()->check(CLI::ExistingFile); };
    auto add_code = [&](CLI::App* sub) { sub->add_option("code", ctx.code_path, "Code file")->required()->check(CLI::ExistingFile); };

    int status = kHolds;

    auto* weight = app.add_subcommand("weight", "Print the pomset block weight of a vector");
    add_space(weight);
    std::vector<std::string> vector_tokens;
    bool poset_weight = false;
    weight->add_option("vector", vector_tokens, "Vector literal")->required();
    weight->add_flag("--poset", poset_weight, "Print the poset block weight instead");
    weight->callback([&] { status = run_weight(ctx, vector_tokens, poset_weight); });

    auto* ideals = app.add_subcommand("ideals", "List ideals: literal, cardinality, maximal elements, kind");
    add_space(ideals);
    std::optional<int> card, max_count;
    ideals->add_option("--card", card, "Only ideals of this cardinality");
    ideals->add_option("--max", max_count, "Only ideals with this many maximal elements");
    ideals->callback([&] { status = run_ideals(ctx, card, max_count); });

    auto* ballsize = app.add_subcommand("ballsize", "Closed-form size of an I-ball or r-ball");
    add_space(ballsize);
    std::string ideal_literal, center_literal;
    std::optional<int> radius;
    bool sphere = false, enumerate = false;
    auto* ideal_opt = ballsize->add_option("--ideal", ideal_literal, "Ideal literal");
    auto* radius_opt = ballsize->add_option("--radius", radius, "Radius");
    ideal_opt->excludes(radius_opt);
    ballsize->add_flag("--sphere", sphere, "Sphere instead of ball");
    ballsize->add_flag("--enumerate", enumerate, "Also count by scanning the space");
    ballsize->add_option("--center", center_literal, "Center for the scan (default 0)");
    ballsize->callback([&] {
        if (ideal_literal.empty() && !radius) throw CLI::ValidationError("one of --ideal or --radius is required");
        status = run_ballsize(ctx, ideal_literal, radius, sphere, enumerate, center_literal);
    });

    auto* wdist = app.add_subcommand("wdist", "Weight distribution as TSV rows r, A_r");
    add_space(wdist);
    bool use_oracle = false;
    unsigned threads = 1;
    wdist->add_flag("--oracle", use_oracle, "Count by scanning the space");
    wdist->add_option("--threads", threads, "Scan threads for --oracle")->check(CLI::Range(1u, 256u));
    wdist->callback([&] { status = run_wdist(ctx, use_oracle, threads); });

    auto* perfect = app.add_subcommand("perfect", "Construct or verify I-perfect and r-perfect codes");
    perfect->require_subcommand(1);
    auto* construct = perfect->add_subcommand("construct", "Write a perfect code for an ideal");
    add_space(construct);
    std::string out_path;
    construct->add_option("--ideal", ideal_literal, "Ideal literal")->required();
    construct->add_option("-o,--output", out_path, "Write the code file here instead of standard output");
    construct->callback([&] { status = run_perfect_construct(ctx, ideal_literal, out_path); });
    auto* verify = perfect->add_subcommand("verify", "Check that the balls around the codewords tile the space");
    add_space(verify);
    add_code(verify);
    auto* v_ideal = verify->add_option("--ideal", ideal_literal, "Ideal literal");
    auto* v_radius = verify->add_option("--radius", radius, "Radius");
    v_ideal->excludes(v_radius);
    verify->callback([&] {
        if (ideal_literal.empty() && !radius) throw CLI::ValidationError("one of --ideal or --radius is required");
        status = run_perfect_verify(ctx, ideal_literal, radius);
    });

    auto* mds = app.add_subcommand("mds", "Singleton bound on a chain");
    mds->require_subcommand(1);
    auto* check = mds->add_subcommand("check", "Report both sides of the Singleton bound");
    add_space(check);
    add_code(check);
    bool poset_metric = false;
    check->add_flag("--poset", poset_metric, "Use the poset block metric");
    check->callback([&] { status = run_mds(ctx, poset_metric); });

    auto* dual = app.add_subcommand("dual", "Dual of a linear code, printed as a code of the dual space");
    add_space(dual);
    add_code(dual);
    std::string space_out;
    dual->add_option("--space-out", space_out, "Also write the dual space file");
    dual->callback([&] { status = run_dual(ctx, space_out); });

    auto* packrad = app.add_subcommand("packrad", "Packing radius by exhaustive search, and the chain formula");
    add_space(packrad);
    add_code(packrad);
    packrad->callback([&] { status = run_packrad(ctx); });

    auto* duality4 = app.add_subcommand("duality4", "MDS and perfection of a chain code and of its dual");
    add_space(duality4);
    add_code(duality4);
    duality4->callback([&] { status = run_duality4(ctx); });

    auto* selftest = app.add_subcommand("selftest", "Compare every closed form with exhaustive counts on this space");
    add_space(selftest);
    selftest->callback([&] { status = run_selftest(ctx); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return status;
}
