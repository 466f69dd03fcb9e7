// orbit-atlas: enumeration, ordering, verification, slices, and arc-diagram
// rendering for Borel orbits in square-zero upper-triangular matrices and in
// products of two Grassmannians.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitatlas/grassmann.hpp"
#include "orbitatlas/involution.hpp"
#include "orbitatlas/matrix.hpp"
#include "orbitatlas/orbit_posets.hpp"
#include "orbitatlas/render.hpp"
#include "orbitatlas/slice.hpp"
#include "orbitatlas/verify.hpp"

namespace {

using namespace orbitatlas;

constexpr int kEnumerationCap = 10;
constexpr int kSweepCap = 6;
constexpr std::uint64_t kDefaultSeed = 12345;

std::uint64_t seed_from_environment() {
    if (const char* env = std::getenv("ORBIT_ATLAS_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError("ORBIT_ATLAS_SEED is not an unsigned integer: '" +
                             std::string(env) + "'");
        }
    }
    return kDefaultSeed;
}

void check_cap(int n, int cap, bool unsafe_large, const std::string& what) {
    if (!unsafe_large && n > cap) {
        throw CapacityError(what + " is capped at n <= " + std::to_string(cap) +
                            "; pass --unsafe-large to override");
    }
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot open output file '" + path + "'");
    }
    out << text;
}

struct PartitionArgs {
    std::string lambda_text;
    std::string mu_text;
    int n = 0;
    int k = -1; // -1: default to the number of listed parts
    int m = -1;

    static int listed_parts(const std::string& text) {
        if (text.empty()) {
            return 0;
        }
        return static_cast<int>(std::count(text.begin(), text.end(), ',')) + 1;
    }
    Partition lambda() const {
        return Partition::parse(lambda_text, k >= 0 ? k : listed_parts(lambda_text), n);
    }
    Partition mu() const {
        return Partition::parse(mu_text, m >= 0 ? m : listed_parts(mu_text), n);
    }
};

int cmd_involutions(int n, const std::string& format, bool unsafe_large) {
    check_cap(n, kEnumerationCap, unsafe_large, "involution enumeration");
    const std::vector<Involution> all = enumerate_involutions(n);
    if (format == "json") {
        nlohmann::json doc;
        doc["n"] = n;
        doc["count"] = all.size();
        doc["involutions"] = nlohmann::json::array();
        for (size_t id = 0; id < all.size(); ++id) {
            const Involution& w = all[id];
            nlohmann::json entry;
            entry["id"] = id;
            entry["map"] = w.map();
            entry["pairs"] = nlohmann::json::array();
            for (const auto& [i, j] : w.arcs()) {
                entry["pairs"].push_back({i, j});
            }
            entry["dim"] = orbit_dimension(w);
            entry["arcs"] = w.arc_count();
            doc["involutions"].push_back(std::move(entry));
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "id\tcycles\tdim\tarcs\n";
        for (size_t id = 0; id < all.size(); ++id) {
            std::cout << id << '\t' << all[id].cycles() << '\t'
                      << orbit_dimension(all[id]) << '\t' << all[id].arc_count()
                      << '\n';
        }
    }
    return 0;
}

int cmd_poset(const std::string& setting, const PartitionArgs& args,
              const std::string& out_format, const std::string& out_path,
              bool unsafe_large) {
    OrbitPoset op;
    if (setting == "nilpotent") {
        check_cap(args.n, kEnumerationCap, unsafe_large, "the adjoint poset");
        op = melnikov_poset(args.n);
    } else {
        check_cap(args.n, kEnumerationCap, unsafe_large, "a cell poset");
        op = restricted_poset(args.lambda(), args.mu());
    }
    if (out_format == "json") {
        emit(export_json(op.poset, op.meta), out_path);
    } else {
        emit(export_dot(op.poset, [&op](int id) { return orbit_label(op, id); }),
             out_path);
    }
    return 0;
}

int cmd_verify(const std::string& check, int max_n, int trials, std::uint64_t seed,
               bool unsafe_large) {
    check_cap(max_n, kSweepCap, unsafe_large, "exhaustive verification");
    CheckResult result;
    if (check == "main-theorem") {
        result = check_main_theorem(max_n);
    } else if (check == "rank-oracle") {
        result = check_rank_oracle(max_n, std::min(max_n, 4), trials, seed);
    } else if (check == "slice") {
        result = check_slice(max_n, trials, seed);
    } else if (check == "covers") {
        result = check_covers(max_n);
    } else if (check == "order-axioms") {
        result = check_order_axioms(max_n);
    } else {
        throw InputError("unknown check '" + check + "'");
    }
    std::cout << result.report;
    return result.pass ? 0 : 1;
}

SlicePoint make_slice_point(const Coloring& coloring, const std::string& params_text,
                            const std::optional<Involution>& w, std::uint64_t seed) {
    if (params_text.empty() || params_text == "arcs") {
        if (w) {
            return SlicePoint::arc_indicator(ConsistentInvolution::make(*w, coloring));
        }
        return SlicePoint{coloring};
    }
    if (params_text == "all-zero") {
        return SlicePoint{coloring};
    }
    if (params_text == "generic") {
        return SlicePoint::generic_primes(coloring);
    }
    if (params_text == "random") {
        return SlicePoint::random(coloring, seed);
    }
    SlicePoint p{coloring};
    const auto& pairs = p.pairs();
    std::vector<Rational> values;
    std::string_view rest(params_text);
    while (!rest.empty()) {
        const size_t comma = rest.find(',');
        values.push_back(parse_rational(std::string(rest.substr(0, comma))));
        rest = (comma == std::string_view::npos) ? std::string_view{}
                                                 : rest.substr(comma + 1);
    }
    if (values.size() != pairs.size()) {
        throw InputError("--params lists " + std::to_string(values.size()) +
                         " values but the slice has " + std::to_string(pairs.size()) +
                         " parameters");
    }
    for (size_t s = 0; s < pairs.size(); ++s) {
        p.set_param(pairs[s].first, pairs[s].second, values[s]);
    }
    return p;
}

std::string symbolic_slice_matrix(const Coloring& coloring) {
    const int n = coloring.size();
    const bool wide = n > 9;
    std::vector<std::vector<std::string>> grid(
        static_cast<size_t>(n), std::vector<std::string>(static_cast<size_t>(n), "0"));
    for (const auto& [i, j] : coloring.black_white_pairs()) {
        grid[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] =
            "t" + std::to_string(i) + (wide ? "-" : "") + std::to_string(j);
    }
    std::string out;
    for (const auto& row : grid) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c > 0) {
                out += ' ';
            }
            out += row[c];
        }
        out += '\n';
    }
    return out;
}

int cmd_slice(const PartitionArgs& args, const std::string& w_text, bool has_w,
              const std::string& params_text, const std::string& output,
              std::uint64_t seed) {
    const Partition lambda = args.lambda();
    const Partition mu = args.mu();
    const Coloring coloring = coloring_of(lambda, mu);
    std::optional<Involution> w;
    if (has_w) {
        w = Involution::parse(w_text, args.n);
        if (!is_consistent(*w, coloring)) {
            throw InputError("involution " + w->cycles() +
                             " is not consistent with coloring " +
                             coloring.to_string());
        }
    }

    if (output == "matrix") {
        if (params_text.empty() && !has_w) {
            std::cout << symbolic_slice_matrix(coloring);
        } else {
            std::cout << slice_embed(make_slice_point(coloring, params_text, w, seed))
                             .to_text();
        }
        return 0;
    }
    if (output == "subspaces") {
        if (has_w && params_text.empty()) {
            const auto [u, wspace] =
                canonical_pair(ConsistentInvolution::make(*w, coloring), lambda, mu);
            std::cout << "U basis columns:\n" << u.basis.to_text();
            std::cout << "W basis columns:\n" << wspace.basis.to_text();
        } else {
            const SlicePoint p = make_slice_point(coloring, params_text, w, seed);
            const auto [u, wspace] = slice_subspaces(p, lambda, mu);
            std::cout << "U(t) basis columns:\n" << u.basis.to_text();
            std::cout << "W basis columns:\n" << wspace.basis.to_text();
        }
        return 0;
    }
    if (output == "identify") {
        const SlicePoint p = make_slice_point(coloring, params_text, w, seed);
        std::cout << identify_orbit(slice_embed(p)).cycles() << "\n";
        return 0;
    }
    throw InputError("unknown --emit mode '" + output + "'");
}

int cmd_render(const std::string& w_text, const PartitionArgs& args, bool colored,
               const std::string& format) {
    const Involution w = Involution::parse(w_text, args.n);
    std::optional<Coloring> coloring;
    if (colored) {
        coloring = coloring_of(args.lambda(), args.mu());
    }
    std::cout << (format == "svg" ? render_svg(w, coloring)
                                  : render_ascii(w, coloring));
    return 0;
}

int cmd_compare_orders(int max_n, bool unsafe_large) {
    check_cap(max_n, kSweepCap, unsafe_large, "order comparison");
    std::cout << compare_orders(max_n).report;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Borel-orbit posets for square-zero upper-triangular matrices "
                 "and pairs of Grassmannian subspaces"};
    app.require_subcommand(1);
    bool unsafe_large = false;
    app.add_flag("--unsafe-large", unsafe_large,
                 "lift the enumeration (n <= 10) and sweep (n <= 6) caps");

    // involutions
    auto* involutions = app.add_subcommand(
        "involutions", "List all involutions of {1..n} with orbit dimensions");
    int inv_n = 4;
    std::string inv_format = "table";
    involutions->add_option("--n", inv_n, "ambient size")->required();
    involutions->add_option("--format", inv_format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    // poset
    auto* poset = app.add_subcommand(
        "poset", "Emit the Hasse diagram of an orbit poset as DOT or JSON");
    std::string poset_setting;
    PartitionArgs poset_args;
    std::string poset_out = "dot";
    std::string poset_path;
    poset->add_option("--setting", poset_setting, "nilpotent or grassmannian")
        ->required()
        ->check(CLI::IsMember({"nilpotent", "grassmannian"}));
    poset->add_option("--n", poset_args.n, "ambient size")->required();
    poset->add_option("--lambda", poset_args.lambda_text, "partition, e.g. 2,2");
    poset->add_option("--mu", poset_args.mu_text, "partition, e.g. 2,2");
    poset->add_option("--k", poset_args.k, "rows of the lambda box");
    poset->add_option("--m", poset_args.m, "rows of the mu box");
    poset->add_option("--out", poset_out, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    poset->add_option("--output", poset_path, "write to a file instead of stdout");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "Run an exhaustive or randomized verification suite");
    std::string verify_check;
    int verify_max_n = 4;
    int verify_trials = 100;
    std::uint64_t verify_seed = 0;
    bool verify_seed_set = false;
    verify->add_option("--check", verify_check,
                       "main-theorem, rank-oracle, slice, covers, or order-axioms")
        ->required()
        ->check(CLI::IsMember(
            {"main-theorem", "rank-oracle", "slice", "covers", "order-axioms"}));
    verify->add_option("--max-n", verify_max_n, "largest ambient size to sweep");
    verify->add_option("--trials", verify_trials, "randomized trials per case");
    verify->add_option("--seed", verify_seed, "master seed (default ORBIT_ATLAS_SEED)")
        ->trigger_on_parse()
        ->each([&verify_seed_set](const std::string&) { verify_seed_set = true; });

    // slice
    auto* slice = app.add_subcommand(
        "slice", "Slice subspaces, the embedded matrix, or orbit identification");
    PartitionArgs slice_args;
    std::string slice_w;
    std::string slice_params;
    std::string slice_emit = "matrix";
    std::uint64_t slice_seed = 0;
    bool slice_seed_set = false;
    slice->add_option("--n", slice_args.n, "ambient size")->required();
    slice->add_option("--lambda", slice_args.lambda_text, "partition, e.g. 4,4,2")
        ->required();
    slice->add_option("--mu", slice_args.mu_text, "partition, e.g. 3,3,1,1")
        ->required();
    slice->add_option("--k", slice_args.k, "rows of the lambda box");
    slice->add_option("--m", slice_args.m, "rows of the mu box");
    auto* w_option =
        slice->add_option("--w", slice_w, "involution as arcs, e.g. 1-7,5-9");
    slice->add_option("--params", slice_params,
                      "all-zero, generic, random, arcs, or comma-separated "
                      "rationals in lexicographic pair order");
    slice->add_option("--emit", slice_emit, "subspaces, matrix, or identify")
        ->check(CLI::IsMember({"subspaces", "matrix", "identify"}));
    slice->add_option("--seed", slice_seed, "seed for --params random")
        ->trigger_on_parse()
        ->each([&slice_seed_set](const std::string&) { slice_seed_set = true; });

    // render
    auto* render = app.add_subcommand("render", "Draw an arc diagram");
    PartitionArgs render_args;
    std::string render_w;
    std::string render_format = "ascii";
    render->add_option("--w", render_w, "involution as arcs; empty for the identity");
    render->add_option("--n", render_args.n, "ambient size")->required();
    auto* render_lambda =
        render->add_option("--lambda", render_args.lambda_text, "partition");
    auto* render_mu = render->add_option("--mu", render_args.mu_text, "partition");
    render->add_option("--k", render_args.k, "rows of the lambda box");
    render->add_option("--m", render_args.m, "rows of the mu box");
    render->add_option("--format", render_format, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));

    // compare-orders
    auto* compare = app.add_subcommand(
        "compare-orders", "Bruhat vs adjoint order on involutions");
    int compare_max_n = 4;
    compare->add_option("--max-n", compare_max_n, "largest ambient size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            return app.exit(e);
        }
        app.exit(e);
        return 2;
    }

    try {
        if (involutions->parsed()) {
            return cmd_involutions(inv_n, inv_format, unsafe_large);
        }
        if (poset->parsed()) {
            if (poset_setting == "grassmannian" &&
                (poset_args.lambda_text.empty() || poset_args.mu_text.empty())) {
                throw InputError("grassmannian posets need --lambda and --mu");
            }
            return cmd_poset(poset_setting, poset_args, poset_out, poset_path,
                             unsafe_large);
        }
        if (verify->parsed()) {
            const std::uint64_t seed =
                verify_seed_set ? verify_seed : seed_from_environment();
            return cmd_verify(verify_check, verify_max_n, verify_trials, seed,
                              unsafe_large);
        }
        if (slice->parsed()) {
            const std::uint64_t seed =
                slice_seed_set ? slice_seed : seed_from_environment();
            return cmd_slice(slice_args, slice_w, w_option->count() > 0, slice_params,
                             slice_emit, seed);
        }
        if (render->parsed()) {
            const bool colored = render_lambda->count() > 0 || render_mu->count() > 0;
            if (colored && (render_args.lambda_text.empty() ||
                            render_args.mu_text.empty()) &&
                !(render_lambda->count() > 0 && render_mu->count() > 0)) {
                throw InputError("colored rendering needs both --lambda and --mu");
            }
            return cmd_render(render_w, render_args, colored, render_format);
        }
        if (compare->parsed()) {
            return cmd_compare_orders(compare_max_n, unsafe_large);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
