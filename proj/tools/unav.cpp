#include "unav/errors.hpp"
#include "unav/extract.hpp"
#include "unav/generate.hpp"
#include "unav/graph.hpp"
#include "unav/search.hpp"
#include "unav/sweep.hpp"
#include "unav/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace unav;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failed on " + path);
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw IoError("write failed on " + path);
}

GraphColoring load_coloring(const std::string& path) { return decode(read_file(path)); }

Color parse_color(const std::string& s) {
    if (s == "r" || s == "red") return Color::Red;
    if (s == "b" || s == "blue") return Color::Blue;
    throw PreconditionFailed("color is r or b");
}

// Heuristic detection trades completeness for speed: a small node budget
// that reports Unknown instead of finishing the enumeration.
SearchBudget budget_for_mode(const std::string& mode) {
    SearchBudget budget;
    if (mode == "heuristic") budget.max_nodes = 100'000;
    return budget;
}

int emit_search_outcome(SearchStatus status, const std::optional<PatternWitness>& witness) {
    if (status == SearchStatus::Found && witness) {
        std::cout << witness_to_json(*witness).dump(2) << "\n";
        return 0;
    }
    nlohmann::json out{{"status", status == SearchStatus::None ? "none" : "unknown"}};
    std::cout << out.dump(2) << "\n";
    return 1;
}

struct GenArgs {
    std::size_t m = 2;
    std::size_t n = 16;
    std::size_t t = 2;
    std::string eps = "1/10";
    std::string p = "1/2";
    std::string delta = "35/100";
    std::string recolor = "1/10";
    std::uint64_t seed = 0;
    std::string out = "-";
};

int run_gen(const std::string& which, const GenArgs& a) {
    GraphColoring g = [&] {
        if (which == "p-pattern") return gen_p_pattern(a.m).coloring;
        if (which == "tightness") {
            return gen_tightness(parse_rat(a.eps), a.t, parse_rat(a.recolor), a.seed);
        }
        if (which == "random") return gen_uniform(a.n, parse_rat(a.p), a.seed);
        return gen_random_min_degree(a.n, parse_rat(a.delta), a.seed);
    }();
    write_file(a.out, encode(g));
    return 0;
}

int run_detect(const std::string& pattern, const std::string& input, std::size_t t,
               const std::string& color_s, const std::string& mode) {
    GraphColoring g = load_coloring(input);
    SearchBudget budget = budget_for_mode(mode);
    if (pattern == "mono-clique") {
        auto r = find_mono_clique(g, parse_color(color_s), t, budget);
        std::optional<PatternWitness> w;
        if (r.witness) w = *r.witness;
        return emit_search_outcome(r.status, w);
    }
    if (pattern == "induced-biclique") {
        auto r = find_induced_biclique(g, parse_color(color_s), t, budget);
        std::optional<PatternWitness> w;
        if (r.witness) w = *r.witness;
        return emit_search_outcome(r.status, w);
    }
    if (pattern == "p-pattern") {
        auto r = find_p_pattern(g, t, budget);
        std::optional<PatternWitness> w;
        if (r.witness) w = *r.witness;
        return emit_search_outcome(r.status, w);
    }
    if (pattern == "alt-c4") {
        auto r = find_alt_blowup(g, t, budget);
        std::optional<PatternWitness> w;
        if (r.witness) w = *r.witness;
        return emit_search_outcome(r.status, w);
    }
    auto r = find_local_pattern(g, t, budget);
    std::optional<PatternWitness> w;
    if (r.witness) w = *r.witness;
    return emit_search_outcome(r.status, w);
}

struct ExtractArgs {
    int theorem = 2;
    std::string eps = "1/10";
    std::size_t t = 2;
    std::uint64_t seed = 0;
    std::string input;
    std::string trace_out;
    // 0 = keep the defaults derived from (t, eps).
    std::size_t block_size = 0;
    std::size_t clique_target = 0;
    std::string sparse_threshold;
    std::size_t margin = 0;
    std::size_t max_rounds = 0;
    std::size_t oracle_cap = 0;
    std::size_t resample_limit = 0;
    unsigned slack_exp = 0;
};

int run_extract(const ExtractArgs& a) {
    GraphColoring g = load_coloring(a.input);
    Rat eps = parse_rat(a.eps);
    ExtractorParams params = ExtractorParams::defaults(a.t, eps, a.seed);
    if (a.block_size) params.block_size = a.block_size;
    if (a.clique_target) params.clique_target = a.clique_target;
    if (!a.sparse_threshold.empty()) params.sparse_threshold = parse_rat(a.sparse_threshold);
    if (a.margin) params.blowup_margin = a.margin;
    if (a.max_rounds) params.max_rounds = a.max_rounds;
    if (a.oracle_cap) params.oracle_cap = a.oracle_cap;
    if (a.resample_limit) params.resample_limit = a.resample_limit;
    if (a.slack_exp) params.slack_exponent = a.slack_exp;
    params.validate();

    nlohmann::json out;
    bool found = false;
    nlohmann::json trace;
    if (a.theorem == 1) {
        auto res = extract_theorem1(g, eps, a.t, params);
        trace = res.trace.to_json();
        if (res.found()) {
            found = true;
            out["witness"] = witness_to_json(PatternWitness{*res.witness});
        } else {
            out["failure"] = {{"reason", res.failure->reason},
                              {"state_sizes", res.failure->state_sizes}};
        }
    } else {
        auto res = extract_theorem2(g, eps, a.t, params);
        trace = res.trace.to_json();
        if (res.found()) {
            found = true;
            out["witness"] = witness_to_json(PatternWitness{*res.witness});
        } else {
            out["failure"] = {{"reason", res.failure->reason},
                              {"state_sizes", res.failure->state_sizes}};
        }
    }
    out["trace"] = trace;
    if (!a.trace_out.empty()) write_file(a.trace_out, trace.dump(2) + "\n");
    std::cout << out.dump(2) << "\n";
    return found ? 0 : 1;
}

int run_verify(const std::string& input, const std::string& witness_path) {
    GraphColoring g = load_coloring(input);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(witness_path));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(1, 0, std::string("witness JSON: ") + e.what());
    }
    PatternWitness w = witness_from_json(j, g.n());
    bool ok = verify_witness(g, w);
    std::cout << nlohmann::json{{"valid", ok}}.dump(2) << "\n";
    return ok ? 0 : 1;
}

int run_sweep_cmd(const std::string& config_path, const std::string& out_path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(config_path));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(1, 0, std::string("sweep config JSON: ") + e.what());
    }
    SweepConfig cfg = sweep_config_from_json(j);
    std::vector<SweepRecord> records = run_sweep(cfg);
    std::string csv = sweep_to_csv(records);
    std::string target = !out_path.empty() ? out_path : (!cfg.out.empty() ? cfg.out : "-");
    write_file(target, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pattern machinery for 2-edge-colored complete graphs"};
    app.require_subcommand(1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Generate a coloring in UPC format");
    gen->require_subcommand(1);
    CLI::App* gen_p = gen->add_subcommand("p-pattern", "Four-block construction on 4m vertices");
    gen_p->add_option("--m", gen_args.m, "Part size")->required();
    CLI::App* gen_t = gen->add_subcommand("tightness", "Recolored four-block construction");
    gen_t->add_option("--eps", gen_args.eps, "Slack, as p/q")->required();
    gen_t->add_option("--t", gen_args.t, "Pattern size")->required();
    gen_t->add_option("--recolor", gen_args.recolor, "Inside-recolor probability, as p/q");
    gen_t->add_option("--seed", gen_args.seed, "Seed");
    CLI::App* gen_r = gen->add_subcommand("random", "Uniform coloring");
    gen_r->add_option("--n", gen_args.n, "Vertex count")->required();
    gen_r->add_option("--p", gen_args.p, "Red probability, as p/q");
    gen_r->add_option("--seed", gen_args.seed, "Seed");
    CLI::App* gen_m = gen->add_subcommand("random-mindeg", "Uniform coloring repaired to a "
                                                           "minimum degree");
    gen_m->add_option("--n", gen_args.n, "Vertex count")->required();
    gen_m->add_option("--delta", gen_args.delta, "Degree fraction, as p/q");
    gen_m->add_option("--seed", gen_args.seed, "Seed");
    for (CLI::App* sub : {gen_p, gen_t, gen_r, gen_m}) {
        sub->add_option("-o,--out", gen_args.out, "Output path, - for stdout");
    }

    std::string det_pattern, det_input, det_color = "r", det_mode = "oracle";
    std::size_t det_t = 0;
    CLI::App* detect = app.add_subcommand("detect", "Search a coloring for a pattern");
    detect->add_option("--pattern", det_pattern, "Pattern family")
        ->required()
        ->check(CLI::IsMember({"mono-clique", "induced-biclique", "p-pattern", "alt-c4",
                               "local"}));
    detect->add_option("--t", det_t, "Pattern size")->required();
    detect->add_option("--color", det_color, "Color for colored patterns (r|b)");
    detect->add_option("--mode", det_mode, "oracle = full budget, heuristic = small budget")
        ->check(CLI::IsMember({"oracle", "heuristic"}));
    detect->add_option("-i,--input", det_input, "UPC file, - for stdin")->required();

    ExtractArgs ex;
    CLI::App* extract = app.add_subcommand("extract", "Run a constructive extractor");
    extract->add_option("--theorem", ex.theorem, "1 = induced biclique, 2 = local pattern")
        ->required()
        ->check(CLI::Range(1, 2));
    extract->add_option("--eps", ex.eps, "Slack, as p/q")->required();
    extract->add_option("--t", ex.t, "Pattern size")->required();
    extract->add_option("--seed", ex.seed, "Seed");
    extract->add_option("-i,--input", ex.input, "UPC file, - for stdin")->required();
    extract->add_option("--trace-out", ex.trace_out, "Also write the trace JSON here");
    extract->add_option("--block-size", ex.block_size, "Override block size");
    extract->add_option("--clique-target", ex.clique_target, "Override clique target");
    extract->add_option("--sparse-threshold", ex.sparse_threshold,
                        "Override sparse threshold, as p/q");
    extract->add_option("--margin", ex.margin, "Override blowup margin");
    extract->add_option("--max-rounds", ex.max_rounds, "Override round cap");
    extract->add_option("--oracle-cap", ex.oracle_cap, "Override oracle probe cap");
    extract->add_option("--resample-limit", ex.resample_limit, "Override resample cap");
    extract->add_option("--slack-exp", ex.slack_exp, "Override slack exponent");

    std::string ver_input, ver_witness;
    CLI::App* verify = app.add_subcommand("verify", "Check a witness against a coloring");
    verify->add_option("-i,--input", ver_input, "UPC file, - for stdin")->required();
    verify->add_option("--witness", ver_witness, "Witness JSON file")->required();

    std::string sweep_config, sweep_out;
    CLI::App* sweep = app.add_subcommand("sweep", "Run a config-driven sweep to CSV");
    sweep->add_option("--config", sweep_config, "Sweep config JSON")->required();
    sweep->add_option("--out", sweep_out, "CSV output path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            for (const auto& [name, sub] : {std::pair{"p-pattern", gen_p},
                                            std::pair{"tightness", gen_t},
                                            std::pair{"random", gen_r},
                                            std::pair{"random-mindeg", gen_m}}) {
                if (sub->parsed()) return run_gen(name, gen_args);
            }
            return 2;
        }
        if (detect->parsed()) {
            return run_detect(det_pattern, det_input, det_t, det_color, det_mode);
        }
        if (extract->parsed()) return run_extract(ex);
        if (verify->parsed()) return run_verify(ver_input, ver_witness);
        if (sweep->parsed()) return run_sweep_cmd(sweep_config, sweep_out);
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const UnavError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
