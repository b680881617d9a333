#include <bit>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "pebblelab/harness.hpp"

using namespace pebblelab;

namespace {

// Exit codes: 0 ok, 1 unsolvable, 2 format error, 3 budget, 4 disagreement.
constexpr int kExitUnsolvable = 1;
constexpr int kExitFormat = 2;
constexpr int kExitBudget = 3;

struct OutputTarget {
    std::ofstream file;
    std::ostream& stream(const std::string& path) {
        if (path.empty())
            return std::cout;
        file.open(path);
        if (!file)
            throw FormatError("cannot open " + path);
        return file;
    }
};

std::string vertex_list(VertexSet s) {
    std::string out;
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        out += (out.empty() ? "" : ",") + std::to_string(v);
    }
    return out;
}

int run_gen(const std::string& spec, const std::string& out_path) {
    Graph g = build(spec);
    OutputTarget out;
    write_graph(out.stream(out_path), g);
    return 0;
}

int run_solve(const std::string& graph_path, const std::string& config_path, int target,
              int budget, const std::string& out_path) {
    Graph g = read_graph_file(graph_path);
    Configuration f = read_configuration_file(config_path, g.order());
    OutputTarget out_target;
    std::ostream& out = out_target.stream(out_path);
    if (target >= 0) {
        if (target >= g.order())
            throw FormatError("target out of range");
        auto witness = reachable(g, f, target, budget);
        if (!witness) {
            out << "UNSOLVABLE v=" << target << "\n";
            return kExitUnsolvable;
        }
        out << format_witness(*witness);
        return 0;
    }
    auto cov = coverage(g, f, true, budget);
    if (cov.covered != g.all_vertices()) {
        out << "UNSOLVABLE v=" << vertex_list(g.all_vertices() & ~cov.covered) << "\n";
        return kExitUnsolvable;
    }
    for (const auto& [v, witness] : cov.witnesses)
        out << format_witness(witness);
    return 0;
}

int run_invariant(const std::string& graph_path, const std::string& which, int budget,
                  const std::string& out_path) {
    Graph g = read_graph_file(graph_path);
    OutputTarget out_target;
    std::ostream& out = out_target.stream(out_path);
    SearchLimits limits{budget, -1};
    if (which == "pi") {
        auto r = pebbling_number(g);
        out << "pi " << r.value << "\nlower_bound " << r.lower_bound << "\nwitness_unsolvable "
            << format_configuration(r.unsolvable_witness) << "\nexhaustive true\n";
    } else if (which == "pistar") {
        auto r = pi_star(g, limits);
        out << "pistar " << r.value << "\nwitness " << format_configuration(r.witness)
            << "\nexhaustive " << (r.exhaustive ? "true" : "false") << "\n";
    } else if (which.rfind("pistar_t:", 0) == 0) {
        int t = std::stoi(which.substr(9));
        auto r = pi_star_t(g, t, limits);
        out << "pistar_" << t << " " << r.value << "\nwitness " << format_configuration(r.witness)
            << "\nexhaustive " << (r.exhaustive ? "true" : "false") << "\n";
    } else if (which == "gamma") {
        auto r = gamma(g);
        out << "gamma " << r.value << "\nwitness " << vertex_list(r.witness) << "\n";
    } else if (which == "gamma_t") {
        auto r = gamma_t(g);
        out << "gamma_t " << r.value << "\nwitness " << vertex_list(r.witness) << "\n";
    } else if (which == "gamma_r") {
        auto r = gamma_r(g);
        out << "gamma_r " << r.value << "\nwitness v1=" << vertex_list(r.witness.v1)
            << " v2=" << vertex_list(r.witness.v2) << "\n";
    } else {
        throw FormatError("unknown invariant '" + which + "'");
    }
    return 0;
}

int run_classify(const std::string& graph_path, bool relax, const std::string& out_path) {
    Graph g = read_graph_file(graph_path);
    OutputTarget out_target;
    std::ostream& out = out_target.stream(out_path);
    out << "# triple conditions scanned with u,v,w "
        << (relax ? "allowed to coincide" : "pairwise distinct") << "\n";
    auto r = classify_small_pi2(g, !relax);
    out << "predicted " << to_string(r.predicted) << "\n";
    out << "gamma " << r.gamma_value << "\ngamma_t " << r.gamma_t_value << "\n";
    if (r.pair)
        out << "pair " << r.pair->u << " " << r.pair->v << "\n";
    if (r.triple)
        out << "triple " << r.triple->u << " " << r.triple->v << " " << r.triple->w
            << " condition " << r.triple->condition << "\n";
    return 0;
}

int run_verify(const std::string& suite, const VerifyOptions& opts, const std::string& out_path) {
    auto reports = run_suite(suite, opts);
    OutputTarget out_target;
    std::ostream& out = out_target.stream(out_path);
    for (const Report& r : reports)
        out << to_tsv(r) << "\n";
    int fails = 0, disagreements = 0, skipped = 0;
    for (const Report& r : reports) {
        fails += r.status == Status::FAIL;
        disagreements += r.status == Status::DISAGREEMENT;
        skipped += r.status == Status::SKIPPED_BUDGET;
    }
    std::cerr << "verify " << suite << ": " << reports.size() << " records, " << fails
              << " FAIL, " << disagreements << " DISAGREEMENT, " << skipped << " skipped\n";
    return exit_code_for(reports);
}

int run_explore(int n, int m, const ExploreOptions& opts, const std::string& out_path) {
    OutputTarget out_target;
    std::ostream& out = out_target.stream(out_path);
    out << "# context: any solvable cap-2 weight also upper-bounds pi* (removing the cap "
           "only helps)\n";
    auto r = explore_grid(n, m, opts);
    if (r.weight < 0) {
        out << "NO-RESULT within budget\n";
        return kExitBudget;
    }
    out << (r.exhaustive ? "EXACT" : "UPPER-BOUND") << " weight " << r.weight << "\n";
    out << "configuration " << format_configuration(r.best) << "\n";
    out << "block_ratios";
    for (const Rational& q : r.block_ratios)
        out << " " << q.num << "/" << q.den;
    out << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact laboratory for graph pebbling and domination invariants"};
    app.require_subcommand(1);

    int budget = kDefaultWeightBudget;
    int jobs = 1;
    unsigned seed = 1;
    std::string out_path;
    app.add_option("--budget", budget, "search weight budget");
    app.add_option("--jobs", jobs, "worker threads for verify/explore");
    app.add_option("--seed", seed, "seed for randomized suites");
    app.add_option("--out", out_path, "output path (default stdout)");

    auto* gen = app.add_subcommand("gen", "build a family graph and write its text form");
    std::string spec;
    gen->add_option("spec", spec, "family spec, e.g. grid:4x5 or corona:(cycle:5,complete:1)")
        ->required();

    auto* solve = app.add_subcommand("solve", "check solvability or reachability with witnesses");
    std::string graph_path, config_path;
    int target = -1;
    solve->add_option("graph", graph_path, "graph file")->required();
    solve->add_option("config", config_path, "configuration file")->required();
    solve->add_option("--target", target, "single target vertex (default: all)");

    auto* invariant = app.add_subcommand("invariant", "compute an exact invariant");
    std::string inv_graph, which;
    invariant->add_option("graph", inv_graph, "graph file")->required();
    invariant
        ->add_option("which", which, "pi | pistar | pistar_t:<t> | gamma | gamma_t | gamma_r")
        ->required();

    auto* classify = app.add_subcommand("classify", "structural pi*_2 class prediction");
    std::string cls_graph;
    bool relax = false;
    classify->add_option("graph", cls_graph, "graph file")->required();
    classify->add_flag("--relax-distinct", relax, "allow w to coincide with u or v");

    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    std::string suite;
    VerifyOptions vopts;
    verify->add_option("suite", suite, "thm1|thm2-5|roman|trees|grids|corona|bounds|all")
        ->required();
    verify->add_option("--n-lo", vopts.n_lo, "corpus order lower bound");
    verify->add_option("--n-hi", vopts.n_hi, "corpus order upper bound (max 7)");
    verify->add_option("--trees", vopts.tree_count, "random tree count");
    verify->add_flag("--relax-distinct", vopts.relax_distinct, "relaxed triple scan");

    auto* explore = app.add_subcommand("explore", "search cap-2 configurations on big grids");
    int grid_n = 5, grid_m = 5;
    ExploreOptions eopts;
    explore->add_option("n", grid_n, "grid rows")->required();
    explore->add_option("m", grid_m, "grid columns")->required();
    explore->add_option("--max-checks", eopts.max_checks,
                        "solvability checks per weight level (-1 unlimited)");
    explore->add_flag("--exhaustive", eopts.exhaustive,
                      "run the full lower-bound enumeration (slow)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return run_gen(spec, out_path);
        if (solve->parsed())
            return run_solve(graph_path, config_path, target, budget, out_path);
        if (invariant->parsed())
            return run_invariant(inv_graph, which, budget, out_path);
        if (classify->parsed())
            return run_classify(cls_graph, relax, out_path);
        if (verify->parsed()) {
            vopts.seed = seed;
            vopts.jobs = jobs;
            vopts.weight_budget = budget;
            return run_verify(suite, vopts, out_path);
        }
        if (explore->parsed()) {
            eopts.weight_budget = budget;
            eopts.jobs = jobs;
            return run_explore(grid_n, grid_m, eopts, out_path);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what();
        if (e.best_bound >= 0)
            std::cerr << " (best bound " << e.best_bound << ")";
        std::cerr << "\n";
        return kExitBudget;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitFormat;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitFormat;
    }
    return 0;
}
