#pragma once

#include <string>
#include <vector>

#include "pebblelab/characterization.hpp"
#include "pebblelab/invariants.hpp"

namespace pebblelab {

enum class Status { PASS, FAIL, DISAGREEMENT, SKIPPED_BUDGET };

std::string to_string(Status s);

/// One verification record; serialized as a tab-separated line with the
/// witness field URL-encoded.
struct Report {
    std::string claim_id;
    std::string instance;
    std::string expected;
    std::string computed;
    Status status = Status::PASS;
    long long runtime_ms = 0;
    std::string witness;
};

std::string url_encode(const std::string& text);
std::string to_tsv(const Report& r);

struct VerifyOptions {
    int n_lo = 2;
    int n_hi = 6;          // corpus order range (clamped to 7)
    unsigned seed = 1;     // drives the random-tree suite
    int jobs = 1;
    int weight_budget = kDefaultWeightBudget;
    bool relax_distinct = false; // triple conditions without w != u,v
    int tree_count = 200;
};

const std::vector<std::string>& suite_names();
std::vector<Report> run_suite(const std::string& name, const VerifyOptions& opts);

/// 0 clean, 1 on any FAIL, 4 on any DISAGREEMENT (which dominates).
int exit_code_for(const std::vector<Report>& reports);

/// Self-contained instance string that regenerates the graph.
std::string graph_instance(const Graph& g);
Graph graph_from_instance(const std::string& instance);

struct ExploreOptions {
    int weight_budget = kDefaultWeightBudget;
    long long max_checks = -1;
    bool exhaustive = false; // opt-in full lower-bound pass
    int jobs = 1;
};

struct ExploreResult {
    int weight = -1; // -1 when nothing found within budget
    Configuration best;
    bool exhaustive = false;
    std::vector<Rational> block_ratios;
};

/// Best solvable cap-2 configuration found on the n x m grid within budget;
/// an upper-bound witness unless the exhaustive pass completed.
ExploreResult explore_grid(int n, int m, const ExploreOptions& opts);

} // namespace pebblelab
