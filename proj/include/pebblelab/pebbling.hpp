#pragma once

#include <iosfwd>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "pebblelab/graph.hpp"

namespace pebblelab {

inline constexpr int kDefaultWeightBudget = 20;

/// Pebble counts per vertex. The per-vertex cap t, when one applies,
/// constrains only initial configurations, never replay states.
struct Configuration {
    std::vector<std::uint8_t> counts;

    Configuration() = default;
    explicit Configuration(std::vector<std::uint8_t> c) : counts(std::move(c)) {}
    Configuration(int n, std::initializer_list<int> values);

    int weight() const { return std::accumulate(counts.begin(), counts.end(), 0); }
    VertexSet support() const;
    bool operator==(const Configuration&) const = default;
};

struct Move {
    int from;
    int to;
    bool operator==(const Move&) const = default;
};

/// Witness that `target` is reachable: replaying `steps` from the initial
/// configuration leaves at least one pebble on it.
struct MoveSequence {
    std::vector<Move> steps;
    int target = -1;
};

struct CoverageResult {
    VertexSet covered = 0;
    int cov_size = 0;
    std::map<int, MoveSequence> witnesses; // populated when requested
};

struct Rational {
    long long num = 0;
    long long den = 1;
    Rational() = default;
    Rational(long long n, long long d);
    bool operator==(const Rational&) const = default;
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct Block {
    VertexSet sources = 0;
    VertexSet covered = 0; // joint coverage of the block's sources
    int pebbles = 0;
};

std::optional<MoveSequence> reachable(const Graph& g, const Configuration& f, int target,
                                      int weight_budget = kDefaultWeightBudget);

CoverageResult coverage(const Graph& g, const Configuration& f, bool with_witnesses = false,
                        int weight_budget = kDefaultWeightBudget);

bool is_solvable(const Graph& g, const Configuration& f,
                 int weight_budget = kDefaultWeightBudget);

Rational covering_ratio(const Graph& g, const Configuration& f,
                        int weight_budget = kDefaultWeightBudget);

/// Units grouped into blocks: unit(s) is the coverage of f restricted to
/// source s; units sharing a covered vertex interact and merge.
std::vector<Block> blocks(const Graph& g, const Configuration& f,
                          int weight_budget = kDefaultWeightBudget);

/// Validates a witness by replay; false on any illegal or failing step.
bool replay(const Graph& g, const Configuration& f, const MoveSequence& seq);

// Config text format: one line of n space-separated counts.
Configuration read_configuration(std::istream& in, int n);
Configuration read_configuration_file(const std::string& path, int n);
std::string format_configuration(const Configuration& f);
std::string format_witness(const MoveSequence& seq);

} // namespace pebblelab
