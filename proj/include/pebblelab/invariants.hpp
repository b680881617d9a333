#pragma once

#include <optional>

#include "pebblelab/pebbling.hpp"

namespace pebblelab {

struct SearchLimits {
    int weight_budget = kDefaultWeightBudget;
    long long max_checks = -1; // solvability checks; -1 = unlimited
};

/// Exact invariant value plus the witness configuration that attains it.
struct ConfigResult {
    int value = 0;
    Configuration witness;
    bool exhaustive = false;
};

struct SetResult {
    int value = 0;
    VertexSet witness = 0;
};

/// Ordered partition (V0, V1, V2); weight 2|V2| + |V1|.
struct RomanFunction {
    VertexSet v0 = 0;
    VertexSet v1 = 0;
    VertexSet v2 = 0;
    int weight() const;
    int n1() const;
    bool valid_for(const Graph& g) const; // partition + domination condition
};

struct GammaRResult {
    int value = 0;
    RomanFunction witness;
};

struct PebblingNumberResult {
    int value = 0;
    Configuration unsolvable_witness; // weight value-1
    int lower_bound = 0;              // max(n, 2^diam)
};

/// t-restricted optimal pebbling number: minimum weight of a solvable
/// configuration with at most t pebbles per vertex initially.
ConfigResult pi_star_t(const Graph& g, int t, const SearchLimits& limits = {});

/// Optimal pebbling number (no cap).
ConfigResult pi_star(const Graph& g, const SearchLimits& limits = {});

/// Classical pebbling number: least k with every weight-k configuration
/// solvable. Exhaustive; order capped at desk scale.
PebblingNumberResult pebbling_number(const Graph& g, int order_cap = 10);
bool is_class0(const Graph& g, int order_cap = 10);

SetResult gamma(const Graph& g);
SetResult gamma_t(const Graph& g);

GammaRResult gamma_r(const Graph& g);

/// Among all minimum-weight Roman dominating functions, one minimizing |V1|.
RomanFunction roman_function_min_n1(const Graph& g);

/// Upper-bound search: first solvable cap-t configuration of the given
/// weight, scanning configurations with fewer single pebbles first.
/// nullopt means none exists (or the check budget ran out, which throws).
std::optional<Configuration> find_solvable(const Graph& g, int t, int weight,
                                           long long max_checks = -1);

} // namespace pebblelab
