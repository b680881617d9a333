#pragma once

#include <array>
#include <optional>
#include <string>

#include "pebblelab/graph.hpp"

namespace pebblelab {

enum class Pi2Class { two, three, four, five, above_five };

std::string to_string(Pi2Class c);
int class_value(Pi2Class c); // 2..5; 6 stands in for above_five

struct PairCertificate {
    int u = -1;
    int v = -1;
};

struct TripleCertificate {
    int u = -1;
    int v = -1;
    int w = -1;
    int condition = 0; // 1, 2, or 3
};

struct ClassifyOutcome {
    Pi2Class predicted;
    int gamma_value = 0;
    int gamma_t_value = 0;
    std::optional<PairCertificate> pair;
    std::optional<TripleCertificate> triple;
};

/// Dominating set named by a fired pair condition: {u,v} u (N(u) n N(v)).
VertexSet pair_condition_set(const Graph& g, int u, int v);

/// Dominating set named by a fired triple condition (see conditions 1-3).
VertexSet triple_condition_set(const Graph& g, int u, int v, int w, int condition);

/// First pair (lexicographic, u < v) whose condition set dominates G.
std::optional<PairCertificate> pair_condition(const Graph& g);

/// First triple whose condition set dominates G, scanning condition 1,
/// then 2, then 3; u, v, w pairwise distinct unless relaxed.
std::optional<TripleCertificate> triple_conditions(const Graph& g, bool require_distinct = true);

/// Predicts whether pi*_2 is 2, 3, 4, 5, or above, from domination values
/// and the pair/triple conditions. Purely structural; no pebbling search.
ClassifyOutcome classify_small_pi2(const Graph& g, bool require_distinct = true);

/// Parameters (i,j,k) if g is isomorphic to the two-hub family member
/// G_{i,j,k}; bounded to order <= 20.
std::optional<std::array<int, 3>> in_family_f(const Graph& g);

enum class ClosedFormKind { pi_star, pi_star_2, gamma_r };

/// Closed-form invariant value when a published theorem covers the family
/// (paths, P_n x P_2/3/4 grids, corona and neighborhood corona entries);
/// nullopt when none applies.
std::optional<int> closed_form(const FamilySpec& spec, ClosedFormKind kind);
std::optional<int> closed_form(const std::string& spec, ClosedFormKind kind);

} // namespace pebblelab
