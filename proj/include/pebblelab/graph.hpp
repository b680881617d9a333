#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pebblelab/errors.hpp"

namespace pebblelab {

// Vertex sets are 64-bit masks; raise this (and VertexSet) to go bigger.
inline constexpr int kMaxOrder = 64;

using VertexSet = std::uint64_t;

inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline bool contains(VertexSet s, int v) { return (s >> v) & 1; }

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
  public:
    Graph(int n, std::vector<std::pair<int, int>> edges, std::string label = "");

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    bool adjacent(int u, int v) const { return contains(adj_[u], v); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    VertexSet closed_neighbors(int v) const { return adj_[v] | bit(v); }
    int degree(int v) const;
    VertexSet all_vertices() const { return n_ == 64 ? ~VertexSet{0} : bit(n_) - 1; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::string& label() const { return label_; }

  private:
    int n_;
    std::vector<VertexSet> adj_;
    std::vector<std::pair<int, int>> edges_; // normalized u < v, sorted
    std::string label_;
};

enum class FamilyKind {
    path,
    cycle,
    complete,
    star,
    wheel,
    petersen,
    hypercube,
    grid,
    corona,
    ncorona,
    f_family,
    prufer_tree,
};

/// Parsed form of the family grammar, e.g. "grid:4x5" or
/// "corona:(cycle:5,complete:1)" or "f:3,2,4".
struct FamilySpec {
    FamilyKind kind;
    std::vector<int> params;
    std::vector<FamilySpec> operands; // two entries for corona/ncorona
};

FamilySpec parse_family_spec(const std::string& text);
std::string to_string(const FamilySpec& spec);

Graph build(const FamilySpec& spec);
Graph build(const std::string& spec);

/// Tree on params.size()+2 vertices decoded from a Prufer sequence.
Graph prufer_tree(const std::vector<int>& seq);

Graph cartesian_product(const Graph& g, const Graph& h);

std::pair<VertexSet, VertexSet> neighborhoods(const Graph& g, VertexSet s);

/// G[S], vertices renumbered in ascending order of their old indices;
/// old_of[i] gives the original index of new vertex i when requested.
Graph induced_subgraph(const Graph& g, VertexSet s, std::vector<int>* old_of = nullptr);

std::vector<int> bfs_distances(const Graph& g, int source);
std::vector<std::vector<int>> distance_matrix(const Graph& g);
bool is_connected(const Graph& g);
int eccentricity(const Graph& g, int v);
int diameter(const Graph& g);
/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Streams every connected simple graph on n labeled vertices (n <= 7);
/// with dedup, one representative per isomorphism class.
void enumerate_connected(int n, bool dedup, const std::function<void(const Graph&)>& emit);
std::vector<Graph> connected_corpus(int n, bool dedup = true);

/// Lexicographically minimal adjacency bit-string over vertex orderings
/// compatible with the degree partition (n <= 8).
std::string canonical_key(const Graph& g);

/// Exact isomorphism test by degree-guided backtracking (desk scale, n <= 24).
bool isomorphic(const Graph& g, const Graph& h);

// Text format: "n m" header, then one "u v" line per edge; '#' comments.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

} // namespace pebblelab
