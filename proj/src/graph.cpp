#include "pebblelab/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

namespace pebblelab {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, std::string label)
    : n_(n), adj_(n > 0 ? n : 0, 0), label_(std::move(label)) {
    if (n < 1)
        throw InvalidParameters("graph order must be >= 1");
    if (n > kMaxOrder)
        throw InvalidParameters("graph order " + std::to_string(n) + " exceeds maximum " +
                                std::to_string(kMaxOrder));
    for (auto& [u, v] : edges) {
        if (u == v)
            throw InvalidParameters("loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidParameters("edge endpoint out of range");
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto [u, v] : edges) {
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }
    edges_ = std::move(edges);
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

// ---------------------------------------------------------------- families

namespace {

std::vector<std::pair<int, int>> path_edges(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return e;
}

Graph build_path(int n) { return Graph(n, path_edges(n), "path:" + std::to_string(n)); }

Graph build_cycle(int n) {
    if (n < 3)
        throw InvalidParameters("cycle requires n >= 3");
    auto e = path_edges(n);
    e.emplace_back(0, n - 1);
    return Graph(n, std::move(e), "cycle:" + std::to_string(n));
}

Graph build_complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph(n, std::move(e), "complete:" + std::to_string(n));
}

// star:n is K_{1,n}: hub 0 plus n leaves.
Graph build_star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        e.emplace_back(0, i);
    return Graph(n + 1, std::move(e), "star:" + std::to_string(n));
}

// wheel:n is W_{1,n}: hub 0 joined to the cycle 1..n.
Graph build_wheel(int n) {
    if (n < 3)
        throw InvalidParameters("wheel requires n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, i == n ? 1 : i + 1);
    }
    return Graph(n + 1, std::move(e), "wheel:" + std::to_string(n));
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i <-> i+5.
Graph build_petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, std::move(e), "petersen");
}

Graph build_hypercube(int d) {
    if (d < 1 || d > 6)
        throw InvalidParameters("hypercube dimension must be in 1..6");
    int n = 1 << d;
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b)))
                e.emplace_back(v, v | (1 << b));
    return Graph(n, std::move(e), "hypercube:" + std::to_string(d));
}

// G_{i,j,k}: hubs u=0, v=1; i internally disjoint u-v paths of length 3;
// j pendants at u, k pendants at v.
Graph build_f_family(int i, int j, int k) {
    if (i < 1 || j < 0 || k < 0 || i + j < 2 || i + k < 2)
        throw InvalidParameters("f family requires i>=1, i+j>=2, i+k>=2");
    int n = 2 + 2 * i + j + k;
    std::vector<std::pair<int, int>> e;
    for (int p = 0; p < i; ++p) {
        int a = 2 + 2 * p, b = 3 + 2 * p;
        e.emplace_back(0, a);
        e.emplace_back(a, b);
        e.emplace_back(b, 1);
    }
    int base = 2 + 2 * i;
    for (int p = 0; p < j; ++p)
        e.emplace_back(0, base + p);
    for (int p = 0; p < k; ++p)
        e.emplace_back(1, base + j + p);
    return Graph(n, std::move(e),
                 "f:" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k));
}

// Base vertices 0..n-1 first, copy i of H in block n + i*|V(H)|.
Graph build_corona(const Graph& g, const Graph& h, bool neighborhood, const std::string& label) {
    int n = g.order(), m = h.order();
    long long total = n + static_cast<long long>(n) * m;
    if (total > kMaxOrder)
        throw InvalidParameters("corona order " + std::to_string(total) + " exceeds maximum");
    std::vector<std::pair<int, int>> e = g.edges();
    for (int i = 0; i < n; ++i) {
        int base = n + i * m;
        for (auto [a, b] : h.edges())
            e.emplace_back(base + a, base + b);
        VertexSet anchors = neighborhood ? g.neighbors(i) : bit(i);
        for (int a = 0; a < n; ++a)
            if (contains(anchors, a))
                for (int x = 0; x < m; ++x)
                    e.emplace_back(a, base + x);
    }
    Graph result(static_cast<int>(total), std::move(e), label);
    if (!is_connected(result))
        throw InvalidParameters(label + " is disconnected");
    return result;
}

} // namespace

Graph prufer_tree(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size()) + 2;
    if (n > kMaxOrder)
        throw InvalidParameters("tree order exceeds maximum");
    for (int x : seq)
        if (x < 0 || x >= n)
            throw InvalidParameters("prufer entry out of range");
    std::vector<int> deg(n, 1);
    for (int x : seq)
        ++deg[x];
    std::vector<std::pair<int, int>> e;
    VertexSet used = 0;
    for (int x : seq) {
        int leaf = 0;
        while (deg[leaf] != 1 || contains(used, leaf))
            ++leaf;
        e.emplace_back(leaf, x);
        used |= bit(leaf);
        --deg[x];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1 && !contains(used, v))
            (a < 0 ? a : b) = v;
    e.emplace_back(a, b);
    std::string label = "prufer:";
    for (size_t i = 0; i < seq.size(); ++i)
        label += (i ? "," : "") + std::to_string(seq[i]);
    return Graph(n, std::move(e), label);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    long long total = static_cast<long long>(g.order()) * h.order();
    if (total > kMaxOrder)
        throw InvalidParameters("product order exceeds maximum");
    int m = h.order();
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < g.order(); ++a)
        for (auto [x, y] : h.edges())
            e.emplace_back(a * m + x, a * m + y);
    for (auto [a, b] : g.edges())
        for (int x = 0; x < m; ++x)
            e.emplace_back(a * m + x, b * m + x);
    return Graph(static_cast<int>(total), std::move(e));
}

// ------------------------------------------------------------ spec parsing

namespace {

std::vector<int> parse_int_list(const std::string& text, char sep) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        try {
            size_t pos = 0;
            int value = std::stoi(item, &pos);
            if (pos != item.size())
                throw std::invalid_argument(item);
            out.push_back(value);
        } catch (const std::exception&) {
            throw FormatError("bad integer '" + item + "' in family spec");
        }
    }
    if (out.empty())
        throw FormatError("empty parameter list in family spec");
    return out;
}

// Splits "a,b" at the top-level comma, respecting nested parentheses.
std::pair<std::string, std::string> split_operands(const std::string& text) {
    int depth = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(')
            ++depth;
        else if (text[i] == ')')
            --depth;
        else if (text[i] == ',' && depth == 0)
            return {text.substr(0, i), text.substr(i + 1)};
    }
    throw FormatError("expected two operands in '" + text + "'");
}

} // namespace

FamilySpec parse_family_spec(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);

    FamilySpec spec;
    if (head == "path" || head == "cycle" || head == "complete" || head == "star" ||
        head == "wheel" || head == "hypercube") {
        spec.kind = head == "path"       ? FamilyKind::path
                    : head == "cycle"    ? FamilyKind::cycle
                    : head == "complete" ? FamilyKind::complete
                    : head == "star"     ? FamilyKind::star
                    : head == "wheel"    ? FamilyKind::wheel
                                         : FamilyKind::hypercube;
        spec.params = parse_int_list(rest, ',');
        if (spec.params.size() != 1)
            throw FormatError(head + " takes exactly one parameter");
    } else if (head == "petersen") {
        spec.kind = FamilyKind::petersen;
        if (!rest.empty())
            throw FormatError("petersen takes no parameters");
    } else if (head == "grid") {
        spec.kind = FamilyKind::grid;
        spec.params = parse_int_list(rest, 'x');
        if (spec.params.size() != 2)
            throw FormatError("grid takes n x m");
    } else if (head == "f") {
        spec.kind = FamilyKind::f_family;
        spec.params = parse_int_list(rest, ',');
        if (spec.params.size() != 3)
            throw FormatError("f takes i,j,k");
    } else if (head == "prufer") {
        spec.kind = FamilyKind::prufer_tree;
        spec.params = parse_int_list(rest, ',');
    } else if (head == "corona" || head == "ncorona") {
        spec.kind = head == "corona" ? FamilyKind::corona : FamilyKind::ncorona;
        if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
            throw FormatError(head + " takes (left,right)");
        auto [left, right] = split_operands(rest.substr(1, rest.size() - 2));
        spec.operands.push_back(parse_family_spec(left));
        spec.operands.push_back(parse_family_spec(right));
    } else {
        throw FormatError("unknown family '" + head + "'");
    }
    return spec;
}

std::string to_string(const FamilySpec& spec) {
    auto join = [&](char sep) {
        std::string s;
        for (size_t i = 0; i < spec.params.size(); ++i)
            s += (i ? std::string(1, sep) : "") + std::to_string(spec.params[i]);
        return s;
    };
    switch (spec.kind) {
    case FamilyKind::path: return "path:" + join(',');
    case FamilyKind::cycle: return "cycle:" + join(',');
    case FamilyKind::complete: return "complete:" + join(',');
    case FamilyKind::star: return "star:" + join(',');
    case FamilyKind::wheel: return "wheel:" + join(',');
    case FamilyKind::petersen: return "petersen";
    case FamilyKind::hypercube: return "hypercube:" + join(',');
    case FamilyKind::grid: return "grid:" + join('x');
    case FamilyKind::f_family: return "f:" + join(',');
    case FamilyKind::prufer_tree: return "prufer:" + join(',');
    case FamilyKind::corona:
        return "corona:(" + to_string(spec.operands[0]) + "," + to_string(spec.operands[1]) + ")";
    case FamilyKind::ncorona:
        return "ncorona:(" + to_string(spec.operands[0]) + "," + to_string(spec.operands[1]) + ")";
    }
    return "";
}

Graph build(const FamilySpec& spec) {
    auto need_positive = [&](int idx) {
        if (spec.params[idx] < 1)
            throw InvalidParameters("family parameter must be >= 1");
        return spec.params[idx];
    };
    switch (spec.kind) {
    case FamilyKind::path: return build_path(need_positive(0));
    case FamilyKind::cycle: return build_cycle(need_positive(0));
    case FamilyKind::complete: return build_complete(need_positive(0));
    case FamilyKind::star: return build_star(need_positive(0));
    case FamilyKind::wheel: return build_wheel(need_positive(0));
    case FamilyKind::petersen: return build_petersen();
    case FamilyKind::hypercube: return build_hypercube(need_positive(0));
    case FamilyKind::grid: {
        int n = need_positive(0), m = need_positive(1);
        auto g = cartesian_product(build_path(n), build_path(m));
        return Graph(g.order(), g.edges(), "grid:" + std::to_string(n) + "x" + std::to_string(m));
    }
    case FamilyKind::f_family:
        return build_f_family(spec.params[0], spec.params[1], spec.params[2]);
    case FamilyKind::prufer_tree: return prufer_tree(spec.params);
    case FamilyKind::corona:
    case FamilyKind::ncorona: {
        Graph left = build(spec.operands[0]);
        Graph right = build(spec.operands[1]);
        return build_corona(left, right, spec.kind == FamilyKind::ncorona, to_string(spec));
    }
    }
    throw InvalidParameters("unhandled family kind");
}

Graph build(const std::string& spec) { return build(parse_family_spec(spec)); }

// ---------------------------------------------------------------- metrics

std::pair<VertexSet, VertexSet> neighborhoods(const Graph& g, VertexSet s) {
    VertexSet open = 0;
    for (int v = 0; v < g.order(); ++v)
        if (contains(s, v))
            open |= g.neighbors(v);
    return {open, open | s};
}

Graph induced_subgraph(const Graph& g, VertexSet s, std::vector<int>* old_of) {
    std::vector<int> old_index;
    std::vector<int> new_index(g.order(), -1);
    for (int v = 0; v < g.order(); ++v)
        if (contains(s, v)) {
            new_index[v] = static_cast<int>(old_index.size());
            old_index.push_back(v);
        }
    if (old_index.empty())
        throw InvalidParameters("induced subgraph on empty vertex set");
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (new_index[u] >= 0 && new_index[v] >= 0)
            edges.emplace_back(new_index[u], new_index[v]);
    if (old_of)
        *old_of = old_index;
    return Graph(static_cast<int>(old_index.size()), std::move(edges));
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.order(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        VertexSet nb = g.neighbors(u);
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    std::vector<std::vector<int>> d;
    d.reserve(g.order());
    for (int v = 0; v < g.order(); ++v)
        d.push_back(bfs_distances(g, v));
    return d;
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int eccentricity(const Graph& g, int v) {
    auto dist = bfs_distances(g, v);
    int ecc = 0;
    for (int d : dist) {
        if (d < 0)
            throw DisconnectedGraph("eccentricity on disconnected graph");
        ecc = std::max(ecc, d);
    }
    return ecc;
}

int diameter(const Graph& g) {
    int diam = 0;
    for (int v = 0; v < g.order(); ++v)
        diam = std::max(diam, eccentricity(g, v));
    return diam;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge at depth d closes a cycle of
    // length 2d+1 or 2d+2 through the root.
    int best = -1;
    for (int root = 0; root < g.order(); ++root) {
        std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
        std::deque<int> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            VertexSet nb = g.neighbors(u);
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    int cycle = dist[u] + dist[v] + 1;
                    if (best < 0 || cycle < best)
                        best = cycle;
                }
            }
        }
    }
    if (best < 0)
        return std::nullopt;
    return best;
}

// ----------------------------------------------------------- enumeration

namespace {

// Orders vertices by degree, then minimizes the upper-triangle adjacency
// bit-string over all permutations within equal-degree classes.
std::string canonical_key_impl(const Graph& g) {
    int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });

    std::vector<std::pair<int, int>> classes; // [begin, end) runs of equal degree
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && g.degree(order[j]) == g.degree(order[i]))
            ++j;
        classes.emplace_back(i, j);
        i = j;
    }

    std::string best;
    auto emit = [&]() {
        std::string key;
        key.reserve(n * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                key.push_back(g.adjacent(order[i], order[j]) ? '1' : '0');
        if (best.empty() || key < best)
            best = std::move(key);
    };

    std::function<void(size_t)> permute = [&](size_t c) {
        if (c == classes.size()) {
            emit();
            return;
        }
        auto [lo, hi] = classes[c];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            permute(c + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    permute(0);
    return std::to_string(n) + ":" + best;
}

} // namespace

std::string canonical_key(const Graph& g) {
    if (g.order() > 8)
        throw InvalidParameters("canonical form limited to order <= 8");
    return canonical_key_impl(g);
}

void enumerate_connected(int n, bool dedup, const std::function<void(const Graph&)>& emit) {
    if (n < 1 || n > 7)
        throw InvalidParameters("enumerate_connected requires 1 <= n <= 7");
    if (n == 7)
        std::cerr << "warning: enumerating connected graphs on 7 vertices is expensive\n";
    if (n == 1) {
        emit(Graph(1, {}));
        return;
    }
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            slots.emplace_back(i, j);
    std::vector<std::string> seen;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (size_t s = 0; s < slots.size(); ++s)
            if ((mask >> s) & 1)
                edges.push_back(slots[s]);
        Graph g(n, std::move(edges));
        if (!is_connected(g))
            continue;
        if (dedup) {
            std::string key = canonical_key_impl(g);
            auto it = std::lower_bound(seen.begin(), seen.end(), key);
            if (it != seen.end() && *it == key)
                continue;
            seen.insert(it, key);
        }
        emit(g);
    }
}

std::vector<Graph> connected_corpus(int n, bool dedup) {
    std::vector<Graph> out;
    enumerate_connected(n, dedup, [&](const Graph& g) { out.push_back(g); });
    return out;
}

// ----------------------------------------------------------- isomorphism

namespace {

bool extend_mapping(const Graph& g, const Graph& h, std::vector<int>& map, VertexSet used, int next,
                    const std::vector<int>& order) {
    if (next == g.order())
        return true;
    int u = order[next];
    for (int v = 0; v < h.order(); ++v) {
        if (contains(used, v) || g.degree(u) != h.degree(v))
            continue;
        bool ok = true;
        for (int i = 0; i < next && ok; ++i)
            if (g.adjacent(u, order[i]) != h.adjacent(map[order[i]], v))
                ok = false;
        if (!ok)
            continue;
        map[u] = v;
        if (extend_mapping(g, h, map, used | bit(v), next + 1, order))
            return true;
    }
    return false;
}

} // namespace

bool isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size())
        return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh)
        return false;
    // Map high-degree vertices first; they are the most constrained.
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> map(g.order(), -1);
    return extend_mapping(g, h, map, 0, 0, order);
}

// -------------------------------------------------------------- text I/O

Graph read_graph(std::istream& in) {
    std::string line;
    auto next_data_line = [&]() -> std::optional<std::string> {
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos)
                line = line.substr(0, hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return line;
        }
        return std::nullopt;
    };
    auto header = next_data_line();
    if (!header)
        throw FormatError("empty graph file");
    std::istringstream hs(*header);
    int n = 0, m = 0;
    if (!(hs >> n >> m))
        throw FormatError("bad graph header '" + *header + "'");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        auto data = next_data_line();
        if (!data)
            throw FormatError("expected " + std::to_string(m) + " edges");
        std::istringstream es(*data);
        int u = 0, v = 0;
        if (!(es >> u >> v))
            throw FormatError("bad edge line '" + *data + "'");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const InvalidParameters& e) {
        throw FormatError(e.what());
    }
}

void write_graph(std::ostream& out, const Graph& g) {
    if (!g.label().empty())
        out << "# " << g.label() << "\n";
    out << g.order() << " " << g.size() << "\n";
    for (auto [u, v] : g.edges())
        out << u << " " << v << "\n";
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path);
    return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out)
        throw FormatError("cannot open " + path);
    write_graph(out, g);
}

} // namespace pebblelab
