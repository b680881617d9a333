#include "pebblelab/invariants.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace pebblelab {

int RomanFunction::weight() const { return 2 * std::popcount(v2) + std::popcount(v1); }
int RomanFunction::n1() const { return std::popcount(v1); }

bool RomanFunction::valid_for(const Graph& g) const {
    if ((v0 | v1 | v2) != g.all_vertices())
        return false;
    if ((v0 & v1) || (v0 & v2) || (v1 & v2))
        return false;
    auto [open, closed] = neighborhoods(g, v2);
    (void)closed;
    return (v0 & ~open) == 0; // every 0-vertex has a neighbor in V2
}

namespace {

// Vertices within distance r of each vertex, as masks.
std::vector<VertexSet> ball_masks(const Graph& g, int r) {
    auto dist = distance_matrix(g);
    std::vector<VertexSet> balls(g.order(), 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (dist[u][v] >= 0 && dist[u][v] <= r)
                balls[u] |= bit(v);
    return balls;
}

// Enumerates count vectors of the given weight with counts <= cap, in
// lexicographic order. Callback returns true to stop.
bool enumerate_weight(int n, int weight, int cap, std::vector<std::uint8_t>& counts, int pos,
                      const std::function<bool(const std::vector<std::uint8_t>&)>& cb) {
    if (pos == n)
        return weight == 0 && cb(counts);
    if (weight > cap * (n - pos))
        return false;
    for (int c = 0; c <= std::min(cap, weight); ++c) {
        counts[pos] = static_cast<std::uint8_t>(c);
        if (enumerate_weight(n, weight - c, cap, counts, pos + 1, cb))
            return true;
    }
    counts[pos] = 0;
    return false;
}

struct CheckBudget {
    long long remaining;
    int best_bound;
    void spend(const char* what) {
        if (remaining == 0)
            throw BudgetExceeded(std::string(what) + ": enumeration ceiling reached", best_bound);
        if (remaining > 0)
            --remaining;
    }
};

ConfigResult optimal_search(const Graph& g, int cap_for_weight(int, int), int t,
                            const SearchLimits& limits, const char* what) {
    if (!is_connected(g))
        throw DisconnectedGraph(std::string(what) + " requires a connected graph");
    int n = g.order();
    CheckBudget budget{limits.max_checks, 0};
    for (int w = 1; w <= n; ++w) {
        if (w > limits.weight_budget)
            throw BudgetExceeded(std::string(what) + ": weight budget exhausted", w - 1);
        budget.best_bound = w - 1;
        int cap = cap_for_weight(t, w);
        int max_jump = std::bit_width(static_cast<unsigned>(w)) - 1;
        auto balls = ball_masks(g, max_jump);
        std::vector<std::uint8_t> counts(n, 0);
        Configuration found;
        bool stopped = enumerate_weight(n, w, cap, counts, 0, [&](const auto& c) {
            VertexSet reach = 0;
            for (int v = 0; v < n; ++v)
                if (c[v])
                    reach |= balls[v];
            if (reach != g.all_vertices())
                return false; // no vertex farther than log2(w) is reachable
            budget.spend(what);
            Configuration f{std::vector<std::uint8_t>(c)};
            if (!is_solvable(g, f, std::max(limits.weight_budget, w)))
                return false;
            found = std::move(f);
            return true;
        });
        if (stopped)
            return {w, std::move(found), true};
    }
    // Unreachable for connected graphs: one pebble everywhere is solvable.
    throw BudgetExceeded(std::string(what) + ": no solvable configuration found", n);
}

} // namespace

ConfigResult pi_star_t(const Graph& g, int t, const SearchLimits& limits) {
    if (t < 1)
        throw InvalidParameters("t must be >= 1");
    return optimal_search(
        g, [](int t_, int w) { return std::min(t_, w); }, t, limits, "pi_star_t");
}

ConfigResult pi_star(const Graph& g, const SearchLimits& limits) {
    return optimal_search(
        g, [](int, int w) { return w; }, 0, limits, "pi_star");
}

namespace {

std::optional<Configuration> find_unsolvable(const Graph& g, int weight) {
    int n = g.order();
    std::vector<std::uint8_t> counts(n, 0);
    Configuration found;
    bool stopped = enumerate_weight(n, weight, weight, counts, 0, [&](const auto& c) {
        Configuration f{std::vector<std::uint8_t>(c)};
        if (is_solvable(g, f, std::max(kDefaultWeightBudget, weight)))
            return false;
        found = std::move(f);
        return true;
    });
    if (!stopped)
        return std::nullopt;
    return found;
}

} // namespace

PebblingNumberResult pebbling_number(const Graph& g, int order_cap) {
    if (!is_connected(g))
        throw DisconnectedGraph("pebbling_number requires a connected graph");
    if (g.order() > order_cap)
        throw BudgetExceeded("pebbling_number order cap exceeded");
    int lb = std::max(g.order(), 1 << diameter(g));
    auto witness = find_unsolvable(g, lb - 1);
    if (!witness)
        throw BudgetExceeded("pebbling_number: lower-bound witness missing"); // cannot happen
    int k = lb;
    while (auto next = find_unsolvable(g, k)) {
        witness = std::move(next);
        ++k;
    }
    return {k, std::move(*witness), lb};
}

bool is_class0(const Graph& g, int order_cap) {
    return pebbling_number(g, order_cap).value == g.order();
}

namespace {

constexpr int kDominationOrderCap = 24;

// Next mask with the same popcount (Gosper); enumerates subsets of
// fixed size in increasing numeric order.
VertexSet next_same_popcount(VertexSet x) {
    VertexSet c = x & (~x + 1);
    VertexSet r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

// Minimum-size subset S with cover(S) == all; balls gives per-vertex cover.
std::optional<SetResult> min_cover(int n, const std::vector<VertexSet>& balls, VertexSet all) {
    for (int k = 1; k <= n; ++k) {
        VertexSet s = bit(k) - 1;
        VertexSet last = s << (n - k);
        while (true) {
            VertexSet covered = 0;
            for (int v = 0; v < n; ++v)
                if (contains(s, v))
                    covered |= balls[v];
            if (covered == all)
                return SetResult{k, s};
            if (s == last)
                break;
            s = next_same_popcount(s);
        }
    }
    return std::nullopt;
}

} // namespace

SetResult gamma(const Graph& g) {
    if (g.order() > kDominationOrderCap)
        throw BudgetExceeded("gamma order cap exceeded");
    std::vector<VertexSet> balls(g.order());
    for (int v = 0; v < g.order(); ++v)
        balls[v] = g.closed_neighbors(v);
    return *min_cover(g.order(), balls, g.all_vertices());
}

SetResult gamma_t(const Graph& g) {
    if (g.order() > kDominationOrderCap)
        throw BudgetExceeded("gamma_t order cap exceeded");
    std::vector<VertexSet> balls(g.order());
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0)
            throw InvalidParameters("gamma_t undefined with isolated vertices");
        balls[v] = g.neighbors(v);
    }
    auto result = min_cover(g.order(), balls, g.all_vertices());
    if (!result)
        throw InvalidParameters("gamma_t: no total dominating set");
    return *result;
}

namespace {

RomanFunction roman_from_v2(const Graph& g, VertexSet v2) {
    auto [open, closed] = neighborhoods(g, v2);
    (void)open;
    RomanFunction f;
    f.v2 = v2;
    f.v0 = closed & ~v2;
    f.v1 = g.all_vertices() & ~closed;
    return f;
}

// Visits every candidate V2 whose weight could still matter; for a fixed
// V2 the cheapest completion puts V \ N[V2] in V1 and the rest in V0.
void scan_roman(const Graph& g, const std::function<void(const RomanFunction&)>& visit,
                const std::function<int()>& weight_limit) {
    int n = g.order();
    visit(roman_from_v2(g, 0));
    for (int k = 1; k <= n && 2 * k <= weight_limit(); ++k) {
        VertexSet s = bit(k) - 1;
        VertexSet last = s << (n - k);
        while (true) {
            visit(roman_from_v2(g, s));
            if (s == last)
                break;
            s = next_same_popcount(s);
        }
    }
}

} // namespace

GammaRResult gamma_r(const Graph& g) {
    if (g.order() > kDominationOrderCap)
        throw BudgetExceeded("gamma_r order cap exceeded");
    GammaRResult best{g.order() + 1, {}};
    scan_roman(
        g,
        [&](const RomanFunction& f) {
            if (f.weight() < best.value) {
                best.value = f.weight();
                best.witness = f;
            }
        },
        [&] { return best.value; });
    return best;
}

RomanFunction roman_function_min_n1(const Graph& g) {
    int target = gamma_r(g).value;
    RomanFunction best;
    int best_n1 = g.order() + 1;
    scan_roman(
        g,
        [&](const RomanFunction& f) {
            if (f.weight() == target && f.n1() < best_n1) {
                best_n1 = f.n1();
                best = f;
            }
        },
        [&] { return target; });
    return best;
}

namespace {

// Recursive combination scan placing `twos` vertices with 2 pebbles and
// `ones` with 1, ascending; checks the log2(w)-ball prune before solving.
struct TierSearch {
    const Graph& g;
    const std::vector<VertexSet>& balls;
    int weight;
    CheckBudget& budget;
    std::vector<std::uint8_t> counts;
    std::optional<Configuration> found;

    bool place(int remaining_twos, int remaining_ones, int start) {
        if (remaining_twos > 0) {
            for (int v = start; v <= g.order() - remaining_twos; ++v) {
                counts[v] = 2;
                if (place(remaining_twos - 1, remaining_ones, v + 1))
                    return true;
                counts[v] = 0;
            }
            return false;
        }
        if (remaining_ones > 0)
            return place_ones(remaining_ones, 0);
        return check();
    }

    bool place_ones(int remaining, int start) {
        if (remaining == 0)
            return check();
        for (int v = start; v <= g.order() - remaining; ++v) {
            if (counts[v])
                continue;
            counts[v] = 1;
            if (place_ones(remaining - 1, v + 1))
                return true;
            counts[v] = 0;
        }
        return false;
    }

    bool check() {
        VertexSet reach = 0;
        for (int v = 0; v < g.order(); ++v)
            if (counts[v])
                reach |= balls[v];
        if (reach != g.all_vertices())
            return false;
        budget.spend("find_solvable");
        Configuration f{std::vector<std::uint8_t>(counts)};
        if (!is_solvable(g, f, std::max(kDefaultWeightBudget, weight)))
            return false;
        found = std::move(f);
        return true;
    }
};

} // namespace

std::optional<Configuration> find_solvable(const Graph& g, int t, int weight,
                                           long long max_checks) {
    if (t != 1 && t != 2)
        throw InvalidParameters("find_solvable supports caps 1 and 2");
    if (weight < 1)
        throw InvalidParameters("weight must be >= 1");
    int n = g.order();
    int max_jump = std::bit_width(static_cast<unsigned>(weight)) - 1;
    auto balls = ball_masks(g, max_jump);
    CheckBudget budget{max_checks, weight - 1};
    int first_ones = t == 1 ? weight : weight % 2;
    for (int ones = first_ones; ones <= std::min(weight, n); ones += 2) {
        int twos = (weight - ones) / 2;
        if (t == 1 && twos > 0)
            break;
        if (twos + ones > n)
            continue;
        TierSearch search{g, balls, weight, budget, std::vector<std::uint8_t>(n, 0), {}};
        if (search.place(twos, ones, 0))
            return search.found;
    }
    return std::nullopt;
}

} // namespace pebblelab
