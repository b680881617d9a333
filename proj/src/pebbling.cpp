#include "pebblelab/pebbling.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>

namespace pebblelab {

Configuration::Configuration(int n, std::initializer_list<int> values) : counts(n, 0) {
    int i = 0;
    for (int v : values)
        counts[i++] = static_cast<std::uint8_t>(v);
}

VertexSet Configuration::support() const {
    VertexSet s = 0;
    for (size_t v = 0; v < counts.size(); ++v)
        if (counts[v] > 0)
            s |= bit(static_cast<int>(v));
    return s;
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
    long long g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

namespace {

void check_configuration(const Graph& g, const Configuration& f, int weight_budget) {
    if (static_cast<int>(f.counts.size()) != g.order())
        throw InvalidParameters("configuration length does not match graph order");
    if (f.weight() > weight_budget)
        throw BudgetExceeded("configuration weight " + std::to_string(f.weight()) +
                             " exceeds search budget " + std::to_string(weight_budget));
}

// Potential of a state towards `target`: sum f(u) * 2^-d(u,target), scaled
// by 2^kShift. A move never increases it, and reaching the target needs
// potential >= 1, so states below the threshold are dead.
constexpr int kShift = 45;

std::uint64_t potential(const std::vector<std::uint8_t>& counts, const std::vector<int>& dist) {
    std::uint64_t p = 0;
    for (size_t v = 0; v < counts.size(); ++v)
        if (counts[v]) {
            int d = dist[v];
            p += d <= kShift ? (std::uint64_t{counts[v]} << (kShift - d))
                             : (std::uint64_t{counts[v]} >> (d - kShift));
        }
    return p;
}

struct ReachSearch {
    const Graph& g;
    std::vector<std::uint8_t> state;
    const std::vector<int>& dist; // distances to target
    int target;
    std::unordered_set<std::string> failed;
    std::vector<Move> steps;

    bool run() {
        if (state[target] >= 1)
            return true;
        if (potential(state, dist) < (std::uint64_t{1} << kShift))
            return false;
        std::string key(state.begin(), state.end());
        if (failed.count(key))
            return false;
        for (int u = 0; u < g.order(); ++u) {
            if (state[u] < 2)
                continue;
            VertexSet nb = g.neighbors(u);
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                state[u] -= 2;
                ++state[v];
                steps.push_back({u, v});
                if (run())
                    return true;
                steps.pop_back();
                state[u] += 2;
                --state[v];
            }
        }
        failed.insert(std::move(key));
        return false;
    }
};

} // namespace

std::optional<MoveSequence> reachable(const Graph& g, const Configuration& f, int target,
                                      int weight_budget) {
    check_configuration(g, f, weight_budget);
    if (target < 0 || target >= g.order())
        throw InvalidParameters("target out of range");
    auto dist = bfs_distances(g, target);
    ReachSearch search{g, f.counts, dist, target, {}, {}};
    if (!search.run())
        return std::nullopt;
    return MoveSequence{std::move(search.steps), target};
}

CoverageResult coverage(const Graph& g, const Configuration& f, bool with_witnesses,
                        int weight_budget) {
    check_configuration(g, f, weight_budget);
    CoverageResult result;
    for (int v = 0; v < g.order(); ++v) {
        auto witness = reachable(g, f, v, weight_budget);
        if (witness) {
            result.covered |= bit(v);
            if (with_witnesses)
                result.witnesses.emplace(v, std::move(*witness));
        }
    }
    result.cov_size = std::popcount(result.covered);
    return result;
}

bool is_solvable(const Graph& g, const Configuration& f, int weight_budget) {
    check_configuration(g, f, weight_budget);
    // Cheap necessary condition per target before any search.
    for (int v = 0; v < g.order(); ++v) {
        if (f.counts[v])
            continue;
        auto dist = bfs_distances(g, v);
        if (potential(f.counts, dist) < (std::uint64_t{1} << kShift))
            return false;
    }
    for (int v = 0; v < g.order(); ++v)
        if (!reachable(g, f, v, weight_budget))
            return false;
    return true;
}

Rational covering_ratio(const Graph& g, const Configuration& f, int weight_budget) {
    int w = f.weight();
    if (w < 1)
        throw InvalidParameters("covering ratio of an empty configuration");
    return Rational(coverage(g, f, false, weight_budget).cov_size, w);
}

std::vector<Block> blocks(const Graph& g, const Configuration& f, int weight_budget) {
    check_configuration(g, f, weight_budget);
    if (f.weight() < 1)
        throw InvalidParameters("blocks of an empty configuration");

    std::vector<int> sources;
    std::vector<VertexSet> units;
    for (int v = 0; v < g.order(); ++v)
        if (f.counts[v]) {
            Configuration unit_config(std::vector<std::uint8_t>(g.order(), 0));
            unit_config.counts[v] = f.counts[v];
            sources.push_back(v);
            units.push_back(coverage(g, unit_config, false, weight_budget).covered);
        }

    // Union-find over units that share a covered vertex.
    std::vector<size_t> parent(sources.size());
    std::iota(parent.begin(), parent.end(), size_t{0});
    std::function<size_t(size_t)> find = [&](size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (size_t i = 0; i < units.size(); ++i)
        for (size_t j = i + 1; j < units.size(); ++j)
            if (units[i] & units[j])
                parent[find(i)] = find(j);

    std::map<size_t, Block> grouped;
    for (size_t i = 0; i < sources.size(); ++i) {
        Block& b = grouped[find(i)];
        b.sources |= bit(sources[i]);
        b.pebbles += f.counts[sources[i]];
    }
    std::vector<Block> result;
    for (auto& [root, b] : grouped) {
        Configuration restricted(std::vector<std::uint8_t>(g.order(), 0));
        for (int v = 0; v < g.order(); ++v)
            if (contains(b.sources, v))
                restricted.counts[v] = f.counts[v];
        b.covered = coverage(g, restricted, false, weight_budget).covered;
        result.push_back(b);
    }
    std::sort(result.begin(), result.end(),
              [](const Block& a, const Block& b) { return a.sources < b.sources; });
    return result;
}

bool replay(const Graph& g, const Configuration& f, const MoveSequence& seq) {
    if (static_cast<int>(f.counts.size()) != g.order())
        return false;
    if (seq.target < 0 || seq.target >= g.order())
        return false;
    auto state = f.counts;
    for (const Move& m : seq.steps) {
        if (m.from < 0 || m.from >= g.order() || m.to < 0 || m.to >= g.order())
            return false;
        if (!g.adjacent(m.from, m.to) || state[m.from] < 2)
            return false;
        state[m.from] -= 2;
        ++state[m.to];
    }
    return state[seq.target] >= 1;
}

Configuration read_configuration(std::istream& in, int n) {
    std::string text, line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        text += line + " ";
    }
    std::istringstream tokens(text);
    Configuration f(std::vector<std::uint8_t>(n, 0));
    for (int v = 0; v < n; ++v) {
        long long c = 0;
        if (!(tokens >> c) || c < 0 || c > 255)
            throw FormatError("bad pebble count at position " + std::to_string(v));
        f.counts[v] = static_cast<std::uint8_t>(c);
    }
    return f;
}

Configuration read_configuration_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path);
    return read_configuration(in, n);
}

std::string format_configuration(const Configuration& f) {
    std::string out;
    for (size_t v = 0; v < f.counts.size(); ++v)
        out += (v ? " " : "") + std::to_string(int{f.counts[v]});
    return out;
}

std::string format_witness(const MoveSequence& seq) {
    std::string out;
    for (const Move& m : seq.steps)
        out += std::to_string(m.from) + "->" + std::to_string(m.to) + "\n";
    out += "target " + std::to_string(seq.target) + " reached\n";
    return out;
}

} // namespace pebblelab
