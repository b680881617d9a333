#include "pebblelab/characterization.hpp"

#include <bit>

#include "pebblelab/invariants.hpp"

namespace pebblelab {

std::string to_string(Pi2Class c) {
    switch (c) {
    case Pi2Class::two: return "two";
    case Pi2Class::three: return "three";
    case Pi2Class::four: return "four";
    case Pi2Class::five: return "five";
    case Pi2Class::above_five: return "above_five";
    }
    return "";
}

int class_value(Pi2Class c) {
    switch (c) {
    case Pi2Class::two: return 2;
    case Pi2Class::three: return 3;
    case Pi2Class::four: return 4;
    case Pi2Class::five: return 5;
    case Pi2Class::above_five: return 6;
    }
    return 0;
}

namespace {

bool dominates(const Graph& g, VertexSet s) {
    return neighborhoods(g, s).second == g.all_vertices();
}

} // namespace

VertexSet pair_condition_set(const Graph& g, int u, int v) {
    return bit(u) | bit(v) | (g.neighbors(u) & g.neighbors(v));
}

VertexSet triple_condition_set(const Graph& g, int u, int v, int w, int condition) {
    VertexSet uv = g.neighbors(u) & g.neighbors(v);
    VertexSet base = bit(u) | bit(v) | bit(w) | uv;
    switch (condition) {
    case 1:
        return base | (g.neighbors(u) & g.neighbors(w)) | (g.neighbors(v) & g.neighbors(w));
    case 2:
        return base | (g.neighbors(u) & g.neighbors(w));
    case 3:
        return base;
    default:
        throw InvalidParameters("condition must be 1, 2, or 3");
    }
}

std::optional<PairCertificate> pair_condition(const Graph& g) {
    if (g.order() < 2)
        throw InvalidParameters("pair_condition requires n >= 2");
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (dominates(g, pair_condition_set(g, u, v)))
                return PairCertificate{u, v};
    return std::nullopt;
}

std::optional<TripleCertificate> triple_conditions(const Graph& g, bool require_distinct) {
    int n = g.order();
    if (n < 3)
        throw InvalidParameters("triple_conditions requires n >= 3");
    // Condition 1: w a common neighbor of u and v.
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            VertexSet common = g.neighbors(u) & g.neighbors(v);
            for (int w = 0; w < n; ++w)
                if (contains(common, w) && dominates(g, triple_condition_set(g, u, v, w, 1)))
                    return TripleCertificate{u, v, w, 1};
        }
    // Condition 2: w a neighbor of v.
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (v == u)
                continue;
            VertexSet candidates = g.neighbors(v);
            for (int w = 0; w < n; ++w) {
                if (!contains(candidates, w) || w == v)
                    continue;
                if (require_distinct && w == u)
                    continue;
                if (dominates(g, triple_condition_set(g, u, v, w, 2)))
                    return TripleCertificate{u, v, w, 2};
            }
        }
    // Condition 3: w adjacent to a common neighbor of u and v.
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            VertexSet candidates = neighborhoods(g, g.neighbors(u) & g.neighbors(v)).first;
            for (int w = 0; w < n; ++w) {
                if (!contains(candidates, w))
                    continue;
                if (require_distinct && (w == u || w == v))
                    continue;
                if (dominates(g, triple_condition_set(g, u, v, w, 3)))
                    return TripleCertificate{u, v, w, 3};
            }
        }
    return std::nullopt;
}

ClassifyOutcome classify_small_pi2(const Graph& g, bool require_distinct) {
    if (g.order() < 2)
        throw InvalidParameters("classify_small_pi2 requires a nontrivial graph");
    if (!is_connected(g))
        throw DisconnectedGraph("classify_small_pi2 requires a connected graph");
    ClassifyOutcome out{Pi2Class::above_five};
    out.gamma_value = gamma(g).value;
    out.gamma_t_value = gamma_t(g).value;
    if (out.gamma_value == 1 && out.gamma_t_value == 2) {
        out.predicted = Pi2Class::two;
        return out;
    }
    if (out.gamma_value == 2 && out.gamma_t_value == 2) {
        out.predicted = Pi2Class::three;
        return out;
    }
    out.pair = pair_condition(g);
    if (out.gamma_t_value >= 3 && out.pair) {
        out.predicted = Pi2Class::four;
        return out;
    }
    if (out.gamma_t_value >= 4 && !out.pair && g.order() >= 3) {
        out.triple = triple_conditions(g, require_distinct);
        if (out.triple) {
            out.predicted = Pi2Class::five;
            return out;
        }
    }
    out.predicted = Pi2Class::above_five;
    return out;
}

std::optional<std::array<int, 3>> in_family_f(const Graph& g) {
    int n = g.order();
    if (n > 20 || !is_connected(g))
        return std::nullopt;
    for (int i = 1; 2 + 2 * i <= n; ++i)
        for (int j = 0; 2 + 2 * i + j <= n; ++j) {
            int k = n - 2 - 2 * i - j;
            if (k < 0 || i + j < 2 || i + k < 2)
                continue;
            if (g.size() != 3 * i + j + k)
                continue;
            if (isomorphic(g, build(FamilySpec{FamilyKind::f_family, {i, j, k}, {}})))
                return std::array<int, 3>{i, j, k};
        }
    return std::nullopt;
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::optional<int> ncorona_cycle_value(int n) {
    if (n < 4)
        return std::nullopt;
    return ceil_div(3 * n, 4);
}

std::optional<int> grid_pi2(int n, int m) {
    if (m > n)
        std::swap(n, m);
    if (m == 1)
        return n >= 3 ? std::optional<int>(ceil_div(2 * n, 3)) : std::nullopt;
    if (m == 2) {
        if (n == 2)
            return 3;
        if (n == 5)
            return 6;
        return n;
    }
    if (m == 3)
        return n + 1;
    if (m == 4) {
        if (n < 4)
            return std::nullopt; // smaller n handled by the swapped cases above
        switch (n % 3) {
        case 0: return (4 * n + 6) / 3;
        case 1: return (4 * n + 5) / 3;
        default: return (4 * n + 4) / 3;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<int> closed_form(const FamilySpec& spec, ClosedFormKind kind) {
    switch (kind) {
    case ClosedFormKind::gamma_r:
        if (spec.kind == FamilyKind::path && spec.params[0] >= 3)
            return ceil_div(2 * spec.params[0], 3);
        return std::nullopt;

    case ClosedFormKind::pi_star:
        if (spec.kind == FamilyKind::grid) {
            int n = spec.params[0], m = spec.params[1];
            if (m > n)
                std::swap(n, m);
            if (m == 3 && n >= 2)
                return n + 1;
        }
        return std::nullopt;

    case ClosedFormKind::pi_star_2:
        switch (spec.kind) {
        case FamilyKind::path:
            return spec.params[0] >= 3 ? std::optional<int>(ceil_div(2 * spec.params[0], 3))
                                       : std::nullopt;
        case FamilyKind::grid:
            return grid_pi2(spec.params[0], spec.params[1]);
        case FamilyKind::corona: {
            const FamilySpec& base = spec.operands[0];
            if (base.kind == FamilyKind::complete && base.params[0] >= 3)
                return 4;
            if (base.kind == FamilyKind::cycle && base.params[0] >= 4)
                return base.params[0];
            if (base.kind == FamilyKind::path && base.params[0] >= 4)
                return base.params[0] + 1;
            return std::nullopt;
        }
        case FamilyKind::ncorona: {
            const FamilySpec& base = spec.operands[0];
            if (base.kind == FamilyKind::complete && base.params[0] >= 2)
                return 3;
            if (base.kind == FamilyKind::cycle || base.kind == FamilyKind::path)
                return ncorona_cycle_value(base.params[0]);
            return std::nullopt;
        }
        default:
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<int> closed_form(const std::string& spec, ClosedFormKind kind) {
    return closed_form(parse_family_spec(spec), kind);
}

} // namespace pebblelab
