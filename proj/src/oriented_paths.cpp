#include "qig/oriented_paths.hpp"

#include <algorithm>
#include <stdexcept>

#include "qig/coloring.hpp"

namespace qig {

PathPattern PathPattern::directed(int hops) {
    if (hops < 1) throw std::invalid_argument("pattern: hop-length must be positive");
    return PathPattern{std::vector<bool>(static_cast<std::size_t>(hops), true)};
}

PathPattern PathPattern::alternating(int hops) {
    if (hops < 1) throw std::invalid_argument("pattern: hop-length must be positive");
    PathPattern p;
    p.steps.resize(static_cast<std::size_t>(hops));
    for (int i = 1; i <= hops; ++i) p.steps[static_cast<std::size_t>(i - 1)] = (i % 2 == 1);
    return p;
}

bool witness_matches(const Graph& g, const Orientation& o, const PathPattern& pattern,
                     const OrientedPathWitness& witness) {
    if (witness.hop_length() != pattern.hop_length()) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : witness.vertices) {
        if (!g.has_vertex(v) || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 1; i < witness.vertices.size(); ++i) {
        const Vertex a = witness.vertices[i - 1];
        const Vertex b = witness.vertices[i];
        const int e = g.edge_index(a, b);
        if (e < 0) return false;
        const bool want_forward = pattern.steps[i - 1];
        if (want_forward ? !o.directs(g, e, a, b) : !o.directs(g, e, b, a)) return false;
    }
    return true;
}

namespace {

struct PatternSearch {
    const Graph& g;
    const Orientation& o;
    const PathPattern& pattern;
    std::uint64_t budget;
    std::uint64_t expansions = 0;
    std::vector<char> on_path;
    std::vector<Vertex> stack;
    bool out_of_budget = false;

    PatternSearch(const Graph& graph, const Orientation& orient, const PathPattern& pat,
                  std::uint64_t b)
        : g(graph), o(orient), pattern(pat), budget(b),
          on_path(static_cast<std::size_t>(graph.vertex_count()), 0) {}

    bool extend(std::size_t step) {
        if (step == pattern.steps.size()) return true;
        const Vertex cur = stack.back();
        const auto nbrs = g.neighbors(cur);
        const auto eids = g.incident_edges(cur);
        const bool want_forward = pattern.steps[step];
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const Vertex nxt = nbrs[i];
            if (on_path[static_cast<std::size_t>(nxt)]) continue;
            const bool points_out = o.tail(g, eids[i]) == cur;
            if (points_out != want_forward) continue;
            if (++expansions > budget) {
                out_of_budget = true;
                return false;
            }
            on_path[static_cast<std::size_t>(nxt)] = 1;
            stack.push_back(nxt);
            if (extend(step + 1)) return true;
            if (out_of_budget) return false;
            stack.pop_back();
            on_path[static_cast<std::size_t>(nxt)] = 0;
        }
        return false;
    }
};

}  // namespace

PatternSearchResult find_pattern(const Graph& g, const Orientation& o, const PathPattern& pattern,
                                 std::uint64_t budget) {
    o.check_owner(g, "find_pattern");
    if (pattern.steps.empty()) {
        throw std::invalid_argument("find_pattern: empty pattern");
    }
    PatternSearch search(g, o, pattern, budget);
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        if (++search.expansions > budget) {
            search.out_of_budget = true;
            break;
        }
        search.on_path[static_cast<std::size_t>(start)] = 1;
        search.stack.assign(1, start);
        if (search.extend(0)) {
            OrientedPathWitness witness{search.stack};
            if (!witness_matches(g, o, pattern, witness)) {
                throw std::logic_error("find_pattern: produced witness failed validation");
            }
            return PatternSearchResult{SearchStatus::found, std::move(witness), search.expansions};
        }
        search.on_path[static_cast<std::size_t>(start)] = 0;
        if (search.out_of_budget) break;
    }
    if (search.out_of_budget) {
        return PatternSearchResult{SearchStatus::budget_exceeded, std::nullopt, search.expansions};
    }
    return PatternSearchResult{SearchStatus::exhausted, std::nullopt, search.expansions};
}

OrientedPathWitness gallai_roy_directed(const Graph& g, const Orientation& o) {
    o.check_owner(g, "gallai_roy_directed");
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("gallai_roy_directed: empty graph");

    // Maximal acyclic sub-orientation: greedy edge insertion in edge-index
    // order, skipping any edge that would close a directed cycle.
    std::vector<std::vector<Vertex>> dag_out(static_cast<std::size_t>(n));
    auto reaches = [&](Vertex from, Vertex to) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<Vertex> stack{from};
        seen[static_cast<std::size_t>(from)] = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            if (v == to) return true;
            for (Vertex u : dag_out[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    stack.push_back(u);
                }
            }
        }
        return false;
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        const Vertex t = o.tail(g, e);
        const Vertex h = o.head(g, e);
        if (!reaches(h, t)) dag_out[static_cast<std::size_t>(t)].push_back(h);
    }

    // level[v] = hop-length of the longest directed path in the DAG ending at v.
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : dag_out[static_cast<std::size_t>(v)]) ++indeg[static_cast<std::size_t>(u)];
    }
    std::vector<Vertex> topo;
    topo.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        if (indeg[static_cast<std::size_t>(v)] == 0) topo.push_back(v);
    }
    std::vector<int> level(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> pred(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < topo.size(); ++i) {
        const Vertex v = topo[i];
        for (Vertex u : dag_out[static_cast<std::size_t>(v)]) {
            if (level[static_cast<std::size_t>(v)] + 1 > level[static_cast<std::size_t>(u)] ||
                (level[static_cast<std::size_t>(v)] + 1 == level[static_cast<std::size_t>(u)] &&
                 (pred[static_cast<std::size_t>(u)] == -1 || v < pred[static_cast<std::size_t>(u)]))) {
                level[static_cast<std::size_t>(u)] = level[static_cast<std::size_t>(v)] + 1;
                pred[static_cast<std::size_t>(u)] = v;
            }
            if (--indeg[static_cast<std::size_t>(u)] == 0) topo.push_back(u);
        }
    }
    if (topo.size() != static_cast<std::size_t>(n)) {
        throw std::logic_error("gallai_roy_directed: sub-orientation is not acyclic");
    }

    // The leveling must properly color g; maximality guarantees it.
    for (int e = 0; e < g.edge_count(); ++e) {
        if (level[static_cast<std::size_t>(g.edge(e).u)] ==
            level[static_cast<std::size_t>(g.edge(e).v)]) {
            throw std::logic_error("gallai_roy_directed: leveling is not a proper coloring");
        }
    }

    Vertex end = 0;
    for (Vertex v = 1; v < n; ++v) {
        if (level[static_cast<std::size_t>(v)] > level[static_cast<std::size_t>(end)]) end = v;
    }
    std::vector<Vertex> rev{end};
    while (pred[static_cast<std::size_t>(rev.back())] != -1) {
        rev.push_back(pred[static_cast<std::size_t>(rev.back())]);
    }
    std::reverse(rev.begin(), rev.end());
    return OrientedPathWitness{std::move(rev)};
}

WitnessSearchResult find_for_witness(const Graph& g, const Orientation& o, int hop,
                                     WitnessKind kind, std::uint64_t budget) {
    if (hop < 1) throw std::invalid_argument("find_for_witness: hop must be at least 1");
    o.check_owner(g, "find_for_witness");
    WitnessSearchResult out;
    if (kind == WitnessKind::directed) {
        auto gr = gallai_roy_directed(g, o);
        if (gr.hop_length() >= hop) {
            gr.vertices.resize(static_cast<std::size_t>(hop) + 1);  // directed prefix
            out.witness = std::move(gr);
            return out;
        }
        auto res = find_pattern(g, o, PathPattern::directed(hop), budget);
        out.expansions = res.expansions;
        out.budget_exceeded = res.status == SearchStatus::budget_exceeded;
        if (res.status == SearchStatus::found) out.witness = std::move(res.witness);
        return out;
    }
    auto res = find_pattern(g, o, PathPattern::alternating(hop), budget);
    out.expansions = res.expansions;
    out.budget_exceeded = res.status == SearchStatus::budget_exceeded;
    if (res.status == SearchStatus::found) out.witness = std::move(res.witness);
    return out;
}

}  // namespace qig
