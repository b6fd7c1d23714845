#include "qig/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qig {

GreedyColoring chromatic_upper_greedy(const Graph& g, std::span<const Vertex> order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) {
        throw std::invalid_argument("chromatic_upper_greedy: order must list every vertex once");
    }
    std::vector<char> seen_vertex(static_cast<std::size_t>(n), 0);
    for (Vertex v : order) {
        g.check_vertex(v, "chromatic_upper_greedy");
        if (seen_vertex[static_cast<std::size_t>(v)]++) {
            throw std::invalid_argument("chromatic_upper_greedy: duplicate vertex in order");
        }
    }
    GreedyColoring result;
    result.colors.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> used;
    for (Vertex v : order) {
        used.assign(static_cast<std::size_t>(n) + 1, 0);
        for (Vertex u : g.neighbors(v)) {
            const int c = result.colors[static_cast<std::size_t>(u)];
            if (c >= 0) used[static_cast<std::size_t>(c)] = 1;
        }
        int c = 0;
        while (used[static_cast<std::size_t>(c)]) ++c;
        result.colors[static_cast<std::size_t>(v)] = c;
        result.color_count = std::max(result.color_count, c + 1);
    }
    return result;
}

GreedyColoring chromatic_upper_greedy(const Graph& g) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    return chromatic_upper_greedy(g, order);
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
    for (const Edge& e : g.edges()) {
        if (colors[static_cast<std::size_t>(e.u)] == colors[static_cast<std::size_t>(e.v)]) {
            return false;
        }
    }
    return true;
}

std::vector<Vertex> greedy_clique(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Vertex> by_degree(static_cast<std::size_t>(n));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<Vertex> clique;
    for (Vertex v : by_degree) {
        bool ok = true;
        for (Vertex c : clique) {
            if (!g.has_edge(v, c)) {
                ok = false;
                break;
            }
        }
        if (ok) clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

namespace {

struct ColorSearch {
    const Graph& g;
    int k = 0;
    std::vector<int> colors;
    // neighbor_colors[v][c] counts colored neighbors of v using color c.
    std::vector<std::vector<int>> neighbor_colors;
    std::vector<int> saturation;
    int colored = 0;

    explicit ColorSearch(const Graph& graph) : g(graph) {}

    bool solve(int colors_allowed) {
        k = colors_allowed;
        const auto n = static_cast<std::size_t>(g.vertex_count());
        colors.assign(n, -1);
        neighbor_colors.assign(n, std::vector<int>(static_cast<std::size_t>(k), 0));
        saturation.assign(n, 0);
        colored = 0;
        return extend(-1);
    }

    Vertex pick() const {
        Vertex best = -1;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (colors[static_cast<std::size_t>(v)] >= 0) continue;
            if (best == -1) {
                best = v;
                continue;
            }
            const int sv = saturation[static_cast<std::size_t>(v)];
            const int sb = saturation[static_cast<std::size_t>(best)];
            if (sv > sb || (sv == sb && g.degree(v) > g.degree(best))) best = v;
        }
        return best;
    }

    void assign(Vertex v, int c) {
        colors[static_cast<std::size_t>(v)] = c;
        ++colored;
        for (Vertex u : g.neighbors(v)) {
            if (colors[static_cast<std::size_t>(u)] >= 0) continue;
            if (neighbor_colors[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)]++ == 0) {
                ++saturation[static_cast<std::size_t>(u)];
            }
        }
    }

    void unassign(Vertex v, int c) {
        colors[static_cast<std::size_t>(v)] = -1;
        --colored;
        for (Vertex u : g.neighbors(v)) {
            if (colors[static_cast<std::size_t>(u)] >= 0) continue;
            if (--neighbor_colors[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] == 0) {
                --saturation[static_cast<std::size_t>(u)];
            }
        }
    }

    bool extend(int max_color_used) {
        if (colored == g.vertex_count()) return true;
        const Vertex v = pick();
        if (saturation[static_cast<std::size_t>(v)] >= k) return false;
        // Allowing at most one brand-new color breaks color symmetry.
        const int limit = std::min(k - 1, max_color_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (neighbor_colors[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] > 0) {
                continue;
            }
            assign(v, c);
            if (extend(std::max(max_color_used, c))) return true;
            unassign(v, c);
        }
        return false;
    }
};

}  // namespace

int chromatic_number_exact(const Graph& g, int vertex_limit) {
    const int n = g.vertex_count();
    if (n > vertex_limit) {
        throw std::runtime_error("chromatic_number_exact: graph too large (" + std::to_string(n) +
                                 " vertices, limit " + std::to_string(vertex_limit) + ")");
    }
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;

    int upper = chromatic_upper_greedy(g).color_count;
    std::vector<Vertex> by_degree(static_cast<std::size_t>(n));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    upper = std::min(upper, chromatic_upper_greedy(g, by_degree).color_count);
    const int lower = std::max<int>(2, static_cast<int>(greedy_clique(g).size()));
    ColorSearch search(g);
    for (int k = lower; k < upper; ++k) {
        if (search.solve(k)) return k;
    }
    return upper;
}

}  // namespace qig
