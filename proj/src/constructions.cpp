#include "qig/constructions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "qig/coloring.hpp"
#include "qig/metrics.hpp"

namespace qig {

SplitResult vertex_split(const Graph& h, const Orientation& o) {
    return vertex_split(h, o,
                        std::vector<std::uint8_t>(static_cast<std::size_t>(h.vertex_count()), 1));
}

SplitResult vertex_split(const Graph& h, const Orientation& o,
                         const std::vector<std::uint8_t>& split_vertex) {
    o.check_owner(h, "vertex_split");
    require_connected(h, "vertex_split");
    if (static_cast<int>(split_vertex.size()) != h.vertex_count()) {
        throw std::invalid_argument("vertex_split: split flags must cover every vertex");
    }

    const int n = h.vertex_count();
    std::vector<Vertex> minus_of(static_cast<std::size_t>(n));
    std::vector<Vertex> plus_of(static_cast<std::size_t>(n));
    int next = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (split_vertex[static_cast<std::size_t>(v)]) {
            minus_of[static_cast<std::size_t>(v)] = next++;
            plus_of[static_cast<std::size_t>(v)] = next++;
        } else {
            minus_of[static_cast<std::size_t>(v)] = next;
            plus_of[static_cast<std::size_t>(v)] = next++;
        }
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n + h.edge_count()));
    for (Vertex v = 0; v < n; ++v) {
        if (split_vertex[static_cast<std::size_t>(v)]) {
            edges.emplace_back(minus_of[static_cast<std::size_t>(v)],
                               plus_of[static_cast<std::size_t>(v)]);
        }
    }
    for (int e = 0; e < h.edge_count(); ++e) {
        const Vertex tail = o.tail(h, e);
        const Vertex head = o.head(h, e);
        edges.emplace_back(plus_of[static_cast<std::size_t>(tail)],
                           minus_of[static_cast<std::size_t>(head)]);
    }

    Graph g(next, edges);
    std::vector<Vertex> image(static_cast<std::size_t>(next));
    for (Vertex v = 0; v < n; ++v) {
        image[static_cast<std::size_t>(plus_of[static_cast<std::size_t>(v)])] = v;
        image[static_cast<std::size_t>(minus_of[static_cast<std::size_t>(v)])] = v;
    }
    VertexMap projection(g, h, std::move(image));
    return SplitResult{std::move(g), std::move(projection), std::move(minus_of),
                       std::move(plus_of), split_vertex};
}

SubdivisionResult subdivide(const Graph& h, int t) {
    if (t < 1) throw std::invalid_argument("subdivide: t must be at least 1");
    const int n = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    std::vector<Vertex> nearest(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) nearest[static_cast<std::size_t>(v)] = v;
    int next = n;
    for (int e = 0; e < h.edge_count(); ++e) {
        const Edge& ed = h.edge(e);
        Vertex prev = ed.u;
        for (int i = 1; i < t; ++i) {
            const Vertex fresh = next++;
            // Position i along the u-v chain: distance i to u, t-i to v.
            nearest.push_back(2 * i <= t ? ed.u : ed.v);
            edges.emplace_back(prev, fresh);
            prev = fresh;
        }
        edges.emplace_back(prev, ed.v);
    }
    Graph graph(next, edges);
    VertexMap map(graph, h, std::move(nearest));
    return SubdivisionResult{std::move(graph), std::move(map), n};
}

PendantResult attach_pendant_paths(const Graph& h, int base, int stride) {
    if (base < 1) throw std::invalid_argument("attach_pendant_paths: base must be at least 1");
    if (stride < 0) throw std::invalid_argument("attach_pendant_paths: stride must be nonnegative");
    const int n = h.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : h.edges()) edges.emplace_back(e.u, e.v);
    int next = n;
    std::vector<std::pair<Vertex, Vertex>> tips;
    tips.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        const int len = base + v * stride;
        Vertex prev = v;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        tips.emplace_back(prev, v);
    }
    return PendantResult{Graph(next, edges), std::move(tips)};
}

namespace {

Graph largest_component(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int comp_count = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (comp[static_cast<std::size_t>(v)] != -1) continue;
        std::vector<Vertex> stack{v};
        comp[static_cast<std::size_t>(v)] = comp_count;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (comp[static_cast<std::size_t>(y)] == -1) {
                    comp[static_cast<std::size_t>(y)] = comp_count;
                    stack.push_back(y);
                }
            }
        }
        ++comp_count;
    }
    if (comp_count <= 1) return g;
    std::vector<int> size(static_cast<std::size_t>(comp_count), 0);
    for (int c : comp) ++size[static_cast<std::size_t>(c)];
    // Largest component; ties resolved toward the one seen first.
    int best = 0;
    for (int c = 1; c < comp_count; ++c) {
        if (size[static_cast<std::size_t>(c)] > size[static_cast<std::size_t>(best)]) best = c;
    }
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (comp[static_cast<std::size_t>(v)] == best) remap[static_cast<std::size_t>(v)] = next++;
    }
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) {
        if (remap[static_cast<std::size_t>(e.u)] != -1 && remap[static_cast<std::size_t>(e.v)] != -1) {
            edges.emplace_back(remap[static_cast<std::size_t>(e.u)],
                               remap[static_cast<std::size_t>(e.v)]);
        }
    }
    return Graph(next, edges);
}

Graph erase_vertex(const Graph& g, Vertex victim) {
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) {
        if (e.u == victim || e.v == victim) continue;
        edges.emplace_back(e.u > victim ? e.u - 1 : e.u, e.v > victim ? e.v - 1 : e.v);
    }
    return Graph(g.vertex_count() - 1, edges);
}

}  // namespace

GeneratedGraph random_high_girth(int n, double p, int girth_target, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_high_girth: n must be positive");
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("random_high_girth: p must lie strictly between 0 and 1");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng) < p) edges.emplace_back(u, v);
        }
    }
    Graph g(n, edges);
    while (true) {
        const auto cycle = shortest_cycle(g);
        if (!cycle || static_cast<int>(cycle->size()) >= girth_target) break;
        Vertex victim = (*cycle)[0];
        for (Vertex v : *cycle) {
            if (g.degree(v) > g.degree(victim) || (g.degree(v) == g.degree(victim) && v < victim)) {
                victim = v;
            }
        }
        g = erase_vertex(g, victim);
    }
    g = largest_component(g);
    GeneratedGraph out;
    out.girth = girth(g);
    out.greedy_chi = g.vertex_count() > 0 ? chromatic_upper_greedy(g).color_count : 0;
    out.graph = std::move(g);
    out.seed = seed;
    return out;
}

Graph mycielski(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) {
        edges.emplace_back(e.u, e.v);
        edges.emplace_back(n + e.u, e.v);
        edges.emplace_back(e.u, n + e.v);
    }
    const int apex = 2 * n;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(n + v, apex);
    return Graph(2 * n + 1, edges);
}

Graph lcf_graph(int n, const std::vector<int>& pattern) {
    if (n < 3 || pattern.empty() || n % static_cast<int>(pattern.size()) != 0) {
        throw std::invalid_argument("lcf_graph: pattern length must divide n");
    }
    std::set<std::pair<int, int>> edge_set;
    for (int i = 0; i < n; ++i) {
        edge_set.emplace(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    }
    const int k = static_cast<int>(pattern.size());
    for (int i = 0; i < n; ++i) {
        const int j = ((i + pattern[static_cast<std::size_t>(i % k)]) % n + n) % n;
        if (i == j) throw std::invalid_argument("lcf_graph: chord is a loop");
        edge_set.emplace(std::min(i, j), std::max(i, j));
    }
    std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
    return Graph(n, edges);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
    }
    return Graph(10, edges);
}

Graph cage_by_name(const std::string& name) {
    if (name == "petersen") return petersen_graph();
    if (name == "heawood") return lcf_graph(14, {5, -5});
    if (name == "mcgee") return lcf_graph(24, {12, 7, -7});
    if (name == "tutte-coxeter") return lcf_graph(30, {-13, -9, 7, -7, 9, 13});
    throw std::invalid_argument("cage_by_name: unknown cage '" + name +
                                "' (expected petersen, heawood, mcgee or tutte-coxeter)");
}

}  // namespace qig
