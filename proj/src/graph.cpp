#include "qig/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qig {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xffu;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 0) {
        throw std::invalid_argument("graph: negative vertex count");
    }
    n_ = vertex_count;
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_) {
            throw std::invalid_argument("graph: edge endpoint out of range: (" +
                                        std::to_string(a) + "," + std::to_string(b) + ")");
        }
        if (a == b) {
            throw std::invalid_argument("graph: loop at vertex " + std::to_string(a));
        }
        edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i] == edges_[i - 1]) {
            throw std::invalid_argument("graph: duplicate edge (" + std::to_string(edges_[i].u) +
                                        "," + std::to_string(edges_[i].v) + ")");
        }
    }

    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    adj_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int v = 0; v < n_; ++v) {
        adj_offsets_[static_cast<std::size_t>(v) + 1] =
            adj_offsets_[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
    }
    adj_vertices_.resize(edges_.size() * 2);
    adj_edge_ids_.resize(edges_.size() * 2);
    std::vector<int> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    // Edges are sorted, so per-vertex neighbor lists come out ascending.
    for (int e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[static_cast<std::size_t>(e)];
        adj_vertices_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(ed.u)])] = ed.v;
        adj_edge_ids_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(ed.u)]++)] = e;
    }
    for (int e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[static_cast<std::size_t>(e)];
        adj_vertices_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(ed.v)])] = ed.u;
        adj_edge_ids_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(ed.v)]++)] = e;
    }
    for (int v = 0; v < n_; ++v) {
        const auto begin = adj_vertices_.begin() + adj_offsets_[static_cast<std::size_t>(v)];
        const auto end = adj_vertices_.begin() + adj_offsets_[static_cast<std::size_t>(v) + 1];
        const auto ebegin = adj_edge_ids_.begin() + adj_offsets_[static_cast<std::size_t>(v)];
        std::vector<std::pair<int, int>> tmp;
        tmp.reserve(static_cast<std::size_t>(end - begin));
        for (auto it = begin, eit = ebegin; it != end; ++it, ++eit) {
            tmp.emplace_back(*it, *eit);
        }
        std::sort(tmp.begin(), tmp.end());
        auto it = begin;
        auto eit = ebegin;
        for (const auto& [nb, eid] : tmp) {
            *it++ = nb;
            *eit++ = eid;
        }
    }

    std::uint64_t h = 0xcbf29ce484222325ull;
    h = fnv1a(h, static_cast<std::uint64_t>(n_));
    for (const Edge& e : edges_) {
        h = fnv1a(h, (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint64_t>(e.v));
    }
    fingerprint_ = h;
}

Graph Graph::path(int vertices) {
    if (vertices < 1) throw std::invalid_argument("path: need at least one vertex");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < vertices; ++i) es.emplace_back(i, i + 1);
    return Graph(vertices, es);
}

Graph Graph::cycle(int vertices) {
    if (vertices < 3) throw std::invalid_argument("cycle: need at least three vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < vertices; ++i) es.emplace_back(i, (i + 1) % vertices);
    return Graph(vertices, es);
}

Graph Graph::complete(int vertices) {
    if (vertices < 1) throw std::invalid_argument("complete: need at least one vertex");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < vertices; ++i)
        for (int j = i + 1; j < vertices; ++j) es.emplace_back(i, j);
    return Graph(vertices, es);
}

Graph Graph::edgeless(int vertices) {
    if (vertices < 0) throw std::invalid_argument("edgeless: negative vertex count");
    return Graph(vertices, {});
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v, "neighbors");
    const auto b = static_cast<std::size_t>(adj_offsets_[static_cast<std::size_t>(v)]);
    const auto e = static_cast<std::size_t>(adj_offsets_[static_cast<std::size_t>(v) + 1]);
    return {adj_vertices_.data() + b, e - b};
}

std::span<const int> Graph::incident_edges(Vertex v) const {
    check_vertex(v, "incident_edges");
    const auto b = static_cast<std::size_t>(adj_offsets_[static_cast<std::size_t>(v)]);
    const auto e = static_cast<std::size_t>(adj_offsets_[static_cast<std::size_t>(v) + 1]);
    return {adj_edge_ids_.data() + b, e - b};
}

int Graph::degree(Vertex v) const {
    check_vertex(v, "degree");
    return adj_offsets_[static_cast<std::size_t>(v) + 1] - adj_offsets_[static_cast<std::size_t>(v)];
}

int Graph::edge_index(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return -1;
    const Edge probe{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe,
                               [](const Edge& x, const Edge& y) {
                                   return std::tie(x.u, x.v) < std::tie(y.u, y.v);
                               });
    if (it != edges_.end() && *it == probe) {
        return static_cast<int>(it - edges_.begin());
    }
    return -1;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

void Graph::check_vertex(Vertex v, const char* what) const {
    if (!has_vertex(v)) {
        throw std::invalid_argument(std::string(what) + ": vertex index " + std::to_string(v) +
                                    " out of range (n=" + std::to_string(n_) + ")");
    }
}

bool is_valid_path(const Graph& g, const Path& p) {
    if (p.vertices.empty()) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        const Vertex v = p.vertices[i];
        if (!g.has_vertex(v)) return false;
        if (seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
        if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) return false;
    }
    return true;
}

void check_path(const Graph& g, const Path& p) {
    if (!is_valid_path(g, p)) {
        throw std::invalid_argument("path: not a valid simple path in this graph");
    }
}

void require_connected(const Graph& g, const char* op) {
    if (!g.is_connected()) {
        throw std::invalid_argument(std::string(op) + ": graph must be connected");
    }
}

}  // namespace qig
