#include "qig/orientation.hpp"

#include <random>
#include <stdexcept>

namespace qig {

Orientation Orientation::low_to_high(const Graph& g) {
    Orientation o;
    o.owner_fingerprint_ = g.fingerprint();
    o.forward_.assign(static_cast<std::size_t>(g.edge_count()), 1);
    return o;
}

Orientation Orientation::random(const Graph& g, std::uint64_t seed) {
    Orientation o;
    o.owner_fingerprint_ = g.fingerprint();
    o.forward_.resize(static_cast<std::size_t>(g.edge_count()));
    std::mt19937_64 rng(seed);
    for (auto& f : o.forward_) f = static_cast<std::uint8_t>(rng() & 1u);
    return o;
}

Orientation Orientation::from_tails(const Graph& g, const std::vector<Vertex>& tails) {
    if (static_cast<int>(tails.size()) != g.edge_count()) {
        throw std::invalid_argument("orientation: need one tail per edge");
    }
    Orientation o;
    o.owner_fingerprint_ = g.fingerprint();
    o.forward_.resize(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const Vertex t = tails[static_cast<std::size_t>(e)];
        if (t == ed.u) {
            o.forward_[static_cast<std::size_t>(e)] = 1;
        } else if (t == ed.v) {
            o.forward_[static_cast<std::size_t>(e)] = 0;
        } else {
            throw std::invalid_argument("orientation: tail " + std::to_string(t) +
                                        " is not an endpoint of edge " + std::to_string(e));
        }
    }
    return o;
}

Vertex Orientation::tail(const Graph& g, int e) const {
    check_owner(g, "orientation");
    return forward(e) ? g.edge(e).u : g.edge(e).v;
}

Vertex Orientation::head(const Graph& g, int e) const {
    check_owner(g, "orientation");
    return forward(e) ? g.edge(e).v : g.edge(e).u;
}

bool Orientation::directs(const Graph& g, int e, Vertex from, Vertex to) const {
    return tail(g, e) == from && head(g, e) == to;
}

void Orientation::check_owner(const Graph& g, const char* op) const {
    if (g.fingerprint() != owner_fingerprint_ || g.edge_count() != edge_count()) {
        throw std::invalid_argument(std::string(op) + ": orientation does not belong to this graph");
    }
}

std::vector<std::vector<Vertex>> out_adjacency(const Graph& g, const Orientation& o) {
    o.check_owner(g, "out_adjacency");
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        adj[static_cast<std::size_t>(o.tail(g, e))].push_back(o.head(g, e));
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

std::vector<std::vector<Vertex>> in_adjacency(const Graph& g, const Orientation& o) {
    o.check_owner(g, "in_adjacency");
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        adj[static_cast<std::size_t>(o.head(g, e))].push_back(o.tail(g, e));
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

}  // namespace qig
