#pragma once

#include <cstdint>
#include <vector>

#include "qig/graph.hpp"

namespace qig {

/// Direction assignment for every edge of a graph.
class Orientation {
  public:
    /// Directs every edge from its smaller to its larger endpoint (acyclic).
    static Orientation low_to_high(const Graph& g);
    /// Seed-deterministic coin flip per edge, in edge-index order.
    static Orientation random(const Graph& g, std::uint64_t seed);
    /// tails[e] must be one endpoint of edge e; the head is the other.
    static Orientation from_tails(const Graph& g, const std::vector<Vertex>& tails);

    int edge_count() const { return static_cast<int>(forward_.size()); }

    /// True when edge e points from edge(e).u to edge(e).v.
    bool forward(int e) const { return forward_[static_cast<std::size_t>(e)] != 0; }

    Vertex tail(const Graph& g, int e) const;
    Vertex head(const Graph& g, int e) const;
    /// True when edge e is directed from `from` to `to`.
    bool directs(const Graph& g, int e, Vertex from, Vertex to) const;

    std::uint64_t owner_fingerprint() const { return owner_fingerprint_; }
    void check_owner(const Graph& g, const char* op) const;

  private:
    std::vector<std::uint8_t> forward_;
    std::uint64_t owner_fingerprint_ = 0;
};

/// Out-neighbor adjacency induced by an orientation (index = tail vertex).
std::vector<std::vector<Vertex>> out_adjacency(const Graph& g, const Orientation& o);
/// In-neighbor adjacency (index = head vertex).
std::vector<std::vector<Vertex>> in_adjacency(const Graph& g, const Orientation& o);

}  // namespace qig
