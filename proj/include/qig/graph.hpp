#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qig {

using Vertex = int;

/// Undirected edge with canonical endpoint order (u < v).
struct Edge {
    Vertex u = -1;
    Vertex v = -1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected finite graph with vertices 0..n-1.
///
/// Immutable after construction. Loops and duplicate edges are rejected,
/// endpoints are range-checked. Edges are kept sorted in canonical order,
/// so the edge index of a given (u,v) is stable and reproducible.
class Graph {
  public:
    Graph() = default;
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    static Graph path(int vertices);
    static Graph cycle(int vertices);
    static Graph complete(int vertices);
    static Graph edgeless(int vertices);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

    /// Neighbors of v, ascending.
    std::span<const Vertex> neighbors(Vertex v) const;
    /// Edge indices parallel to neighbors(v).
    std::span<const int> incident_edges(Vertex v) const;

    int degree(Vertex v) const;
    bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }
    bool has_edge(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }
    /// Index into edges() or -1.
    int edge_index(Vertex u, Vertex v) const;

    bool is_connected() const;

    /// Structural fingerprint used for ownership checks by weightings,
    /// orientations and vertex maps.
    std::uint64_t fingerprint() const { return fingerprint_; }

    void check_vertex(Vertex v, const char* what) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    // CSR adjacency: for vertex v, entries adj_offsets_[v]..adj_offsets_[v+1).
    std::vector<int> adj_offsets_;
    std::vector<Vertex> adj_vertices_;
    std::vector<int> adj_edge_ids_;
    std::uint64_t fingerprint_ = 0;
};

/// Vertex sequence forming a path: consecutive vertices adjacent, all distinct.
/// A single vertex is the empty path (hop-length 0).
struct Path {
    std::vector<Vertex> vertices;

    int hop_length() const { return static_cast<int>(vertices.size()) - 1; }

    friend bool operator==(const Path&, const Path&) = default;
};

/// Throws std::invalid_argument unless p is a valid path in g.
void check_path(const Graph& g, const Path& p);
bool is_valid_path(const Graph& g, const Path& p);

void require_connected(const Graph& g, const char* op);

}  // namespace qig
