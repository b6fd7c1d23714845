#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "qig/graph.hpp"
#include "qig/weights.hpp"

namespace qig {

inline constexpr int kUnreachableHops = std::numeric_limits<int>::max();
inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

/// Single-source hop counts by BFS; kUnreachableHops where no path exists.
std::vector<int> hop_distances(const Graph& g, Vertex source);

/// Single-source shortest-path lengths under w. Exact fixed-point
/// arithmetic when the weighting is exact.
std::vector<double> weighted_distances(const Graph& g, const EdgeWeighting& w, Vertex source);

/// Exact micro-unit distances; requires w.exact().
std::vector<std::int64_t> weighted_distances_micro(const Graph& g, const EdgeWeighting& w,
                                                   Vertex source);

double path_length(const Graph& g, const EdgeWeighting& w, const Path& p);
int hop_length(const Path& p);

/// True iff p realizes the (weighted) distance between its endpoints.
/// Unit weights when w is null.
bool is_geodesic(const Graph& g, const EdgeWeighting* w, const Path& p);

/// Shortest cycle as a vertex sequence (first vertex not repeated), or
/// nullopt for forests. Deterministic: scans BFS roots ascending and keeps
/// the first strictly shorter cycle found.
std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g);

/// Length of a shortest cycle; nullopt means infinite (forest).
std::optional<int> girth(const Graph& g);

/// Deterministic shortest path: minimal length, then fewest hops, then
/// lexicographically smallest vertex sequence. Unit weights when w is null.
/// Requires t reachable from s.
Path shortest_path(const Graph& g, const EdgeWeighting* w, Vertex s, Vertex t);

/// Dense all-pairs distance table.
class DistanceMatrix {
  public:
    static DistanceMatrix hops(const Graph& g);
    static DistanceMatrix weighted(const Graph& g, const EdgeWeighting& w);

    double at(Vertex u, Vertex v) const {
        return data_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(v)];
    }
    bool finite(Vertex u, Vertex v) const { return at(u, v) != kInfiniteDistance; }
    int size() const { return n_; }

    /// Largest finite entry; nullopt when some pair is unreachable.
    std::optional<double> diameter() const;

  private:
    int n_ = 0;
    std::vector<double> data_;
};

}  // namespace qig
