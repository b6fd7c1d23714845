#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qig/graph.hpp"
#include "qig/orientation.hpp"
#include "qig/vertex_map.hpp"

namespace qig {

/// Result of splitting vertices of H into adjacent minus/plus copies.
///
/// Split vertex v becomes v- and v+ joined by an edge; an oriented edge
/// u->v of H becomes the edge (u+, v-) between the copies. For a full
/// split, v- gets index 2v and v+ gets 2v+1. Unsplit vertices keep a
/// single copy (minus_of == plus_of).
struct SplitResult {
    Graph split_graph;               // the G of the construction
    VertexMap projection;            // V(G) -> V(H)
    std::vector<Vertex> minus_of;    // V(H) -> V(G)
    std::vector<Vertex> plus_of;     // V(H) -> V(G)
    std::vector<std::uint8_t> was_split;  // per H vertex
};

/// Splits every vertex of h along orientation o. Requires h connected.
SplitResult vertex_split(const Graph& h, const Orientation& o);

/// Splits only the flagged vertices (Cor. 5 style partial split).
SplitResult vertex_split(const Graph& h, const Orientation& o,
                         const std::vector<std::uint8_t>& split_vertex);

struct SubdivisionResult {
    Graph graph;
    /// Every vertex of the subdivision to its nearest original vertex
    /// (ties go to the smaller endpoint index); originals map to themselves.
    VertexMap nearest_original;
    int original_count = 0;
};

/// Replaces each edge with a path of t edges through t-1 fresh vertices.
SubdivisionResult subdivide(const Graph& h, int t);

struct PendantResult {
    Graph graph;
    /// (tip vertex, original anchor vertex), one entry per original vertex.
    std::vector<std::pair<Vertex, Vertex>> tips;
};

/// Attaches to vertex i a pendant path of hop-length base + i*stride.
PendantResult attach_pendant_paths(const Graph& h, int base, int stride);

struct GeneratedGraph {
    Graph graph;
    std::optional<int> girth;  // nullopt = acyclic
    int greedy_chi = 0;
    std::uint64_t seed = 0;
};

/// Erdos-Renyi sample followed by deleting, while any cycle shorter than
/// girth_target exists, the highest-degree vertex on a shortest cycle.
/// Returns the largest component of what is left.
GeneratedGraph random_high_girth(int n, double p, int girth_target, std::uint64_t seed);

/// Standard Mycielski construction: chi grows by one, triangle-freeness
/// is preserved. Output indices: originals 0..n-1, shadows n..2n-1, apex 2n.
Graph mycielski(const Graph& g);

/// Hamiltonian cycle 0..n-1 plus chords i -> (i + pattern[i mod k]) mod n.
Graph lcf_graph(int n, const std::vector<int>& pattern);

Graph petersen_graph();

/// Classical small cages by name: petersen, heawood, mcgee, tutte-coxeter.
Graph cage_by_name(const std::string& name);

}  // namespace qig
