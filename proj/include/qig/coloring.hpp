#pragma once

#include <span>
#include <vector>

#include "qig/graph.hpp"

namespace qig {

struct GreedyColoring {
    int color_count = 0;
    std::vector<int> colors;  // per vertex, 0-based
};

/// Greedy proper coloring in the given vertex order (smallest available color).
GreedyColoring chromatic_upper_greedy(const Graph& g, std::span<const Vertex> order);
/// Identity order.
GreedyColoring chromatic_upper_greedy(const Graph& g);

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);

/// Exact chromatic number by branch and bound: greedy upper bound, greedy
/// clique lower bound, DSATUR-style backtracking in between. Guarded:
/// throws for graphs larger than vertex_limit.
int chromatic_number_exact(const Graph& g, int vertex_limit = 30);

/// Greedily grown clique (lower-bound witness for the exact solver).
std::vector<Vertex> greedy_clique(const Graph& g);

}  // namespace qig
