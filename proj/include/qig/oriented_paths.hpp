#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qig/graph.hpp"
#include "qig/orientation.hpp"

namespace qig {

/// Step directions of an oriented path pattern (true = forward).
struct PathPattern {
    std::vector<bool> steps;

    static PathPattern directed(int hops);
    /// Forward at odd positions, backward at even positions (1-based).
    static PathPattern alternating(int hops);

    int hop_length() const { return static_cast<int>(steps.size()); }
};

struct OrientedPathWitness {
    std::vector<Vertex> vertices;

    int hop_length() const { return static_cast<int>(vertices.size()) - 1; }
};

enum class SearchStatus {
    found,
    exhausted,        // proof of absence
    budget_exceeded,  // inconclusive
};

struct PatternSearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<OrientedPathWitness> witness;
    std::uint64_t expansions = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Exhaustive backtracking search for the pattern: start vertices
/// ascending, neighbors ascending. "exhausted" is a proof of absence.
PatternSearchResult find_pattern(const Graph& g, const Orientation& o, const PathPattern& pattern,
                                 std::uint64_t budget = kDefaultSearchBudget);

/// True iff the witness realizes the pattern in (g, o) as a simple path.
bool witness_matches(const Graph& g, const Orientation& o, const PathPattern& pattern,
                     const OrientedPathWitness& witness);

/// Constructive directed path of hop-length >= chi(g) - 1: maximal acyclic
/// sub-orientation, longest-path leveling (checked to be a proper
/// coloring), then a path through the levels.
OrientedPathWitness gallai_roy_directed(const Graph& g, const Orientation& o);

enum class WitnessKind { directed, alternating };

struct WitnessSearchResult {
    std::optional<OrientedPathWitness> witness;
    bool budget_exceeded = false;
    std::uint64_t expansions = 0;
};

/// Dispatcher used by the refutation engine: for directed paths tries the
/// Gallai-Roy construction first, then exhaustive search; alternating
/// paths go straight to exhaustive search.
WitnessSearchResult find_for_witness(const Graph& g, const Orientation& o, int hop,
                                     WitnessKind kind,
                                     std::uint64_t budget = kDefaultSearchBudget);

}  // namespace qig
