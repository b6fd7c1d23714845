#pragma once

#include <optional>
#include <vector>

#include "qig/graph.hpp"
#include "qig/metrics.hpp"
#include "qig/vertex_map.hpp"
#include "qig/weights.hpp"

namespace qig {

struct PairViolation {
    Vertex x1 = -1;
    Vertex x2 = -1;
    double d_domain = 0;
    double d_codomain = 0;
    double excess = 0;
};

/// Outcome of checking phi against L^-1*d_X - C <= d_Y <= L*d_X + C.
///
/// The verdict is decided by the two distance inequalities over all vertex
/// pairs. The coarse-surjectivity radius of the image is computed and
/// reported alongside (and folded into tight_C_for_L) but does not flip
/// the verdict; see README for the rationale.
struct QIReport {
    double L = 1;
    double C = 0;
    bool verdict = false;
    std::optional<PairViolation> upper_violation;  // d_Y > L*d_X + C
    std::optional<PairViolation> lower_violation;  // d_Y < d_X/L - C
    double surjectivity_radius = 0;
    /// Smallest C making the pair inequalities hold at this L.
    double minimal_pair_C = 0;
    /// Smallest C covering pairs and coarse surjectivity at this L.
    double tight_C_for_L = 0;
};

/// Exhaustive check over all vertex pairs and all codomain vertices.
/// Null weightings mean hop distances. Requires connected graphs, L >= 1.
QIReport check_quasi_isometry(const Graph& domain, const EdgeWeighting* w_domain,
                              const Graph& codomain, const EdgeWeighting* w_codomain,
                              const VertexMap& phi, double L, double C);

/// Precomputed-matrix variant used by hot loops.
QIReport check_quasi_isometry(const DistanceMatrix& d_domain, const DistanceMatrix& d_codomain,
                              const VertexMap& phi, double L, double C);

/// Smallest C such that the check succeeds at (L, C); one pass.
double minimal_additive(const Graph& domain, const Graph& codomain, const VertexMap& phi, double L);
double minimal_additive(const Graph& domain, const EdgeWeighting* w_domain, const Graph& codomain,
                        const EdgeWeighting* w_codomain, const VertexMap& phi, double L);

/// Exhaustive enumeration of all vertex maps (backtracking with sound
/// pair pruning). Returns the lexicographically first passing map, or
/// nullopt as a proof of nonexistence at this scale. Guarded by
/// |V(codomain)|^|V(domain)| <= map_budget.
std::optional<VertexMap> exists_qi_map_bruteforce(const Graph& domain, const Graph& codomain,
                                                  const EdgeWeighting* w_codomain, double L,
                                                  double C, double map_budget = 1e8);

}  // namespace qig
