#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qig/constructions.hpp"
#include "qig/graph.hpp"
#include "qig/orientation.hpp"
#include "qig/weights.hpp"

namespace qig {

enum class RefutationCase {
    edge_too_heavy,     // an edge weight above C+1 forced a violation
    light_directed,     // directed path of light edges, pair (v0+, v4C+)
    heavy_alternating,  // alternating path of heavy edges, pair (u0+, u4C+)
    direct,             // exhaustive pair scan fallback
};

enum class ViolatedBound {
    domain_exceeds,     // d_G > d_Hw + C
    domain_falls_short, // d_G < d_Hw - C
};

std::string to_string(RefutationCase c);
std::string to_string(ViolatedBound b);

/// A vertex pair of G whose distances disprove a (1,C)-quasi-isometry,
/// with the proof case that produced it.
struct RefutationCertificate {
    RefutationCase kind = RefutationCase::direct;
    Vertex x = -1;  // in V(G)
    Vertex y = -1;
    double d_G = 0;
    double d_Hw = 0;
    ViolatedBound bound = ViolatedBound::domain_exceeds;
    std::optional<Path> supporting_path;  // in H
};

/// Spanning subgraphs of H holding the light (w <= threshold) and heavy
/// (w > threshold) edges, with their H edge indices.
struct LightHeavySplit {
    double threshold = 1.5;
    Graph light;
    Graph heavy;
    std::vector<int> light_edge_ids;
    std::vector<int> heavy_edge_ids;
};

LightHeavySplit light_heavy_split(const Graph& h, const EdgeWeighting& w, double threshold = 1.5);

/// Orientation of a spanning subgraph inherited from the host orientation.
Orientation restrict_orientation(const Graph& h, const Orientation& o, const Graph& sub,
                                 const std::vector<int>& sub_edge_ids);

/// Claim-1 style scan: a unit-weight path of hop-length at most 10C that
/// is not geodesic, if one exists. Girth at least 20C+1 guarantees none.
std::optional<Path> check_claim_geodesic_unit(const Graph& g, int C);

/// Claim-2 style check: if some edge weighs more than C+1, follow the
/// claim's argument to a certificate; nullopt when all weights are within
/// bound or the argument's steps fail at this scale.
std::optional<RefutationCertificate> check_claim_edge_weight(const Graph& h,
                                                             const EdgeWeighting& w,
                                                             const SplitResult& split, int C);

struct HopGeodesicScan {
    enum class Outcome { none, counterexample, budget_exceeded };
    Outcome outcome = Outcome::none;
    std::optional<Path> counterexample;
    std::uint64_t expansions = 0;
};

/// Claim-3 style scan: weighted paths of hop-length at most 4C, testing
/// geodesicity under w. Budget overruns are reported distinctly.
HopGeodesicScan check_claim_hop_geodesic(const Graph& h, const EdgeWeighting& w, int C,
                                         std::uint64_t budget = 10'000'000);

struct RefutationOutcome {
    std::optional<RefutationCertificate> certificate;
    std::uint64_t light_expansions = 0;
    std::uint64_t heavy_expansions = 0;
    bool light_budget_exceeded = false;
    bool heavy_budget_exceeded = false;
};

/// Runs the refutation pipeline: edge-weight claim, then the light/heavy
/// oriented-path cases (side with the larger greedy chromatic bound
/// first, validated certificates ranked edge_too_heavy > light_directed >
/// heavy_alternating > direct), then an exhaustive pair scan. Returns no
/// certificate only if phi really is a (1,C)-quasi-isometry under w.
RefutationOutcome refute_weighting(const SplitResult& split, const Graph& h, const Orientation& o,
                                   const EdgeWeighting& w, int C);

/// Recomputes both distances from scratch and confirms the recorded
/// values and inequality.
bool verify_certificate(const SplitResult& split, const Graph& h, const EdgeWeighting& w, int C,
                        const RefutationCertificate& cert);

}  // namespace qig
