#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qig/graph.hpp"

namespace qig {

/// Absolute tolerance for comparing real-valued distances.
inline constexpr double kDistanceTolerance = 1e-9;

/// Fixed-point scale for exact decimal weights (six decimal places).
inline constexpr std::int64_t kMicroScale = 1'000'000;

/// Parses a plain positive decimal literal ("2", "1.5", "0.125") into
/// micro-units. Returns nullopt for more than six decimal places, huge
/// magnitudes, or anything that is not a plain decimal.
std::optional<std::int64_t> parse_decimal_micro(const std::string& text);

/// Canonical shortest decimal string for a micro-unit value ("1.5", "2").
std::string micro_to_decimal(std::int64_t micro);

/// Positive edge weights for a specific graph.
///
/// Weights given as decimal strings with at most six decimal places are
/// stored exactly as scaled integers; anything else falls back to floating
/// point. All-or-nothing: the weighting is exact only if every weight is.
class EdgeWeighting {
  public:
    static EdgeWeighting from_strings(const Graph& owner, const std::vector<std::string>& weights);
    static EdgeWeighting from_doubles(const Graph& owner, const std::vector<double>& weights);
    static EdgeWeighting uniform(const Graph& owner, const std::string& weight);

    int edge_count() const { return static_cast<int>(values_.size()); }
    bool exact() const { return exact_; }

    double value(int edge) const { return values_[static_cast<std::size_t>(edge)]; }
    /// Exact micro-units; only meaningful when exact().
    std::int64_t micro(int edge) const { return micro_[static_cast<std::size_t>(edge)]; }

    /// Canonical decimal string for serialization.
    std::string decimal(int edge) const;

    std::uint64_t owner_fingerprint() const { return owner_fingerprint_; }

    /// Throws std::invalid_argument unless this weighting was built for g.
    void check_owner(const Graph& g, const char* op) const;

  private:
    EdgeWeighting() = default;

    std::vector<double> values_;
    std::vector<std::int64_t> micro_;      // parallel to values_ when exact_
    std::vector<std::string> raw_;         // original strings (fallback mode)
    bool exact_ = true;
    std::uint64_t owner_fingerprint_ = 0;
};

}  // namespace qig
