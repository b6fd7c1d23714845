#pragma once

#include <cstdint>
#include <vector>

#include "qig/graph.hpp"

namespace qig {

/// Total map from the vertices of one graph to the vertices of another.
class VertexMap {
  public:
    VertexMap(const Graph& domain, const Graph& codomain, std::vector<Vertex> image);

    static VertexMap identity(const Graph& g);

    int domain_size() const { return static_cast<int>(image_.size()); }
    Vertex operator()(Vertex v) const { return image_[static_cast<std::size_t>(v)]; }
    const std::vector<Vertex>& image() const { return image_; }

    std::uint64_t domain_fingerprint() const { return domain_fingerprint_; }
    std::uint64_t codomain_fingerprint() const { return codomain_fingerprint_; }

    void check_domains(const Graph& domain, const Graph& codomain, const char* op) const;

    /// psi(phi(.)): this map followed by `then`.
    VertexMap compose(const Graph& domain, const Graph& middle, const Graph& codomain,
                      const VertexMap& then) const;

  private:
    std::vector<Vertex> image_;
    std::uint64_t domain_fingerprint_ = 0;
    std::uint64_t codomain_fingerprint_ = 0;
};

}  // namespace qig
