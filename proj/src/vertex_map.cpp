#include "qig/vertex_map.hpp"

#include <numeric>
#include <stdexcept>

namespace qig {

VertexMap::VertexMap(const Graph& domain, const Graph& codomain, std::vector<Vertex> image)
    : image_(std::move(image)),
      domain_fingerprint_(domain.fingerprint()),
      codomain_fingerprint_(codomain.fingerprint()) {
    if (static_cast<int>(image_.size()) != domain.vertex_count()) {
        throw std::invalid_argument("vertex map: image must cover every domain vertex");
    }
    for (Vertex v : image_) {
        if (!codomain.has_vertex(v)) {
            throw std::invalid_argument("vertex map: image vertex " + std::to_string(v) +
                                        " not in codomain");
        }
    }
}

VertexMap VertexMap::identity(const Graph& g) {
    std::vector<Vertex> image(static_cast<std::size_t>(g.vertex_count()));
    std::iota(image.begin(), image.end(), 0);
    return VertexMap(g, g, std::move(image));
}

void VertexMap::check_domains(const Graph& domain, const Graph& codomain, const char* op) const {
    if (domain.fingerprint() != domain_fingerprint_ ||
        codomain.fingerprint() != codomain_fingerprint_ ||
        static_cast<int>(image_.size()) != domain.vertex_count()) {
        throw std::invalid_argument(std::string(op) + ": map does not match these graphs");
    }
}

VertexMap VertexMap::compose(const Graph& domain, const Graph& middle, const Graph& codomain,
                             const VertexMap& then) const {
    check_domains(domain, middle, "compose");
    then.check_domains(middle, codomain, "compose");
    std::vector<Vertex> image(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
        image[i] = then(image_[i]);
    }
    return VertexMap(domain, codomain, std::move(image));
}

}  // namespace qig
