#include "qig/qi_verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qig {

namespace {

DistanceMatrix matrix_for(const Graph& g, const EdgeWeighting* w) {
    return w == nullptr ? DistanceMatrix::hops(g) : DistanceMatrix::weighted(g, *w);
}

}  // namespace

QIReport check_quasi_isometry(const DistanceMatrix& d_domain, const DistanceMatrix& d_codomain,
                              const VertexMap& phi, double L, double C) {
    if (L < 1.0) throw std::invalid_argument("check_quasi_isometry: L must be at least 1");
    if (C < 0.0) throw std::invalid_argument("check_quasi_isometry: C must be nonnegative");
    const int n = d_domain.size();
    if (phi.domain_size() != n) {
        throw std::invalid_argument("check_quasi_isometry: map does not cover the domain");
    }

    QIReport report;
    report.L = L;
    report.C = C;

    double worst_upper = 0;   // max d_Y - L*d_X
    double worst_lower = 0;   // max d_X/L - d_Y
    PairViolation upper_arg, lower_arg;
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            const double dx = d_domain.at(x, y);
            const double dy = d_codomain.at(phi(x), phi(y));
            if (dx == kInfiniteDistance || dy == kInfiniteDistance) {
                throw std::invalid_argument("check_quasi_isometry: graphs must be connected");
            }
            const double upper_excess = dy - (L * dx);
            if (upper_excess > worst_upper) {
                worst_upper = upper_excess;
                upper_arg = PairViolation{x, y, dx, dy, upper_excess};
            }
            const double lower_excess = dx / L - dy;
            if (lower_excess > worst_lower) {
                worst_lower = lower_excess;
                lower_arg = PairViolation{x, y, dx, dy, lower_excess};
            }
        }
    }
    report.minimal_pair_C = std::max(worst_upper, worst_lower);

    double radius = 0;
    const int m = d_codomain.size();
    std::vector<char> covered(static_cast<std::size_t>(m), 0);
    for (Vertex x = 0; x < n; ++x) covered[static_cast<std::size_t>(phi(x))] = 1;
    for (Vertex y = 0; y < m; ++y) {
        if (covered[static_cast<std::size_t>(y)]) continue;
        double best = kInfiniteDistance;
        for (Vertex img = 0; img < m; ++img) {
            if (covered[static_cast<std::size_t>(img)]) best = std::min(best, d_codomain.at(y, img));
        }
        radius = std::max(radius, best);
    }
    report.surjectivity_radius = radius;
    report.tight_C_for_L = std::max(report.minimal_pair_C, radius);

    const bool upper_ok = worst_upper <= C + kDistanceTolerance;
    const bool lower_ok = worst_lower <= C + kDistanceTolerance;
    if (!upper_ok) report.upper_violation = upper_arg;
    if (!lower_ok) report.lower_violation = lower_arg;
    report.verdict = upper_ok && lower_ok;
    return report;
}

QIReport check_quasi_isometry(const Graph& domain, const EdgeWeighting* w_domain,
                              const Graph& codomain, const EdgeWeighting* w_codomain,
                              const VertexMap& phi, double L, double C) {
    phi.check_domains(domain, codomain, "check_quasi_isometry");
    require_connected(domain, "check_quasi_isometry");
    require_connected(codomain, "check_quasi_isometry");
    if (w_domain != nullptr) w_domain->check_owner(domain, "check_quasi_isometry");
    if (w_codomain != nullptr) w_codomain->check_owner(codomain, "check_quasi_isometry");
    return check_quasi_isometry(matrix_for(domain, w_domain), matrix_for(codomain, w_codomain),
                                phi, L, C);
}

double minimal_additive(const Graph& domain, const EdgeWeighting* w_domain, const Graph& codomain,
                        const EdgeWeighting* w_codomain, const VertexMap& phi, double L) {
    const auto report = check_quasi_isometry(domain, w_domain, codomain, w_codomain, phi, L, 0.0);
    return report.minimal_pair_C;
}

double minimal_additive(const Graph& domain, const Graph& codomain, const VertexMap& phi,
                        double L) {
    return minimal_additive(domain, nullptr, codomain, nullptr, phi, L);
}

namespace {

struct MapSearch {
    const DistanceMatrix& dx;
    const DistanceMatrix& dy;
    double L, C;
    int n, m;
    std::vector<Vertex> image;

    bool pair_ok(double d_dom, double d_cod) const {
        return d_cod <= L * d_dom + C + kDistanceTolerance &&
               d_cod >= d_dom / L - C - kDistanceTolerance;
    }

    bool extend(int next) {
        if (next == n) return true;
        for (Vertex candidate = 0; candidate < m; ++candidate) {
            bool ok = true;
            for (int prev = 0; prev < next; ++prev) {
                if (!pair_ok(dx.at(prev, next), dy.at(image[static_cast<std::size_t>(prev)],
                                                      candidate))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(next)] = candidate;
            if (extend(next + 1)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<VertexMap> exists_qi_map_bruteforce(const Graph& domain, const Graph& codomain,
                                                  const EdgeWeighting* w_codomain, double L,
                                                  double C, double map_budget) {
    require_connected(domain, "exists_qi_map_bruteforce");
    require_connected(codomain, "exists_qi_map_bruteforce");
    const int n = domain.vertex_count();
    const int m = codomain.vertex_count();
    const double total = std::pow(static_cast<double>(m), static_cast<double>(n));
    if (!(total <= map_budget)) {
        throw std::runtime_error("exists_qi_map_bruteforce: search space too large (" +
                                 std::to_string(m) + "^" + std::to_string(n) + " maps)");
    }
    const auto dx = DistanceMatrix::hops(domain);
    const auto dy = matrix_for(codomain, w_codomain);

    MapSearch search{dx, dy, L, C, n, m, std::vector<Vertex>(static_cast<std::size_t>(n), 0)};
    if (!search.extend(0)) return std::nullopt;
    VertexMap phi(domain, codomain, search.image);
    // The prefix pruning only ever rejects definite pair violations, so the
    // first map reached must pass the full check.
    const auto report = check_quasi_isometry(dx, dy, phi, L, C);
    if (!report.verdict) {
        throw std::logic_error("exists_qi_map_bruteforce: candidate failed full verification");
    }
    return phi;
}

}  // namespace qig
