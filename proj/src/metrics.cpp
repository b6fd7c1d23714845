#include "qig/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>

namespace qig {

namespace {

constexpr std::int64_t kMicroInf = std::numeric_limits<std::int64_t>::max();

// Dijkstra over (length, hops); the hop component implements the
// fewer-hops tie-break deterministically.
template <typename Length>
void dijkstra(const Graph& g, Vertex source, Length inf,
              const std::vector<Length>& edge_len, std::vector<Length>& dist,
              std::vector<int>& hops) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    dist.assign(n, inf);
    hops.assign(n, kUnreachableHops);
    using Key = std::pair<Length, int>;
    using Item = std::pair<Key, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[static_cast<std::size_t>(source)] = Length{};
    hops[static_cast<std::size_t>(source)] = 0;
    pq.push({{Length{}, 0}, source});
    while (!pq.empty()) {
        const auto [key, v] = pq.top();
        pq.pop();
        if (key != Key{dist[static_cast<std::size_t>(v)], hops[static_cast<std::size_t>(v)]}) {
            continue;
        }
        const auto nbrs = g.neighbors(v);
        const auto eids = g.incident_edges(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const Vertex w = nbrs[i];
            const Length nd = key.first + edge_len[static_cast<std::size_t>(eids[i])];
            const int nh = key.second + 1;
            const Key cand{nd, nh};
            const Key cur{dist[static_cast<std::size_t>(w)], hops[static_cast<std::size_t>(w)]};
            if (cand < cur) {
                dist[static_cast<std::size_t>(w)] = nd;
                hops[static_cast<std::size_t>(w)] = nh;
                pq.push({cand, w});
            }
        }
    }
}

std::vector<std::int64_t> micro_lengths(const Graph& g, const EdgeWeighting& w) {
    std::vector<std::int64_t> len(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) len[static_cast<std::size_t>(e)] = w.micro(e);
    return len;
}

std::vector<double> double_lengths(const Graph& g, const EdgeWeighting& w) {
    std::vector<double> len(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) len[static_cast<std::size_t>(e)] = w.value(e);
    return len;
}

}  // namespace

std::vector<int> hop_distances(const Graph& g, Vertex source) {
    g.check_vertex(source, "hop_distances");
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachableHops);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        for (Vertex u : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(u)] == kUnreachableHops) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(u);
            }
        }
    }
    return dist;
}

std::vector<std::int64_t> weighted_distances_micro(const Graph& g, const EdgeWeighting& w,
                                                   Vertex source) {
    w.check_owner(g, "weighted_distances");
    g.check_vertex(source, "weighted_distances");
    if (!w.exact()) {
        throw std::invalid_argument("weighted_distances_micro: weighting is not exact");
    }
    std::vector<std::int64_t> dist;
    std::vector<int> hops;
    dijkstra<std::int64_t>(g, source, kMicroInf, micro_lengths(g, w), dist, hops);
    return dist;
}

std::vector<double> weighted_distances(const Graph& g, const EdgeWeighting& w, Vertex source) {
    w.check_owner(g, "weighted_distances");
    g.check_vertex(source, "weighted_distances");
    std::vector<double> out(static_cast<std::size_t>(g.vertex_count()));
    if (w.exact()) {
        const auto micro = weighted_distances_micro(g, w, source);
        for (std::size_t i = 0; i < micro.size(); ++i) {
            out[i] = micro[i] == kMicroInf
                         ? kInfiniteDistance
                         : static_cast<double>(micro[i]) / static_cast<double>(kMicroScale);
        }
        return out;
    }
    std::vector<double> dist;
    std::vector<int> hops;
    dijkstra<double>(g, source, kInfiniteDistance, double_lengths(g, w), dist, hops);
    return dist;
}

double path_length(const Graph& g, const EdgeWeighting& w, const Path& p) {
    w.check_owner(g, "path_length");
    check_path(g, p);
    if (w.exact()) {
        std::int64_t total = 0;
        for (std::size_t i = 1; i < p.vertices.size(); ++i) {
            total += w.micro(g.edge_index(p.vertices[i - 1], p.vertices[i]));
        }
        return static_cast<double>(total) / static_cast<double>(kMicroScale);
    }
    double total = 0;
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        total += w.value(g.edge_index(p.vertices[i - 1], p.vertices[i]));
    }
    return total;
}

int hop_length(const Path& p) {
    if (p.vertices.empty()) {
        throw std::invalid_argument("hop_length: empty vertex sequence");
    }
    return p.hop_length();
}

bool is_geodesic(const Graph& g, const EdgeWeighting* w, const Path& p) {
    check_path(g, p);
    if (p.vertices.size() == 1) return true;
    const Vertex s = p.vertices.front();
    const Vertex t = p.vertices.back();
    if (w == nullptr) {
        const auto dist = hop_distances(g, s);
        return dist[static_cast<std::size_t>(t)] == p.hop_length();
    }
    w->check_owner(g, "is_geodesic");
    if (w->exact()) {
        std::int64_t total = 0;
        for (std::size_t i = 1; i < p.vertices.size(); ++i) {
            total += w->micro(g.edge_index(p.vertices[i - 1], p.vertices[i]));
        }
        const auto dist = weighted_distances_micro(g, *w, s);
        return total == dist[static_cast<std::size_t>(t)];
    }
    double total = 0;
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        total += w->value(g.edge_index(p.vertices[i - 1], p.vertices[i]));
    }
    const auto dist = weighted_distances(g, *w, s);
    return total <= dist[static_cast<std::size_t>(t)] + kDistanceTolerance;
}

std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g) {
    const int n = g.vertex_count();
    std::optional<std::vector<Vertex>> best;
    int best_len = std::numeric_limits<int>::max();
    std::vector<int> depth(static_cast<std::size_t>(n));
    std::vector<Vertex> parent(static_cast<std::size_t>(n));
    std::vector<int> parent_edge(static_cast<std::size_t>(n));
    for (Vertex root = 0; root < n; ++root) {
        std::fill(depth.begin(), depth.end(), -1);
        std::queue<Vertex> q;
        depth[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        parent_edge[static_cast<std::size_t>(root)] = -1;
        q.push(root);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            // No cycle through vertices deeper than half the current best
            // can improve on it.
            if (2 * depth[static_cast<std::size_t>(v)] >= best_len) break;
            const auto nbrs = g.neighbors(v);
            const auto eids = g.incident_edges(v);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                const Vertex u = nbrs[i];
                const int eid = eids[i];
                if (depth[static_cast<std::size_t>(u)] == -1) {
                    depth[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(u)] = v;
                    parent_edge[static_cast<std::size_t>(u)] = eid;
                    q.push(u);
                    continue;
                }
                if (eid == parent_edge[static_cast<std::size_t>(v)]) continue;
                // Non-tree edge: walk both endpoints up to their lowest
                // common ancestor; the two tree paths plus (v,u) form a cycle.
                std::vector<Vertex> va{v}, ua{u};
                Vertex a = v;
                Vertex b = u;
                while (a != b) {
                    if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
                        a = parent[static_cast<std::size_t>(a)];
                        va.push_back(a);
                    } else {
                        b = parent[static_cast<std::size_t>(b)];
                        ua.push_back(b);
                    }
                }
                const int len = static_cast<int>(va.size() + ua.size()) - 1;
                if (len >= 3 && len < best_len) {
                    std::vector<Vertex> cyc(va.begin(), va.end());
                    for (auto it = ua.rbegin() + 1; it != ua.rend(); ++it) cyc.push_back(*it);
                    best_len = len;
                    best = std::move(cyc);
                }
            }
        }
    }
    return best;
}

std::optional<int> girth(const Graph& g) {
    const auto cyc = shortest_cycle(g);
    if (!cyc) return std::nullopt;
    return static_cast<int>(cyc->size());
}

namespace {

template <typename Length>
Path lexicographic_walk(const Graph& g, Vertex s, Vertex t, const std::vector<Length>& edge_len,
                        const std::vector<Length>& dist_s, const std::vector<int>& hops_s,
                        const std::vector<Length>& dist_t, const std::vector<int>& hops_t) {
    const Length total = dist_s[static_cast<std::size_t>(t)];
    const int total_hops = hops_s[static_cast<std::size_t>(t)];
    Path path;
    path.vertices.push_back(s);
    Vertex cur = s;
    Length len_so_far{};
    int hops_so_far = 0;
    while (cur != t) {
        const auto nbrs = g.neighbors(cur);
        const auto eids = g.incident_edges(cur);
        bool advanced = false;
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const Vertex nxt = nbrs[i];
            if (hops_t[static_cast<std::size_t>(nxt)] == kUnreachableHops) continue;
            const Length cand_len =
                len_so_far + edge_len[static_cast<std::size_t>(eids[i])] +
                dist_t[static_cast<std::size_t>(nxt)];
            const int cand_hops = hops_so_far + 1 + hops_t[static_cast<std::size_t>(nxt)];
            if (cand_len == total && cand_hops == total_hops) {
                len_so_far = len_so_far + edge_len[static_cast<std::size_t>(eids[i])];
                hops_so_far += 1;
                cur = nxt;
                path.vertices.push_back(nxt);
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            throw std::logic_error("shortest_path: internal walk failed");
        }
    }
    return path;
}

}  // namespace

Path shortest_path(const Graph& g, const EdgeWeighting* w, Vertex s, Vertex t) {
    g.check_vertex(s, "shortest_path");
    g.check_vertex(t, "shortest_path");
    if (w != nullptr) w->check_owner(g, "shortest_path");
    if (s == t) return Path{{s}};

    const bool micro_mode = (w == nullptr) || w->exact();
    if (micro_mode) {
        std::vector<std::int64_t> len;
        if (w == nullptr) {
            len.assign(static_cast<std::size_t>(g.edge_count()), kMicroScale);
        } else {
            len = micro_lengths(g, *w);
        }
        std::vector<std::int64_t> ds, dt;
        std::vector<int> hs, ht;
        dijkstra<std::int64_t>(g, s, kMicroInf, len, ds, hs);
        if (ds[static_cast<std::size_t>(t)] == kMicroInf) {
            throw std::invalid_argument("shortest_path: target unreachable");
        }
        dijkstra<std::int64_t>(g, t, kMicroInf, len, dt, ht);
        return lexicographic_walk<std::int64_t>(g, s, t, len, ds, hs, dt, ht);
    }
    const auto len = double_lengths(g, *w);
    std::vector<double> ds, dt;
    std::vector<int> hs, ht;
    dijkstra<double>(g, s, kInfiniteDistance, len, ds, hs);
    if (ds[static_cast<std::size_t>(t)] == kInfiniteDistance) {
        throw std::invalid_argument("shortest_path: target unreachable");
    }
    dijkstra<double>(g, t, kInfiniteDistance, len, dt, ht);
    return lexicographic_walk<double>(g, s, t, len, ds, hs, dt, ht);
}

DistanceMatrix DistanceMatrix::hops(const Graph& g) {
    DistanceMatrix m;
    m.n_ = g.vertex_count();
    m.data_.resize(static_cast<std::size_t>(m.n_) * static_cast<std::size_t>(m.n_));
    for (Vertex v = 0; v < m.n_; ++v) {
        const auto row = hop_distances(g, v);
        for (Vertex u = 0; u < m.n_; ++u) {
            m.data_[static_cast<std::size_t>(v) * static_cast<std::size_t>(m.n_) +
                    static_cast<std::size_t>(u)] =
                row[static_cast<std::size_t>(u)] == kUnreachableHops
                    ? kInfiniteDistance
                    : static_cast<double>(row[static_cast<std::size_t>(u)]);
        }
    }
    return m;
}

DistanceMatrix DistanceMatrix::weighted(const Graph& g, const EdgeWeighting& w) {
    DistanceMatrix m;
    m.n_ = g.vertex_count();
    m.data_.resize(static_cast<std::size_t>(m.n_) * static_cast<std::size_t>(m.n_));
    for (Vertex v = 0; v < m.n_; ++v) {
        const auto row = weighted_distances(g, w, v);
        std::copy(row.begin(), row.end(),
                  m.data_.begin() + static_cast<std::size_t>(v) * static_cast<std::size_t>(m.n_));
    }
    return m;
}

std::optional<double> DistanceMatrix::diameter() const {
    double best = 0;
    for (double d : data_) {
        if (d == kInfiniteDistance) return std::nullopt;
        best = std::max(best, d);
    }
    return best;
}

}  // namespace qig
