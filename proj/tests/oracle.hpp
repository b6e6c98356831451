#pragma once

// Test-only brute-force oracles, deliberately built on different algorithms
// than the engine: distances by repeated edge relaxation instead of a
// priority queue, geodesic sets by exhaustive depth-first path enumeration
// instead of DAG accumulation. Only usable on small windows.

#include <algorithm>
#include <map>
#include <vector>

#include "geoslice/graphs.hpp"

namespace oracle {

using geoslice::i64;
using geoslice::ImplicitGraph;
using geoslice::Vertex;
using geoslice::WeightedNeighbor;
using geoslice::Window;

// Bellman-Ford style relaxation to a fixed point.
inline std::map<Vertex, i64> relaxation_distances(const ImplicitGraph& g,
                                                  Vertex source,
                                                  const Window& w) {
    std::map<Vertex, i64> dist;
    dist[source] = 0;
    std::vector<WeightedNeighbor> nb;
    bool changed = true;
    while (changed) {
        changed = false;
        for (i64 y = w.y_min; y <= w.y_max; ++y)
            for (i64 x = w.x_min; x <= w.x_max; ++x) {
                Vertex v{x, y};
                auto it = dist.find(v);
                if (it == dist.end()) continue;
                g.neighbors(v, nb);
                for (const auto& n : nb) {
                    if (!w.contains(n.to)) continue;
                    i64 cand = it->second + n.cost;
                    auto [jt, inserted] = dist.emplace(n.to, cand);
                    if (!inserted && cand < jt->second) {
                        jt->second = cand;
                        changed = true;
                    } else if (inserted) {
                        changed = true;
                    }
                }
            }
    }
    return dist;
}

// All geodesics between u and v by exhaustive DFS with an admissible cost
// prune. Paths come out in lexicographic order of successive vertices.
inline std::vector<std::vector<Vertex>> all_geodesics(const ImplicitGraph& g,
                                                      Vertex u, Vertex v,
                                                      const Window& w) {
    auto dist = relaxation_distances(g, u, w);
    i64 d = dist.at(v);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path{u};

    // Lower bound on the remaining cost: every edge advances at most max_span
    // Z^2-steps at cost at least min_cost.
    auto remaining = [&](Vertex x) {
        i64 steps = geoslice::z2_distance(x, v);
        return (steps + g.max_span() - 1) / g.max_span() * g.min_cost();
    };

    std::vector<WeightedNeighbor> nb;
    auto dfs = [&](auto&& self, Vertex cur, i64 cost) -> void {
        if (cur == v && cost == d) {
            out.push_back(path);
            return;
        }
        g.neighbors(cur, nb);
        std::vector<WeightedNeighbor> ordered = nb;
        std::sort(ordered.begin(), ordered.end(),
                  [](const WeightedNeighbor& a, const WeightedNeighbor& b) {
                      return a.to < b.to;
                  });
        for (const auto& n : ordered) {
            if (!w.contains(n.to)) continue;
            i64 next = cost + n.cost;
            if (next + remaining(n.to) > d) continue;
            path.push_back(n.to);
            self(self, n.to, next);
            path.pop_back();
        }
    };
    dfs(dfs, u, 0);
    return out;
}

// Slice via the geodesic definition: vertices at cost k on some enumerated
// geodesic.
inline std::vector<Vertex> slice_by_enumeration(const ImplicitGraph& g, Vertex u,
                                                Vertex v, i64 k, const Window& w) {
    std::vector<Vertex> out;
    for (const auto& path : all_geodesics(g, u, v, w)) {
        i64 cost = 0;
        std::vector<WeightedNeighbor> nb;
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (i > 0) {
                g.neighbors(path[i - 1], nb);
                for (const auto& n : nb)
                    if (n.to == path[i]) {
                        cost += n.cost;
                        break;
                    }
            }
            if (cost == k) out.push_back(path[i]);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace oracle
