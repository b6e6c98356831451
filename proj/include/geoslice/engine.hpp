#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "geoslice/graphs.hpp"

namespace geoslice {

struct EngineLimits {
    u64 max_cells = 160'000'000;  // per distance field
};

// Exact costs from one source to every vertex of a finite window, within the
// window's restriction of the graph. `confined` records that the window was
// certified large enough that every geodesic between the source and the
// targets it was built for stays strictly inside, making the windowed costs
// equal to the costs in the infinite graph.
struct DistanceField {
    static constexpr std::int32_t kUnreached =
        std::numeric_limits<std::int32_t>::max();

    Vertex source;
    Window window;
    std::vector<std::int32_t> cost;
    bool confined = false;

    std::size_t index(Vertex v) const {
        return static_cast<std::size_t>(v.y - window.y_min) *
                   static_cast<std::size_t>(window.width()) +
               static_cast<std::size_t>(v.x - window.x_min);
    }
    bool reached(Vertex v) const {
        return window.contains(v) && cost[index(v)] != kUnreached;
    }
    // Cost to v, or kUnreached when outside the window or not reached.
    i64 at(Vertex v) const {
        if (!window.contains(v)) return kUnreached;
        return cost[index(v)];
    }
};

// Window that provably confines every geodesic between u and v: the bounding
// box of the pair inflated by ceil((max_span * detour / min_cost) * d_Z2) plus
// one extra edge span.
Window window_for(const ImplicitGraph& g, Vertex u, Vertex v,
                  const EngineLimits& limits = {});

// Single-source shortest paths over the windowed graph. Exact within the
// window, deterministic; does not by itself certify confinement.
DistanceField dist_map(const ImplicitGraph& g, Vertex source,
                       const Window& window, const EngineLimits& limits = {});

// Field from `source` whose costs are certified exact (in the infinite graph)
// at every target and on every geodesic from the source to any target. Uses a
// probe pass to size the window from the actual distances instead of the
// worst-case formula.
DistanceField confined_field(const ImplicitGraph& g, Vertex source,
                             std::span<const Vertex> targets,
                             const EngineLimits& limits = {});

inline DistanceField confined_field(const ImplicitGraph& g, Vertex source,
                                    Vertex target,
                                    const EngineLimits& limits = {}) {
    return confined_field(g, source, std::span<const Vertex>(&target, 1), limits);
}

// The shortest-path DAG of a pair: its vertices are exactly the vertices
// lying on some geodesic from `from` to `to`, its edges the tight edges
// (cost_from(x) + w(x,y) = cost_from(y)). Nodes are sorted by (cost, x, y);
// successor lists by (x, y).
struct GeodesicDag {
    Vertex from, to;
    i64 distance = 0;
    std::vector<Vertex> nodes;
    std::vector<i64> node_cost;
    std::vector<std::vector<std::int32_t>> succ;

    std::size_t size() const { return nodes.size(); }
};

// Pre: from_field.confined held for `to`, and to reached.
GeodesicDag build_dag(const ImplicitGraph& g, const DistanceField& from_field,
                      Vertex to);

// Vertices at cost k from u on some geodesic between u and v, i.e. vertices w
// of the window with cost_u(w) = k and cost_u(w) + cost_v(w) = d(u, v).
// Row-major order. Empty when k < 0 or k > d.
std::vector<Vertex> slice(const ImplicitGraph& g, Vertex u, Vertex v, i64 k,
                          const Window& window, const EngineLimits& limits = {});

std::vector<Vertex> slice_from_fields(const DistanceField& fu,
                                      const DistanceField& fv, i64 k);

// Per-k slice sizes of a pair, computed from one confined field via the DAG.
struct SliceProfile {
    Vertex u, v;
    i64 distance = 0;
    std::vector<i64> sizes;  // index k in [0, distance]
    i64 max_size = 0;
};

SliceProfile slice_profile(const ImplicitGraph& g, Vertex u, Vertex v,
                           const EngineLimits& limits = {});
SliceProfile profile_from_dag(const GeodesicDag& dag);

struct CountResult {
    u64 count = 0;  // saturating
    bool cap_exceeded = false;
};

// Number of distinct geodesics from u to v via accumulation over the DAG,
// saturating at cap.
CountResult count_geodesics(const GeodesicDag& dag, u64 cap);
CountResult count_geodesics(const ImplicitGraph& g, Vertex u, Vertex v, u64 cap,
                            const EngineLimits& limits = {});

// Calls fn once per geodesic (as a vertex sequence from u to v) in
// lexicographic order of successive vertices. Stops after `cap` paths and
// reports whether it ran to completion.
bool for_each_geodesic(const GeodesicDag& dag, u64 cap,
                       const std::function<void(const std::vector<Vertex>&)>& fn);

struct EnumerationResult {
    bool cap_exceeded = false;
    std::vector<std::vector<Vertex>> paths;
};

// All geodesics, materialized; cap_exceeded (with no paths) when the count
// exceeds cap.
EnumerationResult enumerate_geodesics(const ImplicitGraph& g, Vertex u, Vertex v,
                                      u64 cap, const EngineLimits& limits = {});

// Cost of a path by summing the graph's edge costs; throws if a step is not
// an edge.
i64 path_cost(const ImplicitGraph& g, const std::vector<Vertex>& path);

}  // namespace geoslice
