#pragma once

#include <map>

#include "geoslice/engine.hpp"

namespace geoslice {

// Split of a path by its deepest sublattice visits: `level` is the largest n
// such that the path meets (p^n Z)^2, and u_tilde / v_tilde are the first and
// last vertices at that depth. A path through the origin has infinite level
// (passes_origin) with u_tilde = v_tilde = (0,0); the origin is placed in the
// middle segment. Segments share their boundary vertices:
//   s1 = path[0 .. first_idx], s2 = path[first_idx .. last_idx],
//   s3 = path[last_idx .. end].
struct Segmentation {
    bool passes_origin = false;
    int level = 0;  // meaningful only when !passes_origin
    Vertex u_tilde, v_tilde;
    std::size_t first_idx = 0;
    std::size_t last_idx = 0;
};

// Depth of a single vertex: largest n with v in (p^n Z)^2, or -1 for the
// origin (every depth).
int sublattice_level(Vertex v, i64 p);

Segmentation segment_geodesic(const std::vector<Vertex>& path, i64 p);

// Encoded level for per-level maps: finite levels as themselves, the
// origin-passing class as kLevelOrigin.
inline constexpr i64 kLevelOrigin = -1;

// Per-k partial slices of a pair: unions over all geodesics of the vertices
// at cost k lying on the respective segment, plus the per-level middle
// refinement (vertices on s2 of geodesics whose level is exactly n).
struct PartialProfile {
    Vertex u, v;
    i64 distance = 0;
    bool cap_exceeded = false;
    u64 geodesic_count = 0;
    // Index k in [0, distance]; vertex lists sorted.
    std::vector<std::vector<Vertex>> s1, s2, s3;
    std::map<i64, std::vector<std::vector<Vertex>>> s2n;
};

PartialProfile partial_profile(const ImplicitGraph& g, const DistanceField& fu,
                               Vertex v, i64 p, u64 cap);

// The three partial slices and the per-level refinement at one cost k.
struct PartialSlices {
    bool cap_exceeded = false;
    std::vector<Vertex> s1, s2, s3;
    std::map<i64, std::vector<Vertex>> s2n;
};

PartialSlices partial_slices(const ImplicitGraph& g, Vertex u, Vertex v, i64 k,
                             i64 p, u64 cap, const EngineLimits& limits = {});

}  // namespace geoslice
