#include "geoslice/segments.hpp"

#include <algorithm>

#include "geoslice/lattice.hpp"

namespace geoslice {

int sublattice_level(Vertex v, i64 p) {
    if (v.x == 0 && v.y == 0) return -1;
    if (v.x == 0) return valuation(v.y, p);
    if (v.y == 0) return valuation(v.x, p);
    return std::min(valuation(v.x, p), valuation(v.y, p));
}

Segmentation segment_geodesic(const std::vector<Vertex>& path, i64 p) {
    if (path.empty())
        throw std::invalid_argument("segment_geodesic: empty path");

    Segmentation s;
    int best = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        int lvl = sublattice_level(path[i], p);
        if (lvl < 0) {
            s.passes_origin = true;
            s.u_tilde = s.v_tilde = Vertex{0, 0};
            s.first_idx = i;
            s.last_idx = i;
            for (std::size_t j = path.size(); j-- > i + 1;)
                if (path[j].x == 0 && path[j].y == 0) {
                    s.last_idx = j;
                    break;
                }
            return s;
        }
        best = std::max(best, lvl);
    }
    s.level = best;
    for (std::size_t i = 0; i < path.size(); ++i)
        if (sublattice_level(path[i], p) >= best) {
            s.first_idx = i;
            s.u_tilde = path[i];
            break;
        }
    for (std::size_t i = path.size(); i-- > 0;)
        if (sublattice_level(path[i], p) >= best) {
            s.last_idx = i;
            s.v_tilde = path[i];
            break;
        }
    return s;
}

namespace {

void insert_sorted_unique(std::vector<Vertex>& set, Vertex v) {
    auto it = std::lower_bound(set.begin(), set.end(), v);
    if (it == set.end() || *it != v) set.insert(it, v);
}

}  // namespace

PartialProfile partial_profile(const ImplicitGraph& g, const DistanceField& fu,
                               Vertex v, i64 p, u64 cap) {
    GeodesicDag dag = build_dag(g, fu, v);
    PartialProfile out;
    out.u = fu.source;
    out.v = v;
    out.distance = dag.distance;

    CountResult count = count_geodesics(dag, cap);
    out.geodesic_count = count.count;
    if (count.cap_exceeded) {
        out.cap_exceeded = true;
        return out;
    }

    std::size_t buckets = static_cast<std::size_t>(dag.distance) + 1;
    out.s1.resize(buckets);
    out.s2.resize(buckets);
    out.s3.resize(buckets);

    for_each_geodesic(dag, cap, [&](const std::vector<Vertex>& path) {
        // Each prefix of a geodesic is a geodesic, so the cost of path[0..i]
        // is the field value at path[i].
        Segmentation seg = segment_geodesic(path, p);
        i64 level = seg.passes_origin ? kLevelOrigin : seg.level;
        auto& s2n = out.s2n[level];
        if (s2n.empty()) s2n.resize(buckets);

        for (std::size_t i = 0; i < path.size(); ++i) {
            std::size_t k = static_cast<std::size_t>(fu.at(path[i]));
            if (i <= seg.first_idx) insert_sorted_unique(out.s1[k], path[i]);
            if (i >= seg.first_idx && i <= seg.last_idx) {
                insert_sorted_unique(out.s2[k], path[i]);
                insert_sorted_unique(s2n[k], path[i]);
            }
            if (i >= seg.last_idx) insert_sorted_unique(out.s3[k], path[i]);
        }
    });
    return out;
}

PartialSlices partial_slices(const ImplicitGraph& g, Vertex u, Vertex v, i64 k,
                             i64 p, u64 cap, const EngineLimits& limits) {
    DistanceField fu = confined_field(g, u, v, limits);
    PartialProfile prof = partial_profile(g, fu, v, p, cap);
    PartialSlices out;
    if (prof.cap_exceeded) {
        out.cap_exceeded = true;
        return out;
    }
    if (k < 0 || k > prof.distance) return out;
    std::size_t kk = static_cast<std::size_t>(k);
    out.s1 = prof.s1[kk];
    out.s2 = prof.s2[kk];
    out.s3 = prof.s3[kk];
    for (const auto& [level, per_k] : prof.s2n)
        if (!per_k[kk].empty()) out.s2n.emplace(level, per_k[kk]);
    return out;
}

}  // namespace geoslice
