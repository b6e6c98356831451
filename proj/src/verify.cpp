#include "geoslice/verify.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "geoslice/lattice.hpp"
#include "geoslice/pool.hpp"

namespace geoslice {

// ===========================================================================
// Definitional classifier oracle
// ===========================================================================

namespace {

// Horizontal pattern at level n for left endpoint (c, d):
//   c = p^n * x + (p^n - 1)/2,  d = p^n * y,  with y a unit mod p. The unit
// condition on the line coordinate pins the level; the offset x is free.
bool horizontal_pattern_matches(i64 c, i64 d, i64 p, int n) {
    i64 pn = checked_pow(p, n);
    if (floor_mod(d, pn) != 0) return false;
    i64 y = floor_div(d, pn);
    if (y == 0 || floor_mod(y, p) == 0) return false;
    return floor_mod(checked_sub(c, (pn - 1) / 2), pn) == 0;
}

std::vector<int> pattern_levels(i64 c, i64 d, i64 p) {
    std::vector<int> out;
    if (d == 0) return out;  // p^n * y with y coprime to p forces |d| >= p^n
    i64 mag = d < 0 ? -d : d;
    i64 pn = 1;
    for (int n = 0; pn <= mag; ++n, pn = checked_mul(pn, p))
        if (horizontal_pattern_matches(c, d, p, n)) out.push_back(n);
    return out;
}

}  // namespace

std::vector<int> matching_pattern_levels(const Edge& e, i64 p) {
    if (!e.is_unit())
        throw std::domain_error("matching_pattern_levels: not a unit edge");
    if (e.is_horizontal()) return pattern_levels(e.u.x, e.u.y, p);
    return pattern_levels(e.u.y, e.u.x, p);
}

// ===========================================================================
// Shared harness pieces
// ===========================================================================

namespace {

u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Tiny deterministic generator; one instance per job index keeps reports
// independent of the thread count.
struct JobRng {
    u64 state;
    JobRng(u64 seed, u64 job) : state(splitmix64(seed ^ splitmix64(job + 1))) {}
    u64 next() { return state = splitmix64(state); }
    i64 below(i64 n) { return static_cast<i64>(next() % static_cast<u64>(n)); }
    i64 range(i64 lo, i64 hi) { return lo + below(hi - lo + 1); }
    bool coin() { return (next() & 1) != 0; }
};

Vertex sample_vertex(JobRng& rng, i64 lo, i64 hi) {
    return Vertex{rng.range(lo, hi), rng.range(lo, hi)};
}

// Pair at Z^2 separation in [lo, hi], anchored within +-anchor of the origin.
std::pair<Vertex, Vertex> sample_pair_at_separation(JobRng& rng, i64 anchor,
                                                    i64 lo, i64 hi) {
    Vertex u = sample_vertex(rng, -anchor, anchor);
    i64 s = rng.range(lo, hi);
    i64 dx = rng.below(s + 1);
    i64 dy = s - dx;
    if (rng.coin()) dx = -dx;
    if (rng.coin()) dy = -dy;
    return {u, Vertex{u.x + dx, u.y + dy}};
}

// Merge job-local results in job order.
CheckResult merge_results(std::string name, std::vector<CheckResult>& parts) {
    CheckResult out;
    out.name = std::move(name);
    for (auto& p : parts) {
        out.instances += p.instances;
        out.skipped_cap += p.skipped_cap;
        out.failure_count += p.failure_count;
        for (auto& w : p.failures)
            if (out.failures.size() < CheckResult::kMaxStoredWitnesses)
                out.failures.push_back(std::move(w));
        for (auto& [k, v] : p.empirical) {
            auto it = out.empirical.find(k);
            if (it == out.empirical.end())
                out.empirical[k] = v;
            else
                it->second = std::max(it->second, v);
        }
        for (auto& n : p.notes) out.notes.push_back(std::move(n));
    }
    return out;
}

void absorb(CheckResult& out, CheckResult part) {
    out.instances += part.instances;
    out.skipped_cap += part.skipped_cap;
    out.failure_count += part.failure_count;
    for (auto& w : part.failures)
        if (out.failures.size() < CheckResult::kMaxStoredWitnesses)
            out.failures.push_back(std::move(w));
    for (auto& [k, v] : part.empirical) {
        auto it = out.empirical.find(k);
        if (it == out.empirical.end())
            out.empirical[k] = v;
        else
            it->second = std::max(it->second, v);
    }
    for (auto& n : part.notes) out.notes.push_back(std::move(n));
}

// Visits every vertex lying on some geodesic from the field's source to v,
// by walking tight edges backward from v. The field must carry a confinement
// certificate covering v.
template <class Fn>
void walk_geodesic_vertices(const ImplicitGraph& g, const DistanceField& fu,
                            Vertex v, Fn&& per_vertex) {
    if (!fu.confined)
        throw std::logic_error("walk: field lacks a confinement certificate");
    if (!fu.reached(v)) throw std::logic_error("walk: target not reached");
    std::unordered_set<Vertex, VertexHash> seen;
    std::vector<Vertex> stack{v};
    seen.insert(v);
    std::vector<WeightedNeighbor> nb;
    while (!stack.empty()) {
        Vertex y = stack.back();
        stack.pop_back();
        per_vertex(y, fu.at(y));
        i64 cy = fu.at(y);
        g.neighbors(y, nb);
        for (const auto& n : nb) {
            if (!fu.reached(n.to)) continue;
            if (fu.at(n.to) + n.cost != cy) continue;
            if (seen.insert(n.to).second) stack.push_back(n.to);
        }
    }
}

struct PairSliceStats {
    i64 distance = 0;
    i64 max_size = 0;
    i64 argmax_k = 0;
    u64 dag_vertices = 0;
};

PairSliceStats pair_slice_stats(const ImplicitGraph& g, const DistanceField& fu,
                                Vertex v) {
    PairSliceStats st;
    st.distance = fu.at(v);
    std::vector<i64> histogram(static_cast<std::size_t>(st.distance) + 1, 0);
    walk_geodesic_vertices(g, fu, v, [&](Vertex, i64 cost) {
        ++histogram[static_cast<std::size_t>(cost)];
        ++st.dag_vertices;
    });
    for (std::size_t k = 0; k < histogram.size(); ++k)
        if (histogram[k] > st.max_size) {
            st.max_size = histogram[k];
            st.argmax_k = static_cast<i64>(k);
        }
    return st;
}

std::vector<Vertex> window_vertices(const Window& w) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(w.cells()));
    for (i64 y = w.y_min; y <= w.y_max; ++y)
        for (i64 x = w.x_min; x <= w.x_max; ++x) out.push_back(Vertex{x, y});
    return out;
}

bool contained_in_open_horizontal_strip(const std::vector<Vertex>& path, i64 m) {
    i64 row = floor_div(path.front().y, m);
    for (const Vertex& v : path)
        if (floor_mod(v.y, m) == 0 || floor_div(v.y, m) != row) return false;
    return true;
}

bool contained_in_open_vertical_strip(const std::vector<Vertex>& path, i64 m) {
    i64 col = floor_div(path.front().x, m);
    for (const Vertex& v : path)
        if (floor_mod(v.x, m) == 0 || floor_div(v.x, m) != col) return false;
    return true;
}

// A concatenation of straight runs of length m whose junctions lie in (mZ)^2.
bool is_straight_concatenation(const std::vector<Vertex>& path, i64 m) {
    if (path.empty()) return false;
    if ((static_cast<i64>(path.size()) - 1) % m != 0) return false;
    for (std::size_t seg = 0; seg + 1 < path.size();
         seg += static_cast<std::size_t>(m)) {
        if (!in_sublattice(path[seg], m)) return false;
        i64 dx = path[seg + 1].x - path[seg].x;
        i64 dy = path[seg + 1].y - path[seg].y;
        for (std::size_t i = 1; i <= static_cast<std::size_t>(m); ++i) {
            if (path[seg + i].x - path[seg + i - 1].x != dx) return false;
            if (path[seg + i].y - path[seg + i - 1].y != dy) return false;
        }
    }
    return in_sublattice(path.back(), m);
}

std::string vertex_str(Vertex v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

}  // namespace

// ===========================================================================
// Excursion analysis (shared with the checker self-test)
// ===========================================================================

namespace {

enum class Side { Bottom, Top, Left, Right, None };

Side side_of(Vertex w, i64 bx, i64 by, i64 p) {
    i64 x0 = bx * p, y0 = by * p;
    bool x_interior = w.x > x0 && w.x < x0 + p;
    bool y_interior = w.y > y0 && w.y < y0 + p;
    if (w.y == y0 && x_interior) return Side::Bottom;
    if (w.y == y0 + p && x_interior) return Side::Top;
    if (w.x == x0 && y_interior) return Side::Left;
    if (w.x == x0 + p && y_interior) return Side::Right;
    return Side::None;  // corner or off the boundary entirely
}

bool opposite(Side a, Side b) {
    return (a == Side::Bottom && b == Side::Top) ||
           (a == Side::Top && b == Side::Bottom) ||
           (a == Side::Left && b == Side::Right) ||
           (a == Side::Right && b == Side::Left);
}

}  // namespace

std::vector<std::string> excursion_violations(const std::vector<Vertex>& path,
                                              i64 p) {
    std::vector<std::string> out;
    std::map<std::pair<i64, i64>, int> internal_count;
    std::size_t i = 0;
    while (i < path.size()) {
        if (!in_open_block(path[i], p)) {
            ++i;
            continue;
        }
        i64 bx = floor_div(path[i].x, p), by = floor_div(path[i].y, p);
        std::size_t j = i;
        while (j + 1 < path.size() && in_open_block(path[j + 1], p) &&
               floor_div(path[j + 1].x, p) == bx &&
               floor_div(path[j + 1].y, p) == by)
            ++j;
        bool internal = i > 0 && j + 1 < path.size();
        if (internal) {
            Side entry = side_of(path[i - 1], bx, by, p);
            Side exit = side_of(path[j + 1], bx, by, p);
            if (entry == Side::None || exit == Side::None)
                out.push_back("entry/exit of excursion at " + vertex_str(path[i]) +
                              " not on an open side");
            else if (!opposite(entry, exit))
                out.push_back("excursion through " + vertex_str(path[i]) +
                              " enters and exits on non-opposite sides");
            if (++internal_count[{bx, by}] > 1)
                out.push_back("second internal excursion into block (" +
                              std::to_string(bx) + "," + std::to_string(by) + ")");
        }
        i = j + 1;
    }
    return out;
}

// ===========================================================================
// check: classifier equivalence (plus slow-level uniqueness and reflection)
// ===========================================================================

CheckResult check_classifier_equivalence(const CheckConfig& cfg) {
    const i64 E = cfg.extent;
    const i64 p = cfg.params.p;
    std::size_t rows = static_cast<std::size_t>(2 * E + 1);
    std::vector<CheckResult> parts(rows);

    parallel_for(rows, [&](std::size_t job) {
        i64 y = -E + static_cast<i64>(job);
        CheckResult& r = parts[job];
        for (i64 x = -E; x <= E; ++x) {
            Edge edges[2] = {Edge({x, y}, {x + 1, y}), Edge({x, y}, {x, y + 1})};
            for (const Edge& e : edges) {
                if (e.v.x > E || e.v.y > E) continue;
                ++r.instances;
                EdgeClass closed = classify_edge(e, p);
                auto levels = matching_pattern_levels(e, p);
                EdgeClass oracle =
                    levels.empty() ? EdgeClass::Fast : EdgeClass::Slow;
                if (closed != oracle)
                    r.fail({"closed form disagrees with pattern enumeration",
                            e.u, e.v, std::nullopt, {}});
                if (levels.size() > 1)
                    r.fail({"slow pattern matched at more than one level", e.u,
                            e.v, std::nullopt, {}});
                // Reflection across x = y maps the horizontal pattern onto
                // the vertical one.
                Edge reflected(Vertex{e.u.y, e.u.x}, Vertex{e.v.y, e.v.x});
                if (classify_edge(reflected, p) != closed)
                    r.fail({"reflection symmetry broken", e.u, e.v, std::nullopt, {}});
            }
        }
    }, cfg.threads);

    return merge_results("classifier_equivalence", parts);
}

// ===========================================================================
// check: scaled-lattice inheritance (distance identity, count identity,
// dilation maps geodesics to geodesics)
// ===========================================================================

CheckResult check_fractal_inheritance(const CheckConfig& cfg, int n) {
    WeightParams up_params = scaled_params(cfg.params, n);
    GraphPtr up = make_fractal_lattice(up_params);
    GraphPtr down = make_fractal_lattice(cfg.params);
    const i64 scale = checked_pow(cfg.params.p, n);

    std::vector<CheckResult> parts(cfg.samples);
    parallel_for(cfg.samples, [&](std::size_t job) {
        CheckResult& r = parts[job];
        JobRng rng(cfg.seed, job);
        Vertex u = sample_vertex(rng, -cfg.coord_bound, cfg.coord_bound);
        Vertex v = sample_vertex(rng, -cfg.coord_bound, cfg.coord_bound);
        Vertex su{u.x * scale, u.y * scale}, sv{v.x * scale, v.y * scale};
        ++r.instances;

        DistanceField fu_up = confined_field(*up, u, v, cfg.limits);
        DistanceField fu_down = confined_field(*down, su, sv, cfg.limits);
        i64 d_up = fu_up.at(v), d_down = fu_down.at(sv);
        if (d_up != d_down) {
            r.fail({"scaled distance " + std::to_string(d_up) +
                        " != base distance " + std::to_string(d_down),
                    u, v, std::nullopt, {}});
            return;
        }

        GeodesicDag dag_up = build_dag(*up, fu_up, v);
        GeodesicDag dag_down = build_dag(*down, fu_down, sv);
        CountResult c_up = count_geodesics(dag_up, cfg.enumeration_cap);
        CountResult c_down = count_geodesics(dag_down, cfg.enumeration_cap);
        if (!c_up.cap_exceeded || !c_down.cap_exceeded) {
            if (c_up.cap_exceeded != c_down.cap_exceeded ||
                (!c_up.cap_exceeded && c_up.count != c_down.count)) {
                r.fail({"geodesic count mismatch: " + std::to_string(c_up.count) +
                            " vs " + std::to_string(c_down.count),
                        u, v, std::nullopt, {}});
                return;
            }
            if (!c_up.cap_exceeded)
                r.empirical["max_count"] = std::max(
                    r.empirical["max_count"], static_cast<double>(c_up.count));
        }
        if (c_up.cap_exceeded) {
            ++r.skipped_cap;
            return;
        }
        for_each_geodesic(dag_up, cfg.enumeration_cap,
                          [&](const std::vector<Vertex>& path) {
                              auto dilated = dilate_path(path, n, cfg.params.p);
                              if (path_cost(*down, dilated) != d_down)
                                  r.fail({"dilated geodesic is not a geodesic",
                                          u, v, std::nullopt, path});
                          });
    }, cfg.threads);

    return merge_results("fractal_inheritance_n" + std::to_string(n), parts);
}

// ===========================================================================
// check: geodesics between unaligned distinguished pairs stay distinguished;
// geodesics between (pZ)^2 pairs decompose into straight runs of length p
// ===========================================================================

CheckResult check_distinguished_geodesics(const CheckConfig& cfg) {
    const i64 p = cfg.params.p;
    GraphPtr g = make_fractal_lattice(cfg.params);

    std::vector<Vertex> marked;
    for (Vertex v : window_vertices(Window{0, cfg.extent, 0, cfg.extent}))
        if (distinguished_flags(v, p).any()) marked.push_back(v);

    std::vector<CheckResult> parts(marked.size());
    parallel_for(marked.size(), [&](std::size_t job) {
        CheckResult& r = parts[job];
        Vertex u = marked[job];
        std::vector<Vertex> targets;
        for (std::size_t j = job + 1; j < marked.size(); ++j)
            if (alignment(u, marked[j], p) == Alignment::Unaligned)
                targets.push_back(marked[j]);
        if (targets.empty()) return;

        DistanceField fu = confined_field(*g, u, targets, cfg.limits);
        for (Vertex v : targets) {
            ++r.instances;
            walk_geodesic_vertices(*g, fu, v, [&](Vertex w, i64) {
                if (!distinguished_flags(w, p).any())
                    r.fail({"geodesic vertex is not distinguished", u, v, w, {}});
            });

            if (in_sublattice(u, p) && in_sublattice(v, p)) {
                GeodesicDag dag = build_dag(*g, fu, v);
                if (count_geodesics(dag, cfg.enumeration_cap).cap_exceeded) {
                    ++r.skipped_cap;
                    continue;
                }
                for_each_geodesic(
                    dag, cfg.enumeration_cap, [&](const std::vector<Vertex>& path) {
                        if (!is_straight_concatenation(path, p))
                            r.fail({"sublattice geodesic is not a concatenation "
                                    "of straight runs",
                                    u, v, std::nullopt, path});
                    });
            }
        }
    }, cfg.threads);

    return merge_results("distinguished_geodesics", parts);
}

// ===========================================================================
// check: internal excursions into open p-blocks cross between opposite open
// sides and never repeat a block
// ===========================================================================

CheckResult check_block_excursions(const CheckConfig& cfg) {
    GraphPtr g = make_fractal_lattice(cfg.params);
    std::vector<Vertex> verts =
        window_vertices(Window{0, cfg.extent, 0, cfg.extent});

    std::vector<CheckResult> parts(verts.size());
    parallel_for(verts.size(), [&](std::size_t job) {
        CheckResult& r = parts[job];
        Vertex u = verts[job];
        std::vector<Vertex> targets(
            verts.begin() + static_cast<std::ptrdiff_t>(job) + 1, verts.end());
        if (targets.empty()) return;
        DistanceField fu = confined_field(*g, u, targets, cfg.limits);
        for (Vertex v : targets) {
            ++r.instances;
            GeodesicDag dag = build_dag(*g, fu, v);
            if (count_geodesics(dag, cfg.enumeration_cap).cap_exceeded) {
                ++r.skipped_cap;
                continue;
            }
            for_each_geodesic(dag, cfg.enumeration_cap,
                              [&](const std::vector<Vertex>& path) {
                                  for (auto& msg :
                                       excursion_violations(path, cfg.params.p))
                                      r.fail({msg, u, v, std::nullopt, path});
                              });
        }
    }, cfg.threads);

    return merge_results("block_excursions", parts);
}

// ===========================================================================
// check: a geodesic avoids every open p^n-strip iff it visits (p^n Z)^2
// ===========================================================================

CheckResult check_strip_classification(const CheckConfig& cfg, int n,
                                       bool exhaustive) {
    GraphPtr g = make_fractal_lattice(cfg.params);
    const i64 m = checked_pow(cfg.params.p, n);

    std::vector<std::pair<Vertex, Vertex>> pairs;
    if (exhaustive) {
        std::vector<Vertex> verts =
            window_vertices(Window{0, cfg.extent, 0, cfg.extent});
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                pairs.emplace_back(verts[i], verts[j]);
    } else {
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            JobRng rng(cfg.seed, s);
            pairs.emplace_back(sample_vertex(rng, 0, cfg.extent),
                               sample_vertex(rng, 0, cfg.extent));
        }
    }

    // Group by source so one field serves many targets.
    std::map<Vertex, std::vector<Vertex>> by_source;
    for (auto& [u, v] : pairs)
        if (u != v) by_source[u].push_back(v);
    std::vector<std::pair<Vertex, std::vector<Vertex>>> groups(
        by_source.begin(), by_source.end());

    std::vector<CheckResult> parts(groups.size());
    parallel_for(groups.size(), [&](std::size_t job) {
        CheckResult& r = parts[job];
        auto& [u, targets] = groups[job];
        DistanceField fu = confined_field(*g, u, targets, cfg.limits);
        for (Vertex v : targets) {
            ++r.instances;
            GeodesicDag dag = build_dag(*g, fu, v);
            if (count_geodesics(dag, cfg.enumeration_cap).cap_exceeded) {
                ++r.skipped_cap;
                continue;
            }
            for_each_geodesic(
                dag, cfg.enumeration_cap, [&](const std::vector<Vertex>& path) {
                    bool strip = contained_in_open_horizontal_strip(path, m) ||
                                 contained_in_open_vertical_strip(path, m);
                    bool visits = false;
                    for (const Vertex& w : path)
                        if (in_sublattice(w, m)) {
                            visits = true;
                            break;
                        }
                    if (strip == visits)
                        r.fail({strip ? "geodesic inside an open strip visits "
                                        "the sublattice"
                                      : "geodesic avoiding the sublattice fits "
                                        "no open strip",
                                u, v, std::nullopt, path});
                });
        }
    }, cfg.threads);

    return merge_results("strip_classification_n" + std::to_string(n), parts);
}

// ===========================================================================
// check: locality of first sublattice visits
//   (i) a geodesic to v in (p^n Z)^2 meeting the sublattice only at v stays
//       inside every closed p^n-block containing its start, and v is an
//       n-scale parent of the start;
//  (ii) once the leading segment costs 2*b*p^n, its endpoint sits one
//       sublattice level deeper.
// ===========================================================================

CheckResult check_parent_locality(const CheckConfig& cfg, int n) {
    GraphPtr g = make_fractal_lattice(cfg.params);
    const i64 p = cfg.params.p;
    const i64 m = checked_pow(p, n);
    const i64 s1_threshold = checked_mul(checked_mul(2, cfg.params.b), m);

    std::vector<Vertex> sources;
    for (std::size_t s = 0; s < cfg.samples; ++s) {
        JobRng rng(cfg.seed, s);
        sources.push_back(sample_vertex(rng, 0, cfg.extent));
    }
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

    std::vector<Vertex> lattice_targets;
    for (i64 x = 0; x <= cfg.extent; x += m)
        for (i64 y = 0; y <= cfg.extent; y += m)
            lattice_targets.push_back(Vertex{x, y});

    std::vector<CheckResult> parts(sources.size());
    parallel_for(sources.size(), [&](std::size_t job) {
        CheckResult& r = parts[job];
        Vertex u = sources[job];
        JobRng rng(cfg.seed ^ 0xabcdefULL, job);

        std::vector<Vertex> targets = lattice_targets;
        for (int extra = 0; extra < 4; ++extra)
            targets.push_back(sample_vertex(rng, 0, cfg.extent));
        DistanceField fu = confined_field(*g, u, targets, cfg.limits);

        for (Vertex v : targets) {
            if (u == v) continue;
            ++r.instances;
            GeodesicDag dag = build_dag(*g, fu, v);
            if (count_geodesics(dag, cfg.enumeration_cap).cap_exceeded) {
                ++r.skipped_cap;
                continue;
            }
            for_each_geodesic(dag, cfg.enumeration_cap, [&](const std::vector<Vertex>& path) {
                if (in_sublattice(v, m)) {
                    std::size_t visits = 0;
                    for (const Vertex& w : path)
                        if (in_sublattice(w, m)) ++visits;
                    if (visits == 1) {
                        auto parents = m_parents(u, m);
                        if (std::find(parents.begin(), parents.end(), v) ==
                            parents.end())
                            r.fail({"lone sublattice endpoint is not a parent "
                                    "of the start",
                                    u, v, std::nullopt, path});
                        i64 qx = floor_div(u.x, m), qy = floor_div(u.y, m);
                        for (i64 bx = qx - (floor_mod(u.x, m) == 0 ? 1 : 0);
                             bx <= qx; ++bx)
                            for (i64 by = qy - (floor_mod(u.y, m) == 0 ? 1 : 0);
                                 by <= qy; ++by) {
                                BlockRef block{m, bx, by};
                                for (const Vertex& w : path)
                                    if (!block.contains_closed(w)) {
                                        r.fail({"geodesic escapes a closed "
                                                "block containing its start",
                                                u, v, w, path});
                                        break;
                                    }
                            }
                    }
                }
                Segmentation seg = segment_geodesic(path, p);
                i64 s1_cost = fu.at(path[seg.first_idx]);
                if (s1_cost >= s1_threshold && !seg.passes_origin) {
                    if (!in_sublattice(seg.u_tilde, checked_mul(m, p)))
                        r.fail({"leading segment cost " + std::to_string(s1_cost) +
                                    " but its endpoint is not one level deeper",
                                u, v, seg.u_tilde, path});
                }
            });
        }
    }, cfg.threads);

    return merge_results("parent_locality_n" + std::to_string(n), parts);
}

// ===========================================================================
// check: level sets N_H / N_V are small and obey the two-sided distance
// inequality
// ===========================================================================

namespace {

// a*p^n1 + (b-a) * (dz / (2 p^n1) - p)  <  d - a*delta, exactly.
bool level_lower_bound_holds(const WeightParams& w, i64 pn, i64 dz, i64 d,
                             i64 delta) {
    __int128 lhs = __int128(2) * w.a * pn * pn +
                   __int128(w.b - w.a) * (dz - 2 * pn * w.p);
    __int128 rhs = __int128(2) * pn * (d - w.a * delta);
    return lhs < rhs;
}

// d - a*delta < 8 b p^{n1+1} + (b-a) dz / p^n1, exactly.
bool level_upper_bound_holds(const WeightParams& w, i64 pn, i64 dz, i64 d,
                             i64 delta) {
    __int128 lhs = __int128(pn) * (d - w.a * delta);
    __int128 rhs =
        __int128(8) * w.b * pn * pn * w.p + __int128(w.b - w.a) * dz;
    return lhs < rhs;
}

}  // namespace

CheckResult check_level_bounds(const CheckConfig& cfg) {
    GraphPtr g = make_fractal_lattice(cfg.params);
    BoundSet bounds = BoundSet::evaluate(cfg.params);
    const i64 p = cfg.params.p;

    std::vector<CheckResult> parts(cfg.samples);
    parallel_for(cfg.samples, [&](std::size_t job) {
        CheckResult& r = parts[job];
        JobRng rng(cfg.seed, job);
        auto [u, v] = sample_pair_at_separation(rng, cfg.max_separation, 2,
                                                cfg.max_separation);
        ++r.instances;

        DistanceField fu = confined_field(*g, u, v, cfg.limits);
        GeodesicDag dag = build_dag(*g, fu, v);
        if (count_geodesics(dag, cfg.enumeration_cap).cap_exceeded) {
            ++r.skipped_cap;
            return;
        }
        std::set<int> nH, nV;
        for_each_geodesic(dag, cfg.enumeration_cap,
                          [&](const std::vector<Vertex>& path) {
                              Segmentation seg = segment_geodesic(path, p);
                              if (seg.passes_origin) return;
                              i64 strip = checked_pow(p, seg.level + 1);
                              if (contained_in_open_horizontal_strip(path, strip))
                                  nH.insert(seg.level);
                              if (contained_in_open_vertical_strip(path, strip))
                                  nV.insert(seg.level);
                          });

        r.empirical["max_nH"] =
            std::max(r.empirical["max_nH"], static_cast<double>(nH.size()));
        r.empirical["max_nV"] =
            std::max(r.empirical["max_nV"], static_cast<double>(nV.size()));
        if (!within_real_bound(static_cast<i64>(nH.size()), bounds.nH_bound))
            r.fail({"horizontal level set larger than its bound", u, v,
                    std::nullopt, {}});
        if (!within_real_bound(static_cast<i64>(nV.size()), bounds.nH_bound))
            r.fail({"vertical level set larger than its bound", u, v,
                    std::nullopt, {}});

        i64 d = fu.at(v);
        i64 dz = z2_distance(u, v);
        i64 dx = u.x > v.x ? u.x - v.x : v.x - u.x;
        i64 dy = u.y > v.y ? u.y - v.y : v.y - u.y;
        auto check_pairwise = [&](const std::set<int>& levels, i64 delta,
                                  const char* axis) {
            for (auto it1 = levels.begin(); it1 != levels.end(); ++it1)
                for (auto it2 = std::next(it1); it2 != levels.end(); ++it2) {
                    i64 pn = checked_pow(p, *it1);
                    if (!level_lower_bound_holds(cfg.params, pn, dz, d, delta))
                        r.fail({std::string(axis) +
                                    " level pair violates the lower distance "
                                    "bound",
                                u, v, std::nullopt, {}});
                    if (!level_upper_bound_holds(cfg.params, pn, dz, d, delta))
                        r.fail({std::string(axis) +
                                    " level pair violates the upper distance "
                                    "bound",
                                u, v, std::nullopt, {}});
                }
        };
        check_pairwise(nH, dx, "horizontal");
        check_pairwise(nV, dy, "vertical");
    }, cfg.threads);

    CheckResult out = merge_results("level_bounds", parts);
    out.bound_values["nH_bound"] = bounds.nH_bound;
    return out;
}

// ===========================================================================
// check: slice sizes against the theoretical bounds
// ===========================================================================

CheckResult check_slice_bounds(const CheckConfig& cfg) {
    GraphPtr g = make_fractal_lattice(cfg.params);
    BoundSet bounds = BoundSet::evaluate(cfg.params);
    const i64 total_cap = ceil_with_guard(bounds.total_bound);

    std::vector<Vertex> verts = window_vertices(
        Window{-cfg.extent, cfg.extent, -cfg.extent, cfg.extent});

    // Exhaustive small pairs grouped by source, plus seeded far pairs.
    std::size_t jobs = verts.size() + cfg.samples;
    std::vector<CheckResult> parts(jobs);
    std::vector<std::pair<i64, std::string>> argmax(jobs, {0, ""});

    parallel_for(jobs, [&](std::size_t job) {
        CheckResult& r = parts[job];
        auto record = [&](Vertex u, Vertex v, const PairSliceStats& st) {
            ++r.instances;
            r.empirical["max_slice"] = std::max(
                r.empirical["max_slice"], static_cast<double>(st.max_size));
            if (st.max_size > argmax[job].first)
                argmax[job] = {st.max_size,
                               "max slice " + std::to_string(st.max_size) +
                                   " at pair " + vertex_str(u) + "-" +
                                   vertex_str(v) + " k=" + std::to_string(st.argmax_k)};
            if (st.max_size > total_cap)
                r.fail({"slice size " + std::to_string(st.max_size) +
                            " exceeds the total bound",
                        u, v, std::nullopt, {}});
        };

        if (job < verts.size()) {
            Vertex u = verts[job];
            if (job + 1 == verts.size()) return;
            std::vector<Vertex> targets(
                verts.begin() + static_cast<std::ptrdiff_t>(job) + 1, verts.end());
            DistanceField fu = confined_field(*g, u, targets, cfg.limits);
            for (Vertex v : targets) record(u, v, pair_slice_stats(*g, fu, v));
        } else {
            JobRng rng(cfg.seed, job - verts.size());
            auto [u, v] = sample_pair_at_separation(rng, cfg.max_separation, 2,
                                                    cfg.max_separation);
            DistanceField fu = confined_field(*g, u, v, cfg.limits);
            record(u, v, pair_slice_stats(*g, fu, v));
        }
    }, cfg.threads);

    CheckResult out = merge_results("slice_bounds", parts);
    const auto& top = *std::max_element(
        argmax.begin(), argmax.end(),
        [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!top.second.empty()) out.notes.push_back(top.second);

    // Partial-slice bounds on a seeded subset where enumeration is feasible.
    std::size_t partial_jobs = std::min<std::size_t>(cfg.samples, 64);
    std::vector<CheckResult> pparts(partial_jobs);
    parallel_for(partial_jobs, [&](std::size_t job) {
        CheckResult& r = pparts[job];
        JobRng rng(cfg.seed ^ 0x9a97ULL, job);
        auto [u, v] = sample_pair_at_separation(rng, 60, 2, 60);
        ++r.instances;
        DistanceField fu = confined_field(*g, u, v, cfg.limits);
        PartialProfile prof =
            partial_profile(*g, fu, v, cfg.params.p, cfg.enumeration_cap);
        if (prof.cap_exceeded) {
            ++r.skipped_cap;
            return;
        }
        for (std::size_t k = 0; k < prof.s1.size(); ++k) {
            i64 n1 = static_cast<i64>(prof.s1[k].size());
            i64 n3 = static_cast<i64>(prof.s3[k].size());
            i64 n2 = static_cast<i64>(prof.s2[k].size());
            r.empirical["max_s1"] = std::max(
                r.empirical["max_s1"], static_cast<double>(std::max(n1, n3)));
            r.empirical["max_s2"] =
                std::max(r.empirical["max_s2"], static_cast<double>(n2));
            if (!bounds.s1_bound.at_least(n1) || !bounds.s1_bound.at_least(n3))
                r.fail({"end partial slice exceeds its bound", u, v,
                        std::nullopt, {}});
            if (!within_real_bound(n2, bounds.s2_bound))
                r.fail({"middle partial slice exceeds its bound", u, v,
                        std::nullopt, {}});
        }
        for (auto& [level, per_k] : prof.s2n) {
            if (level == kLevelOrigin) continue;
            for (auto& set : per_k) {
                i64 sz = static_cast<i64>(set.size());
                r.empirical["max_s2n"] =
                    std::max(r.empirical["max_s2n"], static_cast<double>(sz));
                if (!bounds.s2n_bound.at_least(sz))
                    r.fail({"per-level middle slice exceeds its bound", u, v,
                            std::nullopt, {}});
            }
        }
    }, cfg.threads);

    absorb(out, merge_results("", pparts));

    // Control: the plain grid's diagonal slices grow linearly, which the same
    // machinery must see.
    GraphPtr grid = make_plain_grid();
    for (i64 x = 1; x <= 12; ++x) {
        SliceProfile prof =
            slice_profile(*grid, Vertex{0, 0}, Vertex{x, x}, cfg.limits);
        ++out.instances;
        if (prof.sizes[static_cast<std::size_t>(x)] != x + 1)
            out.fail({"grid control: diagonal slice size is not x+1",
                      Vertex{0, 0}, Vertex{x, x}, std::nullopt, {}});
        out.empirical["grid_diag_max"] = std::max(
            out.empirical["grid_diag_max"], static_cast<double>(prof.max_size));
    }

    out.bound_values["s1_bound"] = bounds.s1_bound.to_double();
    out.bound_values["s2n_bound"] = bounds.s2n_bound.to_double();
    out.bound_values["s2_bound"] = bounds.s2_bound;
    out.bound_values["total_bound"] = bounds.total_bound;
    out.bound_values["total_bound_ceiling"] = static_cast<double>(total_cap);
    return out;
}

// ===========================================================================
// check: subdivision extension properties
// ===========================================================================

CheckResult check_reduction_properties(const ReductionSpec& spec,
                                       const CheckConfig& cfg) {
    spec.validate();
    GraphPtr base = make_plain_grid();
    GraphPtr g = build_reduction(spec, base);
    GraphPtr h = make_fractal_lattice(spec.weights);
    const i64 N = spec.N;

    CheckResult out;
    out.name = "reduction_properties";

    // (1) Every new edge in the scan window spans between N/W and N.
    {
        Window scan{0, checked_mul(3, N), 0, checked_mul(3, N)};
        i64 min_span = N, max_span_seen = 0;
        std::vector<WeightedNeighbor> nb;
        for (Vertex v : window_vertices(scan)) {
            g->neighbors(v, nb);
            for (const auto& n : nb) {
                if (!scan.contains(n.to) || !g->is_new_edge(v, n.to)) continue;
                i64 span = z2_distance(v, n.to);
                ++out.instances;
                min_span = std::min(min_span, span);
                max_span_seen = std::max(max_span_seen, span);
                if (span < N / spec.W || span > N)
                    out.fail({"new edge span " + std::to_string(span) +
                                  " outside [N/W, N]",
                              v, n.to, std::nullopt, {}});
            }
        }
        out.empirical["min_new_span"] = static_cast<double>(min_span);
        out.empirical["max_new_span"] = static_cast<double>(max_span_seen);
        if (max_span_seen != N)
            out.fail({"extension constant not attained by any new edge",
                      Vertex{}, Vertex{}, std::nullopt, {}});
    }

    // (2) d_H(u, v) = d_G(N u, N v) on the coordinate box, grouped by source.
    {
        std::vector<Vertex> small = window_vertices(Window{
            -cfg.coord_bound, cfg.coord_bound, -cfg.coord_bound, cfg.coord_bound});
        std::vector<CheckResult> parts(small.size());
        parallel_for(small.size(), [&](std::size_t job) {
            CheckResult& r = parts[job];
            Vertex u = small[job];
            if (job + 1 == small.size()) return;
            std::vector<Vertex> targets(
                small.begin() + static_cast<std::ptrdiff_t>(job) + 1, small.end());
            std::vector<Vertex> scaled;
            scaled.reserve(targets.size());
            for (Vertex t : targets) scaled.push_back(Vertex{t.x * N, t.y * N});
            Vertex su{u.x * N, u.y * N};

            DistanceField fh = confined_field(*h, u, targets, cfg.limits);
            DistanceField fg = confined_field(*g, su, scaled, cfg.limits);
            for (std::size_t i = 0; i < targets.size(); ++i) {
                ++r.instances;
                if (fh.at(targets[i]) != fg.at(scaled[i]))
                    r.fail({"weighted distance " +
                                std::to_string(fh.at(targets[i])) +
                                " != extension distance " +
                                std::to_string(fg.at(scaled[i])),
                            u, targets[i], std::nullopt, {}});
            }
        }, cfg.threads);
        absorb(out, merge_results("", parts));
    }

    // (3) Geodesics between special vertices pass only through special
    // vertices (two-distance criterion over exhaustive special pairs).
    {
        Window scan{0, checked_mul(3, N), 0, checked_mul(3, N)};
        std::vector<Vertex> special;
        for (Vertex v : window_vertices(scan))
            if (is_special_vertex(spec, v)) special.push_back(v);

        std::vector<CheckResult> parts(special.size());
        parallel_for(special.size(), [&](std::size_t job) {
            CheckResult& r = parts[job];
            Vertex u = special[job];
            if (job + 1 == special.size()) return;
            std::vector<Vertex> targets(
                special.begin() + static_cast<std::ptrdiff_t>(job) + 1,
                special.end());
            DistanceField fu = confined_field(*g, u, targets, cfg.limits);
            for (Vertex v : targets) {
                ++r.instances;
                walk_geodesic_vertices(*g, fu, v, [&](Vertex w, i64) {
                    if (!is_special_vertex(spec, w))
                        r.fail({"geodesic between special vertices visits a "
                                "non-special vertex",
                                u, v, w, {}});
                });
            }
        }, cfg.threads);
        absorb(out, merge_results("", parts));
    }

    // (4) Geodesics of hop-length >= 5N meet special vertices; (5) geodesics
    // of pairs with d_G >= 11N pass within 6N of (N Z)^2 at both ends. The
    // separations make the premises sure via d_G >= d_Z2 / N.
    auto long_pair_check = [&](i64 hops_needed, bool ends_near_lattice) {
        i64 dz = checked_add(checked_mul(hops_needed, N), 2);
        Vertex u{1, 0};
        Vertex v{u.x + dz - 2, u.y + 2};
        DistanceField fu = confined_field(*g, u, v, cfg.limits);
        i64 d = fu.at(v);
        ++out.instances;
        if (d < hops_needed) {
            out.fail({"long-pair premise not met (d_G too small)", u, v,
                      std::nullopt, {}});
            return;
        }
        GeodesicDag dag = build_dag(*g, fu, v);
        if (count_geodesics(dag, cfg.enumeration_cap).cap_exceeded) {
            ++out.skipped_cap;
            return;
        }
        for_each_geodesic(dag, cfg.enumeration_cap, [&](const std::vector<Vertex>& path) {
            if (!ends_near_lattice) {
                if (static_cast<i64>(path.size()) - 1 < 5 * N) return;
                for (const Vertex& w : path)
                    if (is_special_vertex(spec, w)) return;
                out.fail({"long geodesic avoids all special vertices", u, v,
                          std::nullopt, path});
            } else {
                i64 len = static_cast<i64>(path.size()) - 1;
                i64 first = -1, last = -1;
                for (i64 i = 0; i <= len; ++i)
                    if (in_sublattice(path[static_cast<std::size_t>(i)], N)) {
                        if (first < 0) first = i;
                        last = i;
                    }
                if (first < 0 || first >= 6 * N || len - last >= 6 * N)
                    out.fail({"geodesic does not pass near the scaled lattice "
                              "at both ends",
                              u, v, std::nullopt, path});
            }
        });
    };
    if (cfg.samples > 0) {
        long_pair_check(checked_add(checked_mul(5, N), 1), false);
        long_pair_check(checked_mul(11, N), true);
    }

    out.bound_values["slice_envelope"] = reduction_slice_bound(
        N, BoundSet::evaluate(spec.weights).total_bound);
    return out;
}

// ===========================================================================
// check: counting and ball-size baselines
// ===========================================================================

namespace {

u64 binomial(u64 n, u64 k) {
    if (k > n) return 0;
    u64 r = 1;
    for (u64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

CheckResult check_baselines(const CheckConfig& cfg) {
    CheckResult out;
    out.name = "baselines";
    GraphPtr grid = make_plain_grid();

    // Ball sizes: |B((0,0), r)| = 2r^2 + 2r + 1.
    {
        const i64 R = 50;
        Window w{-R - 1, R + 1, -R - 1, R + 1};
        DistanceField f = dist_map(*grid, Vertex{0, 0}, w, cfg.limits);
        std::vector<i64> count_at(static_cast<std::size_t>(2 * R + 4), 0);
        for (Vertex v : window_vertices(w)) {
            i64 c = f.at(v);
            if (c <= 2 * R + 3) ++count_at[static_cast<std::size_t>(c)];
        }
        i64 ball = 0;
        for (i64 r = 0; r <= R; ++r) {
            ball += count_at[static_cast<std::size_t>(r)];
            ++out.instances;
            if (ball != 2 * r * r + 2 * r + 1)
                out.fail({"ball size mismatch at radius " + std::to_string(r),
                          Vertex{0, 0}, Vertex{r, 0}, std::nullopt, {}});
        }
    }

    // Diagonal slices: profile of (0,0)-(x,x) is 1, 2, ..., x+1, ..., 2, 1.
    for (i64 x = 0; x <= 12; ++x) {
        SliceProfile prof =
            slice_profile(*grid, Vertex{0, 0}, Vertex{x, x}, cfg.limits);
        ++out.instances;
        bool ok = prof.distance == 2 * x;
        for (i64 k = 0; ok && k <= prof.distance; ++k)
            ok = prof.sizes[static_cast<std::size_t>(k)] ==
                 std::min(k, 2 * x - k) + 1;
        if (!ok)
            out.fail({"diagonal slice profile mismatch", Vertex{0, 0},
                      Vertex{x, x}, std::nullopt, {}});
    }

    // Diagonal geodesic counts: C(2x, x).
    for (u64 x = 0; x <= 10; ++x) {
        CountResult c = count_geodesics(
            *grid, Vertex{0, 0},
            Vertex{static_cast<i64>(x), static_cast<i64>(x)}, u64{1} << 40,
            cfg.limits);
        ++out.instances;
        if (c.count != binomial(2 * x, x))
            out.fail({"diagonal geodesic count mismatch at x=" + std::to_string(x),
                      Vertex{0, 0},
                      Vertex{static_cast<i64>(x), static_cast<i64>(x)},
                      std::nullopt, {}});
    }
    return out;
}

// ===========================================================================
// check: hexagonal and triangular adapters, explicit length-2/4 extension
// ===========================================================================

CheckResult check_hex_tri_appendix(const CheckConfig& cfg) {
    CheckResult out;
    out.name = "hex_tri_appendix";

    // Hexagonal brick wall: 3-regular; the completion equals the grid; every
    // restored chord has brick-distance exactly 3.
    {
        GraphPtr brick = make_hex_brick();
        GraphPtr full = make_hex_completion();
        GraphPtr grid = make_plain_grid();
        Window w{0, 39, 0, 39};
        std::vector<WeightedNeighbor> nb, nb2;
        for (Vertex v : window_vertices(w)) {
            brick->neighbors(v, nb);
            ++out.instances;
            if (nb.size() != 3)
                out.fail({"brick-wall vertex degree != 3", v, v, std::nullopt, {}});
            full->neighbors(v, nb);
            grid->neighbors(v, nb2);
            auto key = [](const WeightedNeighbor& a, const WeightedNeighbor& b) {
                return a.to < b.to;
            };
            std::sort(nb.begin(), nb.end(), key);
            std::sort(nb2.begin(), nb2.end(), key);
            bool same = nb.size() == nb2.size();
            for (std::size_t i = 0; same && i < nb.size(); ++i)
                same = nb[i].to == nb2[i].to && nb[i].cost == nb2[i].cost;
            if (!same)
                out.fail({"hex completion differs from the grid", v, v,
                          std::nullopt, {}});
        }
        for (Vertex v : window_vertices(w)) {
            Vertex up{v.x, v.y + 1};
            if (!w.contains(up) || !full->is_new_edge(v, up)) continue;
            ++out.instances;
            DistanceField f = confined_field(*brick, v, up, cfg.limits);
            if (f.at(up) != 3)
                out.fail({"restored chord has brick-distance " +
                              std::to_string(f.at(up)) + " != 3",
                          v, up, std::nullopt, {}});
            out.empirical["hex_chord_distance"] = static_cast<double>(f.at(up));
        }
    }

    // Triangular lattice: 6-regular, added edges span exactly 2.
    {
        GraphPtr tri = make_triangular();
        Window w{0, 39, 0, 39};
        std::vector<WeightedNeighbor> nb;
        i64 max_span = 0;
        for (Vertex v : window_vertices(w)) {
            tri->neighbors(v, nb);
            ++out.instances;
            if (nb.size() != 6)
                out.fail({"triangular vertex degree != 6", v, v, std::nullopt, {}});
            for (const auto& n : nb) {
                i64 span = z2_distance(v, n.to);
                max_span = std::max(max_span, span);
                if (tri->is_new_edge(v, n.to) && span != 2)
                    out.fail({"triangular added edge span != 2", v, n.to,
                              std::nullopt, {}});
            }
        }
        out.empirical["triangular_max_span"] = static_cast<double>(max_span);
    }

    // Explicit extension: new edges live on axis lines through (4Z)^2 with
    // spans in {2, 4}; a run is split into two hops exactly when the scaled
    // edge is slow.
    {
        GraphPtr ap = make_appendix();
        Window w{-40, 40, -40, 40};
        std::vector<WeightedNeighbor> nb;
        i64 max_span = 0;
        for (Vertex v : window_vertices(w)) {
            ap->neighbors(v, nb);
            for (const auto& n : nb) {
                if (!ap->is_new_edge(v, n.to)) continue;
                i64 span = z2_distance(v, n.to);
                max_span = std::max(max_span, span);
                ++out.instances;
                if (span != 2 && span != 4)
                    out.fail({"explicit-extension edge span not in {2,4}", v,
                              n.to, std::nullopt, {}});
                if (v.x != n.to.x && v.y != n.to.y)
                    out.fail({"explicit-extension edge not axis-aligned", v,
                              n.to, std::nullopt, {}});
                if (v.x == n.to.x && floor_mod(v.x, 4) != 0)
                    out.fail({"vertical run off the scale-4 column grid", v,
                              n.to, std::nullopt, {}});
                if (v.y == n.to.y && floor_mod(v.y, 4) != 0)
                    out.fail({"horizontal run off the scale-4 row grid", v,
                              n.to, std::nullopt, {}});
            }
        }
        out.empirical["appendix_max_span"] = static_cast<double>(max_span);

        i64 splits = 0;
        for (i64 x = -30; x <= 30; ++x)
            for (i64 y = -30; y <= 30; ++y) {
                ++out.instances;
                bool split_v = appendix_splits_vertical(x, y);
                bool slow_v =
                    classify_edge(Edge(Vertex{x, y}, Vertex{x, y + 1}), 3) ==
                    EdgeClass::Slow;
                bool split_h = appendix_splits_horizontal(x, y);
                bool slow_h =
                    classify_edge(Edge(Vertex{x, y}, Vertex{x + 1, y}), 3) ==
                    EdgeClass::Slow;
                if (split_v != slow_v || split_h != slow_h)
                    out.fail({"run subdivision disagrees with the slow/fast "
                              "classification at scale 4",
                              Vertex{4 * x, 4 * y}, Vertex{4 * x, 4 * y + 4},
                              std::nullopt, {}});
                if (split_v) ++splits;
            }
        out.empirical["appendix_splits"] = static_cast<double>(splits);

        // slice maxima on a small scale ladder, against the (very generous)
        // envelope the construction inherits
        double envelope =
            reduction_slice_bound(4, BoundSet::evaluate({3, 1, 2}).total_bound);
        for (int j = 1; j <= 3; ++j) {
            i64 s = 2 * checked_pow(3, j);
            Vertex u{2, 1}, v{2 + s, 1 + s};
            DistanceField fu = confined_field(*ap, u, v, cfg.limits);
            SliceProfile prof = profile_from_dag(build_dag(*ap, fu, v));
            ++out.instances;
            out.empirical["appendix_ladder_j" + std::to_string(j)] =
                static_cast<double>(prof.max_size);
            if (!within_real_bound(prof.max_size, envelope))
                out.fail({"ladder slice max exceeds the inherited envelope", u,
                          v, std::nullopt, {}});
        }
        out.bound_values["appendix_envelope"] = envelope;
    }
    return out;
}

// ===========================================================================
// check: scale stability of empirical slice maxima, with grid control
// ===========================================================================

CheckResult check_scale_stability(const CheckConfig& cfg) {
    CheckResult out;
    out.name = "scale_stability";
    BoundSet bounds = BoundSet::evaluate(cfg.params);
    double appendix_bound = reduction_slice_bound(4, bounds.total_bound);
    GraphPtr h = make_fractal_lattice(cfg.params);
    GraphPtr ap = make_appendix();
    GraphPtr grid = make_plain_grid();

    std::size_t per_band = std::max<std::size_t>(4, cfg.samples / 8);
    struct Job {
        int band;
        int graph;  // 0 = weighted lattice, 1 = explicit extension, 2 = grid
        std::size_t index;
    };
    std::vector<Job> jobs;
    for (int band = 1; band <= 4; ++band)
        for (int graph = 0; graph < 3; ++graph)
            for (std::size_t i = 0; i < per_band; ++i)
                jobs.push_back({band, graph, i});

    std::vector<i64> maxima(jobs.size(), 0);
    parallel_for(jobs.size(), [&](std::size_t ji) {
        const Job& job = jobs[ji];
        i64 lo = 2 * checked_pow(3, job.band);
        i64 hi = 4 * checked_pow(3, job.band);
        JobRng rng(cfg.seed ^ static_cast<u64>(job.graph * 7919 + job.band),
                   job.index);
        Vertex u, v;
        if (job.graph == 2 && job.index == 0) {
            // forced diagonal pair: the grid control must reach sep/2 + 1
            u = Vertex{0, 0};
            v = Vertex{hi / 2, hi / 2};
        } else {
            std::tie(u, v) = sample_pair_at_separation(rng, hi, lo, hi);
        }
        const ImplicitGraph& g =
            job.graph == 0 ? *h : job.graph == 1 ? *ap : *grid;
        DistanceField fu = confined_field(g, u, v, cfg.limits);
        maxima[ji] = pair_slice_stats(g, fu, v).max_size;
    }, cfg.threads);

    const char* names[3] = {"weighted", "appendix", "grid"};
    double band_max[3][5] = {};
    for (std::size_t ji = 0; ji < jobs.size(); ++ji) {
        const Job& job = jobs[ji];
        band_max[job.graph][job.band] = std::max(
            band_max[job.graph][job.band], static_cast<double>(maxima[ji]));
    }
    for (int graph = 0; graph < 3; ++graph) {
        for (int band = 1; band <= 4; ++band) {
            out.instances += per_band;
            std::string key =
                std::string(names[graph]) + "_band" + std::to_string(band);
            out.empirical[key] = band_max[graph][band];
            i64 sep = 4 * checked_pow(3, band);
            if (graph == 0 &&
                !within_real_bound(static_cast<i64>(band_max[graph][band]),
                                   bounds.total_bound))
                out.fail({"weighted-lattice band max exceeds the total bound",
                          Vertex{}, Vertex{}, std::nullopt, {}});
            if (graph == 1 &&
                !within_real_bound(static_cast<i64>(band_max[graph][band]),
                                   appendix_bound))
                out.fail({"explicit-extension band max exceeds its envelope",
                          Vertex{}, Vertex{}, std::nullopt, {}});
            if (graph == 2 &&
                band_max[graph][band] < static_cast<double>(sep / 2 + 1))
                out.fail({"grid control failed to reach sep/2 + 1 at band " +
                              std::to_string(band),
                          Vertex{}, Vertex{}, std::nullopt, {}});
        }
        // Monotone growth across every band would mean the maxima track the
        // separation; report it loudly.
        if (graph != 2) {
            bool monotone = true;
            for (int band = 2; band <= 4; ++band)
                monotone =
                    monotone && band_max[graph][band] > band_max[graph][band - 1];
            if (monotone)
                out.notes.push_back(std::string("red flag: ") + names[graph] +
                                    " band maxima grow monotonically");
        }
    }
    out.bound_values["total_bound"] = bounds.total_bound;
    out.bound_values["appendix_envelope"] = appendix_bound;
    return out;
}

// ===========================================================================
// registry
// ===========================================================================

std::vector<std::string> check_names() {
    return {"classifier", "fractal",   "distinguished", "excursions",
            "strips",     "parents",   "levels",        "slices",
            "reduction",  "baselines", "tilings",       "stability"};
}

std::vector<CheckResult> run_checks(const CheckConfig& cfg,
                                    const std::vector<std::string>& names) {
    std::vector<std::string> wanted = names.empty() ? check_names() : names;
    std::vector<CheckResult> out;
    for (const std::string& name : wanted) {
        if (name == "classifier") {
            CheckConfig c = cfg;
            c.extent = std::min<i64>(cfg.extent * 9, 243);
            out.push_back(check_classifier_equivalence(c));
        } else if (name == "fractal") {
            out.push_back(check_fractal_inheritance(cfg, 1));
            out.push_back(check_fractal_inheritance(cfg, 2));
        } else if (name == "distinguished") {
            out.push_back(check_distinguished_geodesics(cfg));
        } else if (name == "excursions") {
            CheckConfig c = cfg;
            c.extent = std::min<i64>(cfg.extent, 12);
            out.push_back(check_block_excursions(c));
        } else if (name == "strips") {
            out.push_back(check_strip_classification(cfg, 1, cfg.extent <= 27));
            CheckConfig c = cfg;
            c.extent = cfg.extent * 3;
            out.push_back(check_strip_classification(c, 2, false));
        } else if (name == "parents") {
            CheckConfig c = cfg;
            c.samples = std::min<std::size_t>(cfg.samples, 40);
            out.push_back(check_parent_locality(c, 1));
            out.push_back(check_parent_locality(c, 2));
        } else if (name == "levels") {
            CheckConfig c = cfg;
            c.max_separation = std::max<i64>(cfg.max_separation, 243);
            out.push_back(check_level_bounds(c));
        } else if (name == "slices") {
            out.push_back(check_slice_bounds(cfg));
        } else if (name == "reduction") {
            CheckConfig c = cfg;
            c.coord_bound = std::min<i64>(cfg.coord_bound, 5);
            out.push_back(
                check_reduction_properties(make_reduction_spec(cfg.params, 1), c));
        } else if (name == "baselines") {
            out.push_back(check_baselines(cfg));
        } else if (name == "tilings") {
            out.push_back(check_hex_tri_appendix(cfg));
        } else if (name == "stability") {
            out.push_back(check_scale_stability(cfg));
        } else {
            throw std::invalid_argument("unknown check: " + name);
        }
    }
    return out;
}

}  // namespace geoslice
