#include "geoslice/engine.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace geoslice {

namespace {

u64 checked_cells(const Window& w, const EngineLimits& limits) {
    w.validate();
    u64 c = w.cells();
    if (c > limits.max_cells) throw ResourceError(c);
    return c;
}

i64 ceil_div_pos(i64 num, i64 den) { return floor_div(num + den - 1, den); }

}  // namespace

Window window_for(const ImplicitGraph& g, Vertex u, Vertex v,
                  const EngineLimits& limits) {
    i64 d = z2_distance(u, v);
    i64 span = g.max_span();
    i64 num = checked_mul(checked_mul(span, g.detour()), d);
    i64 inflation = checked_add(ceil_div_pos(num, g.min_cost()), span);
    Window w = bounding_box(u, v).inflated(inflation, inflation);
    checked_cells(w, limits);
    return w;
}

DistanceField dist_map(const ImplicitGraph& g, Vertex source,
                       const Window& window, const EngineLimits& limits) {
    u64 cells = checked_cells(window, limits);
    if (!window.contains(source))
        throw std::invalid_argument("dist_map: source outside window");

    DistanceField f;
    f.source = source;
    f.window = window;
    f.cost.assign(cells, DistanceField::kUnreached);

    const i64 width = window.width();
    auto vertex_of = [&](std::size_t idx) {
        return Vertex{window.x_min + static_cast<i64>(idx % static_cast<std::size_t>(width)),
                      window.y_min + static_cast<i64>(idx / static_cast<std::size_t>(width))};
    };

    std::vector<WeightedNeighbor> nb;
    const std::size_t src = f.index(source);

    if (g.min_cost() == g.max_cost()) {
        // Uniform weights: breadth-first search, costs are hop counts times
        // the unit cost.
        const i64 unit = g.min_cost();
        std::vector<std::uint32_t> queue;
        queue.reserve(1024);
        f.cost[src] = 0;
        queue.push_back(static_cast<std::uint32_t>(src));
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::size_t cur = queue[head];
            Vertex v = vertex_of(cur);
            i64 next = f.cost[cur] + unit;
            if (next > std::numeric_limits<std::int32_t>::max() - 1)
                throw std::overflow_error("dist_map: cost exceeds 2^31");
            g.neighbors(v, nb);
            for (const auto& n : nb) {
                if (!window.contains(n.to)) continue;
                std::size_t ni = f.index(n.to);
                if (f.cost[ni] != DistanceField::kUnreached) continue;
                f.cost[ni] = static_cast<std::int32_t>(next);
                queue.push_back(static_cast<std::uint32_t>(ni));
            }
        }
    } else {
        using Item = std::pair<i64, std::uint32_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        f.cost[src] = 0;
        pq.push({0, static_cast<std::uint32_t>(src)});
        while (!pq.empty()) {
            auto [dist, cur] = pq.top();
            pq.pop();
            if (dist > f.cost[cur]) continue;
            Vertex v = vertex_of(cur);
            g.neighbors(v, nb);
            for (const auto& n : nb) {
                if (!window.contains(n.to)) continue;
                std::size_t ni = f.index(n.to);
                i64 next = dist + n.cost;
                if (next > std::numeric_limits<std::int32_t>::max() - 1)
                    throw std::overflow_error("dist_map: cost exceeds 2^31");
                if (next < f.cost[ni]) {
                    f.cost[ni] = static_cast<std::int32_t>(next);
                    pq.push({next, static_cast<std::uint32_t>(ni)});
                }
            }
        }
    }
    return f;
}

DistanceField confined_field(const ImplicitGraph& g, Vertex source,
                             std::span<const Vertex> targets,
                             const EngineLimits& limits) {
    Window box{source.x, source.x, source.y, source.y};
    for (const Vertex& t : targets) {
        box.x_min = std::min(box.x_min, t.x);
        box.x_max = std::max(box.x_max, t.x);
        box.y_min = std::min(box.y_min, t.y);
        box.y_max = std::max(box.y_max, t.y);
    }

    const i64 span = g.max_span();
    const i64 mc = g.min_cost();

    // Probe pass: windowed distances are upper bounds on the true ones, and
    // the detour bound keeps them honest even if a target were missed.
    i64 probe_margin = checked_mul(4, span);
    DistanceField probe = dist_map(g, source, box.inflated(probe_margin, probe_margin), limits);

    i64 inflate_x = 0, inflate_y = 0;
    for (const Vertex& t : targets) {
        i64 dz = z2_distance(source, t);
        i64 dhat = checked_mul(g.detour(), dz);
        if (probe.reached(t)) dhat = std::min(dhat, probe.at(t));
        // Every vertex w on a true geodesic source->t satisfies
        //   d_Z2(source,w) + d_Z2(w,t) <= (span/mc) * d_G(source,t) <= E,
        // so per axis it strays at most (E - axis gap) / 2 beyond the box.
        i64 ellipse = ceil_div_pos(checked_mul(span, dhat), mc);
        i64 ax = source.x > t.x ? source.x - t.x : t.x - source.x;
        i64 ay = source.y > t.y ? source.y - t.y : t.y - source.y;
        if (ellipse > ax) inflate_x = std::max(inflate_x, ceil_div_pos(ellipse - ax, 2));
        if (ellipse > ay) inflate_y = std::max(inflate_y, ceil_div_pos(ellipse - ay, 2));
    }
    inflate_x = checked_add(inflate_x, span);
    inflate_y = checked_add(inflate_y, span);

    if (inflate_x <= probe_margin && inflate_y <= probe_margin) {
        probe.confined = true;
        return probe;
    }
    DistanceField f = dist_map(g, source, box.inflated(inflate_x, inflate_y), limits);
    f.confined = true;
    return f;
}

GeodesicDag build_dag(const ImplicitGraph& g, const DistanceField& fu, Vertex to) {
    if (!fu.confined)
        throw std::logic_error("build_dag: field lacks a confinement certificate");
    if (!fu.reached(to)) throw std::logic_error("build_dag: target not reached");

    GeodesicDag dag;
    dag.from = fu.source;
    dag.to = to;
    dag.distance = fu.at(to);

    // Walk tight edges backward from `to`; the vertices met are exactly those
    // on some geodesic from the source to `to`.
    std::unordered_map<Vertex, std::int32_t, VertexHash> id;
    std::vector<Vertex> found{to};
    std::vector<Vertex> stack{to};
    id.emplace(to, 0);
    std::vector<WeightedNeighbor> nb;
    while (!stack.empty()) {
        Vertex y = stack.back();
        stack.pop_back();
        i64 cy = fu.at(y);
        g.neighbors(y, nb);
        for (const auto& n : nb) {
            if (!fu.reached(n.to)) continue;
            if (fu.at(n.to) + n.cost != cy) continue;
            if (id.emplace(n.to, static_cast<std::int32_t>(found.size())).second) {
                found.push_back(n.to);
                stack.push_back(n.to);
            }
        }
    }

    std::sort(found.begin(), found.end(), [&](Vertex a, Vertex b) {
        i64 ca = fu.at(a), cb = fu.at(b);
        if (ca != cb) return ca < cb;
        return a < b;
    });
    dag.nodes = found;
    dag.node_cost.resize(found.size());
    id.clear();
    for (std::size_t i = 0; i < found.size(); ++i) {
        dag.node_cost[i] = fu.at(found[i]);
        id.emplace(found[i], static_cast<std::int32_t>(i));
    }

    dag.succ.assign(found.size(), {});
    for (std::size_t i = 0; i < found.size(); ++i) {
        g.neighbors(found[i], nb);
        for (const auto& n : nb) {
            auto it = id.find(n.to);
            if (it == id.end()) continue;
            if (dag.node_cost[i] + n.cost == dag.node_cost[it->second])
                dag.succ[i].push_back(it->second);
        }
        std::sort(dag.succ[i].begin(), dag.succ[i].end(),
                  [&](std::int32_t a, std::int32_t b) {
                      return dag.nodes[a] < dag.nodes[b];
                  });
    }
    return dag;
}

std::vector<Vertex> slice_from_fields(const DistanceField& fu,
                                      const DistanceField& fv, i64 k) {
    if (!fu.reached(fv.source))
        throw std::invalid_argument("slice: pair disconnected within window");
    const i64 d = fu.at(fv.source);
    std::vector<Vertex> out;
    if (k < 0 || k > d) return out;
    const Window& w = fu.window;
    for (i64 y = w.y_min; y <= w.y_max; ++y)
        for (i64 x = w.x_min; x <= w.x_max; ++x) {
            Vertex v{x, y};
            i64 cu = fu.at(v);
            if (cu != k) continue;
            i64 cv = fv.at(v);
            if (cv == DistanceField::kUnreached) continue;
            if (cu + cv == d) out.push_back(v);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> slice(const ImplicitGraph& g, Vertex u, Vertex v, i64 k,
                          const Window& window, const EngineLimits& limits) {
    DistanceField fu = dist_map(g, u, window, limits);
    DistanceField fv = dist_map(g, v, window, limits);
    return slice_from_fields(fu, fv, k);
}

SliceProfile profile_from_dag(const GeodesicDag& dag) {
    SliceProfile p;
    p.u = dag.from;
    p.v = dag.to;
    p.distance = dag.distance;
    if (dag.distance > i64{50'000'000})
        throw std::overflow_error("slice_profile: distance too large to tabulate");
    p.sizes.assign(static_cast<std::size_t>(dag.distance) + 1, 0);
    for (i64 c : dag.node_cost) ++p.sizes[static_cast<std::size_t>(c)];
    for (i64 s : p.sizes) p.max_size = std::max(p.max_size, s);
    return p;
}

SliceProfile slice_profile(const ImplicitGraph& g, Vertex u, Vertex v,
                           const EngineLimits& limits) {
    DistanceField fu = confined_field(g, u, v, limits);
    return profile_from_dag(build_dag(g, fu, v));
}

CountResult count_geodesics(const GeodesicDag& dag, u64 cap) {
    constexpr u64 kSat = u64{1} << 62;
    auto sat_add = [](u64 a, u64 b) { return a > kSat - b ? kSat : a + b; };

    std::vector<u64> ways(dag.size(), 0);
    ways[0] = 1;  // nodes are cost-sorted, so node 0 is the source
    for (std::size_t i = 0; i < dag.size(); ++i) {
        if (ways[i] == 0) continue;
        for (std::int32_t s : dag.succ[i]) ways[s] = sat_add(ways[s], ways[i]);
    }
    u64 total = ways[dag.size() - 1];  // unique sink: the target itself
    return CountResult{total, total > cap};
}

CountResult count_geodesics(const ImplicitGraph& g, Vertex u, Vertex v, u64 cap,
                            const EngineLimits& limits) {
    DistanceField fu = confined_field(g, u, v, limits);
    return count_geodesics(build_dag(g, fu, v), cap);
}

bool for_each_geodesic(const GeodesicDag& dag, u64 cap,
                       const std::function<void(const std::vector<Vertex>&)>& fn) {
    // Iterative DFS over the DAG in successor order; the target is the unique
    // sink, so every maximal path ends there.
    std::vector<Vertex> path{dag.nodes[0]};
    std::vector<std::pair<std::int32_t, std::size_t>> stack{{0, 0}};
    u64 emitted = 0;
    while (!stack.empty()) {
        auto& [node, pos] = stack.back();
        if (dag.nodes[static_cast<std::size_t>(node)] == dag.to) {
            if (emitted >= cap) return false;
            fn(path);
            ++emitted;
            stack.pop_back();
            path.pop_back();
            continue;
        }
        if (pos >= dag.succ[static_cast<std::size_t>(node)].size()) {
            stack.pop_back();
            path.pop_back();
            continue;
        }
        std::int32_t next = dag.succ[static_cast<std::size_t>(node)][pos];
        ++pos;
        path.push_back(dag.nodes[static_cast<std::size_t>(next)]);
        stack.push_back({next, 0});
    }
    return true;
}

EnumerationResult enumerate_geodesics(const ImplicitGraph& g, Vertex u, Vertex v,
                                      u64 cap, const EngineLimits& limits) {
    DistanceField fu = confined_field(g, u, v, limits);
    GeodesicDag dag = build_dag(g, fu, v);
    EnumerationResult res;
    if (count_geodesics(dag, cap).cap_exceeded) {
        res.cap_exceeded = true;
        return res;
    }
    for_each_geodesic(dag, cap, [&](const std::vector<Vertex>& p) {
        res.paths.push_back(p);
    });
    return res;
}

i64 path_cost(const ImplicitGraph& g, const std::vector<Vertex>& path) {
    i64 total = 0;
    std::vector<WeightedNeighbor> nb;
    for (std::size_t i = 1; i < path.size(); ++i) {
        g.neighbors(path[i - 1], nb);
        bool found = false;
        for (const auto& n : nb)
            if (n.to == path[i]) {
                total = checked_add(total, n.cost);
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("path_cost: step is not an edge");
    }
    return total;
}

}  // namespace geoslice
