#include "geoslice/extensions.hpp"

#include <numeric>

namespace geoslice {

void ReductionSpec::validate() const {
    weights.validate();
    if (M < 1) throw std::invalid_argument("reduction: M must be positive");
    if (W != weights.b)
        throw std::invalid_argument("reduction: W must equal the maximum weight");
    i64 floor_bound = checked_mul(checked_mul(10, W), checked_mul(M, M));
    if (N <= floor_bound)
        throw std::invalid_argument("reduction: N must exceed 10*W*M^2");
    i64 l = std::lcm(weights.a, weights.b);
    if (N % l != 0)
        throw std::invalid_argument(
            "reduction: N must be a common multiple of the weights");
}

i64 ReductionSpec::default_scale(const WeightParams& weights, i64 M) {
    i64 l = std::lcm(weights.a, weights.b);
    i64 floor_bound = checked_mul(checked_mul(10, weights.b), checked_mul(M, M));
    return checked_mul(l, floor_div(floor_bound, l) + 1);
}

namespace {

// Subdivision neighbors of v along one axis. `along` is v's coordinate on the
// axis of the run, `cross` the other coordinate (a multiple of N);
// `horizontal` selects which H-edge weight governs each run.
void axis_neighbors(const ReductionSpec& spec, i64 along, i64 cross,
                    bool horizontal, std::vector<WeightedNeighbor>& out) {
    const i64 N = spec.N;
    i64 cell = floor_div(along, N);
    i64 cross_h = floor_div(cross, N);  // exact: cross is a multiple of N
    // The run [N*cell, N*cell + N] and, when v sits on a run boundary, the
    // run ending there.
    for (i64 c = cell - (floor_mod(along, N) == 0 ? 1 : 0); c <= cell; ++c) {
        Vertex h1{horizontal ? c : cross_h, horizontal ? cross_h : c};
        Vertex h2{horizontal ? c + 1 : cross_h, horizontal ? cross_h : c + 1};
        i64 w = edge_weight(Edge(h1, h2), spec.weights);
        i64 step = N / w;
        i64 off = checked_sub(along, checked_mul(c, N));
        if (off % step != 0) continue;
        i64 i = off / step;
        if (i > 0) {
            i64 t = along - step;
            out.push_back({horizontal ? Vertex{t, cross} : Vertex{cross, t}, 1});
        }
        if (i < w) {
            i64 t = along + step;
            out.push_back({horizontal ? Vertex{t, cross} : Vertex{cross, t}, 1});
        }
    }
}

void reduction_new_neighbors(const ReductionSpec& spec, Vertex v,
                             std::vector<WeightedNeighbor>& out) {
    if (floor_mod(v.y, spec.N) == 0) axis_neighbors(spec, v.x, v.y, true, out);
    if (floor_mod(v.x, spec.N) == 0) axis_neighbors(spec, v.y, v.x, false, out);
}

class ReductionGraph final : public ImplicitGraph {
   public:
    ReductionGraph(const ReductionSpec& spec, GraphPtr base)
        : spec_(spec), base_(std::move(base)) {
        spec_.validate();
        if (base_->min_cost() != 1 || base_->max_cost() != 1)
            throw std::invalid_argument("reduction: base graph must be unweighted");
        if (base_->max_span() > spec_.M)
            throw std::invalid_argument("reduction: base edge span exceeds M");
    }

    void neighbors(Vertex v, std::vector<WeightedNeighbor>& out) const override {
        base_->neighbors(v, out);
        reduction_new_neighbors(spec_, v, out);
    }

    i64 max_span() const override { return spec_.N; }
    i64 min_cost() const override { return 1; }
    i64 max_cost() const override { return 1; }
    i64 detour() const override { return 1; }
    const char* kind_name() const override { return "reduction"; }

    bool is_new_edge(Vertex a, Vertex b) const override {
        std::vector<WeightedNeighbor> nn;
        reduction_new_neighbors(spec_, a, nn);
        for (const auto& n : nn)
            if (n.to == b) return true;
        return false;
    }

   private:
    ReductionSpec spec_;
    GraphPtr base_;
};

class AppendixGraph final : public ImplicitGraph {
   public:
    void neighbors(Vertex v, std::vector<WeightedNeighbor>& out) const override {
        out.clear();
        out.push_back({{v.x + 1, v.y}, 1});
        out.push_back({{v.x - 1, v.y}, 1});
        out.push_back({{v.x, v.y + 1}, 1});
        out.push_back({{v.x, v.y - 1}, 1});

        // Vertical runs live on columns 4x; horizontal runs on rows 4y.
        if (floor_mod(v.x, 4) == 0) {
            i64 X = floor_div(v.x, 4);
            if (floor_mod(v.y, 4) == 0) {
                i64 Y = floor_div(v.y, 4);
                out.push_back({{v.x, v.y + (appendix_splits_vertical(X, Y) ? 2 : 4)}, 1});
                out.push_back({{v.x, v.y - (appendix_splits_vertical(X, Y - 1) ? 2 : 4)}, 1});
            } else if (floor_mod(v.y, 4) == 2) {
                i64 Y = floor_div(v.y, 4);
                if (appendix_splits_vertical(X, Y)) {
                    out.push_back({{v.x, v.y + 2}, 1});
                    out.push_back({{v.x, v.y - 2}, 1});
                }
            }
        }
        if (floor_mod(v.y, 4) == 0) {
            i64 Y = floor_div(v.y, 4);
            if (floor_mod(v.x, 4) == 0) {
                i64 X = floor_div(v.x, 4);
                out.push_back({{v.x + (appendix_splits_horizontal(X, Y) ? 2 : 4), v.y}, 1});
                out.push_back({{v.x - (appendix_splits_horizontal(X - 1, Y) ? 2 : 4), v.y}, 1});
            } else if (floor_mod(v.x, 4) == 2) {
                i64 X = floor_div(v.x, 4);
                if (appendix_splits_horizontal(X, Y)) {
                    out.push_back({{v.x + 2, v.y}, 1});
                    out.push_back({{v.x - 2, v.y}, 1});
                }
            }
        }
    }

    i64 max_span() const override { return 4; }
    i64 min_cost() const override { return 1; }
    i64 max_cost() const override { return 1; }
    i64 detour() const override { return 1; }
    const char* kind_name() const override { return "appendix"; }

    bool is_new_edge(Vertex a, Vertex b) const override {
        return z2_distance(a, b) > 1;
    }
};

}  // namespace

bool appendix_splits_vertical(i64 x, i64 y) {
    if (x == 0) return false;
    i64 q = checked_pow(3, valuation(x, 3));
    return floor_mod(checked_sub(y, (q - 1) / 2), q) == 0;
}

bool appendix_splits_horizontal(i64 x, i64 y) { return appendix_splits_vertical(y, x); }

GraphPtr build_reduction(const ReductionSpec& spec, GraphPtr base) {
    return std::make_shared<ReductionGraph>(spec, std::move(base));
}

bool is_special_vertex(const ReductionSpec& spec, Vertex v) {
    std::vector<WeightedNeighbor> nn;
    reduction_new_neighbors(spec, v, nn);
    return !nn.empty();
}

GraphPtr make_appendix() { return std::make_shared<AppendixGraph>(); }

}  // namespace geoslice
