#include "geoslice/graphs.hpp"

namespace geoslice {

namespace {

class FractalLattice final : public ImplicitGraph {
   public:
    explicit FractalLattice(const WeightParams& params) : params_(params) {
        params_.validate();
    }

    void neighbors(Vertex v, std::vector<WeightedNeighbor>& out) const override {
        out.clear();
        const Vertex around[4] = {{v.x + 1, v.y}, {v.x - 1, v.y},
                                  {v.x, v.y + 1}, {v.x, v.y - 1}};
        for (Vertex w : around)
            out.push_back({w, edge_weight(Edge(v, w), params_)});
    }

    i64 max_span() const override { return 1; }
    i64 min_cost() const override { return params_.a; }
    i64 max_cost() const override { return params_.b; }
    i64 detour() const override { return params_.b; }
    const char* kind_name() const override { return "fractal"; }

   private:
    WeightParams params_;
};

class PlainGrid final : public ImplicitGraph {
   public:
    void neighbors(Vertex v, std::vector<WeightedNeighbor>& out) const override {
        out.clear();
        out.push_back({{v.x + 1, v.y}, 1});
        out.push_back({{v.x - 1, v.y}, 1});
        out.push_back({{v.x, v.y + 1}, 1});
        out.push_back({{v.x, v.y - 1}, 1});
    }

    i64 max_span() const override { return 1; }
    i64 min_cost() const override { return 1; }
    i64 max_cost() const override { return 1; }
    i64 detour() const override { return 1; }
    const char* kind_name() const override { return "grid"; }
};

class Triangular final : public ImplicitGraph {
   public:
    void neighbors(Vertex v, std::vector<WeightedNeighbor>& out) const override {
        out.clear();
        out.push_back({{v.x + 1, v.y}, 1});
        out.push_back({{v.x - 1, v.y}, 1});
        out.push_back({{v.x, v.y + 1}, 1});
        out.push_back({{v.x, v.y - 1}, 1});
        out.push_back({{v.x + 1, v.y + 1}, 1});
        out.push_back({{v.x - 1, v.y - 1}, 1});
    }

    i64 max_span() const override { return 2; }
    i64 min_cost() const override { return 1; }
    i64 max_cost() const override { return 1; }
    i64 detour() const override { return 1; }
    const char* kind_name() const override { return "triangular"; }

    bool is_new_edge(Vertex a, Vertex b) const override {
        return a.x != b.x && a.y != b.y;
    }
};

class HexBrick final : public ImplicitGraph {
   public:
    void neighbors(Vertex v, std::vector<WeightedNeighbor>& out) const override {
        out.clear();
        out.push_back({{v.x + 1, v.y}, 1});
        out.push_back({{v.x - 1, v.y}, 1});
        if (floor_mod(v.x + v.y, 2) == 0)
            out.push_back({{v.x, v.y + 1}, 1});
        else
            out.push_back({{v.x, v.y - 1}, 1});
    }

    i64 max_span() const override { return 1; }
    i64 min_cost() const override { return 1; }
    i64 max_cost() const override { return 1; }
    // The grid edges absent here have brick-distance 3, so any grid path
    // converts to a brick path at most three times as long.
    i64 detour() const override { return 3; }
    const char* kind_name() const override { return "hexbrick"; }
};

class HexCompletion final : public ImplicitGraph {
   public:
    void neighbors(Vertex v, std::vector<WeightedNeighbor>& out) const override {
        out.clear();
        out.push_back({{v.x + 1, v.y}, 1});
        out.push_back({{v.x - 1, v.y}, 1});
        out.push_back({{v.x, v.y + 1}, 1});
        out.push_back({{v.x, v.y - 1}, 1});
    }

    i64 max_span() const override { return 1; }
    i64 min_cost() const override { return 1; }
    i64 max_cost() const override { return 1; }
    i64 detour() const override { return 1; }
    const char* kind_name() const override { return "hexfull"; }

    // The chords restoring the grid from the brick wall: vertical edges at
    // x+y odd.
    bool is_new_edge(Vertex a, Vertex b) const override {
        if (a.x != b.x) return false;
        Vertex lo = a.y < b.y ? a : b;
        return floor_mod(lo.x + lo.y, 2) != 0;
    }
};

}  // namespace

GraphPtr make_fractal_lattice(const WeightParams& params) {
    return std::make_shared<FractalLattice>(params);
}
GraphPtr make_plain_grid() { return std::make_shared<PlainGrid>(); }
GraphPtr make_triangular() { return std::make_shared<Triangular>(); }
GraphPtr make_hex_brick() { return std::make_shared<HexBrick>(); }
GraphPtr make_hex_completion() { return std::make_shared<HexCompletion>(); }

}  // namespace geoslice
