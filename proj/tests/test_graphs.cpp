#include "doctest.h"

#include <algorithm>

#include "geoslice/extensions.hpp"
#include "geoslice/graphs.hpp"

using namespace geoslice;

namespace {

i64 cost_to(const ImplicitGraph& g, Vertex from, Vertex to) {
    for (const auto& n : g.neighbors(from))
        if (n.to == to) return n.cost;
    return -1;
}

void check_symmetric(const ImplicitGraph& g, Vertex v) {
    for (const auto& n : g.neighbors(v)) {
        INFO("edge (", v.x, ",", v.y, ")-(", n.to.x, ",", n.to.y, ")");
        CHECK(cost_to(g, n.to, v) == n.cost);
    }
}

}  // namespace

TEST_CASE("weighted lattice neighbors") {
    GraphPtr h = make_fractal_lattice({3, 1, 2});

    for (const auto& n : h->neighbors({0, 0})) CHECK(n.cost == 1);

    // (1,0): horizontal edges ride the fast axis, vertical ones sit inside
    // open vertical 3-strips and are slow
    CHECK(cost_to(*h, {1, 0}, {2, 0}) == 1);
    CHECK(cost_to(*h, {1, 0}, {0, 0}) == 1);
    CHECK(cost_to(*h, {1, 0}, {1, 1}) == 2);
    CHECK(cost_to(*h, {1, 0}, {1, -1}) == 2);

    // (1,1) sits in an open 3-block: everything incident is slow
    auto nb = h->neighbors({1, 1});
    CHECK(nb.size() == 4);
    for (const auto& n : nb) CHECK(n.cost == 2);
}

TEST_CASE("every edge at a (pZ)^2 vertex is fast") {
    GraphPtr h = make_fractal_lattice({3, 1, 2});
    for (i64 x = -4; x <= 4; ++x)
        for (i64 y = -4; y <= 4; ++y)
            for (const auto& n : h->neighbors({3 * x, 3 * y}))
                CHECK(n.cost == 1);
    GraphPtr h5 = make_fractal_lattice({5, 2, 3});
    for (i64 x = -3; x <= 3; ++x)
        for (i64 y = -3; y <= 3; ++y)
            for (const auto& n : h5->neighbors({5 * x, 5 * y}))
                CHECK(n.cost == 2);
}

TEST_CASE("neighbor symmetry across all graph kinds") {
    std::vector<GraphPtr> graphs = {
        make_fractal_lattice({3, 1, 2}),
        make_fractal_lattice({5, 2, 5}),
        make_plain_grid(),
        make_triangular(),
        make_hex_brick(),
        make_hex_completion(),
        make_appendix(),
        build_reduction(make_reduction_spec({3, 1, 2}, 1), make_plain_grid()),
    };
    std::vector<Vertex> probes;
    for (i64 x = -12; x <= 30; x += 2)
        for (i64 y = -9; y <= 27; y += 3) probes.push_back({x, y});
    probes.push_back({22, 0});
    probes.push_back({33, 22});
    probes.push_back({0, 11});
    for (const GraphPtr& g : graphs)
        for (Vertex v : probes) check_symmetric(*g, v);
}

TEST_CASE("hex brick wall structure") {
    GraphPtr brick = make_hex_brick();
    for (i64 x = -5; x <= 5; ++x)
        for (i64 y = -5; y <= 5; ++y)
            CHECK(brick->neighbors({x, y}).size() == 3);
    // vertical edge present iff x+y even
    CHECK(cost_to(*brick, {0, 0}, {0, 1}) == 1);
    CHECK(cost_to(*brick, {0, 1}, {0, 2}) == -1);
    CHECK(cost_to(*brick, {1, 1}, {1, 2}) == 1);
}

TEST_CASE("hex completion equals the grid") {
    GraphPtr full = make_hex_completion();
    GraphPtr grid = make_plain_grid();
    for (i64 x = -6; x <= 6; ++x)
        for (i64 y = -6; y <= 6; ++y) {
            auto a = full->neighbors({x, y});
            auto b = grid->neighbors({x, y});
            auto key = [](const WeightedNeighbor& l, const WeightedNeighbor& r) {
                return l.to < r.to;
            };
            std::sort(a.begin(), a.end(), key);
            std::sort(b.begin(), b.end(), key);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].to == b[i].to);
        }
    CHECK(full->is_new_edge({0, 1}, {0, 2}));
    CHECK(!full->is_new_edge({0, 0}, {0, 1}));
    CHECK(!full->is_new_edge({0, 1}, {1, 1}));
}

TEST_CASE("triangular lattice") {
    GraphPtr tri = make_triangular();
    auto nb = tri->neighbors({0, 0});
    CHECK(nb.size() == 6);
    CHECK(cost_to(*tri, {0, 0}, {1, 1}) == 1);
    CHECK(cost_to(*tri, {0, 0}, {-1, -1}) == 1);
    CHECK(cost_to(*tri, {0, 0}, {1, -1}) == -1);
    for (const auto& n : nb) CHECK(z2_distance({0, 0}, n.to) <= 2);
    CHECK(tri->is_new_edge({0, 0}, {1, 1}));
    CHECK(!tri->is_new_edge({0, 0}, {1, 0}));
}
