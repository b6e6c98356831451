#include "doctest.h"

#include <algorithm>

#include "geoslice/segments.hpp"

using namespace geoslice;

TEST_CASE("sublattice level of a vertex") {
    CHECK(sublattice_level({1, 2}, 3) == 0);
    CHECK(sublattice_level({3, 6}, 3) == 1);
    CHECK(sublattice_level({9, 18}, 3) == 2);
    CHECK(sublattice_level({9, 3}, 3) == 1);
    CHECK(sublattice_level({0, 9}, 3) == 2);
    CHECK(sublattice_level({27, 0}, 3) == 3);
    CHECK(sublattice_level({0, 0}, 3) == -1);  // origin: every level
}

TEST_CASE("segmentation of simple paths") {
    // through the origin: infinite level, origin in the middle segment
    Segmentation s0 = segment_geodesic({{1, 0}, {0, 0}, {0, 1}}, 3);
    CHECK(s0.passes_origin);
    CHECK(s0.u_tilde == Vertex{0, 0});
    CHECK(s0.v_tilde == Vertex{0, 0});
    CHECK(s0.first_idx == 1);
    CHECK(s0.last_idx == 1);

    Segmentation s1 = segment_geodesic({{1, 1}, {2, 1}}, 3);
    CHECK(!s1.passes_origin);
    CHECK(s1.level == 0);
    CHECK(s1.u_tilde == Vertex{1, 1});
    CHECK(s1.v_tilde == Vertex{2, 1});
    CHECK(s1.first_idx == 0);
    CHECK(s1.last_idx == 1);  // leading and trailing segments are empty

    Segmentation s2 = segment_geodesic({{3, 3}, {3, 2}, {3, 1}, {3, 0}}, 3);
    CHECK(!s2.passes_origin);
    CHECK(s2.level == 1);
    CHECK(s2.u_tilde == Vertex{3, 3});
    CHECK(s2.v_tilde == Vertex{3, 0});
    CHECK(s2.first_idx == 0);
    CHECK(s2.last_idx == 3);

    // interior deepest vertex splits off nonempty end segments
    Segmentation s3 = segment_geodesic({{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3},
                                        {4, 3}}, 3);
    CHECK(s3.level == 1);
    CHECK(s3.u_tilde == Vertex{3, 3});
    CHECK(s3.v_tilde == Vertex{3, 3});
    CHECK(s3.first_idx == 4);
    CHECK(s3.last_idx == 4);

    CHECK_THROWS_AS(segment_geodesic({}, 3), std::invalid_argument);
}

TEST_CASE("partial slices of a degenerate pair") {
    GraphPtr h = make_fractal_lattice({3, 1, 2});
    PartialSlices ps = partial_slices(*h, {2, 2}, {2, 2}, 1, 3, 1000);
    CHECK(!ps.cap_exceeded);
    CHECK(ps.s1.empty());
    CHECK(ps.s2.empty());
    CHECK(ps.s3.empty());
}

TEST_CASE("partial slices cover the full slice") {
    GraphPtr h = make_fractal_lattice({3, 1, 2});
    Vertex u{0, 0}, v{9, 9};
    Window w = window_for(*h, u, v);
    DistanceField fu = dist_map(*h, u, w);
    DistanceField fv = dist_map(*h, v, w);
    DistanceField cfu = confined_field(*h, u, v);
    PartialProfile prof = partial_profile(*h, cfu, v, 3, 100000);
    REQUIRE(!prof.cap_exceeded);
    REQUIRE(prof.distance == fu.at(v));

    for (i64 k = 0; k <= prof.distance; ++k) {
        std::size_t kk = static_cast<std::size_t>(k);
        std::vector<Vertex> merged;
        for (const auto& part : {prof.s1[kk], prof.s2[kk], prof.s3[kk]})
            merged.insert(merged.end(), part.begin(), part.end());
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        CHECK(merged == slice_from_fields(fu, fv, k));

        // the per-level middle sets partition s2
        std::vector<Vertex> levels_merged;
        for (const auto& [level, sets] : prof.s2n)
            levels_merged.insert(levels_merged.end(), sets[kk].begin(),
                                 sets[kk].end());
        std::sort(levels_merged.begin(), levels_merged.end());
        levels_merged.erase(
            std::unique(levels_merged.begin(), levels_merged.end()),
            levels_merged.end());
        CHECK(levels_merged == prof.s2[kk]);
    }

    // at k = d the endpoint sits in the trailing segment
    std::size_t dd = static_cast<std::size_t>(prof.distance);
    CHECK(std::find(prof.s3[dd].begin(), prof.s3[dd].end(), v) != prof.s3[dd].end());
    // at k = 0 the start sits in the leading segment
    CHECK(std::find(prof.s1[0].begin(), prof.s1[0].end(), u) != prof.s1[0].end());
}

TEST_CASE("partial slices respect the cap") {
    GraphPtr grid = make_plain_grid();
    PartialSlices ps = partial_slices(*grid, {0, 0}, {6, 6}, 3, 3, 10);
    CHECK(ps.cap_exceeded);  // C(12,6) = 924 > 10
}
