#include "doctest.h"

#include <algorithm>

#include "geoslice/lattice.hpp"

using namespace geoslice;

namespace {
bool contains_vertex(const std::vector<Vertex>& vs, Vertex v) {
    return std::find(vs.begin(), vs.end(), v) != vs.end();
}
}  // namespace

TEST_CASE("m_parents examples") {
    auto p1 = m_parents({0, 0}, 3);
    CHECK(p1.size() == 1);
    CHECK(p1[0] == Vertex{0, 0});

    auto p2 = m_parents({1, 2}, 3);
    CHECK(p2.size() == 4);
    CHECK(contains_vertex(p2, {0, 0}));
    CHECK(contains_vertex(p2, {0, 3}));
    CHECK(contains_vertex(p2, {3, 0}));
    CHECK(contains_vertex(p2, {3, 3}));

    auto p3 = m_parents({3, 1}, 3);
    CHECK(p3.size() == 2);
    CHECK(contains_vertex(p3, {3, 0}));
    CHECK(contains_vertex(p3, {3, 3}));

    CHECK_THROWS_AS(m_parents({0, 0}, 0), std::domain_error);
}

TEST_CASE("m_parents size and block containment") {
    for (i64 m : {2, 3, 9}) {
        for (i64 x = -2 * m; x <= 2 * m; ++x)
            for (i64 y = -2 * m; y <= 2 * m; ++y) {
                auto ps = m_parents({x, y}, m);
                CHECK((ps.size() == 1 || ps.size() == 2 || ps.size() == 4));
                // each parent is within strict L-infinity distance m, and it
                // lies in every closed m-block containing the child
                i64 qx = floor_div(x, m), qy = floor_div(y, m);
                for (Vertex par : ps) {
                    CHECK(linf_distance(par, {x, y}) < m);
                    for (i64 bx = qx - (floor_mod(x, m) == 0 ? 1 : 0); bx <= qx; ++bx)
                        for (i64 by = qy - (floor_mod(y, m) == 0 ? 1 : 0); by <= qy; ++by)
                            CHECK(BlockRef{m, bx, by}.contains_closed(par));
                }
            }
    }
}

TEST_CASE("distinguished flags") {
    CHECK(distinguished_flags({0, 1}, 3).horizontal);
    CHECK(!distinguished_flags({0, 1}, 3).vertical);
    CHECK(!distinguished_flags({1, 1}, 3).any());
    auto f = distinguished_flags({3, 6}, 3);
    CHECK(f.horizontal);
    CHECK(f.vertical);
}

TEST_CASE("alignment") {
    CHECK(alignment({0, 1}, {9, 2}, 3) == Alignment::HorizontallyAligned);
    CHECK(alignment({0, 0}, {3, 0}, 3) == Alignment::Unaligned);
    CHECK(alignment({3, 1}, {3, 1}, 3) == Alignment::HorizontallyAligned);
    CHECK(alignment({1, 3}, {2, 9}, 3) == Alignment::VerticallyAligned);
    CHECK(alignment({0, 1}, {1, 3}, 3) == Alignment::Unaligned);
    CHECK_THROWS_AS(alignment({1, 1}, {0, 0}, 3), std::domain_error);
}

TEST_CASE("blocks and strips") {
    CHECK(in_open_block({1, 1}, 3));
    CHECK(!in_open_block({0, 1}, 3));
    CHECK(in_sublattice({9, -3}, 3));
    CHECK(!in_sublattice({9, -2}, 3));
    BlockRef b{3, 0, 0};
    CHECK(b.contains_closed({0, 0}));
    CHECK(b.contains_closed({3, 3}));
    CHECK(!b.contains_open({0, 1}));
    CHECK(b.contains_open({2, 2}));
    CHECK(open_block_of({4, 5}, 3) == BlockRef{3, 1, 1});
    CHECK_THROWS_AS(open_block_of({3, 5}, 3), std::domain_error);
    CHECK(in_open_horizontal_strip({7, 2}, 3));
    CHECK(!in_open_horizontal_strip({7, 3}, 3));

    StripRef s{3, true, 1};  // Z x [3, 6]
    CHECK(s.contains_closed({100, 3}));
    CHECK(s.contains_closed({-4, 6}));
    CHECK(!s.contains_open({0, 3}));
    CHECK(s.contains_open({0, 4}));
    StripRef vcol{9, false, -1};  // [-9, 0] x Z
    CHECK(vcol.contains_open({-5, 1000}));
    CHECK(!vcol.contains_open({0, 0}));
}

TEST_CASE("dilate_path") {
    auto d1 = dilate_path({{0, 0}, {1, 0}}, 1, 3);
    CHECK(d1 == std::vector<Vertex>{{0, 0}, {1, 0}, {2, 0}, {3, 0}});

    auto d2 = dilate_path({{2, 5}}, 1, 3);
    CHECK(d2 == std::vector<Vertex>{{6, 15}});

    auto d3 = dilate_path({{0, 0}, {0, 1}, {1, 1}}, 1, 3);
    CHECK(d3.size() == 7);
    CHECK(d3[3] == Vertex{0, 3});
    CHECK(d3.back() == Vertex{3, 3});

    CHECK_THROWS_AS(dilate_path({{0, 0}, {1, 1}}, 1, 3), std::domain_error);
    CHECK_THROWS_AS(dilate_path({{0, 0}, {0, 0}}, 1, 3), std::domain_error);

    // endpoints scale by p^n, length scales by p^n
    std::vector<Vertex> path{{1, 1}, {2, 1}, {2, 2}, {2, 3}};
    for (int n : {0, 1, 2}) {
        auto d = dilate_path(path, n, 3);
        i64 s = checked_pow(3, n);
        CHECK(d.front() == Vertex{path.front().x * s, path.front().y * s});
        CHECK(d.back() == Vertex{path.back().x * s, path.back().y * s});
        CHECK(static_cast<i64>(d.size()) - 1 ==
              s * (static_cast<i64>(path.size()) - 1));
    }
}
