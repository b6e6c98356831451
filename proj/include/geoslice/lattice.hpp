#pragma once

#include <vector>

#include "geoslice/core.hpp"

namespace geoslice {

// ---------------------------------------------------------------------------
// Scaled sublattice geometry: m-blocks, m-strips, parents, distinguished and
// aligned vertices, straight-path dilation.
// ---------------------------------------------------------------------------

// Closed m-block [m*bx, m*bx+m] x [m*by, m*by+m]; the open version strips the
// boundary.
struct BlockRef {
    i64 m = 1;   // scale
    i64 bx = 0;  // anchor in block units
    i64 by = 0;

    bool contains_closed(Vertex v) const {
        i64 x0 = checked_mul(m, bx), y0 = checked_mul(m, by);
        return v.x >= x0 && v.x <= x0 + m && v.y >= y0 && v.y <= y0 + m;
    }
    bool contains_open(Vertex v) const {
        i64 x0 = checked_mul(m, bx), y0 = checked_mul(m, by);
        return v.x > x0 && v.x < x0 + m && v.y > y0 && v.y < y0 + m;
    }

    friend auto operator<=>(const BlockRef&, const BlockRef&) = default;
};

// Horizontal strip Z x [m*index, m*index + m] (vertical analogous); the open
// version strips the two boundary lines.
struct StripRef {
    i64 m = 1;
    bool horizontal = true;
    i64 index = 0;

    bool contains_closed(Vertex v) const {
        i64 c = horizontal ? v.y : v.x;
        i64 lo = checked_mul(m, index);
        return c >= lo && c <= lo + m;
    }
    bool contains_open(Vertex v) const {
        i64 c = horizontal ? v.y : v.x;
        i64 lo = checked_mul(m, index);
        return c > lo && c < lo + m;
    }

    friend auto operator<=>(const StripRef&, const StripRef&) = default;
};

// The open m-block containing v, if any (v must avoid the (mZ) grid lines).
inline bool in_open_block(Vertex v, i64 m) {
    return floor_mod(v.x, m) != 0 && floor_mod(v.y, m) != 0;
}

inline BlockRef open_block_of(Vertex v, i64 m) {
    if (!in_open_block(v, m))
        throw std::domain_error("open_block_of: vertex lies on the m-grid");
    return BlockRef{m, floor_div(v.x, m), floor_div(v.y, m)};
}

inline bool in_sublattice(Vertex v, i64 m) {
    return floor_mod(v.x, m) == 0 && floor_mod(v.y, m) == 0;
}

// Containment in some open m-strip.
inline bool in_open_horizontal_strip(Vertex v, i64 m) { return floor_mod(v.y, m) != 0; }
inline bool in_open_vertical_strip(Vertex v, i64 m) { return floor_mod(v.x, m) != 0; }

// All vertices of (mZ)^2 at L-infinity distance strictly below m from u.
// Equivalently: the members of (mZ)^2 contained in every closed m-block that
// contains u. The result has 1, 2 or 4 entries.
inline std::vector<Vertex> m_parents(Vertex u, i64 m) {
    if (m < 1) throw std::domain_error("m_parents: scale must be positive");
    std::vector<Vertex> out;
    i64 qx = floor_div(u.x, m), qy = floor_div(u.y, m);
    for (i64 cx = qx; cx <= qx + 1; ++cx) {
        i64 px = checked_mul(cx, m);
        i64 dx = px - u.x;
        if (dx < 0) dx = -dx;
        if (dx >= m) continue;
        for (i64 cy = qy; cy <= qy + 1; ++cy) {
            i64 py = checked_mul(cy, m);
            i64 dy = py - u.y;
            if (dy < 0) dy = -dy;
            if (dy >= m) continue;
            out.push_back(Vertex{px, py});
        }
    }
    return out;
}

struct DistinguishedFlags {
    bool horizontal = false;  // x is a multiple of p
    bool vertical = false;    // y is a multiple of p
    bool any() const { return horizontal || vertical; }
};

inline DistinguishedFlags distinguished_flags(Vertex v, i64 p) {
    return DistinguishedFlags{floor_mod(v.x, p) == 0, floor_mod(v.y, p) == 0};
}

enum class Alignment { HorizontallyAligned, VerticallyAligned, Unaligned };

// Alignment of a pair of distinguished vertices: horizontally aligned means
// both are horizontally distinguished and their y coordinates share an open
// p-interval (in particular neither y is a multiple of p).
inline Alignment alignment(Vertex u, Vertex v, i64 p) {
    auto fu = distinguished_flags(u, p);
    auto fv = distinguished_flags(v, p);
    if (!fu.any() || !fv.any())
        throw std::domain_error("alignment: inputs must be distinguished");
    if (fu.horizontal && fv.horizontal && floor_mod(u.y, p) != 0 &&
        floor_mod(v.y, p) != 0 && floor_div(u.y, p) == floor_div(v.y, p))
        return Alignment::HorizontallyAligned;
    if (fu.vertical && fv.vertical && floor_mod(u.x, p) != 0 &&
        floor_mod(v.x, p) != 0 && floor_div(u.x, p) == floor_div(v.x, p))
        return Alignment::VerticallyAligned;
    return Alignment::Unaligned;
}

// p^n-dilation: scale every vertex by p^n and join consecutive images by
// straight unit-step paths. A single vertex dilates to its scaled image.
inline std::vector<Vertex> dilate_path(const std::vector<Vertex>& path, int n, i64 p) {
    if (path.empty()) return {};
    i64 s = checked_pow(p, n);
    std::vector<Vertex> out;
    out.push_back(Vertex{checked_mul(path[0].x, s), checked_mul(path[0].y, s)});
    for (std::size_t i = 1; i < path.size(); ++i) {
        i64 dx = checked_sub(path[i].x, path[i - 1].x);
        i64 dy = checked_sub(path[i].y, path[i - 1].y);
        if ((dx != 0 && dy != 0) || (dx == 0 && dy == 0) ||
            dx < -1 || dx > 1 || dy < -1 || dy > 1)
            throw std::domain_error("dilate_path: input is not a unit lattice path");
        for (i64 step = 0; step < s; ++step) {
            Vertex w = out.back();
            out.push_back(Vertex{w.x + dx, w.y + dy});
        }
    }
    return out;
}

}  // namespace geoslice
