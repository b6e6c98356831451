#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace geoslice {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// ---------------------------------------------------------------------------
// Checked integer arithmetic. Coordinates live in signed 64-bit; silent
// wraparound would corrupt edge classifications, so every scaling and window
// computation goes through these.
// ---------------------------------------------------------------------------

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in add");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in sub");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in mul");
    return r;
}

// p^n, overflow-checked.
inline i64 checked_pow(i64 p, int n) {
    if (p < 0 || n < 0) throw std::domain_error("checked_pow: negative input");
    i64 r = 1;
    for (int i = 0; i < n; ++i) r = checked_mul(r, p);
    return r;
}

// Division rounding toward negative infinity (b > 0).
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Remainder in [0, b) for b > 0.
inline i64 floor_mod(i64 a, i64 b) {
    i64 m = a % b;
    if (m < 0) m += b;
    return m;
}

// Largest exponent e with p^e dividing n. Undefined at zero.
inline int valuation(i64 n, i64 p) {
    if (n == 0) throw std::domain_error("valuation undefined at zero");
    if (p < 2) throw std::domain_error("valuation requires p >= 2");
    u64 m = (n < 0) ? ~static_cast<u64>(n) + 1 : static_cast<u64>(n);
    int e = 0;
    while (m % static_cast<u64>(p) == 0) {
        m /= static_cast<u64>(p);
        ++e;
    }
    return e;
}

// ---------------------------------------------------------------------------
// Vertex and Window
// ---------------------------------------------------------------------------

struct Vertex {
    i64 x = 0;
    i64 y = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline i64 z2_distance(Vertex a, Vertex b) {
    i64 dx = checked_sub(a.x, b.x);
    i64 dy = checked_sub(a.y, b.y);
    return checked_add(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
}

inline i64 linf_distance(Vertex a, Vertex b) {
    i64 dx = checked_sub(a.x, b.x);
    i64 dy = checked_sub(a.y, b.y);
    if (dx < 0) dx = -dx;
    if (dy < 0) dy = -dy;
    return dx > dy ? dx : dy;
}

struct VertexHash {
    std::size_t operator()(const Vertex& v) const noexcept {
        u64 h = static_cast<u64>(v.x) * 0x9e3779b97f4a7c15ULL;
        h ^= static_cast<u64>(v.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Axis-aligned finite truncation of the lattice. Extents are capped at 2^31
// per axis.
struct Window {
    i64 x_min = 0, x_max = 0, y_min = 0, y_max = 0;

    static constexpr i64 kMaxExtent = i64{1} << 31;

    void validate() const {
        if (x_min > x_max || y_min > y_max)
            throw std::invalid_argument("window: empty range");
        if (checked_sub(x_max, x_min) >= kMaxExtent ||
            checked_sub(y_max, y_min) >= kMaxExtent)
            throw std::invalid_argument("window: extent exceeds 2^31");
    }

    bool contains(Vertex v) const {
        return v.x >= x_min && v.x <= x_max && v.y >= y_min && v.y <= y_max;
    }

    i64 width() const { return checked_add(checked_sub(x_max, x_min), 1); }
    i64 height() const { return checked_add(checked_sub(y_max, y_min), 1); }
    u64 cells() const {
        return static_cast<u64>(width()) * static_cast<u64>(height());
    }

    Window inflated(i64 dx, i64 dy) const {
        return Window{checked_sub(x_min, dx), checked_add(x_max, dx),
                      checked_sub(y_min, dy), checked_add(y_max, dy)};
    }

    friend auto operator<=>(const Window&, const Window&) = default;
};

inline Window bounding_box(Vertex a, Vertex b) {
    return Window{a.x < b.x ? a.x : b.x, a.x < b.x ? b.x : a.x,
                  a.y < b.y ? a.y : b.y, a.y < b.y ? b.y : a.y};
}

// Thrown when a requested field would exceed the configured memory cap; the
// caller learns how big the window would have had to be.
struct ResourceError : std::runtime_error {
    u64 required_cells;
    explicit ResourceError(u64 cells)
        : std::runtime_error("window exceeds memory cap; required cells = " +
                             std::to_string(cells)),
          required_cells(cells) {}
};

}  // namespace geoslice
