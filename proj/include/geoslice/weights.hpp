#pragma once

#include "geoslice/core.hpp"

namespace geoslice {

// Parameters of the two-weight lattice H: an odd modulus p >= 3 and weights
// a < b given to fast and slow edges respectively.
struct WeightParams {
    i64 p = 3;
    i64 a = 1;
    i64 b = 2;

    void validate() const {
        if (p < 3 || p % 2 == 0)
            throw std::invalid_argument("weights: p must be odd and >= 3");
        if (a < 1 || a >= b)
            throw std::invalid_argument("weights: need 0 < a < b");
    }

    friend auto operator<=>(const WeightParams&, const WeightParams&) = default;
};

enum class EdgeClass { Fast, Slow };

// Undirected unit edge, stored with the lexicographically smaller endpoint
// first so symmetry is structural.
struct Edge {
    Vertex u, v;

    Edge(Vertex a, Vertex b) {
        if (b < a) std::swap(a, b);
        u = a;
        v = b;
    }

    bool is_horizontal() const { return u.y == v.y; }
    bool is_unit() const { return z2_distance(u, v) == 1 && (u.x == v.x || u.y == v.y); }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

namespace detail {

// A horizontal edge with left endpoint (c, d) is slow iff, writing
// n = valuation(d, p) (d = 0 never qualifies: the line coordinate must be
// p^n times a unit mod p, which pins the level), the offset satisfies
// c = p^n*x + (p^n - 1)/2 for some integer x. Slow edges are the middle
// edges of the p^n-runs on lines of exact p-depth n.
inline bool slow_closed_form(i64 c, i64 d, i64 p) {
    if (d == 0) return false;
    int n = valuation(d, p);
    i64 pn = checked_pow(p, n);
    return floor_mod(checked_sub(c, (pn - 1) / 2), pn) == 0;
}

}  // namespace detail

inline EdgeClass classify_edge(const Edge& e, i64 p) {
    if (!e.is_unit())
        throw std::domain_error("classify_edge: not a unit lattice edge");
    if (e.is_horizontal())
        return detail::slow_closed_form(e.u.x, e.u.y, p) ? EdgeClass::Slow
                                                         : EdgeClass::Fast;
    // Vertical edges are the x<->y reflection of the horizontal pattern.
    return detail::slow_closed_form(e.u.y, e.u.x, p) ? EdgeClass::Slow
                                                     : EdgeClass::Fast;
}

inline i64 edge_weight(const Edge& e, const WeightParams& w) {
    return classify_edge(e, w.p) == EdgeClass::Fast ? w.a : w.b;
}

// Weights of the graph emulated by (p^n Z)^2 inside H_{a,b}: a p^n-straight
// path costs p^n*a when the scaled-down edge is fast and p^n*a - a + b when
// it is slow.
inline WeightParams scaled_params(const WeightParams& w, int n) {
    if (n < 0) throw std::domain_error("scaled_params: negative level");
    i64 pn = checked_pow(w.p, n);
    return WeightParams{w.p, checked_mul(pn, w.a),
                        checked_add(checked_sub(checked_mul(pn, w.a), w.a), w.b)};
}

}  // namespace geoslice
