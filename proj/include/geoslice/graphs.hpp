#pragma once

#include <memory>
#include <vector>

#include "geoslice/weights.hpp"

namespace geoslice {

struct WeightedNeighbor {
    Vertex to;
    i64 cost;
};

// A graph on the vertex set Z^2, presented implicitly through neighbor
// enumeration. Instances are immutable and safe to query from any number of
// threads. The metadata accessors feed the window-confinement argument:
//   max_span   = largest Z^2 distance across any edge,
//   min_cost   = smallest edge cost,
//   max_cost   = largest edge cost,
//   detour     = an upper bound D with d_G(u, v) <= D * d_Z2(u, v).
class ImplicitGraph {
   public:
    virtual ~ImplicitGraph() = default;

    // Replaces `out` with the neighbors of v. Symmetric: u appears in
    // neighbors(v) iff v appears in neighbors(u), with equal cost.
    virtual void neighbors(Vertex v, std::vector<WeightedNeighbor>& out) const = 0;

    virtual i64 max_span() const = 0;
    virtual i64 min_cost() const = 0;
    virtual i64 max_cost() const = 0;
    virtual i64 detour() const = 0;
    virtual const char* kind_name() const = 0;

    // True for edges added on top of the base lattice (used by exporters).
    virtual bool is_new_edge(Vertex, Vertex) const { return false; }

    std::vector<WeightedNeighbor> neighbors(Vertex v) const {
        std::vector<WeightedNeighbor> out;
        neighbors(v, out);
        return out;
    }
};

using GraphPtr = std::shared_ptr<const ImplicitGraph>;

// The two-weight lattice H_{a,b}: unit grid edges, fast edges cost a, slow
// edges cost b.
GraphPtr make_fractal_lattice(const WeightParams& params);

// Unit grid, all edges cost 1.
GraphPtr make_plain_grid();

// Grid plus one diagonal (x,y)-(x+1,y+1) per unit cell; 6-regular.
GraphPtr make_triangular();

// Brick-wall embedding of the hexagonal lattice on Z^2: all horizontal unit
// edges, vertical edge (x,y)-(x,y+1) present iff x+y is even; 3-regular.
GraphPtr make_hex_brick();

// The brick-wall graph with the missing vertical chords added back; equals
// the plain grid edge-for-edge, with the chords flagged as new.
GraphPtr make_hex_completion();

}  // namespace geoslice
