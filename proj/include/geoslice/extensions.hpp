#pragma once

#include "geoslice/graphs.hpp"

namespace geoslice {

// Parameters of the subdivision construction that emulates a weighted lattice
// H inside an unweighted extension: a weight-w edge of H between v1 and v2
// becomes w collinear unit-cost edges of Z^2-length N/w between N*v1 and N*v2.
struct ReductionSpec {
    WeightParams weights;  // the H being emulated
    i64 M = 1;             // extension constant of the base graph L
    i64 W = 2;             // maximum weight of H (= weights.b)
    i64 N = 0;             // scale; must exceed 10*W*M^2 and be a common
                           // multiple of the weights of H

    void validate() const;

    // Smallest common multiple of {a, b} strictly exceeding 10*W*M^2.
    static i64 default_scale(const WeightParams& weights, i64 M);
};

inline ReductionSpec make_reduction_spec(const WeightParams& weights, i64 M,
                                         i64 N = 0) {
    ReductionSpec spec;
    spec.weights = weights;
    spec.M = M;
    spec.W = weights.b;
    spec.N = N > 0 ? N : ReductionSpec::default_scale(weights, M);
    spec.validate();
    return spec;
}

// The unweighted extension of `base` carrying the subdivided image of H on
// (N Z)^2. `base` must be an unweighted bounded extension of the grid with
// constant spec.M (the plain grid for M = 1).
GraphPtr build_reduction(const ReductionSpec& spec, GraphPtr base);

// Endpoints of new edges of a reduction graph.
bool is_special_vertex(const ReductionSpec& spec, Vertex v);

// The explicit extension with new edges of lengths two and four on the
// scale-4 grid: the vertical run (4x,4y)..(4x,4y+4) is split at its midpoint
// when x != 0 and 3^val3(x) divides y - (3^val3(x)-1)/2, and kept as a single
// length-4 edge otherwise; horizontal runs use the same rule with x and y
// swapped. All unit grid edges are present.
GraphPtr make_appendix();

// Split predicates of the explicit construction, exposed for the verifier.
bool appendix_splits_vertical(i64 x, i64 y);
bool appendix_splits_horizontal(i64 x, i64 y);

}  // namespace geoslice
