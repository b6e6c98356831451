#pragma once

#include <cmath>

#include "geoslice/weights.hpp"

namespace geoslice {

// Exact rational with 64-bit parts, used for the algebraic bound values so
// that integer comparisons against them never round.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // value <= num/den, exactly.
    bool at_least(i64 value) const {
        return static_cast<__int128>(value) * den <= static_cast<__int128>(num);
    }
};

// Integer comparison against a real-valued bound: value <= bound up to a
// 1e-9 guard, so a last-ulp wobble in the log cannot flip a verdict.
inline bool within_real_bound(i64 value, double bound) {
    return static_cast<double>(value) <= bound + 1e-9;
}

inline i64 ceil_with_guard(double bound) {
    return static_cast<i64>(std::ceil(bound + 1e-9));
}

// The quantitative slice bounds of the two-weight lattice, as functions of
// (p, a, b):
//   s1:          80 b^2 p^2 / a^2        (ends of a geodesic)
//   s2 per level: 16 p (p + 3b/a)
//   level count: 2 log_p(18 b p / a) + 1
//   s2 total:    64 p (p + 3b/a) log_p(18 b p^2 / a)
//   grand total: 2 * s1 + s2 total
// plus the report-only envelope 10^6 N^11 B for subdivision extensions.
struct BoundSet {
    WeightParams params;
    Rational s1_bound;
    Rational s2n_bound;
    double nH_bound = 0;
    double s2_bound = 0;
    double total_bound = 0;

    static BoundSet evaluate(const WeightParams& w) {
        w.validate();
        BoundSet bs;
        bs.params = w;
        bs.s1_bound =
            Rational{checked_mul(80, checked_mul(checked_mul(w.b, w.b),
                                                 checked_mul(w.p, w.p))),
                     checked_mul(w.a, w.a)};
        // 16 p (p + 3b/a) = 16 p (pa + 3b) / a
        bs.s2n_bound = Rational{
            checked_mul(checked_mul(16, w.p),
                        checked_add(checked_mul(w.p, w.a), checked_mul(3, w.b))),
            w.a};
        double p = static_cast<double>(w.p);
        double a = static_cast<double>(w.a);
        double b = static_cast<double>(w.b);
        auto log_p = [p](double x) { return std::log(x) / std::log(p); };
        bs.nH_bound = 2.0 * log_p(18.0 * b * p / a) + 1.0;
        bs.s2_bound = 64.0 * p * (p + 3.0 * b / a) * log_p(18.0 * b * p * p / a);
        bs.total_bound = 2.0 * bs.s1_bound.to_double() + bs.s2_bound;
        return bs;
    }
};

// 10^6 N^11 B: the slice envelope a subdivision extension inherits from the
// weighted lattice it emulates (B = slice bound of that lattice). Far too
// large to ever bind at desk scale; reported, not asserted against tightly.
inline double reduction_slice_bound(i64 scale_n, double emulated_bound) {
    return 1e6 * std::pow(static_cast<double>(scale_n), 11.0) * emulated_bound;
}

}  // namespace geoslice
