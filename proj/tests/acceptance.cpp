// Acceptance suite: one line per criterion, every scale and tolerance pinned
// here. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "geoslice/exporters.hpp"
#include "geoslice/report.hpp"
#include "geoslice/verify.hpp"

using namespace geoslice;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(1);
    out << s << "s";
    return out.str();
}

Outcome from_check(const CheckResult& r, double elapsed, double budget) {
    Outcome o;
    o.pass = r.passed() && elapsed <= budget;
    std::ostringstream d;
    d << "instances=" << r.instances;
    if (r.skipped_cap) d << " skipped_cap=" << r.skipped_cap;
    if (r.failure_count) d << " failures=" << r.failure_count;
    for (const auto& [k, v] : r.empirical) d << ' ' << k << '=' << v;
    if (elapsed > budget) d << " OVER TIME BUDGET " << fmt_seconds(budget);
    if (!r.failures.empty()) d << " | first: " << r.failures.front().detail;
    o.detail = d.str();
    return o;
}

Outcome merge(std::initializer_list<Outcome> parts) {
    Outcome o;
    o.pass = true;
    for (const Outcome& p : parts) {
        o.pass = o.pass && p.pass;
        if (!o.detail.empty()) o.detail += "; ";
        o.detail += p.detail;
    }
    return o;
}

}  // namespace

int main() {
    int failures = 0;
    auto run = [&](int id, const std::string& label,
                   const std::function<Outcome()>& body) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": "
                  << label << " [" << fmt_seconds(elapsed) << "] " << o.detail
                  << std::endl;
        if (!o.pass) ++failures;
    };

    run(1, "classifier equivalence (p=3 on [-729,729]^2, p=5 on [-625,625]^2)",
        [] {
            auto t0 = std::chrono::steady_clock::now();
            CheckConfig c3;
            c3.params = {3, 1, 2};
            c3.extent = 729;
            CheckResult r3 = check_classifier_equivalence(c3);
            CheckConfig c5;
            c5.params = {5, 1, 2};
            c5.extent = 625;
            CheckResult r5 = check_classifier_equivalence(c5);
            double elapsed = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
            return merge({from_check(r3, elapsed, 120.0),
                          from_check(r5, elapsed, 120.0)});
        });

    run(2, "scaling identity for n=1,2 (200 pairs, |coords| <= 10, count cap 1e4)",
        [] {
            auto t0 = std::chrono::steady_clock::now();
            CheckConfig cfg;
            cfg.params = {3, 1, 2};
            cfg.samples = 200;
            cfg.coord_bound = 10;
            cfg.enumeration_cap = 10000;
            CheckResult r1 = check_fractal_inheritance(cfg, 1);
            CheckResult r2 = check_fractal_inheritance(cfg, 2);
            double elapsed = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
            return merge({from_check(r1, elapsed, 300.0),
                          from_check(r2, elapsed, 300.0)});
        });

    run(3, "distinguished-geodesic closure (exhaustive unaligned pairs in [0,27]^2)",
        [] {
            CheckConfig cfg;
            cfg.params = {3, 1, 2};
            cfg.extent = 27;
            cfg.enumeration_cap = 100000;
            return from_check(check_distinguished_geodesics(cfg), 0.0, 1e9);
        });

    run(4, "strip classification (n=1 exhaustive [0,27]^2; n=2 sampled [0,81]^2; cap 1e5)",
        [] {
            CheckConfig c1;
            c1.params = {3, 1, 2};
            c1.extent = 27;
            c1.enumeration_cap = 100000;
            CheckResult r1 = check_strip_classification(c1, 1, true);
            CheckConfig c2 = c1;
            c2.extent = 81;
            c2.samples = 400;
            CheckResult r2 = check_strip_classification(c2, 2, false);
            return merge({from_check(r1, 0.0, 1e9), from_check(r2, 0.0, 1e9)});
        });

    run(5, "slice bound <= 14853 (exhaustive [-27,27]^2 plus 500 pairs to separation 200)",
        [] {
            auto t0 = std::chrono::steady_clock::now();
            CheckConfig cfg;
            cfg.params = {3, 1, 2};
            cfg.extent = 27;
            cfg.samples = 500;
            cfg.max_separation = 200;
            cfg.enumeration_cap = 100000;
            CheckResult r = check_slice_bounds(cfg);
            double elapsed = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
            Outcome o = from_check(r, elapsed, 1800.0);
            o.pass = o.pass && r.bound_values.at("total_bound_ceiling") == 14853.0;
            return o;
        });

    run(6, "scale stability over bands [2*3^j, 4*3^j], j=1..4, with grid control",
        [] {
            CheckConfig cfg;
            cfg.params = {3, 1, 2};
            cfg.samples = 128;  // 16 pairs per band per graph
            return from_check(check_scale_stability(cfg), 0.0, 1e9);
        });

    run(7, "reduction correctness (N=22: distances for |coords| <= 5, spans, special closure)",
        [] {
            CheckConfig cfg;
            cfg.params = {3, 1, 2};
            cfg.coord_bound = 5;
            cfg.samples = 2;  // includes the two long-geodesic sweeps
            cfg.enumeration_cap = 100000;
            ReductionSpec spec = make_reduction_spec({3, 1, 2}, 1, 22);
            return from_check(check_reduction_properties(spec, cfg), 0.0, 1e9);
        });

    run(8, "baselines (ball formula r <= 50, diagonal slices x <= 12, counts C(2x,x) x <= 10)",
        [] { return from_check(check_baselines(CheckConfig{}), 0.0, 1e9); });

    run(9, "hex/triangular/explicit-extension golden checks", [] {
        CheckConfig cfg;
        cfg.params = {3, 1, 2};
        Outcome tilings = from_check(check_hex_tri_appendix(cfg), 0.0, 1e9);

        std::ifstream f(std::string(GEOSLICE_TEST_DATA_DIR) +
                        "/appendix_0_36.edges");
        std::stringstream golden;
        golden << f.rdbuf();
        std::string actual =
            edge_list_text(*make_appendix(), Window{0, 36, 0, 36});
        Outcome g;
        g.pass = f.good() && actual == golden.str();
        g.detail = g.pass ? "golden edge list matches ([0,36]^2, " +
                                std::to_string(std::count(actual.begin(),
                                                          actual.end(), '\n')) +
                                " edges)"
                          : "golden edge list MISMATCH";
        return merge({tilings, g});
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
