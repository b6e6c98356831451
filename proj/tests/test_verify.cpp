#include "doctest.h"

#include "geoslice/report.hpp"
#include "geoslice/verify.hpp"

using namespace geoslice;

namespace {
CheckConfig small_config() {
    CheckConfig cfg;
    cfg.extent = 9;
    cfg.samples = 16;
    cfg.coord_bound = 5;
    cfg.max_separation = 40;
    cfg.enumeration_cap = 20000;
    cfg.seed = 42;
    return cfg;
}
}  // namespace

TEST_CASE("excursion detector flags a synthetic bad path") {
    // enters and exits the open block ]0,3[ x ]0,3[ through the bottom side
    std::vector<Vertex> bad = {{1, 0}, {1, 1}, {2, 1}, {2, 0}};
    auto v1 = excursion_violations(bad, 3);
    REQUIRE(!v1.empty());
    CHECK(v1[0].find("non-opposite") != std::string::npos);

    // two internal excursions into the same block
    std::vector<Vertex> twice = {{1, 0}, {1, 1}, {0, 1}, {0, 2}, {1, 2}, {1, 3}};
    auto v2 = excursion_violations(twice, 3);
    REQUIRE(!v2.empty());

    // a straight crossing is fine: bottom to top
    std::vector<Vertex> good = {{1, 0}, {1, 1}, {1, 2}, {1, 3}};
    CHECK(excursion_violations(good, 3).empty());

    // excursions containing a path endpoint are not internal
    std::vector<Vertex> endpoint = {{1, 1}, {1, 0}};
    CHECK(excursion_violations(endpoint, 3).empty());
}

TEST_CASE("classifier equivalence check") {
    CheckConfig cfg = small_config();
    cfg.extent = 81;
    CheckResult r = check_classifier_equivalence(cfg);
    CHECK(r.passed());
    // horizontal + vertical edges of the closed window
    CHECK(r.instances == 2 * 163 * 162);
    cfg.params = WeightParams{5, 1, 3};
    CHECK(check_classifier_equivalence(cfg).passed());
}

TEST_CASE("fractal inheritance check") {
    CheckConfig cfg = small_config();
    CHECK(check_fractal_inheritance(cfg, 1).passed());
    CHECK(check_fractal_inheritance(cfg, 2).passed());

    // other parameter points
    cfg.samples = 8;
    cfg.coord_bound = 4;
    cfg.params = WeightParams{5, 1, 3};
    CHECK(check_fractal_inheritance(cfg, 1).passed());
    cfg.params = WeightParams{7, 2, 5};
    CHECK(check_fractal_inheritance(cfg, 1).passed());
}

TEST_CASE("distinguished geodesics check") {
    CheckConfig cfg = small_config();
    CheckResult r = check_distinguished_geodesics(cfg);
    CHECK(r.passed());
    CHECK(r.instances > 0);

    cfg.params = WeightParams{5, 1, 3};
    cfg.extent = 10;
    CHECK(check_distinguished_geodesics(cfg).passed());
}

TEST_CASE("block excursions check") {
    CheckConfig cfg = small_config();
    cfg.extent = 6;
    CheckResult r = check_block_excursions(cfg);
    CHECK(r.passed());
}

TEST_CASE("strip classification check") {
    CheckConfig cfg = small_config();
    cfg.extent = 6;
    CHECK(check_strip_classification(cfg, 1, true).passed());
    cfg.extent = 27;
    cfg.samples = 30;
    CHECK(check_strip_classification(cfg, 2, false).passed());
}

TEST_CASE("parent locality check") {
    CheckConfig cfg = small_config();
    CHECK(check_parent_locality(cfg, 1).passed());
}

TEST_CASE("level bounds check") {
    CheckConfig cfg = small_config();
    cfg.samples = 24;
    cfg.max_separation = 60;
    CheckResult r = check_level_bounds(cfg);
    CHECK(r.passed());
    CHECK(r.bound_values.at("nH_bound") > 9.0);
    CHECK(r.bound_values.at("nH_bound") < 10.0);
}

TEST_CASE("slice bounds check") {
    CheckConfig cfg = small_config();
    cfg.extent = 6;
    cfg.samples = 12;
    cfg.max_separation = 40;
    CheckResult r = check_slice_bounds(cfg);
    CHECK(r.passed());
    CHECK(r.bound_values.at("total_bound") > 14852.0);
    CHECK(r.bound_values.at("total_bound") < 14853.0);
    CHECK(r.bound_values.at("total_bound_ceiling") == 14853.0);
    CHECK(r.bound_values.at("s1_bound") == 2880.0);
    CHECK(r.bound_values.at("s2n_bound") == 432.0);
    CHECK(r.empirical.at("grid_diag_max") == 13.0);
}

TEST_CASE("reduction properties check") {
    CheckConfig cfg = small_config();
    cfg.coord_bound = 2;
    cfg.samples = 0;  // skip the long-pair sweeps in the unit run
    CheckResult r =
        check_reduction_properties(make_reduction_spec({3, 1, 2}, 1), cfg);
    CHECK(r.passed());
    CHECK(r.empirical.at("min_new_span") == 11.0);
    CHECK(r.empirical.at("max_new_span") == 22.0);
}

TEST_CASE("baselines check") {
    CheckResult r = check_baselines(small_config());
    CHECK(r.passed());
}

TEST_CASE("tilings and explicit extension check") {
    CheckResult r = check_hex_tri_appendix(small_config());
    CHECK(r.passed());
    CHECK(r.empirical.at("appendix_max_span") == 4.0);
    CHECK(r.empirical.at("triangular_max_span") == 2.0);
    CHECK(r.empirical.at("appendix_splits") > 0.0);
}

TEST_CASE("verify reports are deterministic") {
    CheckConfig cfg = small_config();
    cfg.extent = 6;
    auto run = [&]() {
        auto results = run_checks(cfg, {"baselines", "levels"});
        return verify_report_json(cfg, results).dump(2);
    };
    std::string a = run();
    std::string b = run();
    CHECK(a == b);
}

TEST_CASE("bound set values for (3,1,2)") {
    BoundSet bs = BoundSet::evaluate({3, 1, 2});
    CHECK(bs.s1_bound.num == 2880);
    CHECK(bs.s1_bound.den == 1);
    CHECK(bs.s2n_bound.num == 432);
    CHECK(bs.nH_bound == doctest::Approx(9.5236).epsilon(1e-3));
    CHECK(bs.s2_bound == doctest::Approx(9092.49).epsilon(1e-4));
    CHECK(bs.total_bound == doctest::Approx(14852.49).epsilon(1e-4));
    CHECK(ceil_with_guard(bs.total_bound) == 14853);
    CHECK(reduction_slice_bound(22, 100.0) > 1e20);
}
