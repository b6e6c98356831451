#pragma once

#include <map>
#include <optional>
#include <string>

#include "geoslice/bounds.hpp"
#include "geoslice/engine.hpp"
#include "geoslice/extensions.hpp"
#include "geoslice/segments.hpp"

namespace geoslice {

// ---------------------------------------------------------------------------
// Definitional classifier oracle: slow edges recognized by enumerating every
// candidate level of the defining pattern instead of pinning the level from a
// valuation. Kept deliberately independent from classify_edge so the two can
// be played against each other.
// ---------------------------------------------------------------------------

// All levels n at which the edge matches the slow pattern (empty = fast).
std::vector<int> matching_pattern_levels(const Edge& e, i64 p);

inline EdgeClass classify_edge_by_pattern(const Edge& e, i64 p) {
    return matching_pattern_levels(e, p).empty() ? EdgeClass::Fast
                                                 : EdgeClass::Slow;
}

// ---------------------------------------------------------------------------
// Check harness
// ---------------------------------------------------------------------------

struct CheckConfig {
    WeightParams params{3, 1, 2};
    i64 extent = 27;          // exhaustive pair sets live in [lo, lo+extent]-style windows
    std::size_t samples = 200;  // seeded random pairs / instances
    i64 coord_bound = 10;     // coordinate box for sampled small pairs
    i64 max_separation = 200; // Z^2 separation for sampled far pairs
    u64 enumeration_cap = 100000;
    u64 seed = 0x5eed;
    unsigned threads = 0;     // 0 = GEOSLICE_THREADS / hardware
    EngineLimits limits{};
};

// A failure always carries enough to replay it: the pair, the offending
// vertex or geodesic, and a one-line description.
struct Witness {
    std::string detail;
    Vertex u, v;
    std::optional<Vertex> w;
    std::vector<Vertex> path;
};

struct CheckResult {
    std::string name;
    u64 instances = 0;
    u64 skipped_cap = 0;  // instances skipped because enumeration hit the cap
    u64 failure_count = 0;
    std::vector<Witness> failures;  // first kMaxStoredWitnesses kept
    std::map<std::string, double> empirical;
    std::map<std::string, double> bound_values;
    std::vector<std::string> notes;

    static constexpr std::size_t kMaxStoredWitnesses = 25;

    bool passed() const { return failure_count == 0; }
    void fail(Witness w) {
        ++failure_count;
        if (failures.size() < kMaxStoredWitnesses) failures.push_back(std::move(w));
    }
};

CheckResult check_classifier_equivalence(const CheckConfig& cfg);
CheckResult check_fractal_inheritance(const CheckConfig& cfg, int n);
CheckResult check_distinguished_geodesics(const CheckConfig& cfg);
CheckResult check_block_excursions(const CheckConfig& cfg);
CheckResult check_strip_classification(const CheckConfig& cfg, int n,
                                       bool exhaustive);
CheckResult check_parent_locality(const CheckConfig& cfg, int n);
CheckResult check_level_bounds(const CheckConfig& cfg);
CheckResult check_slice_bounds(const CheckConfig& cfg);
CheckResult check_reduction_properties(const ReductionSpec& spec,
                                       const CheckConfig& cfg);
CheckResult check_baselines(const CheckConfig& cfg);
CheckResult check_hex_tri_appendix(const CheckConfig& cfg);
CheckResult check_scale_stability(const CheckConfig& cfg);

// Excursion analysis of one path through open p-blocks, shared between the
// block-excursion check and its self-test: returns descriptions of rule
// violations (same-side or adjacent-side internal excursions, repeated
// excursions into one block).
std::vector<std::string> excursion_violations(const std::vector<Vertex>& path,
                                              i64 p);

// Named registry for the CLI: runs the listed checks (all when empty) with
// defaults scaled for an interactive run.
std::vector<std::string> check_names();
std::vector<CheckResult> run_checks(const CheckConfig& cfg,
                                    const std::vector<std::string>& names = {});

}  // namespace geoslice
