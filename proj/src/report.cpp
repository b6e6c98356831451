#include "geoslice/report.hpp"

#include <sstream>

namespace geoslice {

namespace {

json vertex_json(Vertex v) { return json::array({v.x, v.y}); }

std::string level_key(i64 level) {
    return level == kLevelOrigin ? "origin" : std::to_string(level);
}

}  // namespace

json window_json(const Window& w) {
    return json::array({w.x_min, w.x_max, w.y_min, w.y_max});
}

Window window_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("window: expected [xmin,xmax,ymin,ymax]");
    Window w{j[0].get<i64>(), j[1].get<i64>(), j[2].get<i64>(), j[3].get<i64>()};
    w.validate();
    return w;
}

std::string slice_report_csv(const SliceProfile& profile,
                             const PartialProfile* partials) {
    std::ostringstream out;
    out << "k,size,s1,s2,s3\n";
    for (i64 k = 0; k <= profile.distance; ++k) {
        std::size_t kk = static_cast<std::size_t>(k);
        out << k << ',' << profile.sizes[kk] << ',';
        if (partials && !partials->cap_exceeded) {
            out << partials->s1[kk].size() << ',' << partials->s2[kk].size()
                << ',' << partials->s3[kk].size();
        } else {
            out << ",,";
        }
        out << '\n';
    }
    return out.str();
}

json slice_report_json(const SliceProfile& profile,
                       const PartialProfile* partials) {
    json j;
    j["u"] = vertex_json(profile.u);
    j["v"] = vertex_json(profile.v);
    j["distance"] = profile.distance;
    j["sizes"] = profile.sizes;
    j["max_size"] = profile.max_size;
    if (partials) {
        j["partials_available"] = !partials->cap_exceeded;
        if (!partials->cap_exceeded) {
            json p;
            auto sizes_of = [](const std::vector<std::vector<Vertex>>& sets) {
                std::vector<std::size_t> out;
                out.reserve(sets.size());
                for (const auto& s : sets) out.push_back(s.size());
                return out;
            };
            p["s1"] = sizes_of(partials->s1);
            p["s2"] = sizes_of(partials->s2);
            p["s3"] = sizes_of(partials->s3);
            json per_level = json::object();
            for (const auto& [level, sets] : partials->s2n)
                per_level[level_key(level)] = sizes_of(sets);
            p["s2_by_level"] = per_level;
            p["geodesic_count"] = partials->geodesic_count;
            j["partials"] = p;
        }
    }
    return j;
}

json check_result_json(const CheckResult& result) {
    json j;
    j["name"] = result.name;
    j["instances"] = result.instances;
    j["skipped_cap"] = result.skipped_cap;
    j["failure_count"] = result.failure_count;
    j["passed"] = result.passed();
    json fails = json::array();
    for (const Witness& w : result.failures) {
        json f;
        f["detail"] = w.detail;
        f["u"] = vertex_json(w.u);
        f["v"] = vertex_json(w.v);
        if (w.w) f["vertex"] = vertex_json(*w.w);
        if (!w.path.empty()) {
            json path = json::array();
            for (const Vertex& x : w.path) path.push_back(vertex_json(x));
            f["path"] = path;
        }
        fails.push_back(f);
    }
    j["failures"] = fails;
    j["empirical"] = result.empirical;
    j["bounds"] = result.bound_values;
    j["notes"] = result.notes;
    return j;
}

json verify_report_json(const CheckConfig& cfg,
                        const std::vector<CheckResult>& checks) {
    json j;
    j["report"] = "geoslice-verify";
    j["params"] = {{"p", cfg.params.p}, {"a", cfg.params.a}, {"b", cfg.params.b}};
    j["config"] = {{"extent", cfg.extent},
                   {"samples", cfg.samples},
                   {"coord_bound", cfg.coord_bound},
                   {"max_separation", cfg.max_separation},
                   {"enumeration_cap", cfg.enumeration_cap},
                   {"seed", cfg.seed}};
    BoundSet bounds = BoundSet::evaluate(cfg.params);
    j["bounds"] = {{"s1", bounds.s1_bound.to_double()},
                   {"s2_per_level", bounds.s2n_bound.to_double()},
                   {"level_count", bounds.nH_bound},
                   {"s2_total", bounds.s2_bound},
                   {"total", bounds.total_bound}};
    json arr = json::array();
    bool all = true;
    for (const CheckResult& c : checks) {
        arr.push_back(check_result_json(c));
        all = all && c.passed();
    }
    j["checks"] = arr;
    j["passed"] = all;
    return j;
}

std::string verify_report_text(const std::vector<CheckResult>& checks) {
    std::ostringstream out;
    for (const CheckResult& c : checks) {
        out << (c.passed() ? "PASS" : "FAIL") << ' ' << c.name << "  instances="
            << c.instances;
        if (c.skipped_cap) out << " skipped_cap=" << c.skipped_cap;
        if (c.failure_count) out << " failures=" << c.failure_count;
        for (const auto& [k, v] : c.empirical) out << ' ' << k << '=' << v;
        out << '\n';
        for (const std::string& note : c.notes) out << "  note: " << note << '\n';
        for (const Witness& w : c.failures)
            out << "  witness: " << w.detail << " pair (" << w.u.x << ','
                << w.u.y << ")-(" << w.v.x << ',' << w.v.y << ")\n";
    }
    return out.str();
}

}  // namespace geoslice
