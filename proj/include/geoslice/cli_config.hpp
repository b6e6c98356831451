#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "geoslice/extensions.hpp"

namespace geoslice {

// Parsed command line, in one JSON-round-trippable value.
struct CliConfig {
    std::string subcommand;        // dist | slice | count | build | export | verify
    std::string graph = "grid";    // grid | h | tri | hexbrick | hexfull | appendix | reduction
    WeightParams params{3, 1, 2};
    i64 scale_n = 0;               // reduction scale; 0 = smallest valid
    i64 extension_m = 1;           // base extension constant for reduction
    std::optional<Window> window;
    Vertex from{0, 0}, to{0, 0};
    std::optional<i64> k;
    std::string format = "text";   // text | csv | json | edges | dot | svg
    std::string out_path;          // empty = stdout
    u64 seed = 0x5eed;
    u64 cap = 100000;
    i64 extent = 27;
    u64 samples = 200;
    bool partials = false;
    std::vector<std::string> checks;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["subcommand"] = subcommand;
        j["graph"] = graph;
        j["p"] = params.p;
        j["a"] = params.a;
        j["b"] = params.b;
        j["N"] = scale_n;
        j["M"] = extension_m;
        if (window)
            j["window"] = {window->x_min, window->x_max, window->y_min,
                           window->y_max};
        j["from"] = {from.x, from.y};
        j["to"] = {to.x, to.y};
        if (k) j["k"] = *k;
        j["format"] = format;
        j["out"] = out_path;
        j["seed"] = seed;
        j["cap"] = cap;
        j["extent"] = extent;
        j["samples"] = samples;
        j["partials"] = partials;
        j["checks"] = checks;
        return j;
    }

    static CliConfig from_json(const nlohmann::ordered_json& j) {
        CliConfig c;
        c.subcommand = j.at("subcommand").get<std::string>();
        c.graph = j.at("graph").get<std::string>();
        c.params = WeightParams{j.at("p").get<i64>(), j.at("a").get<i64>(),
                                j.at("b").get<i64>()};
        c.scale_n = j.at("N").get<i64>();
        c.extension_m = j.at("M").get<i64>();
        if (j.contains("window")) {
            auto w = j.at("window");
            c.window = Window{w[0].get<i64>(), w[1].get<i64>(), w[2].get<i64>(),
                              w[3].get<i64>()};
        }
        c.from = Vertex{j.at("from")[0].get<i64>(), j.at("from")[1].get<i64>()};
        c.to = Vertex{j.at("to")[0].get<i64>(), j.at("to")[1].get<i64>()};
        if (j.contains("k")) c.k = j.at("k").get<i64>();
        c.format = j.at("format").get<std::string>();
        c.out_path = j.at("out").get<std::string>();
        c.seed = j.at("seed").get<u64>();
        c.cap = j.at("cap").get<u64>();
        c.extent = j.at("extent").get<i64>();
        c.samples = j.at("samples").get<u64>();
        c.partials = j.at("partials").get<bool>();
        c.checks = j.at("checks").get<std::vector<std::string>>();
        return c;
    }

    bool operator==(const CliConfig& o) const {
        return to_json() == o.to_json();
    }

    // The graph this invocation addresses.
    GraphPtr make_graph() const {
        if (graph == "grid") return make_plain_grid();
        if (graph == "h" || graph == "fractal") return make_fractal_lattice(params);
        if (graph == "tri" || graph == "triangular") return make_triangular();
        if (graph == "hexbrick") return make_hex_brick();
        if (graph == "hexfull") return make_hex_completion();
        if (graph == "appendix") return make_appendix();
        if (graph == "reduction") {
            ReductionSpec spec =
                make_reduction_spec(params, extension_m, scale_n);
            GraphPtr base = extension_m >= 2 ? make_triangular() : make_plain_grid();
            return build_reduction(spec, base);
        }
        throw std::invalid_argument("unknown graph kind: " + graph);
    }
};

}  // namespace geoslice
