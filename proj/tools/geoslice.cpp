#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "geoslice/cli_config.hpp"
#include "geoslice/exporters.hpp"
#include "geoslice/report.hpp"

namespace {

using namespace geoslice;

Vertex parse_vertex(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("vertex must be x,y");
    return Vertex{std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
}

Window parse_window(const std::string& s) {
    i64 vals[4];
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        std::size_t next = i < 3 ? s.find(',', pos) : s.size();
        if (next == std::string::npos)
            throw CLI::ValidationError("window must be xmin,xmax,ymin,ymax");
        vals[i] = std::stoll(s.substr(pos, next - pos));
        pos = next + 1;
    }
    Window w{vals[0], vals[1], vals[2], vals[3]};
    w.validate();
    return w;
}

void write_output(const CliConfig& cfg, const std::string& payload) {
    if (cfg.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + cfg.out_path);
    f << payload;
}

int run_dist(const CliConfig& cfg) {
    GraphPtr g = cfg.make_graph();
    DistanceField f = confined_field(*g, cfg.from, cfg.to);
    write_output(cfg, std::to_string(f.at(cfg.to)) + "\n");
    return 0;
}

int run_slice(const CliConfig& cfg) {
    GraphPtr g = cfg.make_graph();
    if (cfg.k) {
        Window w = cfg.window ? *cfg.window : window_for(*g, cfg.from, cfg.to);
        std::string out;
        for (Vertex v : slice(*g, cfg.from, cfg.to, *cfg.k, w))
            out += std::to_string(v.x) + "," + std::to_string(v.y) + "\n";
        write_output(cfg, out);
        return 0;
    }
    SliceProfile prof = slice_profile(*g, cfg.from, cfg.to);
    std::optional<PartialProfile> partials;
    if (cfg.partials) {
        DistanceField fu = confined_field(*g, cfg.from, cfg.to);
        partials = partial_profile(*g, fu, cfg.to, cfg.params.p, cfg.cap);
    }
    if (cfg.format == "json")
        write_output(cfg, slice_report_json(prof, partials ? &*partials : nullptr)
                              .dump(2) +
                              "\n");
    else
        write_output(cfg, slice_report_csv(prof, partials ? &*partials : nullptr));
    return 0;
}

int run_count(const CliConfig& cfg) {
    GraphPtr g = cfg.make_graph();
    CountResult c = count_geodesics(*g, cfg.from, cfg.to, cfg.cap);
    if (c.cap_exceeded)
        write_output(cfg, "cap_exceeded cap=" + std::to_string(cfg.cap) + "\n");
    else
        write_output(cfg, std::to_string(c.count) + "\n");
    return 0;
}

int run_build(const CliConfig& cfg, bool svg_default) {
    GraphPtr g = cfg.make_graph();
    if (!cfg.window) throw CLI::ValidationError("--window is required");
    std::string fmt = cfg.format == "text" ? (svg_default ? "svg" : "edges")
                                           : cfg.format;
    if (fmt == "edges")
        write_output(cfg, edge_list_text(*g, *cfg.window));
    else if (fmt == "dot")
        write_output(cfg, dot_text(*g, *cfg.window));
    else if (fmt == "svg")
        write_output(cfg, svg_text(*g, *cfg.window));
    else
        throw CLI::ValidationError("format must be edges, dot or svg");
    return 0;
}

int run_verify(const CliConfig& cfg) {
    CheckConfig check_cfg;
    check_cfg.params = cfg.params;
    check_cfg.extent = cfg.extent;
    check_cfg.samples = cfg.samples;
    check_cfg.enumeration_cap = cfg.cap;
    check_cfg.seed = cfg.seed;
    std::vector<CheckResult> results = run_checks(check_cfg, cfg.checks);
    if (cfg.format == "json") {
        write_output(cfg, verify_report_json(check_cfg, results).dump(2) + "\n");
    } else {
        write_output(cfg, verify_report_text(results));
        if (!cfg.out_path.empty())
            std::cout << verify_report_text(results);
    }
    for (const CheckResult& r : results)
        if (!r.passed()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace geoslice;
    CLI::App app{"implicit lattice graphs, exact geodesic slices, and "
                 "property verification"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string from_str = "0,0", to_str = "0,0", window_str;
    i64 k_value = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--graph", cfg.graph,
                        "grid | h | tri | hexbrick | hexfull | appendix | "
                        "reduction");
        sub->add_option("--p", cfg.params.p, "odd modulus >= 3");
        sub->add_option("--a", cfg.params.a, "fast edge weight");
        sub->add_option("--b", cfg.params.b, "slow edge weight");
        sub->add_option("--N", cfg.scale_n, "reduction scale (0 = smallest)");
        sub->add_option("--M", cfg.extension_m, "base extension constant");
        sub->add_option("--out", cfg.out_path, "output file (default stdout)");
        sub->add_option("--format", cfg.format, "text | csv | json | edges | dot | svg");
        sub->add_option("--cap", cfg.cap, "geodesic enumeration cap");
        sub->add_option("--seed", cfg.seed, "seed for sampled checks");
    };
    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("--from", from_str, "vertex x,y")->required();
        sub->add_option("--to", to_str, "vertex x,y")->required();
    };

    CLI::App* dist = app.add_subcommand("dist", "distance between two vertices");
    add_common(dist);
    add_pair(dist);

    CLI::App* slice_cmd = app.add_subcommand("slice", "geodesic slice sizes or "
                                                      "one slice's vertices");
    add_common(slice_cmd);
    add_pair(slice_cmd);
    CLI::Option* k_opt = slice_cmd->add_option("--k", k_value, "slice at cost k");
    slice_cmd->add_flag("--partials", cfg.partials,
                        "include per-segment slice sizes");
    slice_cmd->add_option("--window", window_str, "xmin,xmax,ymin,ymax");

    CLI::App* count = app.add_subcommand("count", "number of geodesics");
    add_common(count);
    add_pair(count);

    CLI::App* build = app.add_subcommand("build", "materialize a window as an "
                                                  "edge list, DOT or SVG");
    add_common(build);
    build->add_option("--window", window_str, "xmin,xmax,ymin,ymax")->required();

    CLI::App* export_cmd = app.add_subcommand("export", "render a window "
                                                        "(SVG by default)");
    add_common(export_cmd);
    export_cmd->add_option("--window", window_str, "xmin,xmax,ymin,ymax")
        ->required();

    CLI::App* verify = app.add_subcommand("verify", "run the property checks");
    add_common(verify);
    verify->add_option("--checks", cfg.checks, "check names (default: all)");
    verify->add_option("--extent", cfg.extent, "exhaustive window extent");
    verify->add_option("--samples", cfg.samples, "sampled instances per check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        cfg.from = parse_vertex(from_str);
        cfg.to = parse_vertex(to_str);
        if (!window_str.empty()) cfg.window = parse_window(window_str);
        if (k_opt->count() > 0) cfg.k = k_value;

        if (dist->parsed()) return run_dist((cfg.subcommand = "dist", cfg));
        if (slice_cmd->parsed()) return run_slice((cfg.subcommand = "slice", cfg));
        if (count->parsed()) return run_count((cfg.subcommand = "count", cfg));
        if (build->parsed())
            return run_build((cfg.subcommand = "build", cfg), false);
        if (export_cmd->parsed())
            return run_build((cfg.subcommand = "export", cfg), true);
        if (verify->parsed()) return run_verify((cfg.subcommand = "verify", cfg));
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
