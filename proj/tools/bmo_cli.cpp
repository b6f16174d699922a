// Command-line harness: runs scenarios from the registry or JSON configs,
// batches replicates, runs image co-location, emits grid-oracle peak lists
// and validates configs. Exit codes: 0 ok, 2 usage, 3 config parse,
// 4 validation, 5 i/o, 6 runtime failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bmo/experiment.hpp"
#include "bmo/grid_oracle.hpp"
#include "bmo/scenario.hpp"
#include "bmo/trace.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_config = 3;
constexpr int exit_validation = 4;
constexpr int exit_io = 5;
constexpr int exit_runtime = 6;

struct CliError : std::runtime_error {
    int code;
    std::string kind;
    CliError(int code_, std::string kind_, const std::string& msg)
        : std::runtime_error(msg), code(code_), kind(std::move(kind_)) {}
};

void emit_error(int code, const std::string& kind, const std::string& message) {
    nlohmann::json j;
    j["error"] = {{"code", code}, {"kind", kind}, {"message", message}};
    std::cerr << j.dump() << "\n";
}

bmo::ScenarioConfig resolve_config(const std::string& config_path, const std::string& scenario_name) {
    if (!config_path.empty() && !scenario_name.empty())
        throw CliError(exit_usage, "usage", "--config and --scenario are mutually exclusive");
    if (!config_path.empty()) {
        try {
            return bmo::load_config(config_path);
        } catch (const std::exception& e) {
            throw CliError(exit_config, "config", e.what());
        }
    }
    if (!scenario_name.empty()) {
        try {
            return bmo::scenario_by_name(scenario_name);
        } catch (const std::exception& e) {
            throw CliError(exit_config, "config", e.what());
        }
    }
    throw CliError(exit_usage, "usage", "one of --config or --scenario is required");
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
        throw CliError(exit_io, "io", "cannot create output directory: " + dir);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError(exit_io, "io", "cannot open for writing: " + path);
    out << text;
    if (!out) throw CliError(exit_io, "io", "short write: " + path);
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Butterfly mating optimization simulator"};
    app.require_subcommand(1);

    std::string config_path, scenario_name, out_dir;
    bool quiet = false;
    std::optional<std::uint64_t> seed_override;

    auto add_common = [&](CLI::App* sub, bool with_seed) {
        sub->add_option("--config", config_path, "scenario config JSON path");
        sub->add_option("--scenario", scenario_name, "built-in scenario name (see list-scenarios)");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_flag("--quiet", quiet, "suppress progress output");
        if (with_seed) {
            sub->add_option_function<std::uint64_t>(
                "--seed", [&](std::uint64_t s) { seed_override = s; }, "override the config rng seed");
        }
    };

    CLI::App* cmd_run = app.add_subcommand("run", "run one scenario, write trace.csv + summary.json");
    add_common(cmd_run, true);

    CLI::App* cmd_batch = app.add_subcommand("batch", "run all config seeds, write batch_summary.json");
    add_common(cmd_batch, false);

    CLI::App* cmd_image = app.add_subcommand("image", "run BMO over a grayscale PGM, write converged agents");
    std::string image_path;
    double image_gamma = 3.0, image_step = 1.5, image_jitter = 0.5;
    int image_agents = 20, image_iters = 300;
    std::uint64_t image_seed = 1;
    cmd_image->add_option("--input", image_path, "PGM image (P2 or P5)")->required();
    cmd_image->add_option("--gamma", image_gamma, "peak sharpening exponent");
    cmd_image->add_option("--agents", image_agents, "swarm size");
    cmd_image->add_option("--iters", image_iters, "iteration budget");
    cmd_image->add_option("--step", image_step, "step size in pixels");
    cmd_image->add_option("--jitter", image_jitter, "self-mate jitter in pixels");
    cmd_image->add_option("--seed", image_seed, "rng seed");
    cmd_image->add_option("--out", out_dir, "output directory");
    cmd_image->add_flag("--quiet", quiet, "suppress progress output");

    CLI::App* cmd_oracle = app.add_subcommand("oracle", "emit the grid-oracle peak list for a landscape");
    int oracle_resolution = 400;
    add_common(cmd_oracle, false);
    cmd_oracle->add_option("--resolution", oracle_resolution, "grid cells per axis (>= 100)");

    CLI::App* cmd_validate = app.add_subcommand("validate", "check a config without running it");
    add_common(cmd_validate, false);

    CLI::App* cmd_list = app.add_subcommand("list-scenarios", "print built-in scenario names");
    std::string emit_dir;
    cmd_list->add_option("--emit-dir", emit_dir, "also write each scenario as JSON into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::stringstream ss;
        ss << e.what();
        emit_error(exit_usage, "usage", ss.str());
        return exit_usage;
    }

    try {
        if (cmd_list->parsed()) {
            for (const std::string& name : bmo::scenario_names()) std::cout << name << "\n";
            if (!emit_dir.empty()) {
                ensure_out_dir(emit_dir);
                for (const std::string& name : bmo::scenario_names()) {
                    const auto cfg = bmo::scenario_by_name(name);
                    write_text((std::filesystem::path(emit_dir) / (name + ".json")).string(),
                               bmo::to_json(cfg).dump(2) + "\n");
                }
            }
            return exit_ok;
        }

        if (cmd_validate->parsed()) {
            const auto cfg = resolve_config(config_path, scenario_name);
            try {
                bmo::validate_scenario(cfg);
            } catch (const std::exception& e) {
                throw CliError(exit_validation, "validation", e.what());
            }
            if (!quiet) std::cout << "ok: " << (cfg.name.empty() ? "<unnamed>" : cfg.name) << "\n";
            return exit_ok;
        }

        if (cmd_oracle->parsed()) {
            const auto cfg = resolve_config(config_path, scenario_name);
            bmo::Landscape landscape = [&] {
                try {
                    return bmo::build_landscape(cfg);
                } catch (const std::exception& e) {
                    throw CliError(exit_validation, "validation", e.what());
                }
            }();
            std::vector<bmo::Vec3> peaks;
            try {
                peaks = bmo::grid_local_max_oracle(landscape, oracle_resolution);
            } catch (const std::exception& e) {
                throw CliError(exit_validation, "validation", e.what());
            }
            std::string csv = "x,y,value\n";
            for (const bmo::Vec3& p : peaks)
                csv += fmt17(p.x) + "," + fmt17(p.y) + "," + fmt17(landscape.evaluate(p, 0)) + "\n";
            if (out_dir.empty()) {
                std::cout << csv;
            } else {
                ensure_out_dir(out_dir);
                write_text((std::filesystem::path(out_dir) / "peaks.csv").string(), csv);
                if (!quiet) std::cout << "wrote " << peaks.size() << " peaks\n";
            }
            return exit_ok;
        }

        if (cmd_run->parsed()) {
            const auto cfg = resolve_config(config_path, scenario_name);
            if (out_dir.empty()) throw CliError(exit_usage, "usage", "run requires --out DIR");
            ensure_out_dir(out_dir);
            bmo::RunResult result;
            try {
                result = bmo::run_experiment(cfg, seed_override);
            } catch (const std::invalid_argument& e) {
                throw CliError(exit_validation, "validation", e.what());
            }
            const auto dir = std::filesystem::path(out_dir);
            bmo::write_trace(result.trace, (dir / "trace.csv").string(), result.dims);
            auto cfg_resolved = cfg;
            if (seed_override) cfg_resolved.bmo.rng_seed = *seed_override;
            write_text((dir / "summary.json").string(),
                       bmo::summary_to_json(cfg_resolved, result).dump(2) + "\n");
            if (!quiet) {
                std::cout << "seed " << result.seed << ": ";
                if (result.metrics.all_captured_iteration)
                    std::cout << "all peaks captured by iteration " << *result.metrics.all_captured_iteration;
                else
                    std::cout << "not all peaks captured";
                std::cout << ", final mean peak distance " << result.metrics.final_mean_peak_distance << "\n";
            }
            return exit_ok;
        }

        if (cmd_batch->parsed()) {
            const auto cfg = resolve_config(config_path, scenario_name);
            if (out_dir.empty()) throw CliError(exit_usage, "usage", "batch requires --out DIR");
            ensure_out_dir(out_dir);
            bmo::BatchSummary batch;
            try {
                batch = bmo::run_batch(cfg, cfg.seeds);
            } catch (const std::invalid_argument& e) {
                throw CliError(exit_validation, "validation", e.what());
            }
            write_text((std::filesystem::path(out_dir) / "batch_summary.json").string(),
                       bmo::batch_to_json(cfg, batch).dump(2) + "\n");
            if (!quiet)
                std::cout << cfg.seeds.size() << " replicates, success fraction " << batch.success_fraction
                          << "\n";
            return exit_ok;
        }

        if (cmd_image->parsed()) {
            bmo::ScenarioConfig cfg;
            cfg.name = "image:" + image_path;
            cfg.landscape.kind = bmo::FieldKind::image;
            cfg.landscape.image_path = image_path;
            cfg.landscape.gamma = image_gamma;
            cfg.bmo.step_size = image_step;
            cfg.bmo.n_agents = image_agents;
            cfg.bmo.max_iters = image_iters;
            cfg.bmo.rng_seed = image_seed;
            cfg.bmo.jitter = image_jitter;
            cfg.capture_radius = 10.0;
            cfg.seeds = {image_seed};
            if (out_dir.empty()) throw CliError(exit_usage, "usage", "image requires --out DIR");
            ensure_out_dir(out_dir);
            bmo::RunResult result;
            try {
                result = bmo::run_experiment(cfg);
            } catch (const std::invalid_argument& e) {
                throw CliError(exit_validation, "validation", e.what());
            } catch (const bmo::PgmError& e) {
                throw CliError(exit_config, "config", e.what());
            }
            const auto dir = std::filesystem::path(out_dir);
            // converged agent coordinates = positions at the last logged iteration
            std::string csv = "agent_id,x,y\n";
            const int last = result.trace.back().iter;
            for (const bmo::TraceRecord& r : result.trace)
                if (r.iter == last)
                    csv += std::to_string(r.agent_id) + "," + fmt17(r.position.x) + "," + fmt17(r.position.y) + "\n";
            write_text((dir / "final_positions.csv").string(), csv);
            bmo::write_trace(result.trace, (dir / "trace.csv").string(), result.dims);
            write_text((dir / "summary.json").string(), bmo::summary_to_json(cfg, result).dump(2) + "\n");
            if (!quiet) std::cout << "wrote final positions for " << image_agents << " agents\n";
            return exit_ok;
        }
    } catch (const CliError& e) {
        emit_error(e.code, e.kind, e.what());
        return e.code;
    } catch (const bmo::PgmError& e) {
        emit_error(exit_config, "config", e.what());
        return exit_config;
    } catch (const std::exception& e) {
        emit_error(exit_runtime, "runtime", e.what());
        return exit_runtime;
    }
    emit_error(exit_usage, "usage", "no subcommand given");
    return exit_usage;
}
