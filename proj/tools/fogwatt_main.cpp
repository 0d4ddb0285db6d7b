// fogwatt - energy model and placement optimizer for layered IoT/fog/cloud
// networks. Subcommands: evaluate, optimize, sweep, defaults.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fogwatt/errors.hpp"
#include "fogwatt/scenario_io.hpp"
#include "fogwatt/sweep.hpp"

namespace {

using namespace fogwatt;
using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        if (std::cin.bad()) {
            throw IoError("cannot read standard input");
        }
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open \"" + path + "\" for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("cannot read \"" + path + "\"");
    }
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        std::cout.flush();
        if (!std::cout) {
            throw IoError("cannot write to standard output");
        }
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open \"" + path + "\" for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("cannot write \"" + path + "\"");
    }
}

Layer parse_placement(const std::string& name) {
    auto l = layer_from_name(name);
    if (!l) {
        throw ValidationError("unknown placement \"" + name +
                              "\" (expected iot, access, metro or cloud)");
    }
    return *l;
}

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string breakdown_text(const PowerBreakdown& bd) {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line, "%-22s %-7s %-11s %5s %13s %13s %13s\n", "device", "layer",
                  "kind", "inst", "idle_w", "load_w", "total_w");
    out += line;
    for (const BreakdownEntry& e : bd.entries) {
        std::snprintf(line, sizeof line, "%-22s %-7s %-11s %5lld %13.6f %13.6f %13.6f\n",
                      e.device.c_str(), std::string(layer_name(e.layer)).c_str(),
                      e.kind == EntryKind::Network ? "network" : "processing",
                      static_cast<long long>(e.instances), e.idle_w, e.load_w,
                      e.idle_w + e.load_w);
        out += line;
    }
    out += "\n";
    out += "network_w    " + fixed(bd.network_w) + "\n";
    out += "processing_w " + fixed(bd.processing_w) + "\n";
    out += "idle_w       " + fixed(bd.idle_w) + "\n";
    out += "load_w       " + fixed(bd.load_w) + "\n";
    out += "total_w      " + fixed(bd.total_w) + "\n";
    return out;
}

json breakdown_json(const PowerBreakdown& bd) {
    json entries = json::array();
    for (const BreakdownEntry& e : bd.entries) {
        entries.push_back({
            {"device", e.device},
            {"layer", std::string(layer_name(e.layer))},
            {"kind", e.kind == EntryKind::Network ? "network" : "processing"},
            {"instances", e.instances},
            {"idle_w", e.idle_w},
            {"load_w", e.load_w},
        });
    }
    return json{{"entries", entries},
                {"totals",
                 {{"network_w", bd.network_w},
                  {"processing_w", bd.processing_w},
                  {"idle_w", bd.idle_w},
                  {"load_w", bd.load_w},
                  {"total_w", bd.total_w}}}};
}

std::vector<double> parse_rates(const std::string& text) {
    auto parse_double = [](const std::string& token) {
        std::size_t consumed = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &consumed);
        } catch (const std::exception&) {
            throw ValidationError("invalid rate \"" + token + "\"");
        }
        if (consumed != token.size()) {
            throw ValidationError("invalid rate \"" + token + "\"");
        }
        return v;
    };

    std::vector<double> rates;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ':')) {
            parts.push_back(part);
        }
        if (parts.size() != 3) {
            throw ValidationError("rate range must be start:stop:step");
        }
        const double start = parse_double(parts[0]);
        const double stop = parse_double(parts[1]);
        const double step = parse_double(parts[2]);
        if (step <= 0.0 || stop < start) {
            throw ValidationError("rate range must satisfy stop >= start and step > 0");
        }
        // inclusive endpoints within floating-point tolerance
        for (int i = 0;; ++i) {
            const double v = start + static_cast<double>(i) * step;
            if (v > stop + step * 1e-9) break;
            rates.push_back(v);
        }
    } else {
        std::stringstream ss(text);
        std::string token;
        while (std::getline(ss, token, ',')) {
            rates.push_back(parse_double(token));
        }
    }
    if (rates.empty()) {
        throw ValidationError("empty rate list");
    }
    return rates;
}

std::vector<Layer> parse_layers(const std::string& text) {
    std::vector<Layer> layers;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        layers.push_back(parse_placement(token));
    }
    if (layers.empty()) {
        throw ValidationError("empty layer list");
    }
    return layers;
}

int run_evaluate(const std::string& config_path, const std::string& placement,
                 const std::string& format) {
    const Scenario scenario = load_scenario(read_input(config_path));
    const Layer layer = parse_placement(placement);
    const PowerBreakdown bd = evaluate_uniform(scenario, layer);
    if (format == "json") {
        json doc = breakdown_json(bd);
        doc["placement"] = std::string(layer_name(layer));
        write_output("-", doc.dump(2) + "\n");
    } else {
        write_output("-", "placement    " + std::string(layer_name(layer)) + "\n\n" +
                              breakdown_text(bd));
    }
    return 0;
}

int run_optimize(const std::string& config_path, bool joint, const std::string& format) {
    const Scenario scenario = load_scenario(read_input(config_path));
    if (!joint) {
        const UniformChoice choice = optimize_uniform(scenario);
        if (format == "json") {
            json doc{{"mode", "uniform"},
                     {"layer", std::string(layer_name(choice.layer))},
                     {"skipped", choice.skipped},
                     {"breakdown", breakdown_json(choice.breakdown)}};
            write_output("-", doc.dump(2) + "\n");
        } else {
            std::string out = "selected     " + std::string(layer_name(choice.layer)) + "\n";
            for (const std::string& s : choice.skipped) {
                out += "skipped      " + s + "\n";
            }
            out += "\n" + breakdown_text(choice.breakdown);
            write_output("-", out);
        }
        return 0;
    }

    const JointChoice choice = optimize_joint(scenario);
    if (format == "json") {
        json assignment = json::object();
        for (const auto& [id, layer] : choice.assignment.layer_of) {
            assignment[id] = std::string(layer_name(layer));
        }
        json doc{{"mode", "joint"},
                 {"exact", choice.exact},
                 {"assignment", assignment},
                 {"notes", choice.notes},
                 {"breakdown", breakdown_json(choice.breakdown)}};
        write_output("-", doc.dump(2) + "\n");
    } else {
        std::string out = std::string("mode         joint (") +
                          (choice.exact ? "exact" : "heuristic") + ")\n";
        for (const auto& [id, layer] : choice.assignment.layer_of) {
            out += "assign       " + id + " -> " + std::string(layer_name(layer)) + "\n";
        }
        for (const std::string& note : choice.notes) {
            out += "note         " + note + "\n";
        }
        out += "\n" + breakdown_text(choice.breakdown);
        write_output("-", out);
    }
    return 0;
}

int run_sweep_cmd(const std::string& config_path, const std::string& scenario_kind,
                  const std::string& rates_text, const std::string& layers_text,
                  const std::string& out_path) {
    Scenario base;
    if (!config_path.empty()) {
        base = load_scenario(read_input(config_path));
    } else {
        base = default_scenario();
    }

    const std::string kind = scenario_kind.empty() ? (config_path.empty() ? "1" : "file")
                                                   : scenario_kind;
    if (kind == "1") {
        base.demands = {Demand{"d0", 1.0, traffic_to_mips(base.workload, 1.0)}};
    } else if (kind == "2") {
        base.demands.clear();
        for (int i = 0; i < base.topology.devices_per_onu; ++i) {
            base.demands.push_back(
                Demand{"d" + std::to_string(i), 1.0, traffic_to_mips(base.workload, 1.0)});
        }
    } else if (kind == "file") {
        if (base.demands.empty()) {
            throw ValidationError("config has no demands to sweep");
        }
    } else {
        throw ValidationError("unknown scenario \"" + kind + "\" (expected 1, 2 or file)");
    }

    SweepSpec spec;
    spec.base = std::move(base);
    if (!rates_text.empty()) {
        spec.rates = parse_rates(rates_text);
    }
    if (!layers_text.empty()) {
        spec.layers = parse_layers(layers_text);
    }
    write_output(out_path, emit_csv(run_sweep(spec)));
    return 0;
}

int run_defaults() {
    write_output("-", emit_config(default_scenario()));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Energy model and minimum-power service placement for layered "
                 "IoT/fog/cloud networks"};
    app.require_subcommand(1);

    std::string config_path = "-";
    std::string placement;
    std::string format = "text";
    bool joint = false;
    std::string scenario_kind;
    std::string rates_text;
    std::string layers_text;
    std::string out_path = "-";
    bool emit = false;

    CLI::App* cmd_evaluate =
        app.add_subcommand("evaluate", "Total power of one uniform placement");
    cmd_evaluate->add_option("--config", config_path, "Scenario config path (- for stdin)");
    cmd_evaluate->add_option("--placement", placement, "Layer: iot|access|metro|cloud")
        ->required();
    cmd_evaluate->add_option("--format", format, "Output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* cmd_optimize =
        app.add_subcommand("optimize", "Minimum-power placement over the enabled layers");
    cmd_optimize->add_option("--config", config_path, "Scenario config path (- for stdin)");
    cmd_optimize->add_flag("--joint", joint, "Per-demand assignment instead of one layer");
    cmd_optimize->add_option("--format", format, "Output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* cmd_sweep = app.add_subcommand("sweep", "Rate sweep emitted as CSV");
    std::string sweep_config;
    cmd_sweep->add_option("--config", sweep_config, "Scenario config path (- for stdin)");
    cmd_sweep->add_option("--scenario", scenario_kind,
                          "1 (single request), 2 (devices_per_onu requests) or file");
    cmd_sweep->add_option("--rates", rates_text, "start:stop:step or comma-separated list");
    cmd_sweep->add_option("--layers", layers_text, "Comma-separated layer list");
    cmd_sweep->add_option("--out", out_path, "Output path (- for stdout)");

    CLI::App* cmd_defaults =
        app.add_subcommand("defaults", "Emit the built-in parameters as a config document");
    cmd_defaults->add_flag("--emit", emit, "Emit the config document (default behavior)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }

    try {
        if (cmd_evaluate->parsed()) {
            return run_evaluate(config_path, placement, format);
        }
        if (cmd_optimize->parsed()) {
            return run_optimize(config_path, joint, format);
        }
        if (cmd_sweep->parsed()) {
            return run_sweep_cmd(sweep_config, scenario_kind, rates_text, layers_text, out_path);
        }
        if (cmd_defaults->parsed()) {
            return run_defaults();
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const OverloadError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 3;
    }
    return 0;
}
