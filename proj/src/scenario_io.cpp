#include "fogwatt/scenario_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "fogwatt/errors.hpp"

namespace fogwatt {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* k : allowed) {
            if (key == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ValidationError("unknown key \"" + key + "\" in " + where);
        }
    }
}

double get_number(const json& obj, const char* key, const std::string& where) {
    const json& v = obj.at(key);
    if (!v.is_number()) {
        throw ValidationError(where + ": \"" + key + "\" must be a number");
    }
    return v.get<double>();
}

double get_number_or(const json& obj, const char* key, const std::string& where, double fallback) {
    if (!obj.contains(key)) return fallback;
    return get_number(obj, key, where);
}

int get_count_or(const json& obj, const char* key, const std::string& where, int fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ValidationError(where + ": \"" + key + "\" must be a non-negative integer");
    }
    return static_cast<int>(v.get<long long>());
}

std::string get_string(const json& v, const std::string& where) {
    if (!v.is_string()) {
        throw ValidationError(where + " must be a string");
    }
    return v.get<std::string>();
}

Layer get_layer(const json& obj, const char* key, const std::string& where, Layer fallback) {
    if (!obj.contains(key)) return fallback;
    const std::string name = get_string(obj.at(key), where + ": \"" + std::string(key) + "\"");
    auto l = layer_from_name(name);
    if (!l) {
        throw ValidationError(where + ": unknown layer \"" + name +
                              "\" (expected iot, access, metro or cloud)");
    }
    return *l;
}

void apply_catalog_overrides(DeviceCatalog& catalog, const json& overrides) {
    if (!overrides.is_object()) {
        throw ValidationError("\"catalog\" must be an object keyed by profile name");
    }
    // server map is keyed by layer; work on a by-name list so an override may
    // move a server between layers
    std::vector<ServerProfile> servers;
    for (const auto& [layer, s] : catalog.servers) {
        servers.push_back(s);
    }

    for (const auto& [name, entry] : overrides.items()) {
        const std::string where = "catalog profile \"" + name + "\"";
        if (!entry.is_object()) {
            throw ValidationError(where + " must be an object");
        }
        if (auto it = catalog.network.find(name); it != catalog.network.end()) {
            reject_unknown_keys(entry, {"bitrate_gbps", "bitrate_mbps", "p_max_w", "p_idle_w", "layer"},
                                where);
            NetworkDeviceProfile& p = it->second;
            if (entry.contains("bitrate_gbps")) {
                p.bitrate_mbps = get_number(entry, "bitrate_gbps", where) * 1000.0;
            }
            // the exact internal unit; wins when both spellings are present
            if (entry.contains("bitrate_mbps")) {
                p.bitrate_mbps = get_number(entry, "bitrate_mbps", where);
            }
            p.p_max_w = get_number_or(entry, "p_max_w", where, p.p_max_w);
            p.p_idle_w = get_number_or(entry, "p_idle_w", where, p.p_idle_w);
            p.layer = get_layer(entry, "layer", where, p.layer);
            continue;
        }
        auto srv = std::find_if(servers.begin(), servers.end(),
                                [&name = name](const ServerProfile& s) { return s.name == name; });
        if (srv == servers.end()) {
            throw ValidationError("unknown catalog profile \"" + name + "\"");
        }
        reject_unknown_keys(entry, {"p_max_w", "p_idle_w", "clock_ghz", "mips", "layer"}, where);
        srv->p_max_w = get_number_or(entry, "p_max_w", where, srv->p_max_w);
        srv->p_idle_w = get_number_or(entry, "p_idle_w", where, srv->p_idle_w);
        srv->clock_ghz = get_number_or(entry, "clock_ghz", where, srv->clock_ghz);
        srv->mips_capacity = get_number_or(entry, "mips", where, srv->mips_capacity);
        srv->layer = get_layer(entry, "layer", where, srv->layer);
    }

    catalog.servers.clear();
    for (const ServerProfile& s : servers) {
        if (auto [it, inserted] = catalog.servers.emplace(s.layer, s); !inserted) {
            throw ValidationError("two server profiles for layer " +
                                  std::string(layer_name(s.layer)) + ": \"" + it->second.name +
                                  "\" and \"" + s.name + "\"");
        }
    }
}

Topology parse_topology(const json& obj) {
    if (!obj.is_object()) {
        throw ValidationError("\"topology\" must be an object");
    }
    reject_unknown_keys(obj,
                        {"devices_per_onu", "metro_router_ports_metro_placement",
                         "metro_router_ports_core_transit", "core_hops", "onu_overload_policy"},
                        "topology");
    Topology t;
    t.devices_per_onu = get_count_or(obj, "devices_per_onu", "topology", t.devices_per_onu);
    t.metro_router_ports_metro_placement = get_count_or(
        obj, "metro_router_ports_metro_placement", "topology", t.metro_router_ports_metro_placement);
    t.metro_router_ports_core_transit = get_count_or(obj, "metro_router_ports_core_transit",
                                                     "topology", t.metro_router_ports_core_transit);
    t.core_hops = get_count_or(obj, "core_hops", "topology", t.core_hops);
    if (obj.contains("onu_overload_policy")) {
        const std::string policy = get_string(obj.at("onu_overload_policy"),
                                              "topology: \"onu_overload_policy\"");
        if (policy == "error") {
            t.onu_overload_policy = OverloadPolicy::Error;
        } else if (policy == "replicate") {
            t.onu_overload_policy = OverloadPolicy::Replicate;
        } else {
            throw ValidationError("topology: unknown onu_overload_policy \"" + policy +
                                  "\" (expected error or replicate)");
        }
    }
    return t;
}

WorkloadModel parse_workload(const json& obj) {
    if (!obj.is_object()) {
        throw ValidationError("\"workload\" must be an object");
    }
    reject_unknown_keys(obj, {"mode", "mips_per_mbps", "instructions_per_bit"}, "workload");
    WorkloadModel w;
    if (obj.contains("mode")) {
        const std::string mode = get_string(obj.at("mode"), "workload: \"mode\"");
        if (mode == "mips_per_mbps") {
            w.mode = WorkloadMode::MipsPerMbps;
        } else if (mode == "instructions_per_bit") {
            w.mode = WorkloadMode::InstructionsPerBit;
        } else {
            throw ValidationError("workload: unknown mode \"" + mode +
                                  "\" (expected mips_per_mbps or instructions_per_bit)");
        }
    }
    w.mips_per_mbps = get_number_or(obj, "mips_per_mbps", "workload", w.mips_per_mbps);
    w.instructions_per_bit =
        get_number_or(obj, "instructions_per_bit", "workload", w.instructions_per_bit);
    if (w.mips_per_mbps < 0.0) {
        throw ValidationError("workload: mips_per_mbps must be >= 0");
    }
    if (w.instructions_per_bit < 0.0) {
        throw ValidationError("workload: instructions_per_bit must be >= 0");
    }
    return w;
}

std::vector<Demand> parse_demands(const json& arr, const WorkloadModel& workload) {
    if (!arr.is_array()) {
        throw ValidationError("\"demands\" must be an array");
    }
    std::vector<Demand> demands;
    std::size_t index = 0;
    for (const json& entry : arr) {
        const std::string where = "demand #" + std::to_string(index);
        if (!entry.is_object()) {
            throw ValidationError(where + " must be an object");
        }
        reject_unknown_keys(entry, {"id", "rate_mbps", "mips"}, where);
        if (!entry.contains("rate_mbps")) {
            throw ValidationError(where + ": \"rate_mbps\" is required");
        }
        Demand d;
        d.id = entry.contains("id") ? get_string(entry.at("id"), where + ": \"id\"")
                                    : "d" + std::to_string(index);
        d.rate_mbps = get_number(entry, "rate_mbps", where);
        if (d.rate_mbps < 0.0) {
            throw ValidationError(where + ": rate_mbps must be >= 0");
        }
        d.mips = entry.contains("mips") ? get_number(entry, "mips", where)
                                        : traffic_to_mips(workload, d.rate_mbps);
        if (d.mips < 0.0) {
            throw ValidationError(where + ": mips must be >= 0");
        }
        demands.push_back(std::move(d));
        ++index;
    }
    for (std::size_t i = 0; i < demands.size(); ++i) {
        for (std::size_t j = i + 1; j < demands.size(); ++j) {
            if (demands[i].id == demands[j].id) {
                throw ValidationError("duplicate demand id \"" + demands[i].id + "\"");
            }
        }
    }
    return demands;
}

} // namespace

Scenario load_scenario(std::string_view config_text) {
    json doc;
    try {
        doc = json::parse(config_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("parse error: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ValidationError("config root must be an object");
    }
    reject_unknown_keys(
        doc, {"catalog", "topology", "workload", "demands", "idle_attribution", "allow_iot_layer"},
        "config");
    if (!doc.contains("demands")) {
        throw ValidationError("config: \"demands\" is required");
    }

    Scenario s;
    s.catalog = default_catalog();
    if (doc.contains("catalog")) {
        apply_catalog_overrides(s.catalog, doc.at("catalog"));
    }
    if (doc.contains("topology")) {
        s.topology = parse_topology(doc.at("topology"));
    }
    if (doc.contains("workload")) {
        s.workload = parse_workload(doc.at("workload"));
    }
    s.demands = parse_demands(doc.at("demands"), s.workload);
    if (doc.contains("idle_attribution")) {
        const std::string mode = get_string(doc.at("idle_attribution"), "\"idle_attribution\"");
        if (mode == "full") {
            s.idle_attribution = IdleAttribution::Full;
        } else if (mode == "proportional") {
            s.idle_attribution = IdleAttribution::Proportional;
        } else {
            throw ValidationError("unknown idle_attribution \"" + mode +
                                  "\" (expected full or proportional)");
        }
    }
    if (doc.contains("allow_iot_layer")) {
        if (!doc.at("allow_iot_layer").is_boolean()) {
            throw ValidationError("\"allow_iot_layer\" must be a boolean");
        }
        s.allow_iot_layer = doc.at("allow_iot_layer").get<bool>();
    }

    if (auto violations = validate_catalog(s.catalog); !violations.empty()) {
        std::string joined;
        for (const std::string& v : violations) {
            joined += (joined.empty() ? "" : "; ") + v;
        }
        throw ValidationError(joined);
    }
    return s;
}

std::string emit_config(const Scenario& scenario) {
    json catalog = json::object();
    for (const auto& [name, p] : scenario.catalog.network) {
        // Gbps for readability, Mbps for an exact round trip
        catalog[name] = {
            {"bitrate_gbps", p.bitrate_mbps / 1000.0},
            {"bitrate_mbps", p.bitrate_mbps},
            {"p_max_w", p.p_max_w},
            {"p_idle_w", p.p_idle_w},
            {"layer", layer_name(p.layer)},
        };
    }
    for (const auto& [layer, srv] : scenario.catalog.servers) {
        catalog[srv.name] = {
            {"p_max_w", srv.p_max_w},
            {"p_idle_w", srv.p_idle_w},
            {"clock_ghz", srv.clock_ghz},
            {"mips", srv.mips_capacity},
            {"layer", layer_name(layer)},
        };
    }

    json demands = json::array();
    for (const Demand& d : scenario.demands) {
        demands.push_back({{"id", d.id}, {"rate_mbps", d.rate_mbps}, {"mips", d.mips}});
    }

    const json doc = {
        {"catalog", catalog},
        {"topology",
         {{"devices_per_onu", scenario.topology.devices_per_onu},
          {"metro_router_ports_metro_placement",
           scenario.topology.metro_router_ports_metro_placement},
          {"metro_router_ports_core_transit", scenario.topology.metro_router_ports_core_transit},
          {"core_hops", scenario.topology.core_hops},
          {"onu_overload_policy",
           scenario.topology.onu_overload_policy == OverloadPolicy::Error ? "error" : "replicate"}}},
        {"workload",
         {{"mode", scenario.workload.mode == WorkloadMode::MipsPerMbps ? "mips_per_mbps"
                                                                       : "instructions_per_bit"},
          {"mips_per_mbps", scenario.workload.mips_per_mbps},
          {"instructions_per_bit", scenario.workload.instructions_per_bit}}},
        {"demands", demands},
        {"idle_attribution",
         scenario.idle_attribution == IdleAttribution::Full ? "full" : "proportional"},
        {"allow_iot_layer", scenario.allow_iot_layer},
    };
    return doc.dump(2) + "\n";
}

Scenario default_scenario() {
    Scenario s;
    s.catalog = default_catalog();
    s.demands.push_back(Demand{"d0", 1.0, traffic_to_mips(s.workload, 1.0)});
    return s;
}

} // namespace fogwatt
