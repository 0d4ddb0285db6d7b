#include "fogwatt/placement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "fogwatt/errors.hpp"

namespace fogwatt {

std::vector<Layer> Scenario::enabled_layers() const {
    std::vector<Layer> layers;
    if (allow_iot_layer) {
        layers.push_back(Layer::IoTDevice);
    }
    layers.push_back(Layer::AccessFog);
    layers.push_back(Layer::MetroFog);
    layers.push_back(Layer::CloudDC);
    return layers;
}

namespace {

struct LayerAggregate {
    double rate_mbps = 0.0;
    double mips = 0.0;
    bool used = false;
};

using Aggregates = std::array<LayerAggregate, 4>;

bool layer_enabled(const Scenario& s, Layer l) {
    return l != Layer::IoTDevice || s.allow_iot_layer;
}

void validate_inputs(const Scenario& s, const PlacementAssignment& a) {
    if (s.demands.empty()) {
        throw ValidationError("scenario has no demands");
    }
    if (auto violations = validate_catalog(s.catalog); !violations.empty()) {
        throw ValidationError("invalid catalog: " + violations.front());
    }
    const Topology& t = s.topology;
    if (t.devices_per_onu < 0 || t.metro_router_ports_metro_placement < 0 ||
        t.metro_router_ports_core_transit < 0 || t.core_hops < 0) {
        throw ValidationError("topology counts must be >= 0");
    }
    if (s.workload.mips_per_mbps < 0.0 || s.workload.instructions_per_bit < 0.0) {
        throw ValidationError("workload coefficients must be >= 0");
    }

    std::set<std::string> ids;
    for (const Demand& d : s.demands) {
        if (!ids.insert(d.id).second) {
            throw ValidationError("duplicate demand id \"" + d.id + "\"");
        }
        if (d.rate_mbps < 0.0) {
            throw ValidationError("demand \"" + d.id + "\": rate must be >= 0");
        }
        if (d.mips < 0.0) {
            throw ValidationError("demand \"" + d.id + "\": mips must be >= 0");
        }
        auto it = a.layer_of.find(d.id);
        if (it == a.layer_of.end()) {
            throw ValidationError("assignment misses demand \"" + d.id + "\"");
        }
        if (!layer_enabled(s, it->second)) {
            throw ValidationError("layer iot is disabled; set allow_iot_layer to place demands "
                                  "on the IoT devices");
        }
        if (it->second == Layer::CloudDC && t.core_hops < 1) {
            throw ValidationError("core_hops must be >= 1 to place demands at the cloud");
        }
    }
    if (a.layer_of.size() != s.demands.size()) {
        throw ValidationError("assignment names demands that are not in the scenario");
    }
}

Aggregates aggregate_by_layer(const Scenario& s, const PlacementAssignment& a) {
    Aggregates agg{};
    for (const Demand& d : s.demands) {
        LayerAggregate& la = agg[static_cast<std::size_t>(layer_rank(a.layer_of.at(d.id)))];
        la.used = true;
        la.rate_mbps += d.rate_mbps;
        la.mips += d.mips;
    }
    return agg;
}

void add_radio_entry(const Scenario& s, const PlacementAssignment& a, PowerBreakdown& bd) {
    const NetworkDeviceProfile& radio = s.catalog.network_profile(device_names::iot_radio);
    std::int64_t transmitting = 0;
    double rate_sum = 0.0;
    for (const Demand& d : s.demands) {
        if (a.layer_of.at(d.id) == Layer::IoTDevice) {
            continue; // processed locally, nothing transmitted
        }
        if (d.rate_mbps > radio.bitrate_mbps) {
            std::ostringstream os;
            os << radio.name << " overloaded by demand \"" << d.id << "\": " << d.rate_mbps
               << " Mbps exceeds " << radio.bitrate_mbps << " Mbps";
            throw OverloadError(radio.name, d.rate_mbps, radio.bitrate_mbps, os.str());
        }
        ++transmitting;
        rate_sum += d.rate_mbps;
    }
    if (transmitting == 0) {
        return;
    }
    // one radio per transmitting device; idle stays unscaled even under
    // proportional attribution (the radio is not shared infrastructure)
    bd.entries.push_back(BreakdownEntry{radio.name, radio.layer, EntryKind::Network, transmitting,
                                        radio.p_idle_w * static_cast<double>(transmitting),
                                        energy_per_bit(radio) * rate_sum * 1e6});
}

void add_shared_hop_entries(const Scenario& s, const Aggregates& agg, PowerBreakdown& bd) {
    struct Slot {
        double offered_mbps = 0.0;
        std::int64_t base = 0;
    };

    // the cloud route contains every shared hop; it fixes the entry order
    std::vector<std::string> order;
    std::map<std::string, Slot> slots;
    for (const RouteHop& h : route_for(Layer::CloudDC, s.topology, s.catalog).hops) {
        if (h.device == device_names::iot_radio) continue; // handled per transmitting device
        if (!slots.contains(h.device)) {
            order.push_back(h.device);
            slots.emplace(h.device, Slot{});
        }
    }

    for (Layer l : {Layer::AccessFog, Layer::MetroFog, Layer::CloudDC}) {
        const LayerAggregate& la = agg[static_cast<std::size_t>(layer_rank(l))];
        if (!la.used) continue;
        for (const RouteHop& h : route_for(l, s.topology, s.catalog).hops) {
            if (h.device == device_names::iot_radio) continue;
            Slot& slot = slots.at(h.device);
            slot.offered_mbps += la.rate_mbps * h.multiplicity;
            slot.base = std::max(slot.base, static_cast<std::int64_t>(h.multiplicity));
        }
    }

    const bool proportional = s.idle_attribution == IdleAttribution::Proportional;
    for (const std::string& name : order) {
        const Slot& slot = slots.at(name);
        if (slot.base == 0) continue; // hop exists but no used layer traverses it
        const NetworkDeviceProfile& p = s.catalog.network_profile(name);

        std::int64_t instances = slot.base;
        const double base_capacity = p.bitrate_mbps * static_cast<double>(slot.base);
        if (slot.offered_mbps > base_capacity) {
            if (s.topology.onu_overload_policy == OverloadPolicy::Error) {
                std::ostringstream os;
                os << p.name << " overloaded: offered " << slot.offered_mbps
                   << " Mbps exceeds capacity " << base_capacity << " Mbps";
                throw OverloadError(p.name, slot.offered_mbps, base_capacity, os.str());
            }
            instances = std::max(
                slot.base, static_cast<std::int64_t>(std::ceil(slot.offered_mbps / p.bitrate_mbps)));
        }

        double idle_w = p.p_idle_w * static_cast<double>(instances);
        if (proportional) {
            const double capacity = p.bitrate_mbps * static_cast<double>(instances);
            idle_w *= capacity > 0.0 ? slot.offered_mbps / capacity : 0.0;
        }
        bd.entries.push_back(BreakdownEntry{p.name, p.layer, EntryKind::Network, instances, idle_w,
                                            energy_per_bit(p) * slot.offered_mbps * 1e6});
    }
}

void add_server_entries(const Scenario& s, const Aggregates& agg, PowerBreakdown& bd) {
    for (Layer l : all_layers()) {
        const LayerAggregate& la = agg[static_cast<std::size_t>(layer_rank(l))];
        if (!la.used) continue;
        const ServerProfile& srv = s.catalog.server_for(l);
        const std::int64_t count = replicas_needed(la.mips, srv);
        if (count == 0) continue; // zero processing demand instantiates no servers
        // load is spread evenly over the replicas; under the affine model the
        // load power is replica-count-independent, so only idle steps with count
        bd.entries.push_back(BreakdownEntry{srv.name, l, EntryKind::Processing, count,
                                            srv.p_idle_w * static_cast<double>(count),
                                            energy_per_instruction(srv) * la.mips * 1e6});
    }
}

} // namespace

PowerBreakdown evaluate(const Scenario& scenario, const PlacementAssignment& assignment) {
    validate_inputs(scenario, assignment);
    const Aggregates agg = aggregate_by_layer(scenario, assignment);

    PowerBreakdown bd;
    add_radio_entry(scenario, assignment, bd);
    add_shared_hop_entries(scenario, agg, bd);
    add_server_entries(scenario, agg, bd);

    for (const BreakdownEntry& e : bd.entries) {
        bd.idle_w += e.idle_w;
        bd.load_w += e.load_w;
        (e.kind == EntryKind::Network ? bd.network_w : bd.processing_w) += e.idle_w + e.load_w;
    }
    bd.total_w = bd.network_w + bd.processing_w;
    return bd;
}

PowerBreakdown evaluate_uniform(const Scenario& scenario, Layer layer) {
    PlacementAssignment assignment;
    for (const Demand& d : scenario.demands) {
        assignment.layer_of[d.id] = layer;
    }
    return evaluate(scenario, assignment);
}

UniformChoice optimize_uniform(const Scenario& scenario) {
    if (scenario.demands.empty()) {
        throw ValidationError("scenario has no demands");
    }

    UniformChoice choice;
    bool found = false;
    for (Layer l : scenario.enabled_layers()) {
        PowerBreakdown bd;
        try {
            bd = evaluate_uniform(scenario, l);
        } catch (const OverloadError& e) {
            choice.skipped.push_back(std::string(layer_name(l)) + ": " + e.what());
            continue;
        }
        if (!found || bd.total_w < choice.breakdown.total_w) {
            found = true;
            choice.layer = l;
            choice.breakdown = std::move(bd);
        }
    }
    if (!found) {
        std::string detail;
        for (const std::string& s : choice.skipped) {
            detail += (detail.empty() ? "" : "; ") + s;
        }
        throw OverloadError("", 0.0, 0.0, "every layer is infeasible: " + detail);
    }
    return choice;
}

namespace {

JointChoice optimize_joint_exhaustive(const Scenario& scenario, const std::vector<Layer>& layers) {
    const std::size_t n = scenario.demands.size();
    std::vector<std::size_t> pick(n, 0);

    JointChoice best;
    bool found = false;
    std::size_t infeasible = 0;

    // odometer with the last demand fastest: assignments appear in ascending
    // lexicographic order, so the first minimum keeps earlier demands at the
    // lowest layers on ties
    for (;;) {
        PlacementAssignment a;
        for (std::size_t i = 0; i < n; ++i) {
            a.layer_of[scenario.demands[i].id] = layers[pick[i]];
        }
        try {
            PowerBreakdown bd = evaluate(scenario, a);
            if (!found || bd.total_w < best.breakdown.total_w) {
                found = true;
                best.assignment = std::move(a);
                best.breakdown = std::move(bd);
            }
        } catch (const OverloadError&) {
            ++infeasible;
        }

        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++pick[i] < layers.size()) break;
            pick[i] = 0;
            if (i == 0) {
                if (!found) {
                    throw OverloadError("", 0.0, 0.0, "every assignment is infeasible");
                }
                best.exact = true;
                if (infeasible > 0) {
                    best.notes.push_back(std::to_string(infeasible) +
                                         " assignment(s) skipped as infeasible");
                }
                return best;
            }
        }
    }
}

JointChoice optimize_joint_greedy(const Scenario& scenario, const std::vector<Layer>& layers) {
    std::vector<std::size_t> order(scenario.demands.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scenario.demands[a].mips > scenario.demands[b].mips;
    });

    Scenario partial = scenario;
    partial.demands.clear();
    PlacementAssignment assignment;

    for (std::size_t idx : order) {
        partial.demands.push_back(scenario.demands[idx]);
        bool found = false;
        Layer best_layer = layers.front();
        double best_total = 0.0;
        for (Layer l : layers) {
            assignment.layer_of[partial.demands.back().id] = l;
            try {
                const double total = evaluate(partial, assignment).total_w;
                if (!found || total < best_total) {
                    found = true;
                    best_layer = l;
                    best_total = total;
                }
            } catch (const OverloadError&) {
            }
        }
        if (!found) {
            throw OverloadError("", 0.0, 0.0,
                                "no feasible layer for demand \"" + partial.demands.back().id +
                                    "\" given prior assignments");
        }
        assignment.layer_of[partial.demands.back().id] = best_layer;
    }

    JointChoice choice;
    choice.breakdown = evaluate(scenario, assignment);
    choice.assignment = std::move(assignment);
    choice.exact = false;
    choice.notes.push_back("heuristic: greedy order by descending MIPS (demand count exceeds "
                           "the exhaustive search limit)");
    return choice;
}

} // namespace

JointChoice optimize_joint(const Scenario& scenario, std::size_t exhaustive_limit) {
    if (scenario.demands.empty()) {
        throw ValidationError("scenario has no demands");
    }
    const std::vector<Layer> layers = scenario.enabled_layers();
    if (scenario.demands.size() <= exhaustive_limit) {
        return optimize_joint_exhaustive(scenario, layers);
    }
    return optimize_joint_greedy(scenario, layers);
}

} // namespace fogwatt
