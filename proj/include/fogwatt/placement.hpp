#ifndef FOGWATT_PLACEMENT_HPP
#define FOGWATT_PLACEMENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fogwatt/energy.hpp"
#include "fogwatt/topology.hpp"

namespace fogwatt {

/// One IoT service request. A demand is atomic: it is served entirely by a
/// single layer, never split. `mips` is derived from the rate via the
/// workload model when the config does not state it explicitly.
struct Demand {
    std::string id;
    double rate_mbps = 0.0;
    double mips = 0.0;

    bool operator==(const Demand&) const = default;
};

enum class IdleAttribution {
    Full,         // every touched device instance contributes its whole idle power
    Proportional, // shared network hops contribute idle scaled by utilization
};

struct Scenario {
    DeviceCatalog catalog;
    Topology topology;
    WorkloadModel workload;
    std::vector<Demand> demands;
    IdleAttribution idle_attribution = IdleAttribution::Full;
    bool allow_iot_layer = false;

    bool operator==(const Scenario&) const = default;

    /// Layers demands may be assigned to, in layer order. IoTDevice only
    /// when allow_iot_layer is set.
    std::vector<Layer> enabled_layers() const;
};

/// Total map demand id -> serving layer.
struct PlacementAssignment {
    std::map<std::string, Layer> layer_of;

    bool operator==(const PlacementAssignment&) const = default;
};

enum class EntryKind { Network, Processing };

struct BreakdownEntry {
    std::string device;
    Layer layer = Layer::AccessFog;
    EntryKind kind = EntryKind::Network;
    std::int64_t instances = 0;
    double idle_w = 0.0;
    double load_w = 0.0;
};

/// Per-device power entries plus totals. network_w + processing_w and
/// idle_w + load_w both partition total_w.
struct PowerBreakdown {
    std::vector<BreakdownEntry> entries;
    double network_w = 0.0;
    double processing_w = 0.0;
    double idle_w = 0.0;
    double load_w = 0.0;
    double total_w = 0.0;
};

/// Total system power of serving every demand at its assigned layer.
///
/// Processing: demands assigned to a layer pool their MIPS onto
/// replicas_needed() instances of that layer's server; idle counts per
/// instance and load power is energy_per_instruction x the aggregate
/// instruction rate (replica-count-independent under the affine model, so
/// only idle moves when a replica is added).
///
/// Network: each transmitting demand's IoT radio is counted per device;
/// hops from the ONU onward are shared, instantiated once per traversal
/// multiplicity, and carry the aggregate rate of every demand routed
/// through them. Under IdleAttribution::Proportional the shared hops'
/// idle is scaled by utilization; radios and servers keep full idle.
///
/// Throws ValidationError (invalid assignment, disabled layer, core_hops
/// < 1 with a CloudDC placement) or OverloadError (a radio or shared hop
/// over capacity under policy Error).
PowerBreakdown evaluate(const Scenario& scenario, const PlacementAssignment& assignment);

/// evaluate() with every demand assigned to `layer`.
PowerBreakdown evaluate_uniform(const Scenario& scenario, Layer layer);

struct UniformChoice {
    Layer layer = Layer::AccessFog;
    PowerBreakdown breakdown;
    std::vector<std::string> skipped; // infeasible layers, with reasons
};

/// Minimum-power uniform placement over the enabled layers. Ties break
/// toward the layer closest to the IoT devices. Infeasible layers are
/// skipped and noted; throws OverloadError only if every layer fails.
UniformChoice optimize_uniform(const Scenario& scenario);

struct JointChoice {
    PlacementAssignment assignment;
    PowerBreakdown breakdown;
    bool exact = true; // false when the greedy fallback produced the result
    std::vector<std::string> notes;
};

/// Minimum-power per-demand placement. Exhaustive over layers^n up to
/// `exhaustive_limit` demands (ties resolved by enumeration order: earlier
/// demands prefer lower layers); greedy above it, assigning demands in
/// descending-MIPS order to the marginally cheapest layer, with the result
/// marked inexact.
JointChoice optimize_joint(const Scenario& scenario, std::size_t exhaustive_limit = 8);

} // namespace fogwatt

#endif
