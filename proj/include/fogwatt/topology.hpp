#ifndef FOGWATT_TOPOLOGY_HPP
#define FOGWATT_TOPOLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fogwatt/catalog.hpp"

namespace fogwatt {

enum class OverloadPolicy {
    Error,     // saturating a network device is a hard error
    Replicate, // saturated devices are replicated by ceil(offered / bitrate)
};

/// Layered single-access-network topology. The core is abstracted to a
/// router-port hop count; there is no explicit mesh.
struct Topology {
    int devices_per_onu = 5;
    int metro_router_ports_metro_placement = 1;
    int metro_router_ports_core_transit = 1;
    int core_hops = 3;
    OverloadPolicy onu_overload_policy = OverloadPolicy::Error;

    bool operator==(const Topology&) const = default;
};

/// One hop of a route: a catalog device traversed `multiplicity` times
/// (distinct physical instances, each carrying the full flow).
struct RouteHop {
    std::string device;
    int multiplicity = 1;

    bool operator==(const RouteHop&) const = default;
};

/// Ordered hop list from the IoT device toward the placement layer. Routes
/// are prefix-nested by layer order: access is a prefix of metro, metro of
/// cloud (hop for hop, with the metro port multiplicity substituted on the
/// cloud route). Hops are kept even at multiplicity 0 so the nesting holds
/// for every configuration.
struct Route {
    std::vector<RouteHop> hops;

    bool operator==(const Route&) const = default;
};

/// Network devices a demand traverses when served at `placement`:
///   IoTDevice -> (empty; processed on the device itself)
///   AccessFog -> IoT radio, ONU
///   MetroFog  -> + Ethernet switch, metro router port(s)
///   CloudDC   -> + IP/WDM port per core hop
/// Throws ValidationError if the catalog lacks one of the canonical names.
Route route_for(Layer placement, const Topology& topology, const DeviceCatalog& catalog);

/// Servers needed for an aggregate demand: 0 when the demand is zero,
/// otherwise ceil(demand / capacity).
std::int64_t replicas_needed(double total_demand_mips, const ServerProfile& server);

struct OverloadReport {
    std::string device;
    double offered_mbps = 0.0;
    double capacity_mbps = 0.0;
};

struct HopLoad {
    std::string device;
    double offered_mbps = 0.0;   // aggregate rate x traversal multiplicity
    double capacity_mbps = 0.0;  // bitrate x instances
    std::int64_t instances = 0;
};

struct LoadCheckResult {
    std::vector<HopLoad> hops;
    std::optional<OverloadReport> overload; // set under policy Error only

    bool ok() const { return !overload.has_value(); }
};

/// Compares the aggregate rate against each shared hop's capacity. Under
/// policy Error the first saturated device is reported; under Replicate the
/// per-hop instance counts grow to ceil(offered / bitrate). IoT-layer hops
/// (the per-device radios) are skipped: they carry per-device rates, not the
/// aggregate, and are checked per demand during evaluation.
LoadCheckResult network_load_check(double aggregate_rate_mbps, const Route& route,
                                   const DeviceCatalog& catalog, OverloadPolicy policy);

} // namespace fogwatt

#endif
