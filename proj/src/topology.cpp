#include "fogwatt/topology.hpp"

#include <cmath>
#include <sstream>

#include "fogwatt/errors.hpp"

namespace fogwatt {

Route route_for(Layer placement, const Topology& topology, const DeviceCatalog& catalog) {
    auto hop = [&catalog](std::string_view name, int multiplicity) {
        return RouteHop{std::string(catalog.network_profile(name).name), multiplicity};
    };

    Route route;
    if (placement == Layer::IoTDevice) {
        return route; // processed locally, nothing traversed
    }
    route.hops.push_back(hop(device_names::iot_radio, 1));
    route.hops.push_back(hop(device_names::onu, 1));
    if (placement == Layer::AccessFog) {
        return route;
    }
    route.hops.push_back(hop(device_names::metro_ethernet_switch, 1));
    if (placement == Layer::MetroFog) {
        route.hops.push_back(
            hop(device_names::metro_router_port, topology.metro_router_ports_metro_placement));
        return route;
    }
    route.hops.push_back(
        hop(device_names::metro_router_port, topology.metro_router_ports_core_transit));
    route.hops.push_back(hop(device_names::ip_wdm_port, topology.core_hops));
    return route;
}

std::int64_t replicas_needed(double total_demand_mips, const ServerProfile& server) {
    if (total_demand_mips < 0.0) {
        throw ValidationError("negative processing demand");
    }
    if (total_demand_mips == 0.0) {
        return 0;
    }
    return static_cast<std::int64_t>(std::ceil(total_demand_mips / server.mips_capacity));
}

namespace {

std::int64_t hop_instances(double offered_mbps, double bitrate_mbps, std::int64_t base) {
    if (offered_mbps <= 0.0) return base;
    auto needed = static_cast<std::int64_t>(std::ceil(offered_mbps / bitrate_mbps));
    return std::max(base, needed);
}

} // namespace

LoadCheckResult network_load_check(double aggregate_rate_mbps, const Route& route,
                                   const DeviceCatalog& catalog, OverloadPolicy policy) {
    if (aggregate_rate_mbps < 0.0) {
        throw ValidationError("negative aggregate rate");
    }

    LoadCheckResult result;
    for (const RouteHop& h : route.hops) {
        if (h.device == device_names::iot_radio) {
            continue; // per-device radios carry per-device rates, not the aggregate
        }
        const NetworkDeviceProfile& p = catalog.network_profile(h.device);
        if (h.multiplicity <= 0) {
            continue;
        }
        const double offered = aggregate_rate_mbps * h.multiplicity;
        const std::int64_t base = h.multiplicity;
        const double base_capacity = p.bitrate_mbps * static_cast<double>(base);

        if (policy == OverloadPolicy::Error && offered > base_capacity) {
            result.overload = OverloadReport{p.name, offered, base_capacity};
            return result;
        }
        const std::int64_t instances =
            policy == OverloadPolicy::Replicate ? hop_instances(offered, p.bitrate_mbps, base) : base;
        result.hops.push_back(
            HopLoad{p.name, offered, p.bitrate_mbps * static_cast<double>(instances), instances});
    }
    return result;
}

} // namespace fogwatt
