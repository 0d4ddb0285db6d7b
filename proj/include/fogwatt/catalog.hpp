#ifndef FOGWATT_CATALOG_HPP
#define FOGWATT_CATALOG_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fogwatt/layer.hpp"

namespace fogwatt {

/// Network device parameters. Rates are stored in Mbps internally; config
/// files and the built-in defaults use Gbps and are converted once at load.
struct NetworkDeviceProfile {
    std::string name;
    double bitrate_mbps = 0.0;
    double p_max_w = 0.0;
    double p_idle_w = 0.0;
    Layer layer = Layer::AccessFog;

    bool operator==(const NetworkDeviceProfile&) const = default;
};

/// Processing server parameters. clock_ghz is informational only; capacity
/// is expressed in MIPS.
struct ServerProfile {
    std::string name;
    double p_max_w = 0.0;
    double p_idle_w = 0.0;
    double clock_ghz = 0.0;
    double mips_capacity = 0.0;
    Layer layer = Layer::AccessFog;

    bool operator==(const ServerProfile&) const = default;
};

/// Canonical device names. Route composition looks these up by name, so
/// config overrides must keep them.
namespace device_names {
inline constexpr std::string_view iot_radio = "IoT (Wi-Fi)";
inline constexpr std::string_view onu = "ONU (Wi-Fi)";
inline constexpr std::string_view metro_router_port = "Metro Router Port";
inline constexpr std::string_view metro_ethernet_switch = "Metro Ethernet Switch";
inline constexpr std::string_view ip_wdm_port = "IP/WDM";
} // namespace device_names

struct DeviceCatalog {
    std::map<std::string, NetworkDeviceProfile> network;
    std::map<Layer, ServerProfile> servers;

    bool operator==(const DeviceCatalog&) const = default;

    /// Throws ValidationError on unknown name.
    const NetworkDeviceProfile& network_profile(std::string_view name) const;

    /// Throws ValidationError if the layer has no server profile.
    const ServerProfile& server_for(Layer layer) const;
};

/// The built-in parameter set: five network devices and four servers.
/// Power figures are watts (the IP/WDM row's kW figures are normalized to
/// 1150 W / 1000 W), rates Mbps.
DeviceCatalog default_catalog();

/// Returns one description per violated invariant, each naming the
/// offending profile and field. Empty result means the catalog is valid.
std::vector<std::string> validate_catalog(const DeviceCatalog& catalog);

} // namespace fogwatt

#endif
