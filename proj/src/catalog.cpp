#include "fogwatt/catalog.hpp"

#include <sstream>

#include "fogwatt/errors.hpp"

namespace fogwatt {

const NetworkDeviceProfile& DeviceCatalog::network_profile(std::string_view name) const {
    auto it = network.find(std::string(name));
    if (it == network.end()) {
        throw ValidationError("unknown network profile \"" + std::string(name) + "\"");
    }
    return it->second;
}

const ServerProfile& DeviceCatalog::server_for(Layer layer) const {
    auto it = servers.find(layer);
    if (it == servers.end()) {
        throw ValidationError("no server profile for layer " + std::string(layer_name(layer)));
    }
    return it->second;
}

DeviceCatalog default_catalog() {
    DeviceCatalog cat;

    auto net = [&cat](std::string_view name, double bitrate_gbps, double p_max_w,
                      double p_idle_w, Layer layer) {
        // rates kept in Mbps internally; 1 Gbps = 1000 Mbps
        cat.network[std::string(name)] = NetworkDeviceProfile{
            std::string(name), bitrate_gbps * 1000.0, p_max_w, p_idle_w, layer};
    };
    net(device_names::iot_radio, 0.15, 0.56, 0.34, Layer::IoTDevice);
    net(device_names::onu, 0.3, 15.0, 9.0, Layer::AccessFog);
    net(device_names::metro_router_port, 40.0, 30.0, 27.0, Layer::MetroFog);
    net(device_names::metro_ethernet_switch, 600.0, 470.0, 423.0, Layer::MetroFog);
    net(device_names::ip_wdm_port, 40.0, 1150.0, 1000.0, Layer::CloudDC); // 1.15 kW / 1 kW

    auto srv = [&cat](std::string_view name, double p_max_w, double p_idle_w,
                      double clock_ghz, double mips, Layer layer) {
        cat.servers[layer] =
            ServerProfile{std::string(name), p_max_w, p_idle_w, clock_ghz, mips, layer};
    };
    srv("RPi Zero W", 3.96, 0.5, 1.0, 1000.0, Layer::IoTDevice);
    srv("RPi 3", 12.5, 2.0, 1.2, 2400.0, Layer::AccessFog);
    srv("Intel X5675", 95.0, 57.0, 3.06, 73440.0, Layer::MetroFog);
    srv("Intel Xeon E5-2680", 130.0, 78.0, 2.7, 108000.0, Layer::CloudDC);

    return cat;
}

namespace {

std::string describe(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void check_power_pair(const std::string& name, double p_idle, double p_max,
                      std::vector<std::string>& out) {
    if (p_idle < 0.0) {
        out.push_back(name + ": p_idle (" + describe(p_idle) + ") is negative");
    }
    if (p_idle > p_max) {
        out.push_back(name + ": p_idle (" + describe(p_idle) + ") exceeds p_max (" +
                      describe(p_max) + ")");
    }
}

} // namespace

std::vector<std::string> validate_catalog(const DeviceCatalog& catalog) {
    std::vector<std::string> violations;

    for (const auto& [name, p] : catalog.network) {
        if (p.bitrate_mbps <= 0.0) {
            violations.push_back(name + ": bitrate (" + describe(p.bitrate_mbps) +
                                 " Mbps) must be positive");
        }
        check_power_pair(name, p.p_idle_w, p.p_max_w, violations);
    }
    for (const auto& [layer, s] : catalog.servers) {
        if (s.mips_capacity <= 0.0) {
            violations.push_back(s.name + ": mips_capacity (" + describe(s.mips_capacity) +
                                 ") must be positive");
        }
        check_power_pair(s.name, s.p_idle_w, s.p_max_w, violations);
        if (s.layer != layer) {
            violations.push_back(s.name + ": layer field (" + std::string(layer_name(s.layer)) +
                                 ") disagrees with its catalog slot (" +
                                 std::string(layer_name(layer)) + ")");
        }
    }
    for (Layer l : all_layers()) {
        if (!catalog.servers.contains(l)) {
            violations.push_back("no server profile for layer " + std::string(layer_name(l)));
        }
    }

    return violations;
}

} // namespace fogwatt
