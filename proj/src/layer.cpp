#include "fogwatt/layer.hpp"

namespace fogwatt {

std::string_view layer_name(Layer l) {
    switch (l) {
    case Layer::IoTDevice: return "iot";
    case Layer::AccessFog: return "access";
    case Layer::MetroFog: return "metro";
    case Layer::CloudDC: return "cloud";
    }
    return "?";
}

std::string_view layer_display(Layer l) {
    switch (l) {
    case Layer::IoTDevice: return "IoT Device";
    case Layer::AccessFog: return "Access Fog";
    case Layer::MetroFog: return "Metro Fog";
    case Layer::CloudDC: return "Cloud DC";
    }
    return "?";
}

std::optional<Layer> layer_from_name(std::string_view name) {
    for (Layer l : all_layers()) {
        if (name == layer_name(l)) return l;
    }
    return std::nullopt;
}

} // namespace fogwatt
