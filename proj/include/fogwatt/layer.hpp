#ifndef FOGWATT_LAYER_HPP
#define FOGWATT_LAYER_HPP

#include <array>
#include <optional>
#include <string_view>

namespace fogwatt {

/// Computing layers ordered by distance from the data source.
/// The underlying value defines the total order: IoTDevice < AccessFog
/// < MetroFog < CloudDC.
enum class Layer : int {
    IoTDevice = 0,
    AccessFog = 1,
    MetroFog = 2,
    CloudDC = 3,
};

constexpr std::array<Layer, 4> all_layers() {
    return {Layer::IoTDevice, Layer::AccessFog, Layer::MetroFog, Layer::CloudDC};
}

constexpr int layer_rank(Layer l) { return static_cast<int>(l); }

/// Short machine name used in configs, CSV output and CLI flags.
std::string_view layer_name(Layer l);

/// Human-readable name for text output.
std::string_view layer_display(Layer l);

/// Parses "iot" / "access" / "metro" / "cloud".
std::optional<Layer> layer_from_name(std::string_view name);

} // namespace fogwatt

#endif
