#ifndef FOGWATT_ENERGY_HPP
#define FOGWATT_ENERGY_HPP

#include "fogwatt/catalog.hpp"

namespace fogwatt {

enum class WorkloadMode {
    MipsPerMbps,        // each Mbps of traffic demands mips_per_mbps MIPS
    InstructionsPerBit, // each bit demands instructions_per_bit instructions
};

/// Traffic-to-processing mapping. The MipsPerMbps mode (1000 MIPS per Mbps)
/// is the default; the instructions-per-bit mode is kept for sensitivity
/// studies.
struct WorkloadModel {
    WorkloadMode mode = WorkloadMode::MipsPerMbps;
    double mips_per_mbps = 1000.0;
    double instructions_per_bit = 750.0;

    bool operator==(const WorkloadModel&) const = default;
};

/// Affine power split. total() = idle_w + load_w.
struct PowerFigure {
    double idle_w = 0.0;
    double load_w = 0.0;

    double total_w() const { return idle_w + load_w; }
};

/// Dynamic-power slope of a network device: (p_max - p_idle) / bitrate in
/// joules per bit.
double energy_per_bit(const NetworkDeviceProfile& profile);

/// Dynamic-power slope of a server: (p_max - p_idle) / instruction rate in
/// joules per instruction.
double energy_per_instruction(const ServerProfile& profile);

/// Affine device power: idle_w = p_idle, load_w = (p_max - p_idle) * load /
/// capacity. Load and capacity must share a unit. Throws OverloadError when
/// load > capacity; overload handling (replication) belongs upstream, and a
/// silent clamp here would under-count energy.
PowerFigure device_power(double p_idle_w, double p_max_w, double load, double capacity);

/// Processing requirement of a traffic rate under the given model, in MIPS.
double traffic_to_mips(const WorkloadModel& model, double rate_mbps);

} // namespace fogwatt

#endif
