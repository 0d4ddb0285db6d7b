#include "fogwatt/energy.hpp"

#include <sstream>

#include "fogwatt/errors.hpp"

namespace fogwatt {

double energy_per_bit(const NetworkDeviceProfile& profile) {
    const double bits_per_second = profile.bitrate_mbps * 1e6;
    return (profile.p_max_w - profile.p_idle_w) / bits_per_second;
}

double energy_per_instruction(const ServerProfile& profile) {
    const double instructions_per_second = profile.mips_capacity * 1e6;
    return (profile.p_max_w - profile.p_idle_w) / instructions_per_second;
}

PowerFigure device_power(double p_idle_w, double p_max_w, double load, double capacity) {
    if (load < 0.0) {
        throw ValidationError("negative load");
    }
    if (load > capacity) {
        std::ostringstream os;
        os << "load " << load << " exceeds capacity " << capacity;
        throw OverloadError("", load, capacity, os.str());
    }
    return PowerFigure{p_idle_w, (p_max_w - p_idle_w) * (load / capacity)};
}

double traffic_to_mips(const WorkloadModel& model, double rate_mbps) {
    switch (model.mode) {
    case WorkloadMode::MipsPerMbps:
        return rate_mbps * model.mips_per_mbps;
    case WorkloadMode::InstructionsPerBit:
        // rate_mbps * 1e6 bit/s * instr/bit = rate * instr_per_bit MIPS
        return rate_mbps * model.instructions_per_bit;
    }
    return 0.0;
}

} // namespace fogwatt
