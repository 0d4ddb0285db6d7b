#ifndef FOGWATT_SWEEP_HPP
#define FOGWATT_SWEEP_HPP

#include <string>
#include <vector>

#include "fogwatt/placement.hpp"

namespace fogwatt {

/// A rate sweep over a base scenario: each cell evaluates the base with
/// every demand's rate set to the grid value (MIPS re-derived through the
/// workload model), uniformly placed at one layer.
struct SweepSpec {
    Scenario base;
    std::vector<double> rates = default_rate_grid();
    std::vector<Layer> layers = {Layer::AccessFog, Layer::MetroFog, Layer::CloudDC};

    static std::vector<double> default_rate_grid(); // 0.5 .. 5.0 step 0.5
};

struct SweepRow {
    double rate_mbps = 0.0;
    Layer layer = Layer::AccessFog;
    bool feasible = true;
    // NaN when infeasible
    double total_w = 0.0;
    double network_w = 0.0;
    double processing_w = 0.0;
    double idle_w = 0.0;
    double load_w = 0.0;
};

struct SweepSeries {
    std::vector<SweepRow> rows;
};

/// Single request at `rate_mbps`, default catalog/topology/workload.
Scenario scenario1(double rate_mbps);

/// devices_per_onu (default five) identical requests behind a single ONU.
Scenario scenario2(double rate_per_device_mbps);

/// Copy of `base` with every demand at `rate_mbps`, MIPS derived from the
/// workload model.
Scenario with_rate(const Scenario& base, double rate_mbps);

/// Evaluates every (rate, layer) cell, rate-major then layer order. Cells
/// that fail (overload, disabled layer) become feasible=false rows rather
/// than errors. Throws ValidationError only for an invalid grid.
SweepSeries run_sweep(const SweepSpec& spec);

/// CSV rendering: header rate_mbps,layer,total_w,network_w,processing_w,
/// idle_w,load_w,feasible; numbers at 10 significant digits; infeasible
/// rows leave the power fields empty. Byte-for-byte deterministic.
std::string emit_csv(const SweepSeries& series);

} // namespace fogwatt

#endif
