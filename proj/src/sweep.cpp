#include "fogwatt/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "fogwatt/errors.hpp"

namespace fogwatt {

std::vector<double> SweepSpec::default_rate_grid() {
    std::vector<double> rates;
    for (int i = 1; i <= 10; ++i) {
        rates.push_back(static_cast<double>(i) * 0.5);
    }
    return rates;
}

Scenario scenario1(double rate_mbps) {
    if (rate_mbps < 0.0) {
        throw ValidationError("rate must be >= 0");
    }
    Scenario s;
    s.catalog = default_catalog();
    s.demands.push_back(Demand{"d0", rate_mbps, traffic_to_mips(s.workload, rate_mbps)});
    return s;
}

Scenario scenario2(double rate_per_device_mbps) {
    if (rate_per_device_mbps < 0.0) {
        throw ValidationError("rate must be >= 0");
    }
    Scenario s;
    s.catalog = default_catalog();
    for (int i = 0; i < s.topology.devices_per_onu; ++i) {
        s.demands.push_back(Demand{"d" + std::to_string(i), rate_per_device_mbps,
                                   traffic_to_mips(s.workload, rate_per_device_mbps)});
    }
    return s;
}

Scenario with_rate(const Scenario& base, double rate_mbps) {
    if (rate_mbps < 0.0) {
        throw ValidationError("rate must be >= 0");
    }
    Scenario s = base;
    for (Demand& d : s.demands) {
        d.rate_mbps = rate_mbps;
        d.mips = traffic_to_mips(s.workload, rate_mbps);
    }
    return s;
}

SweepSeries run_sweep(const SweepSpec& spec) {
    for (std::size_t i = 0; i < spec.rates.size(); ++i) {
        if (spec.rates[i] < 0.0) {
            throw ValidationError("sweep rates must be >= 0");
        }
        if (i > 0 && spec.rates[i] <= spec.rates[i - 1]) {
            throw ValidationError("sweep rates must be strictly increasing");
        }
    }

    SweepSeries series;
    for (double rate : spec.rates) {
        const Scenario cell = with_rate(spec.base, rate);
        for (Layer layer : spec.layers) {
            SweepRow row;
            row.rate_mbps = rate;
            row.layer = layer;
            try {
                const PowerBreakdown bd = evaluate_uniform(cell, layer);
                row.total_w = bd.total_w;
                row.network_w = bd.network_w;
                row.processing_w = bd.processing_w;
                row.idle_w = bd.idle_w;
                row.load_w = bd.load_w;
            } catch (const OverloadError&) {
                row.feasible = false;
            } catch (const ValidationError&) {
                row.feasible = false; // e.g. a disabled layer in the layer list
            }
            if (!row.feasible) {
                const double nan = std::numeric_limits<double>::quiet_NaN();
                row.total_w = row.network_w = row.processing_w = row.idle_w = row.load_w = nan;
            }
            series.rows.push_back(row);
        }
    }
    return series;
}

namespace {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

std::string emit_csv(const SweepSeries& series) {
    std::string out = "rate_mbps,layer,total_w,network_w,processing_w,idle_w,load_w,feasible\n";
    for (const SweepRow& r : series.rows) {
        out += format_number(r.rate_mbps);
        out += ',';
        out += layer_name(r.layer);
        for (double v : {r.total_w, r.network_w, r.processing_w, r.idle_w, r.load_w}) {
            out += ',';
            if (r.feasible) {
                out += format_number(v);
            }
        }
        out += r.feasible ? ",true\n" : ",false\n";
    }
    return out;
}

} // namespace fogwatt
