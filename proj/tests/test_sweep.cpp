#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "fogwatt/errors.hpp"
#include "fogwatt/sweep.hpp"
#include "oracle.hpp"

using namespace fogwatt;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string token;
    while (std::getline(ss, token, sep)) {
        out.push_back(token);
    }
    return out;
}

} // namespace

TEST_CASE("scenario generators") {
    const Scenario one = scenario1(1.0);
    REQUIRE(one.demands.size() == 1);
    CHECK(one.demands[0].mips == 1000.0);

    CHECK(scenario1(0.0).demands[0].mips == 0.0);
    CHECK(scenario1(2.4).demands[0].mips == 2400.0); // exactly one RPi 3

    const Scenario five = scenario2(1.0);
    REQUIRE(five.demands.size() == 5);
    double aggregate = 0.0;
    for (const Demand& d : five.demands) {
        aggregate += d.mips;
    }
    CHECK(aggregate == 5000.0);

    // 5 x 0.48 x 1000 lands exactly on one RPi 3
    const Scenario boundary = scenario2(0.48);
    aggregate = 0.0;
    for (const Demand& d : boundary.demands) {
        aggregate += d.mips;
    }
    CHECK(aggregate == 2400.0);

    CHECK_THROWS_AS((void)scenario1(-1.0), ValidationError);
}

TEST_CASE("default rate grid") {
    const std::vector<double> grid = SweepSpec::default_rate_grid();
    REQUIRE(grid.size() == 10);
    CHECK(grid.front() == 0.5);
    CHECK(grid.back() == 5.0);
}

TEST_CASE("run_sweep evaluates each cell independently") {
    SweepSpec spec;
    spec.base = scenario1(1.0);
    spec.rates = {1.0};
    const SweepSeries series = run_sweep(spec);
    REQUIRE(series.rows.size() == 3);
    CHECK(series.rows[0].layer == Layer::AccessFog);
    CHECK(series.rows[1].layer == Layer::MetroFog);
    CHECK(series.rows[2].layer == Layer::CloudDC);
    CHECK(series.rows[0].total_w < series.rows[1].total_w);
    CHECK(series.rows[1].total_w < series.rows[2].total_w);

    // cells equal standalone evaluation
    CHECK(series.rows[0].total_w ==
          doctest::Approx(evaluate_uniform(scenario1(1.0), Layer::AccessFog).total_w)
              .epsilon(1e-12));
    CHECK(series.rows[2].total_w ==
          doctest::Approx(oracle::cloud_cell(1, 1.0).total).epsilon(1e-9));
}

TEST_CASE("empty layer list gives an empty series") {
    SweepSpec spec;
    spec.base = scenario1(1.0);
    spec.layers = {};
    CHECK(run_sweep(spec).rows.empty());
    CHECK(emit_csv(run_sweep(spec)) ==
          "rate_mbps,layer,total_w,network_w,processing_w,idle_w,load_w,feasible\n");
}

TEST_CASE("invalid grids are rejected") {
    SweepSpec spec;
    spec.base = scenario1(1.0);
    spec.rates = {1.0, 1.0};
    CHECK_THROWS_AS((void)run_sweep(spec), ValidationError);
    spec.rates = {2.0, 1.0};
    CHECK_THROWS_AS((void)run_sweep(spec), ValidationError);
    spec.rates = {-1.0, 1.0};
    CHECK_THROWS_AS((void)run_sweep(spec), ValidationError);
}

TEST_CASE("scenario 2 access series steps by one RPi 3 idle at the 0.48 boundary") {
    SweepSpec spec;
    spec.base = scenario2(1.0);
    spec.rates = {0.46, 0.5};
    spec.layers = {Layer::AccessFog};
    const SweepSeries series = run_sweep(spec);
    REQUIRE(series.rows.size() == 2);
    // idle is piecewise constant in the rate, so the step is exactly one
    // RPi 3 idle (2 W)
    CHECK(series.rows[1].idle_w - series.rows[0].idle_w == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("per-layer series are non-decreasing in rate") {
    SweepSpec spec;
    spec.base = scenario2(1.0);
    const SweepSeries series = run_sweep(spec);
    for (Layer l : spec.layers) {
        double previous = -1.0;
        for (const SweepRow& r : series.rows) {
            if (r.layer != l) continue;
            REQUIRE(r.feasible);
            CHECK(r.total_w >= previous);
            previous = r.total_w;
        }
    }
}

TEST_CASE("infeasible cells are recorded, not skipped") {
    SweepSpec spec;
    spec.base = scenario2(1.0); // five devices
    spec.rates = {50.0, 70.0};  // 5 x 70 = 350 Mbps saturates the ONU
    const SweepSeries series = run_sweep(spec);
    REQUIRE(series.rows.size() == 6);
    for (const SweepRow& r : series.rows) {
        if (r.rate_mbps == 50.0) {
            CHECK(r.feasible);
        } else {
            CHECK(!r.feasible);
            CHECK(std::isnan(r.total_w));
        }
    }

    const std::string csv = emit_csv(series);
    CHECK(csv.find("70,cloud,,,,,,false\n") != std::string::npos);
}

TEST_CASE("emit_csv renders one row per cell with stable formatting") {
    SweepSpec spec;
    spec.base = scenario1(1.0);
    spec.rates = {1.0};
    spec.layers = {Layer::AccessFog};
    const std::string csv = emit_csv(run_sweep(spec));
    const auto lines = split(csv, '\n');
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == "rate_mbps,layer,total_w,network_w,processing_w,idle_w,load_w,feasible");
    CHECK(lines[1] == "1,access,15.73646667,9.361466667,6.375,11.34,4.396466667,true");

    // byte-identical across runs
    CHECK(csv == emit_csv(run_sweep(spec)));
}

TEST_CASE("csv parses back to the series values") {
    SweepSpec spec;
    spec.base = scenario2(1.0);
    const SweepSeries series = run_sweep(spec);
    const std::string csv = emit_csv(series);

    const auto lines = split(csv, '\n');
    REQUIRE(lines.size() == series.rows.size() + 1);
    for (std::size_t i = 0; i < series.rows.size(); ++i) {
        const auto fields = split(lines[i + 1], ',');
        REQUIRE(fields.size() == 8);
        const SweepRow& row = series.rows[i];
        CHECK(std::stod(fields[0]) == doctest::Approx(row.rate_mbps).epsilon(1e-6));
        CHECK(fields[1] == layer_name(row.layer));
        CHECK(std::stod(fields[2]) == doctest::Approx(row.total_w).epsilon(1e-6));
        CHECK(std::stod(fields[3]) == doctest::Approx(row.network_w).epsilon(1e-6));
        CHECK(std::stod(fields[4]) == doctest::Approx(row.processing_w).epsilon(1e-6));
        CHECK(std::stod(fields[5]) == doctest::Approx(row.idle_w).epsilon(1e-6));
        CHECK(std::stod(fields[6]) == doctest::Approx(row.load_w).epsilon(1e-6));
        CHECK(fields[7] == "true");
    }
}

TEST_CASE("scenario 1 default sweep matches the committed fixture") {
    SweepSpec spec;
    spec.base = scenario1(1.0);
    const std::string produced = emit_csv(run_sweep(spec));

    std::ifstream in(std::string(FOGWATT_FIXTURE_DIR) + "/scenario1_sweep.csv",
                     std::ios::binary);
    REQUIRE(in.good());
    std::stringstream expected;
    expected << in.rdbuf();
    CHECK(produced == expected.str());
}

TEST_CASE("with_rate rewrites demands and re-derives mips") {
    Scenario base = scenario2(1.0);
    base.demands[2].mips = 42.0; // explicit values are replaced during sweeps
    const Scenario swept = with_rate(base, 2.0);
    for (const Demand& d : swept.demands) {
        CHECK(d.rate_mbps == 2.0);
        CHECK(d.mips == 2000.0);
    }
}
