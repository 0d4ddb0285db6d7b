#include <doctest.h>

#include <random>

#include "fogwatt/errors.hpp"
#include "fogwatt/scenario_io.hpp"

using namespace fogwatt;

TEST_CASE("minimal config inherits every default") {
    const Scenario s = load_scenario(R"json({"demands":[{"rate_mbps":1}]})json");
    CHECK(s.catalog == default_catalog());
    CHECK(s.topology == Topology{});
    CHECK(s.workload == WorkloadModel{});
    CHECK(s.idle_attribution == IdleAttribution::Full);
    CHECK(!s.allow_iot_layer);
    REQUIRE(s.demands.size() == 1);
    CHECK(s.demands[0].id == "d0");
    CHECK(s.demands[0].rate_mbps == 1.0);
    CHECK(s.demands[0].mips == 1000.0); // derived via the workload model
}

TEST_CASE("explicit mips overrides the workload derivation") {
    const Scenario s =
        load_scenario(R"json({"demands":[{"id":"cam","rate_mbps":2.0,"mips":512}]})json");
    CHECK(s.demands[0].id == "cam");
    CHECK(s.demands[0].mips == 512.0);
}

TEST_CASE("catalog overrides merge onto the defaults") {
    const Scenario s = load_scenario(R"json({
        "catalog": {
            "ONU (Wi-Fi)": {"bitrate_gbps": 0.5},
            "RPi 3": {"mips": 4800, "p_max_w": 14.0}
        },
        "demands": [{"rate_mbps": 1}]
    })json");
    CHECK(s.catalog.network_profile("ONU (Wi-Fi)").bitrate_mbps == 500.0);
    CHECK(s.catalog.network_profile("ONU (Wi-Fi)").p_max_w == 15.0); // untouched
    CHECK(s.catalog.server_for(Layer::AccessFog).mips_capacity == 4800.0);
    CHECK(s.catalog.server_for(Layer::AccessFog).p_max_w == 14.0);
    CHECK(s.catalog.server_for(Layer::MetroFog) == default_catalog().server_for(Layer::MetroFog));
}

TEST_CASE("bitrate overrides accept either unit spelling") {
    const Scenario gbps = load_scenario(
        R"json({"catalog":{"ONU (Wi-Fi)":{"bitrate_gbps":0.6}},"demands":[{"rate_mbps":1}]})json");
    CHECK(gbps.catalog.network_profile("ONU (Wi-Fi)").bitrate_mbps == 600.0);

    const Scenario mbps = load_scenario(
        R"json({"catalog":{"ONU (Wi-Fi)":{"bitrate_mbps":512.125}},"demands":[{"rate_mbps":1}]})json");
    CHECK(mbps.catalog.network_profile("ONU (Wi-Fi)").bitrate_mbps == 512.125);

    // the exact unit wins when both are present
    const Scenario both = load_scenario(
        R"json({"catalog":{"ONU (Wi-Fi)":{"bitrate_gbps":0.6,"bitrate_mbps":700}},"demands":[{"rate_mbps":1}]})json");
    CHECK(both.catalog.network_profile("ONU (Wi-Fi)").bitrate_mbps == 700.0);
}

TEST_CASE("invalid power pair is rejected with the field named") {
    CHECK_THROWS_WITH_AS(
        (void)load_scenario(R"json({
            "catalog": {"ONU (Wi-Fi)": {"p_idle_w": 20, "p_max_w": 15}},
            "demands": [{"rate_mbps": 1}]
        })json"),
        doctest::Contains("exceeds p_max"), ValidationError);
}

TEST_CASE("topology fields round-trip through the config") {
    const Scenario s = load_scenario(R"json({
        "topology": {"core_hops": 5, "onu_overload_policy": "replicate"},
        "demands": [{"rate_mbps": 1}]
    })json");
    CHECK(s.topology.core_hops == 5);
    CHECK(s.topology.onu_overload_policy == OverloadPolicy::Replicate);
    CHECK(s.topology.devices_per_onu == 5); // untouched default

    const Scenario again = load_scenario(emit_config(s));
    CHECK(again.topology.core_hops == 5);
}

TEST_CASE("config parse failures") {
    CHECK_THROWS_AS((void)load_scenario("{not json"), ConfigError);
    CHECK_THROWS_AS((void)load_scenario(""), ConfigError);
    CHECK_THROWS_AS((void)load_scenario("[1,2,3]"), ValidationError); // parses, wrong shape
}

TEST_CASE("config validation failures") {
    SUBCASE("demands required") {
        CHECK_THROWS_WITH_AS((void)load_scenario("{}"), doctest::Contains("demands"),
                             ValidationError);
    }
    SUBCASE("negative rate") {
        CHECK_THROWS_WITH_AS((void)load_scenario(R"json({"demands":[{"rate_mbps":-1}]})json"),
                             doctest::Contains("rate_mbps"), ValidationError);
    }
    SUBCASE("unknown top-level key") {
        CHECK_THROWS_WITH_AS(
            (void)load_scenario(R"json({"demand":[{"rate_mbps":1}],"demands":[{"rate_mbps":1}]})json"),
            doctest::Contains("unknown key"), ValidationError);
    }
    SUBCASE("unknown catalog profile") {
        CHECK_THROWS_WITH_AS(
            (void)load_scenario(R"json({"catalog":{"DSLAM":{"p_max_w":5}},"demands":[{"rate_mbps":1}]})json"),
            doctest::Contains("DSLAM"), ValidationError);
    }
    SUBCASE("unknown layer name") {
        CHECK_THROWS_WITH_AS(
            (void)load_scenario(
                R"json({"catalog":{"RPi 3":{"layer":"edge"}},"demands":[{"rate_mbps":1}]})json"),
            doctest::Contains("unknown layer"), ValidationError);
    }
    SUBCASE("negative topology count") {
        CHECK_THROWS_AS(
            (void)load_scenario(R"json({"topology":{"core_hops":-1},"demands":[{"rate_mbps":1}]})json"),
            ValidationError);
    }
    SUBCASE("bad overload policy") {
        CHECK_THROWS_AS((void)load_scenario(
                            R"json({"topology":{"onu_overload_policy":"panic"},"demands":[{"rate_mbps":1}]})json"),
                        ValidationError);
    }
    SUBCASE("duplicate demand ids") {
        CHECK_THROWS_WITH_AS(
            (void)load_scenario(
                R"json({"demands":[{"id":"a","rate_mbps":1},{"id":"a","rate_mbps":2}]})json"),
            doctest::Contains("duplicate"), ValidationError);
    }
    SUBCASE("two servers on one layer") {
        CHECK_THROWS_WITH_AS(
            (void)load_scenario(
                R"json({"catalog":{"RPi 3":{"layer":"metro"}},"demands":[{"rate_mbps":1}]})json"),
            doctest::Contains("two server profiles"), ValidationError);
    }
    SUBCASE("bad idle_attribution") {
        CHECK_THROWS_AS(
            (void)load_scenario(R"json({"idle_attribution":"half","demands":[{"rate_mbps":1}]})json"),
            ValidationError);
    }
}

TEST_CASE("workload modes parse") {
    const Scenario s = load_scenario(R"json({
        "workload": {"mode": "instructions_per_bit", "instructions_per_bit": 600},
        "demands": [{"rate_mbps": 2}]
    })json");
    CHECK(s.workload.mode == WorkloadMode::InstructionsPerBit);
    CHECK(s.demands[0].mips == 1200.0); // 2 Mbps x 600 instr/bit
}

TEST_CASE("emit_config round-trips exactly") {
    SUBCASE("default scenario") {
        const Scenario s = default_scenario();
        CHECK(load_scenario(emit_config(s)) == s);
    }
    SUBCASE("randomized scenarios") {
        std::mt19937 rng(8u);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_int_distribution<int> count(1, 4);
        for (int trial = 0; trial < 50; ++trial) {
            Scenario s;
            s.catalog = default_catalog();
            s.catalog.network["ONU (Wi-Fi)"].bitrate_mbps = 100.0 + 900.0 * unit(rng);
            s.catalog.servers[Layer::AccessFog].mips_capacity = 1000.0 + 9000.0 * unit(rng);
            s.topology.core_hops = count(rng);
            s.topology.devices_per_onu = count(rng);
            s.topology.onu_overload_policy =
                unit(rng) < 0.5 ? OverloadPolicy::Error : OverloadPolicy::Replicate;
            s.workload.mode =
                unit(rng) < 0.5 ? WorkloadMode::MipsPerMbps : WorkloadMode::InstructionsPerBit;
            s.workload.mips_per_mbps = 2000.0 * unit(rng);
            s.idle_attribution =
                unit(rng) < 0.5 ? IdleAttribution::Full : IdleAttribution::Proportional;
            s.allow_iot_layer = unit(rng) < 0.5;
            const int n = count(rng);
            for (int i = 0; i < n; ++i) {
                s.demands.push_back(
                    Demand{"d" + std::to_string(i), 10.0 * unit(rng), 5000.0 * unit(rng)});
            }
            CHECK(load_scenario(emit_config(s)) == s);
        }
    }
}

TEST_CASE("default_scenario loads through its own emission") {
    const std::string doc = emit_config(default_scenario());
    const Scenario s = load_scenario(doc);
    CHECK(s.catalog == default_catalog());
    REQUIRE(s.demands.size() == 1);
    CHECK(s.demands[0].rate_mbps == 1.0);
}

TEST_CASE("gbps to mbps conversion is exact for the table rates") {
    // 0.15 and 0.3 Gbps are not exact binary fractions; the conversion must
    // still land on the canonical doubles both ways
    const std::string doc = emit_config(default_scenario());
    const Scenario s = load_scenario(doc);
    CHECK(s.catalog.network_profile("IoT (Wi-Fi)").bitrate_mbps == 150.0);
    CHECK(s.catalog.network_profile("ONU (Wi-Fi)").bitrate_mbps == 300.0);
    CHECK(s.catalog.network_profile("IP/WDM").bitrate_mbps == 40000.0);
}
