#ifndef FOGWATT_SCENARIO_IO_HPP
#define FOGWATT_SCENARIO_IO_HPP

#include <string>
#include <string_view>

#include "fogwatt/placement.hpp"

namespace fogwatt {

/// Parses and validates a scenario config document (JSON). Omitted catalog
/// entries fall back to default_catalog(); omitted topology/workload fields
/// fall back to their defaults. Throws ConfigError on malformed JSON and
/// ValidationError naming the violated invariant otherwise.
Scenario load_scenario(std::string_view config_text);

/// Serializes a scenario to the same schema load_scenario accepts.
/// load_scenario(emit_config(s)) == s for any valid scenario.
std::string emit_config(const Scenario& scenario);

/// The baseline document emitted by the `defaults` CLI subcommand: default
/// catalog, topology and workload plus a single 1 Mbps demand (the schema
/// requires demands, and a loadable document keeps pipelines like
/// `defaults --emit | fogwatt evaluate` working).
Scenario default_scenario();

} // namespace fogwatt

#endif
