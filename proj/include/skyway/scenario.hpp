#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "skyway/energy.hpp"
#include "skyway/model.hpp"
#include "skyway/planner.hpp"
#include "skyway/sim.hpp"

namespace skyway {

// Parameters for random scenario generation. Everything downstream of the
// seed is deterministic.
struct ScenarioConfig {
  int node_count = 100;
  double area_side_km = 80.0;
  double max_edge_km = 20.0;
  int pad_min = 1;
  int pad_max = 3;
  int player_count = 5;
  double payload_kg = 1.45;
  Minutes release_horizon = Minutes::from_minutes(120.0);
  DroneSpec drone = DroneSpec::dji_m200_v2();
  double payload_derating = 0.25;
  RechargeMode recharge_mode = RechargeMode::FullFixed;
  PlannerConfig planner;
  JitterModel jitter{Minutes::from_minutes(10.0), 0};
  std::uint64_t seed = 1;
  int max_retries = 32;  // fresh placements before giving up on connectivity
};

// A complete, runnable problem instance.
struct Scenario {
  int format_version = 1;
  SkywayNetwork network;
  std::vector<DeliveryRequest> requests;
  DroneSpec drone;
  double payload_derating = 0.25;
  RechargeMode recharge_mode = RechargeMode::FullFixed;
  PlannerConfig planner;
  JitterModel jitter;
  std::uint64_t seed = 0;

  EnergyModel energy_model() const {
    return EnergyModel::for_drone(drone, payload_derating, recharge_mode);
  }
};

bool is_connected(const SkywayNetwork& net);

// Random geometric network plus requests: stations uniform in the square,
// all pairs within max_edge_km connected, closest cross-component pairs
// added (capped at the loaded drone's effective range) until connected,
// retrying with a fresh placement when the cap blocks. Pad counts, sources,
// destinations, and release times all come from the seeded stream.
Scenario generate(const ScenarioConfig& config);

// Agents (one per request, full battery, at src) plus planner/energy config
// bundled for the planners and simulators.
World make_world(const Scenario& scenario);

nlohmann::json to_json(const Scenario& scenario);
Scenario scenario_from_json(const nlohmann::json& j);

nlohmann::json plan_to_json(const CompositionPlan& plan);

// Round trip: load_scenario(save_scenario(s)) == s field for field.
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);
Scenario load_scenario(const std::filesystem::path& path);

struct CsvImportConfig {
  double dedup_radius_km = 0.05;  // points closer than this merge
  double max_edge_km = 20.0;
  double flyable_cap_km = 32.4;   // cap for connectivity edges
  int pad_min = 1;
  int pad_max = 3;
  std::uint64_t seed = 1;
};

// Builds a network from a coordinates CSV. Header must carry x/y columns
// (km) or lat/lon columns (degrees, projected to a local planar km frame).
// Other columns are ignored.
SkywayNetwork import_nodes_csv(const std::filesystem::path& path, const CsvImportConfig& config);

}  // namespace skyway
