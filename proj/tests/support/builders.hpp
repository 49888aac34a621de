#pragma once

// Small fixture builders shared across test files.

#include <vector>

#include "skyway/energy.hpp"
#include "skyway/model.hpp"
#include "skyway/planner.hpp"

namespace builders {

// 60 km/h and a huge range: travel minutes equal km, every leg feasible.
inline skyway::DroneSpec test_spec(double range_km = 1000.0, double speed_kmh = 60.0) {
  skyway::DroneSpec spec;
  spec.name = "test";
  spec.max_speed_kmh = speed_kmh;
  spec.max_payload_kg = 1.0;
  spec.base_range_km = range_km;
  spec.full_recharge = skyway::Minutes::from_minutes(60.0);
  return spec;
}

inline skyway::EnergyModel test_energy(const skyway::DroneSpec& spec) {
  return skyway::EnergyModel::for_drone(spec, 0.0, skyway::RechargeMode::FullFixed);
}

// Stations on a line at the given x positions, consecutive ones connected.
inline skyway::SkywayNetwork line_network(const std::vector<double>& xs, int pads = 1) {
  skyway::SkywayNetwork net;
  for (double x : xs) net.add_station(x, 0.0, pads);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    net.add_segment_euclidean(static_cast<skyway::StationId>(i),
                              static_cast<skyway::StationId>(i + 1));
  }
  return net;
}

inline skyway::DroneAgent agent_for(skyway::PlayerId id, const skyway::DroneSpec& spec,
                                    skyway::StationId src, skyway::StationId dst,
                                    double release_min = 0.0, double payload = 0.0) {
  skyway::DroneAgent agent;
  agent.id = id;
  agent.spec = spec;
  agent.request = skyway::DeliveryRequest{id, src, dst, payload,
                                          skyway::Minutes::from_minutes(release_min)};
  agent.battery = 1.0;
  agent.location = src;
  return agent;
}

}  // namespace builders
