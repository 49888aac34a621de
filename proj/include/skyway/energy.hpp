#pragma once

#include "skyway/model.hpp"
#include "skyway/time.hpp"

namespace skyway {

enum class RechargeMode {
  FullFixed,     // always charge for the full duration, regardless of deficit
  Proportional,  // deficit * full duration, then full again
};

// Battery/range model: linear range derating with payload, linear discharge
// with distance. A full battery covers exactly the effective range.
struct EnergyModel {
  double base_range_km = 0.0;
  double payload_derating = 0.25;  // beta in [0,1); 0 disables derating
  RechargeMode mode = RechargeMode::FullFixed;
  Minutes full_recharge;

  static EnergyModel for_drone(const DroneSpec& spec, double payload_derating = 0.25,
                               RechargeMode mode = RechargeMode::FullFixed);
};

// base_range * (1 - beta * payload/max_payload); monotone non-increasing in payload.
double effective_range(const EnergyModel& model, double payload_kg, double max_payload_kg);

// Fraction of a full charge consumed by flying `distance_km` at this payload.
// Throws InfeasibleError when the distance exceeds the effective range.
double energy_fraction(const EnergyModel& model, double distance_km, double payload_kg,
                       double max_payload_kg);

// Time on the pad needed to return to a full charge.
Minutes recharge_duration(const EnergyModel& model, double battery_deficit);

}  // namespace skyway
