#include "skyway/energy.hpp"

#include <cmath>
#include <string>

#include "skyway/errors.hpp"

namespace skyway {

EnergyModel EnergyModel::for_drone(const DroneSpec& spec, double payload_derating,
                                   RechargeMode mode) {
  if (payload_derating < 0.0 || payload_derating >= 1.0) {
    throw DomainError("payload_derating must be in [0,1), got " + std::to_string(payload_derating));
  }
  EnergyModel model;
  model.base_range_km = spec.base_range_km;
  model.payload_derating = payload_derating;
  model.mode = mode;
  model.full_recharge = spec.full_recharge;
  return model;
}

double effective_range(const EnergyModel& model, double payload_kg, double max_payload_kg) {
  if (!(max_payload_kg > 0.0)) throw DomainError("max_payload must be > 0");
  if (payload_kg < 0.0 || payload_kg > max_payload_kg) {
    throw DomainError("payload " + std::to_string(payload_kg) + " outside [0, " +
                      std::to_string(max_payload_kg) + "]");
  }
  return model.base_range_km * (1.0 - model.payload_derating * payload_kg / max_payload_kg);
}

double energy_fraction(const EnergyModel& model, double distance_km, double payload_kg,
                       double max_payload_kg) {
  if (distance_km < 0.0) throw DomainError("negative distance");
  const double range = effective_range(model, payload_kg, max_payload_kg);
  if (distance_km > range) {
    throw InfeasibleError("leg of " + std::to_string(distance_km) + " km exceeds effective range " +
                          std::to_string(range) + " km");
  }
  return distance_km / range;
}

Minutes recharge_duration(const EnergyModel& model, double battery_deficit) {
  if (battery_deficit < 0.0 || battery_deficit > 1.0) {
    throw DomainError("battery deficit outside [0,1]: " + std::to_string(battery_deficit));
  }
  switch (model.mode) {
    case RechargeMode::FullFixed:
      return model.full_recharge;
    case RechargeMode::Proportional:
      return Minutes::from_ticks(
          std::llround(battery_deficit * static_cast<double>(model.full_recharge.ticks())));
  }
  throw DomainError("unknown recharge mode");
}

}  // namespace skyway
