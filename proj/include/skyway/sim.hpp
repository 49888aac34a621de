#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "skyway/contention.hpp"
#include "skyway/model.hpp"
#include "skyway/planner.hpp"

namespace skyway {

enum class EventKind { Depart, Arrive, RechargeStart, RechargeEnd, Deliver };

const char* event_name(EventKind kind);

struct Event {
  Minutes time;
  EventKind kind = EventKind::Depart;
  PlayerId drone = kNoPlayer;
  StationId station = kNoStation;  // where the event happens
  SegmentId segment = kNoSegment;  // flown segment, for Depart/Arrive
};

// Uniform travel-time noise in [-delta, +delta], drawn independently per
// (drone, leg). Jittered travel times clamp at zero. delta == 0 disables it.
struct JitterModel {
  Minutes delta;
  std::uint64_t seed = 0;
};

enum class DroneOutcome {
  NotLaunched,      // no plan (planning failed upstream)
  Delivered,
  Stranded,         // online replanning hit a dead end
  EnergyViolation,  // a leg needed more charge than the drone had
};

struct DroneTrace {
  DroneOutcome outcome = DroneOutcome::NotLaunched;
  Minutes delivery;           // deliver time - release; meaningful when Delivered
  int failed_leg = -1;        // leg index for EnergyViolation
  CompositionPlan realized;   // legs with realized times
};

struct ExecutionTrace {
  std::vector<Event> events;                // in execution order
  std::vector<DroneTrace> drones;           // indexed like world.agents
  std::vector<StationSchedule> stations;    // realized pad bookings per station
};

// Executes committed plans event by event. Drones follow their planned
// routes; waits are re-resolved by actual FCFS arrival order, so competitors
// that show up early (or jittered) shift realized times away from the plan.
ExecutionTrace simulate(const World& world, const std::vector<CompositionPlan>& plans,
                        const JitterModel& jitter = {});

// Online variant: every drone replans one leg at a time (at its release and
// at each recharge end) from live station state - who is on a pad, who is
// queued, and which announced arrivals fall inside the time window.
ExecutionTrace simulate_online(const World& world, const JitterModel& jitter = {});

// One event per line: time,kind,drone,location.
void write_trace(const ExecutionTrace& trace, std::ostream& out);

}  // namespace skyway
