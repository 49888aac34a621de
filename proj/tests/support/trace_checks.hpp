#pragma once

// Invariant checkers shared by the unit and acceptance suites. Each returns
// human-readable problem strings; an empty vector means the trace is clean.

#include <map>
#include <string>
#include <vector>

#include "skyway/energy.hpp"
#include "skyway/planner.hpp"
#include "skyway/sim.hpp"

namespace checks {

inline void check_plan_shape(const skyway::CompositionPlan& plan, skyway::StationId src,
                             skyway::StationId dst, bool complete,
                             std::vector<std::string>& problems) {
  using skyway::Minutes;
  if (plan.legs.empty()) {
    if (complete) problems.push_back("complete plan has no legs");
    return;
  }
  if (plan.legs.front().from != src) problems.push_back("plan does not start at src");
  if (complete && plan.legs.back().to != dst) problems.push_back("plan does not end at dst");
  Minutes total;
  for (std::size_t i = 0; i < plan.legs.size(); ++i) {
    const skyway::PlanLeg& leg = plan.legs[i];
    if (leg.travel.negative() || leg.wait.negative() || leg.recharge.negative()) {
      problems.push_back("negative leg component at leg " + std::to_string(i));
    }
    if (i + 1 < plan.legs.size()) {
      if (leg.to != plan.legs[i + 1].from) {
        problems.push_back("legs " + std::to_string(i) + "/" + std::to_string(i + 1) +
                           " are not contiguous");
      }
      if (plan.legs[i + 1].depart != leg.finish()) {
        problems.push_back("leg " + std::to_string(i + 1) + " departs before leg " +
                           std::to_string(i) + " finishes");
      }
    }
    total += leg.travel + leg.wait + leg.recharge;
  }
  if (total != plan.total_time) problems.push_back("total_time != sum of leg components");
}

inline void check_station_schedules(const skyway::World& world,
                                    const skyway::ExecutionTrace& trace,
                                    std::vector<std::string>& problems) {
  using skyway::Minutes;
  for (const skyway::StationSchedule& sched : trace.stations) {
    const std::string label = "station " + std::to_string(sched.station);
    for (std::size_t i = 0; i < sched.reservations.size(); ++i) {
      const skyway::Reservation& r = sched.reservations[i];
      if (r.start < r.arrival || r.end < r.start) {
        problems.push_back(label + ": reservation times out of order");
      }
      // capacity at this reservation's start
      int overlap = 0;
      for (const skyway::Reservation& o : sched.reservations) {
        if (o.start <= r.start && r.start < o.end) ++overlap;
      }
      if (overlap > sched.pad_count) {
        problems.push_back(label + ": " + std::to_string(overlap) + " drones on " +
                           std::to_string(sched.pad_count) + " pads");
      }
      // FCFS: (arrival, drone) order implies non-decreasing starts
      if (i + 1 < sched.reservations.size() &&
          sched.reservations[i + 1].start < r.start) {
        problems.push_back(label + ": start times violate FCFS order");
      }
    }
  }
}

inline void check_battery(const skyway::World& world, const skyway::ExecutionTrace& trace,
                          std::vector<std::string>& problems) {
  for (std::size_t i = 0; i < trace.drones.size(); ++i) {
    const skyway::DroneAgent& agent = world.agents[i];
    const double range = skyway::effective_range(world.energy, agent.request.payload_kg,
                                                 agent.spec.max_payload_kg);
    double battery = agent.battery;
    for (const skyway::PlanLeg& leg : trace.drones[i].realized.legs) {
      battery -= world.network().segment(leg.segment).distance_km / range;
      if (battery < -1e-9) {
        problems.push_back("drone " + std::to_string(agent.id) + " battery went negative");
        break;
      }
      if (leg.recharge > skyway::Minutes{}) battery = 1.0;
    }
  }
}

// Per-drone event grammar: depart -> arrive -> (deliver | recharge_start ->
// recharge_end -> depart ...), with matched counts and causal times.
inline void check_event_causality(const skyway::ExecutionTrace& trace,
                                  std::vector<std::string>& problems) {
  using skyway::EventKind;
  std::map<skyway::PlayerId, std::vector<const skyway::Event*>> per_drone;
  for (const skyway::Event& ev : trace.events) per_drone[ev.drone].push_back(&ev);

  for (const auto& [drone, events] : per_drone) {
    const std::string label = "drone " + std::to_string(drone);
    enum class State { Idle, Flying, AtStation, Recharging };
    State state = State::Idle;
    skyway::Minutes last;
    int departs = 0, arrives = 0, starts = 0, ends = 0;
    bool broken = false;
    for (const skyway::Event* ev : events) {
      if (ev->time < last) {
        problems.push_back(label + ": events out of time order");
        broken = true;
        break;
      }
      last = ev->time;
      switch (ev->kind) {
        case EventKind::Depart:
          if (state != State::Idle) broken = true;
          state = State::Flying;
          ++departs;
          break;
        case EventKind::Arrive:
          if (state != State::Flying) broken = true;
          state = State::AtStation;
          ++arrives;
          break;
        case EventKind::Deliver:
          if (state != State::AtStation) broken = true;
          state = State::Idle;
          break;
        case EventKind::RechargeStart:
          if (state != State::AtStation) broken = true;
          state = State::Recharging;
          ++starts;
          break;
        case EventKind::RechargeEnd:
          if (state != State::Recharging) broken = true;
          state = State::Idle;
          ++ends;
          break;
      }
      if (broken) {
        problems.push_back(label + ": event grammar violated at " +
                           skyway::event_name(ev->kind));
        break;
      }
    }
    if (!broken) {
      if (departs != arrives && state != State::Flying) {
        problems.push_back(label + ": unmatched depart/arrive");
      }
      if (starts != ends && state != State::Recharging) {
        problems.push_back(label + ": unmatched recharge start/end");
      }
    }
  }
}

inline std::vector<std::string> check_trace(const skyway::World& world,
                                            const skyway::ExecutionTrace& trace) {
  std::vector<std::string> problems;
  check_station_schedules(world, trace, problems);
  check_battery(world, trace, problems);
  check_event_causality(trace, problems);
  for (std::size_t i = 0; i < trace.drones.size(); ++i) {
    const skyway::DroneTrace& dt = trace.drones[i];
    if (dt.outcome == skyway::DroneOutcome::NotLaunched) continue;
    check_plan_shape(dt.realized, world.agents[i].request.src, world.agents[i].request.dst,
                     dt.outcome == skyway::DroneOutcome::Delivered, problems);
  }
  return problems;
}

}  // namespace checks
