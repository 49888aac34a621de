#pragma once

#include <vector>

#include "skyway/model.hpp"
#include "skyway/time.hpp"

namespace skyway {

// A pad booking at one station. arrival <= start; end = start + duration.
struct Reservation {
  PlayerId drone = kNoPlayer;
  Minutes arrival;
  Minutes start;
  Minutes end;
  int pad = 0;
};

// A request to recharge: who, when they land, how long they need the pad.
struct ArrivalRequest {
  PlayerId drone = kNoPlayer;
  Minutes arrival;
  Minutes duration;
};

// First-come-first-served multi-pad timeline for one station. Reservations
// are kept in (arrival, drone) order; at any instant at most pad_count of
// them overlap. Ties on arrival are served in ascending player id.
struct StationSchedule {
  StationId station = kNoStation;
  int pad_count = 1;
  std::vector<Reservation> reservations;
};

struct InsertResult {
  Reservation reservation;
  Minutes wait;  // start - arrival
};

// Appends an arrival, assigning the pad that frees earliest (lowest index on
// ties). Throws OrderingError if (arrival, drone) precedes the last entry;
// out-of-order construction goes through rebuild_schedule.
InsertResult insert_fcfs(StationSchedule& sched, PlayerId drone, Minutes arrival,
                         Minutes duration);

// Wait insert_fcfs would report for this arrival, without mutating. Same
// append-order precondition as insert_fcfs.
Minutes predicted_wait(const StationSchedule& sched, Minutes arrival, Minutes duration);

// Canonical FCFS schedule for an arrival multiset: sort by (arrival, drone),
// fold insert_fcfs. Any permutation of the input yields the same schedule.
StationSchedule rebuild_schedule(const Station& station, std::vector<ArrivalRequest> arrivals);

// Wait `self` experiences when folded into the canonical schedule of
// `others` + self. This is the planner's what-if query: it handles
// competitors predicted to land both before and after the querying drone.
Minutes wait_for(const Station& station, std::vector<ArrivalRequest> others,
                 const ArrivalRequest& self);

// Same query against pads that are already busy until the given times
// (one entry per pad; zero = free). Lets callers seed the fold with live
// pad occupancy instead of re-deriving it from past arrivals.
Minutes wait_with_busy_pads(std::vector<Minutes> pads_busy_until,
                            std::vector<ArrivalRequest> pending, const ArrivalRequest& self);

// State of one station at an instant: who is on a pad (and for how much
// longer), who is waiting for a pad, and who is still inbound.
struct StationSnapshot {
  std::vector<PlayerId> recharging;
  std::vector<Minutes> remaining;  // parallel to recharging
  std::vector<PlayerId> queued;
  std::vector<PlayerId> inbound;
};

StationSnapshot station_snapshot(const StationSchedule& sched, Minutes now);

}  // namespace skyway
