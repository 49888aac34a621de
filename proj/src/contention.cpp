#include "skyway/contention.hpp"

#include <algorithm>
#include <string>

#include "skyway/errors.hpp"

namespace skyway {

namespace {

// Earliest moment each pad is free given the reservations so far.
std::vector<Minutes> pad_free_times(const StationSchedule& sched) {
  std::vector<Minutes> free_at(static_cast<std::size_t>(sched.pad_count), Minutes{});
  for (const Reservation& r : sched.reservations) {
    auto& slot = free_at[static_cast<std::size_t>(r.pad)];
    slot = max(slot, r.end);
  }
  return free_at;
}

int best_pad(const std::vector<Minutes>& free_at) {
  int pad = 0;
  for (int i = 1; i < static_cast<int>(free_at.size()); ++i) {
    if (free_at[static_cast<std::size_t>(i)] < free_at[static_cast<std::size_t>(pad)]) pad = i;
  }
  return pad;
}

}  // namespace

InsertResult insert_fcfs(StationSchedule& sched, PlayerId drone, Minutes arrival,
                         Minutes duration) {
  if (duration.negative()) throw DomainError("negative recharge duration");
  if (arrival.negative()) throw DomainError("negative arrival time");
  if (sched.pad_count < 1) throw DomainError("schedule with no pads");
  if (!sched.reservations.empty()) {
    const Reservation& last = sched.reservations.back();
    if (arrival < last.arrival || (arrival == last.arrival && drone < last.drone)) {
      throw OrderingError("arrival " + format_minutes(arrival) + " (drone " +
                          std::to_string(drone) + ") precedes schedule tail; rebuild instead");
    }
  }

  const auto free_at = pad_free_times(sched);
  const int pad = best_pad(free_at);
  const Minutes start = max(arrival, free_at[static_cast<std::size_t>(pad)]);
  Reservation res{drone, arrival, start, start + duration, pad};
  sched.reservations.push_back(res);
  return {res, start - arrival};
}

Minutes predicted_wait(const StationSchedule& sched, Minutes arrival, Minutes duration) {
  if (duration.negative()) throw DomainError("negative recharge duration");
  if (sched.pad_count < 1) throw DomainError("schedule with no pads");
  const auto free_at = pad_free_times(sched);
  const Minutes start = max(arrival, free_at[static_cast<std::size_t>(best_pad(free_at))]);
  return start - arrival;
}

StationSchedule rebuild_schedule(const Station& station, std::vector<ArrivalRequest> arrivals) {
  std::sort(arrivals.begin(), arrivals.end(), [](const ArrivalRequest& a, const ArrivalRequest& b) {
    if (a.arrival != b.arrival) return a.arrival < b.arrival;
    return a.drone < b.drone;
  });
  StationSchedule sched;
  sched.station = station.id;
  sched.pad_count = station.pad_count;
  sched.reservations.reserve(arrivals.size());
  for (const ArrivalRequest& req : arrivals) {
    insert_fcfs(sched, req.drone, req.arrival, req.duration);
  }
  return sched;
}

Minutes wait_for(const Station& station, std::vector<ArrivalRequest> others,
                 const ArrivalRequest& self) {
  return wait_with_busy_pads(
      std::vector<Minutes>(static_cast<std::size_t>(station.pad_count), Minutes{}),
      std::move(others), self);
}

Minutes wait_with_busy_pads(std::vector<Minutes> pads_busy_until,
                            std::vector<ArrivalRequest> pending, const ArrivalRequest& self) {
  if (pads_busy_until.empty()) throw DomainError("station with no pads");
  pending.push_back(self);
  std::sort(pending.begin(), pending.end(), [](const ArrivalRequest& a, const ArrivalRequest& b) {
    if (a.arrival != b.arrival) return a.arrival < b.arrival;
    return a.drone < b.drone;
  });
  for (const ArrivalRequest& req : pending) {
    std::size_t pad = 0;
    for (std::size_t i = 1; i < pads_busy_until.size(); ++i) {
      if (pads_busy_until[i] < pads_busy_until[pad]) pad = i;
    }
    const Minutes start = max(req.arrival, pads_busy_until[pad]);
    if (req.drone == self.drone && req.arrival == self.arrival) {
      return start - req.arrival;
    }
    pads_busy_until[pad] = start + req.duration;
  }
  throw Error("self arrival lost during fold");  // unreachable
}

StationSnapshot station_snapshot(const StationSchedule& sched, Minutes now) {
  StationSnapshot snap;
  for (const Reservation& r : sched.reservations) {
    if (r.arrival > now) {
      snap.inbound.push_back(r.drone);
    } else if (r.start <= now && now < r.end) {
      snap.recharging.push_back(r.drone);
      snap.remaining.push_back(r.end - now);
    } else if (now < r.start) {
      snap.queued.push_back(r.drone);
    }
    // reservations with end <= now are done and drop out
  }
  return snap;
}

}  // namespace skyway
