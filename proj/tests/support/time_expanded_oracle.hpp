#pragma once

// Time-expanded dynamic program over integer minutes: exact minimum delivery
// time for one drone against fixed competitor bookings. Label-setting on
// earliest arrival per station; waits come from the minute-stepped occupancy
// reference, not from the library's schedule code.
//
// Only meaningful on instances built so that every travel time is a whole
// number of minutes.

#include <climits>
#include <cmath>
#include <queue>
#include <utility>
#include <vector>

#include "skyway/model.hpp"
#include "support/occupancy_oracle.hpp"

namespace oracle {

struct TimeOracleInput {
  const skyway::SkywayNetwork* net = nullptr;
  std::vector<std::vector<Arrival>> bookings;  // competitor arrivals per station
  double speed_kmh = 60.0;
  int recharge_min = 60;  // fixed full recharge at every intermediate stop
  double range_km = 1e9;  // max flyable leg
  int ego = 0;            // must not collide with competitor ids
  skyway::StationId src = 0;
  skyway::StationId dst = 0;
  int release_min = 0;
};

inline int travel_minutes(const TimeOracleInput& in, double distance_km) {
  return static_cast<int>(std::llround(distance_km / in.speed_kmh * 60.0));
}

inline int ego_wait_at(const TimeOracleInput& in, skyway::StationId station, int arrival_min) {
  std::vector<Arrival> list = in.bookings[static_cast<std::size_t>(station)];
  list.push_back(Arrival{in.ego, arrival_min, in.recharge_min});
  const auto served =
      occupancy_waits(in.net->station(station).pad_count, std::move(list));
  for (const Served& s : served) {
    if (s.drone == in.ego && s.arrival_min == arrival_min) return s.wait_min;
  }
  return -1;  // unreachable
}

// Minimum (deliver - release) in whole minutes, or -1 when dst is unreachable.
inline int best_delivery_min(const TimeOracleInput& in) {
  const std::size_t n = in.net->station_count();
  std::vector<long long> earliest(n, LLONG_MAX);
  using Node = std::pair<long long, skyway::StationId>;  // (arrival, station)
  std::priority_queue<Node, std::vector<Node>, std::greater<>> heap;

  earliest[static_cast<std::size_t>(in.src)] = in.release_min;
  heap.push({in.release_min, in.src});

  while (!heap.empty()) {
    const auto [t, station] = heap.top();
    heap.pop();
    if (t != earliest[static_cast<std::size_t>(station)]) continue;
    if (station == in.dst) return static_cast<int>(t - in.release_min);

    long long depart = t;
    if (station != in.src) {
      depart += ego_wait_at(in, station, static_cast<int>(t)) + in.recharge_min;
    }
    for (const skyway::AdjacentEdge& edge : in.net->neighbors(station)) {
      const skyway::Segment& seg = in.net->segment(edge.segment);
      if (seg.distance_km > in.range_km) continue;
      const long long arrive = depart + travel_minutes(in, seg.distance_km);
      if (arrive < earliest[static_cast<std::size_t>(edge.neighbor)]) {
        earliest[static_cast<std::size_t>(edge.neighbor)] = arrive;
        heap.push({arrive, edge.neighbor});
      }
    }
  }
  return -1;
}

}  // namespace oracle
