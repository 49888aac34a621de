#pragma once

// Minute-stepped pad-occupancy reference. Deliberately written with plain
// integer loops and none of the library's schedule code, so the two can
// disagree when one of them is wrong.

#include <algorithm>
#include <cstddef>
#include <vector>

namespace oracle {

struct Arrival {
  int drone = 0;
  int arrival_min = 0;
  int duration_min = 0;
};

struct Served {
  int drone = 0;
  int arrival_min = 0;
  int start_min = 0;
  int wait_min = 0;
  int pad = -1;
};

// Simulates pad occupancy one minute at a time: arrivals join a FIFO queue
// ordered by (arrival, drone id); whenever a pad is idle the queue head takes
// the lowest-numbered idle pad.
inline std::vector<Served> occupancy_waits(int pad_count, std::vector<Arrival> arrivals) {
  std::sort(arrivals.begin(), arrivals.end(), [](const Arrival& a, const Arrival& b) {
    if (a.arrival_min != b.arrival_min) return a.arrival_min < b.arrival_min;
    return a.drone < b.drone;
  });

  int horizon = 1;
  for (const Arrival& a : arrivals) horizon = std::max(horizon, a.arrival_min);
  for (const Arrival& a : arrivals) horizon += a.duration_min;

  std::vector<int> pad_remaining(static_cast<std::size_t>(pad_count), 0);
  std::vector<std::size_t> queue;
  std::vector<Served> served;
  std::size_t next = 0;

  for (int t = 0; t <= horizon; ++t) {
    if (t > 0) {
      for (int& r : pad_remaining) {
        if (r > 0) --r;
      }
    }
    while (next < arrivals.size() && arrivals[next].arrival_min == t) {
      queue.push_back(next);
      ++next;
    }
    while (!queue.empty()) {
      int pad = -1;
      for (int p = 0; p < pad_count; ++p) {
        if (pad_remaining[static_cast<std::size_t>(p)] == 0) {
          pad = p;
          break;
        }
      }
      if (pad < 0) break;
      const Arrival& a = arrivals[queue.front()];
      queue.erase(queue.begin());
      pad_remaining[static_cast<std::size_t>(pad)] = a.duration_min;
      served.push_back(Served{a.drone, a.arrival_min, t, t - a.arrival_min, pad});
    }
  }
  return served;
}

inline int wait_of(const std::vector<Served>& served, int drone) {
  for (const Served& s : served) {
    if (s.drone == drone) return s.wait_min;
  }
  return -1;
}

}  // namespace oracle
