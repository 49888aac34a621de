#include "skyway/sim.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <queue>
#include <random>

#include "skyway/errors.hpp"
#include "skyway/rng.hpp"

namespace skyway {

const char* event_name(EventKind kind) {
  switch (kind) {
    case EventKind::Depart: return "depart";
    case EventKind::Arrive: return "arrive";
    case EventKind::RechargeStart: return "recharge_start";
    case EventKind::RechargeEnd: return "recharge_end";
    case EventKind::Deliver: return "deliver";
  }
  return "?";
}

namespace {

// Tie order at one instant: arrivals first, then pad releases, then pad
// grants, then departures. Deliveries follow their arrival immediately.
int kind_priority(EventKind kind) {
  switch (kind) {
    case EventKind::Arrive: return 0;
    case EventKind::Deliver: return 1;
    case EventKind::RechargeEnd: return 2;
    case EventKind::RechargeStart: return 3;
    case EventKind::Depart: return 4;
  }
  return 5;
}

struct EventAfter {
  bool operator()(const Event& a, const Event& b) const {
    if (a.time != b.time) return b.time < a.time;
    const int pa = kind_priority(a.kind);
    const int pb = kind_priority(b.kind);
    if (pa != pb) return pb < pa;
    return b.drone < a.drone;
  }
};

// What one drone is doing at a station right now.
struct RuntimeEntry {
  PlayerId drone = kNoPlayer;
  Minutes arrival;
  Minutes duration;
  bool started = false;
  Minutes start;
  Minutes end;
  int pad = -1;
};

// An ETA a departing drone has published for its next recharge stop.
struct Announcement {
  PlayerId drone = kNoPlayer;
  Minutes eta;
  Minutes recharge;
};

struct StationRuntime {
  std::vector<bool> pad_in_use;
  std::deque<PlayerId> waiting;
  std::vector<RuntimeEntry> entries;      // one per arrival, kept for the trace
  std::vector<Announcement> announced;

  int free_pad() const {
    for (int i = 0; i < static_cast<int>(pad_in_use.size()); ++i) {
      if (!pad_in_use[static_cast<std::size_t>(i)]) return i;
    }
    return -1;
  }
};

struct DroneRun {
  double battery = 1.0;
  std::size_t leg = 0;                 // index into `route`
  std::vector<PlanLeg> route;          // planned legs (grows during online runs)
  std::vector<PlanLeg> realized;
  std::mt19937_64 jitter_rng;
  PlanCursor cursor;                   // online decision state
};

// Shared event-loop for the offline and online modes; the only difference is
// where the next leg comes from.
class Simulation {
 public:
  Simulation(const World& world, const JitterModel& jitter, bool online)
      : world_(world), jitter_(jitter), online_(online) {
    runs_.resize(world.agents.size());
    stations_.resize(world.network().station_count());
    for (std::size_t s = 0; s < stations_.size(); ++s) {
      stations_[s].pad_in_use.assign(
          static_cast<std::size_t>(world.network().stations()[s].pad_count), false);
    }
    trace_.drones.resize(world.agents.size());
  }

  ExecutionTrace run(const std::vector<CompositionPlan>& plans) {
    for (std::size_t i = 0; i < world_.agents.size(); ++i) {
      const DroneAgent& agent = world_.agents[i];
      DroneRun& run = runs_[i];
      run.battery = agent.battery;
      run.jitter_rng.seed(mix_seed(jitter_.seed, static_cast<std::uint64_t>(agent.id)));
      run.cursor = PlanCursor{agent.request.src, agent.request.release, agent.battery};
      if (!online_) {
        if (i < plans.size()) run.route = plans[i].legs;
        if (run.route.empty()) continue;  // NotLaunched
      } else {
        StepResult first = decide(i, run.cursor);
        if (first.kind == StepResult::Kind::NoPath) {
          trace_.drones[i].outcome = DroneOutcome::Stranded;
          continue;
        }
        run.route.push_back(first.leg);
        announce(i, first.leg);
      }
      trace_.drones[i].outcome = DroneOutcome::Stranded;  // until delivered
      push(Event{agent.request.release, EventKind::Depart, agent.id, agent.request.src,
                 run.route.front().segment});
    }

    while (!queue_.empty()) {
      const Event ev = queue_.top();
      queue_.pop();
      dispatch(ev);
    }

    finalize();
    return std::move(trace_);
  }

 private:
  std::size_t agent_index(PlayerId id) const {
    for (std::size_t i = 0; i < world_.agents.size(); ++i) {
      if (world_.agents[i].id == id) return i;
    }
    throw Error("unknown player id in event");
  }

  void push(Event ev) {
    queue_.push(ev);
  }

  void record(const Event& ev) { trace_.events.push_back(ev); }

  Minutes draw_jitter(DroneRun& run) {
    if (jitter_.delta.zero()) return Minutes{};
    const std::int64_t d = jitter_.delta.ticks();
    return Minutes::from_ticks(uniform_i64(run.jitter_rng, -d, d));
  }

  void dispatch(const Event& ev) {
    switch (ev.kind) {
      case EventKind::Depart: return on_depart(ev);
      case EventKind::Arrive: return on_arrive(ev);
      case EventKind::RechargeStart: return on_recharge_start(ev);
      case EventKind::RechargeEnd: return on_recharge_end(ev);
      case EventKind::Deliver: return on_deliver(ev);
    }
  }

  void on_depart(const Event& ev) {
    const std::size_t i = agent_index(ev.drone);
    DroneRun& run = runs_[i];
    const DroneAgent& agent = world_.agents[i];
    const PlanLeg& leg = run.route[run.leg];

    const double used =
        energy_fraction(world_.energy, world_.network().segment(leg.segment).distance_km,
                        agent.request.payload_kg, agent.spec.max_payload_kg);
    if (used > run.battery + 1e-9) {
      trace_.drones[i].outcome = DroneOutcome::EnergyViolation;
      trace_.drones[i].failed_leg = static_cast<int>(run.leg);
      return;
    }
    run.battery -= used;

    record(ev);
    const Minutes flight = max(Minutes{}, leg.travel + draw_jitter(run));
    run.realized.push_back(PlanLeg{leg.segment, leg.from, leg.to, ev.time, flight,
                                   Minutes{}, Minutes{}});
    push(Event{ev.time + flight, EventKind::Arrive, ev.drone, leg.to, leg.segment});
  }

  void on_arrive(const Event& ev) {
    const std::size_t i = agent_index(ev.drone);
    DroneRun& run = runs_[i];
    const DroneAgent& agent = world_.agents[i];
    const PlanLeg& leg = run.route[run.leg];
    record(ev);

    StationRuntime& st = stations_[static_cast<std::size_t>(ev.station)];
    std::erase_if(st.announced,
                  [&](const Announcement& a) { return a.drone == ev.drone; });

    if (leg.to == agent.request.dst) {
      push(Event{ev.time, EventKind::Deliver, ev.drone, ev.station, leg.segment});
      return;
    }

    RuntimeEntry entry;
    entry.drone = ev.drone;
    entry.arrival = ev.time;
    entry.duration = leg.recharge;
    st.entries.push_back(entry);
    st.waiting.push_back(ev.drone);
    grant_pads(ev.station, ev.time);
  }

  void grant_pads(StationId station, Minutes now) {
    StationRuntime& st = stations_[static_cast<std::size_t>(station)];
    while (!st.waiting.empty()) {
      const int pad = st.free_pad();
      if (pad < 0) return;
      const PlayerId drone = st.waiting.front();
      st.waiting.pop_front();
      st.pad_in_use[static_cast<std::size_t>(pad)] = true;
      for (auto it = st.entries.rbegin(); it != st.entries.rend(); ++it) {
        if (it->drone == drone && !it->started) {
          it->started = true;
          it->start = now;
          it->end = now + it->duration;
          it->pad = pad;
          break;
        }
      }
      push(Event{now, EventKind::RechargeStart, drone, station, kNoSegment});
    }
  }

  void on_recharge_start(const Event& ev) {
    const std::size_t i = agent_index(ev.drone);
    DroneRun& run = runs_[i];
    StationRuntime& st = stations_[static_cast<std::size_t>(ev.station)];
    record(ev);
    for (auto it = st.entries.rbegin(); it != st.entries.rend(); ++it) {
      if (it->drone == ev.drone && it->started && it->start == ev.time && it->pad >= 0) {
        run.realized[run.leg].wait = it->start - it->arrival;
        run.realized[run.leg].recharge = it->duration;
        push(Event{it->end, EventKind::RechargeEnd, ev.drone, ev.station, kNoSegment});
        return;
      }
    }
    throw Error("recharge_start without runtime entry");
  }

  void on_recharge_end(const Event& ev) {
    const std::size_t i = agent_index(ev.drone);
    DroneRun& run = runs_[i];
    StationRuntime& st = stations_[static_cast<std::size_t>(ev.station)];
    record(ev);

    for (auto it = st.entries.rbegin(); it != st.entries.rend(); ++it) {
      if (it->drone == ev.drone && it->started && it->end == ev.time && it->pad >= 0) {
        st.pad_in_use[static_cast<std::size_t>(it->pad)] = false;
        break;
      }
    }
    grant_pads(ev.station, ev.time);

    run.battery = 1.0;
    run.leg += 1;

    if (online_) {
      run.cursor = PlanCursor{ev.station, ev.time, run.battery};
      StepResult next = decide(i, run.cursor);
      if (next.kind == StepResult::Kind::NoPath) {
        trace_.drones[i].outcome = DroneOutcome::Stranded;
        return;
      }
      run.route.push_back(next.leg);
      announce(i, next.leg);
    } else if (run.leg >= run.route.size()) {
      return;  // plan exhausted without reaching dst; leave as stranded
    }

    if (run.leg < run.route.size()) {
      push(Event{ev.time, EventKind::Depart, ev.drone, ev.station,
                 run.route[run.leg].segment});
    }
  }

  void on_deliver(const Event& ev) {
    const std::size_t i = agent_index(ev.drone);
    record(ev);
    trace_.drones[i].outcome = DroneOutcome::Delivered;
    trace_.drones[i].delivery = ev.time - world_.agents[i].request.release;
  }

  // Live one-leg decision for the online mode. Knowledge per candidate
  // station: pads busy until the active drones' recharge ends, queued drones
  // with their actual arrivals, and announced inbound arrivals inside the
  // time window.
  StepResult decide(std::size_t i, const PlanCursor& cursor) {
    const DroneAgent& agent = world_.agents[i];
    const Minutes tw = world_.config.time_window;
    const Minutes now = cursor.now;
    const ForecastFn live = [this, &agent, tw, now](StationId station, Minutes eta) {
      const StationRuntime& st = stations_[static_cast<std::size_t>(station)];
      CompetitorForecast fc;
      fc.station = station;
      fc.pads_busy_until.assign(st.pad_in_use.size(), Minutes{});
      for (const RuntimeEntry& e : st.entries) {
        if (e.drone == agent.id) continue;
        if (e.started) {
          if (e.end > now) {  // still on its pad
            fc.pads_busy_until[static_cast<std::size_t>(e.pad)] = e.end;
          }
        } else {  // waiting for a pad
          fc.arrivals.push_back(ArrivalRequest{e.drone, e.arrival, e.duration});
        }
      }
      for (const Announcement& a : st.announced) {
        if (a.drone == agent.id) continue;
        if (a.eta < eta - tw || a.eta > eta + tw) continue;
        fc.arrivals.push_back(ArrivalRequest{a.drone, max(a.eta, now), a.recharge});
      }
      return fc;
    };
    return plan_step(world_, agent, cursor, live);
  }

  void announce(std::size_t i, const PlanLeg& leg) {
    if (leg.to == world_.agents[i].request.dst) return;  // deliveries do not book pads
    stations_[static_cast<std::size_t>(leg.to)].announced.push_back(
        Announcement{world_.agents[i].id, leg.arrival(), leg.recharge});
  }

  void finalize() {
    for (std::size_t i = 0; i < runs_.size(); ++i) {
      CompositionPlan realized;
      realized.legs = runs_[i].realized;
      Minutes total;
      for (const PlanLeg& leg : realized.legs) total += leg.travel + leg.wait + leg.recharge;
      realized.total_time = total;
      trace_.drones[i].realized = std::move(realized);
    }
    trace_.stations.resize(stations_.size());
    for (std::size_t s = 0; s < stations_.size(); ++s) {
      StationSchedule& sched = trace_.stations[s];
      sched.station = static_cast<StationId>(s);
      sched.pad_count = world_.network().stations()[s].pad_count;
      for (const RuntimeEntry& e : stations_[s].entries) {
        if (!e.started) continue;
        sched.reservations.push_back(Reservation{e.drone, e.arrival, e.start, e.end, e.pad});
      }
      std::sort(sched.reservations.begin(), sched.reservations.end(),
                [](const Reservation& a, const Reservation& b) {
                  if (a.arrival != b.arrival) return a.arrival < b.arrival;
                  return a.drone < b.drone;
                });
    }
  }

  const World& world_;
  JitterModel jitter_;
  bool online_;
  std::priority_queue<Event, std::vector<Event>, EventAfter> queue_;
  std::vector<DroneRun> runs_;
  std::vector<StationRuntime> stations_;
  ExecutionTrace trace_;
};

}  // namespace

ExecutionTrace simulate(const World& world, const std::vector<CompositionPlan>& plans,
                        const JitterModel& jitter) {
  Simulation sim(world, jitter, /*online=*/false);
  return sim.run(plans);
}

ExecutionTrace simulate_online(const World& world, const JitterModel& jitter) {
  Simulation sim(world, jitter, /*online=*/true);
  return sim.run({});
}

void write_trace(const ExecutionTrace& trace, std::ostream& out) {
  for (const Event& ev : trace.events) {
    out << format_minutes(ev.time) << ',' << event_name(ev.kind) << ',' << ev.drone << ','
        << ev.station << '\n';
  }
}

}  // namespace skyway
