#include "skyway/planner.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "skyway/errors.hpp"

namespace skyway {

const char* planner_name(PlannerKind kind) {
  switch (kind) {
    case PlannerKind::PredictionBased:
      return "pb";
    case PlannerKind::CompleteInformation:
      return "ci";
  }
  return "?";
}

World World::make(const SkywayNetwork& net, EnergyModel energy, PlannerConfig config,
                  std::vector<DroneAgent> agents) {
  World world;
  world.net = &net;
  world.energy = energy;
  if (config.max_hops <= 0) {
    config.max_hops = hop_diameter(net) + 2;
  }
  world.config = config;
  world.agents = std::move(agents);
  world.commitments.assign(net.station_count(), {});
  return world;
}

int hop_diameter(const SkywayNetwork& net) {
  const auto n = net.station_count();
  int diameter = 0;
  std::vector<int> dist(n);
  std::deque<StationId> queue;
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.clear();
    queue.push_back(static_cast<StationId>(s));
    while (!queue.empty()) {
      const StationId cur = queue.front();
      queue.pop_front();
      for (const AdjacentEdge& e : net.neighbors(cur)) {
        if (dist[static_cast<std::size_t>(e.neighbor)] < 0) {
          dist[static_cast<std::size_t>(e.neighbor)] = dist[static_cast<std::size_t>(cur)] + 1;
          diameter = std::max(diameter, dist[static_cast<std::size_t>(e.neighbor)]);
          queue.push_back(e.neighbor);
        }
      }
    }
  }
  return diameter;
}

PayoffBreakdown make_payoff(Minutes travel, Minutes recharge, Minutes wait) {
  if (travel.negative() || recharge.negative() || wait.negative()) {
    throw DomainError("negative payoff component");
  }
  return PayoffBreakdown{travel, wait, recharge, travel + wait + recharge};
}

CandidateSet reachable_stations(const World& world, const DroneAgent& drone,
                                const PlanCursor& cursor) {
  const SkywayNetwork& net = world.network();
  const double range =
      effective_range(world.energy, drone.request.payload_kg, drone.spec.max_payload_kg);
  const double charge_range = cursor.battery * range;

  // Best feasible segment per neighbor: smallest distance, then smallest id.
  std::map<StationId, Candidate> best;
  for (const AdjacentEdge& edge : net.neighbors(cursor.loc)) {
    const Segment& seg = net.segment(edge.segment);
    if (seg.distance_km > range || seg.distance_km > charge_range) continue;
    auto it = best.find(edge.neighbor);
    if (it == best.end() || seg.distance_km < it->second.distance_km ||
        (seg.distance_km == it->second.distance_km && edge.segment < it->second.segment)) {
      Candidate cand;
      cand.station = edge.neighbor;
      cand.segment = edge.segment;
      cand.distance_km = seg.distance_km;
      best[edge.neighbor] = cand;
    }
  }

  CandidateSet set;
  set.candidates.reserve(best.size());
  for (auto& [station, cand] : best) {
    set.candidates.push_back(cand);
  }
  return set;
}

CompetitorForecast forecast_competitors(const World& world, StationId station, Minutes eta,
                                        Minutes time_window, PlayerId exclude) {
  CompetitorForecast forecast;
  forecast.station = station;
  const Minutes lo = eta - time_window;
  const Minutes hi = eta + time_window;
  for (const CommittedArrival& c : world.commitments[static_cast<std::size_t>(station)]) {
    if (c.drone == exclude) continue;
    if (c.arrival < lo || c.arrival > hi) continue;
    forecast.arrivals.push_back(ArrivalRequest{c.drone, c.arrival, c.recharge});
  }
  return forecast;
}

void evaluate_candidate(const World& world, const DroneAgent& drone, const PlanCursor& cursor,
                        const CompetitorForecast& forecast, Candidate& cand) {
  const SkywayNetwork& net = world.network();
  const Minutes travel = travel_time(cand.distance_km, drone.spec);
  const Minutes eta = cursor.now + travel;

  if (cand.station == drone.request.dst) {
    // Delivery completes on arrival: no pad, no recharge.
    cand.payoff = make_payoff(travel, Minutes{}, Minutes{});
    cand.est_to_dst = Minutes{};
    cand.evaluated = true;
    return;
  }

  const double used =
      energy_fraction(world.energy, cand.distance_km, drone.request.payload_kg,
                      drone.spec.max_payload_kg);
  const double deficit = std::min(1.0, (1.0 - cursor.battery) + used);
  const Minutes recharge = recharge_duration(world.energy, deficit);
  std::vector<Minutes> pads = forecast.pads_busy_until;
  if (pads.empty()) {
    pads.assign(static_cast<std::size_t>(net.station(cand.station).pad_count), Minutes{});
  }
  const Minutes wait = wait_with_busy_pads(std::move(pads), forecast.arrivals,
                                           ArrivalRequest{drone.id, eta, recharge});
  cand.payoff = make_payoff(travel, recharge, wait);
  cand.est_to_dst =
      Minutes::from_minutes(net.euclidean_km(cand.station, drone.request.dst) /
                            drone.spec.max_speed_kmh * 60.0);
  cand.evaluated = true;
}

namespace {

std::int64_t candidate_score(const Candidate& cand, double est_weight) {
  if (est_weight == 1.0) {
    return cand.payoff.total.ticks() + cand.est_to_dst.ticks();
  }
  return cand.payoff.total.ticks() +
         std::llround(static_cast<double>(cand.est_to_dst.ticks()) * est_weight);
}

}  // namespace

std::size_t select_next(const CandidateSet& set, double est_weight) {
  if (set.empty()) throw Error("select_next on empty candidate set");
  std::size_t best = 0;
  std::int64_t best_score = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < set.candidates.size(); ++i) {
    const Candidate& cand = set.candidates[i];
    if (!cand.evaluated) throw Error("select_next on unevaluated candidate");
    const std::int64_t score = candidate_score(cand, est_weight);
    const Candidate& cur = set.candidates[best];
    if (i == 0 || score < best_score ||
        (score == best_score && (cand.est_to_dst < cur.est_to_dst ||
                                 (cand.est_to_dst == cur.est_to_dst && cand.station < cur.station)))) {
      best = i;
      best_score = score;
    }
  }
  return best;
}

StepResult plan_step(const World& world, const DroneAgent& drone, const PlanCursor& cursor,
                     const ForecastFn& forecast) {
  CandidateSet set = reachable_stations(world, drone, cursor);
  if (set.empty()) return StepResult{StepResult::Kind::NoPath, {}};

  // Destination in range: deliver directly, no competition to resolve.
  for (Candidate& cand : set.candidates) {
    if (cand.station != drone.request.dst) continue;
    CompetitorForecast none;
    none.station = cand.station;
    evaluate_candidate(world, drone, cursor, none, cand);
    PlanLeg leg{cand.segment, cursor.loc,    cand.station, cursor.now,
                cand.payoff.travel, Minutes{}, Minutes{}};
    return StepResult{StepResult::Kind::Finished, leg};
  }

  for (Candidate& cand : set.candidates) {
    const Minutes eta = cursor.now + travel_time(cand.distance_km, drone.spec);
    evaluate_candidate(world, drone, cursor, forecast(cand.station, eta), cand);
  }

  const Candidate& chosen = set.candidates[select_next(set, world.config.est_weight)];
  PlanLeg leg{chosen.segment,      cursor.loc,          chosen.station, cursor.now,
              chosen.payoff.travel, chosen.payoff.wait, chosen.payoff.recharge};
  return StepResult{StepResult::Kind::Advanced, leg};
}

StepResult prediction_step(World& world, const DroneAgent& drone, PlanCursor& cursor) {
  const ForecastFn committed = [&world, &drone](StationId station, Minutes eta) {
    return forecast_competitors(world, station, eta, world.config.time_window, drone.id);
  };
  StepResult result = plan_step(world, drone, cursor, committed);
  switch (result.kind) {
    case StepResult::Kind::Advanced:
      world.commitments[static_cast<std::size_t>(result.leg.to)].push_back(
          CommittedArrival{drone.id, result.leg.arrival(), result.leg.recharge});
      cursor = PlanCursor{result.leg.to, result.leg.finish(), 1.0};
      break;
    case StepResult::Kind::Finished:
      cursor = PlanCursor{result.leg.to, result.leg.arrival(), cursor.battery};
      break;
    case StepResult::Kind::NoPath:
      break;
  }
  return result;
}

namespace {

void erase_commitments(World& world, PlayerId drone, const std::vector<StationId>& stations) {
  for (StationId st : stations) {
    auto& list = world.commitments[static_cast<std::size_t>(st)];
    std::erase_if(list, [drone](const CommittedArrival& c) { return c.drone == drone; });
  }
}

CompositionPlan finish_plan(std::vector<PlanLeg> legs) {
  CompositionPlan plan;
  plan.legs = std::move(legs);
  Minutes total;
  for (const PlanLeg& leg : plan.legs) {
    total += leg.travel + leg.wait + leg.recharge;
  }
  plan.total_time = total;
  return plan;
}

}  // namespace

PlanOutcome plan_prediction_based(World& world, DroneAgent& drone) {
  PlanCursor cursor{drone.request.src, drone.request.release, drone.battery};
  std::vector<PlanLeg> legs;
  std::vector<StationId> touched;

  const std::int64_t guard =
      static_cast<std::int64_t>(world.network().station_count()) * world.config.max_hops;
  for (std::int64_t step = 0; step <= guard; ++step) {
    StepResult result = prediction_step(world, drone, cursor);
    if (result.kind == StepResult::Kind::NoPath) break;
    legs.push_back(result.leg);
    if (result.kind == StepResult::Kind::Finished) {
      drone.plan = finish_plan(std::move(legs));
      return PlanOutcome{PlanStatus::Planned, drone.plan, 0};
    }
    touched.push_back(result.leg.to);
  }

  // Dead end or cycle guard: withdraw this player's bookings.
  erase_commitments(world, drone.id, touched);
  drone.plan = CompositionPlan{};
  return PlanOutcome{PlanStatus::NoPath, {}, 0};
}

namespace {

// Depth-first enumeration state for the exhaustive baseline.
struct ExhaustiveSearch {
  const World& world;
  const DroneAgent& drone;
  double range = 0.0;
  std::int64_t expansions = 0;
  bool budget_hit = false;

  std::vector<bool> visited;
  std::vector<PlanLeg> legs;
  std::vector<StationId> sequence;  // station visit order, starting at src

  bool found = false;
  Minutes best_total;
  std::vector<PlanLeg> best_legs;
  std::vector<StationId> best_sequence;

  explicit ExhaustiveSearch(const World& w, const DroneAgent& d)
      : world(w),
        drone(d),
        range(effective_range(w.energy, d.request.payload_kg, d.spec.max_payload_kg)),
        visited(w.network().station_count(), false) {}

  Minutes true_wait(StationId station, Minutes eta, Minutes recharge) const {
    std::vector<ArrivalRequest> others;
    for (const CommittedArrival& c : world.commitments[static_cast<std::size_t>(station)]) {
      if (c.drone == drone.id) continue;
      others.push_back(ArrivalRequest{c.drone, c.arrival, c.recharge});
    }
    return wait_for(world.network().station(station), std::move(others),
                    ArrivalRequest{drone.id, eta, recharge});
  }

  void offer(Minutes total) {
    const auto hops = legs.size();
    if (found) {
      const bool better =
          total < best_total ||
          (total == best_total && (hops < best_legs.size() ||
                                   (hops == best_legs.size() && sequence < best_sequence)));
      if (!better) return;
    }
    found = true;
    best_total = total;
    best_legs = legs;
    best_sequence = sequence;
  }

  void explore(StationId loc, Minutes now, double battery) {
    if (budget_hit) return;
    if (++expansions > world.config.enumeration_budget) {
      budget_hit = true;
      return;
    }

    const double charge_range = battery * range;
    const StationId dst = drone.request.dst;
    const int max_hops = world.config.max_hops;
    const auto used_hops = static_cast<int>(legs.size());

    for (const AdjacentEdge& edge : world.network().neighbors(loc)) {
      if (budget_hit) return;
      const Segment& seg = world.network().segment(edge.segment);
      if (seg.distance_km > range || seg.distance_km > charge_range) continue;

      if (edge.neighbor == dst) {
        if (used_hops + 1 > max_hops) continue;
        const Minutes travel = travel_time(seg, drone.spec);
        legs.push_back(PlanLeg{edge.segment, loc, dst, now, travel, Minutes{}, Minutes{}});
        sequence.push_back(dst);
        Minutes total;
        for (const PlanLeg& leg : legs) total += leg.travel + leg.wait + leg.recharge;
        offer(total);
        sequence.pop_back();
        legs.pop_back();
        continue;
      }

      if (used_hops + 2 > max_hops) continue;  // needs at least one more leg after this
      if (visited[static_cast<std::size_t>(edge.neighbor)]) continue;

      const Minutes travel = travel_time(seg, drone.spec);
      const Minutes eta = now + travel;
      const double used = energy_fraction(world.energy, seg.distance_km,
                                          drone.request.payload_kg, drone.spec.max_payload_kg);
      const double deficit = std::min(1.0, (1.0 - battery) + used);
      const Minutes recharge = recharge_duration(world.energy, deficit);
      const Minutes wait = true_wait(edge.neighbor, eta, recharge);

      legs.push_back(PlanLeg{edge.segment, loc, edge.neighbor, now, travel, wait, recharge});
      sequence.push_back(edge.neighbor);
      visited[static_cast<std::size_t>(edge.neighbor)] = true;
      explore(edge.neighbor, eta + wait + recharge, 1.0);
      visited[static_cast<std::size_t>(edge.neighbor)] = false;
      sequence.pop_back();
      legs.pop_back();
    }
  }
};

}  // namespace

PlanOutcome plan_complete_information(World& world, DroneAgent& drone) {
  ExhaustiveSearch search(world, drone);
  search.visited[static_cast<std::size_t>(drone.request.src)] = true;
  search.sequence.push_back(drone.request.src);
  search.explore(drone.request.src, drone.request.release, drone.battery);

  if (search.budget_hit) {
    drone.plan = CompositionPlan{};
    return PlanOutcome{PlanStatus::BudgetExceeded, {}, search.expansions};
  }
  if (!search.found) {
    drone.plan = CompositionPlan{};
    return PlanOutcome{PlanStatus::NoPath, {}, search.expansions};
  }

  drone.plan = finish_plan(std::move(search.best_legs));
  for (const PlanLeg& leg : drone.plan.legs) {
    if (leg.to == drone.request.dst) continue;
    world.commitments[static_cast<std::size_t>(leg.to)].push_back(
        CommittedArrival{drone.id, leg.arrival(), leg.recharge});
  }
  return PlanOutcome{PlanStatus::Planned, drone.plan, search.expansions};
}

std::vector<PlanOutcome> plan_all_players(World& world, PlannerKind kind) {
  std::vector<std::size_t> order(world.agents.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&world](std::size_t a, std::size_t b) {
    const DroneAgent& da = world.agents[a];
    const DroneAgent& db = world.agents[b];
    if (da.request.release != db.request.release) return da.request.release < db.request.release;
    return da.id < db.id;
  });

  std::vector<PlanOutcome> outcomes(world.agents.size());
  for (std::size_t idx : order) {
    DroneAgent& drone = world.agents[idx];
    outcomes[idx] = kind == PlannerKind::PredictionBased
                        ? plan_prediction_based(world, drone)
                        : plan_complete_information(world, drone);
  }
  return outcomes;
}

}  // namespace skyway
