#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "skyway/contention.hpp"
#include "skyway/energy.hpp"
#include "skyway/model.hpp"

namespace skyway {

struct PlannerConfig {
  Minutes time_window = Minutes::from_minutes(10.0);  // half-width for competitor forecasts
  int max_hops = 0;            // path-length cap for exhaustive search; 0 = hop diameter + 2
  std::int64_t enumeration_budget = 1'000'000;  // exhaustive-search expansion cap
  double est_weight = 1.0;     // weight of the distance-to-destination estimate in selection
};

enum class PlannerKind {
  PredictionBased,      // online greedy with windowed competitor forecasts
  CompleteInformation,  // exhaustive path enumeration against true arrivals
};

const char* planner_name(PlannerKind kind);

// An arrival another planner has already booked: visible to everyone who
// plans later.
struct CommittedArrival {
  PlayerId drone = kNoPlayer;
  Minutes arrival;
  Minutes recharge;
};

// Shared planning state for one scenario run: the network, the agents, and
// the per-station record of committed arrivals. Planning is sequential;
// distinct worlds share nothing.
struct World {
  const SkywayNetwork* net = nullptr;
  EnergyModel energy;
  PlannerConfig config;  // max_hops resolved to a concrete value by make()
  std::vector<DroneAgent> agents;
  std::vector<std::vector<CommittedArrival>> commitments;  // indexed by station id

  static World make(const SkywayNetwork& net, EnergyModel energy, PlannerConfig config,
                    std::vector<DroneAgent> agents);

  const SkywayNetwork& network() const { return *net; }
};

// Longest shortest-path hop count over reachable pairs.
int hop_diameter(const SkywayNetwork& net);

// total = travel + recharge + wait, exact in ticks. Negative components are
// a caller bug and throw.
PayoffBreakdown make_payoff(Minutes travel, Minutes recharge, Minutes wait);

// Where the planning drone currently sits: location, clock, charge.
struct PlanCursor {
  StationId loc = kNoStation;
  Minutes now;
  double battery = 1.0;
};

// One strategy: fly this segment to this station. Cost fields are filled by
// evaluate_candidate.
struct Candidate {
  StationId station = kNoStation;
  SegmentId segment = kNoSegment;
  double distance_km = 0.0;
  PayoffBreakdown payoff{};
  Minutes est_to_dst;
  bool evaluated = false;
};

struct CandidateSet {
  std::vector<Candidate> candidates;
  bool empty() const { return candidates.empty(); }
};

// Adjacent stations whose segment is within the drone's effective range and
// current charge. One candidate per station (shortest feasible segment),
// ordered by station id. Empty set = dead end.
CandidateSet reachable_stations(const World& world, const DroneAgent& drone,
                                const PlanCursor& cursor);

// Competitors' predicted arrivals at one station, restricted to
// [eta - tw, eta + tw]. pads_busy_until optionally seeds the FCFS fold with
// live pad occupancy (one entry per pad; empty means every pad is free).
struct CompetitorForecast {
  StationId station = kNoStation;
  std::vector<ArrivalRequest> arrivals;
  std::vector<Minutes> pads_busy_until;
};

CompetitorForecast forecast_competitors(const World& world, StationId station, Minutes eta,
                                        Minutes time_window, PlayerId exclude = kNoPlayer);

// Fills payoff and est_to_dst: travel from the segment, recharge from the
// post-leg deficit, wait from folding self into the forecast's FCFS
// schedule. A candidate equal to the destination takes the delivery fast
// path (no recharge, no wait, zero estimate).
void evaluate_candidate(const World& world, const DroneAgent& drone, const PlanCursor& cursor,
                        const CompetitorForecast& forecast, Candidate& cand);

// Index of the argmin of payoff.total + est_weight * est_to_dst. Ties go to
// the smaller estimate, then the smaller station id.
std::size_t select_next(const CandidateSet& set, double est_weight = 1.0);

// Source of predicted arrivals for a (station, eta) query. The offline
// planners read the world's commitments; the online simulator substitutes
// live knowledge.
using ForecastFn = std::function<CompetitorForecast(StationId, Minutes)>;

struct StepResult {
  enum class Kind { Advanced, Finished, NoPath };
  Kind kind = Kind::NoPath;
  PlanLeg leg{};
};

// One greedy decision from `cursor`: the direct delivery leg when the
// destination is in range, otherwise the best-scoring candidate. Pure.
StepResult plan_step(const World& world, const DroneAgent& drone, const PlanCursor& cursor,
                     const ForecastFn& forecast);

// plan_step against the world's committed plans; commits the chosen leg's
// arrival so later planners see it, and advances the cursor.
StepResult prediction_step(World& world, const DroneAgent& drone, PlanCursor& cursor);

enum class PlanStatus { Planned, NoPath, BudgetExceeded };

struct PlanOutcome {
  PlanStatus status = PlanStatus::NoPath;
  CompositionPlan plan;
  std::int64_t expansions = 0;  // exhaustive-search effort, 0 for greedy
};

// Greedy planner: iterate prediction_step until delivery or a dead end.
// Aborts (and rolls its commitments back) after stations x max_hops steps.
PlanOutcome plan_prediction_based(World& world, DroneAgent& drone);

// Exhaustive baseline: enumerate every simple path of at most max_hops legs,
// cost each against the full committed schedule, keep the minimum. Ties go
// to fewer hops, then the lexicographically smaller station sequence.
PlanOutcome plan_complete_information(World& world, DroneAgent& drone);

// Plans every agent in ascending (release, id) order; each later player sees
// earlier commitments. Failed players are recorded and skipped, the rest
// still plan. Results are indexed like world.agents.
std::vector<PlanOutcome> plan_all_players(World& world, PlannerKind kind);

}  // namespace skyway
