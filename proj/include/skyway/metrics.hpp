#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "skyway/planner.hpp"
#include "skyway/scenario.hpp"

namespace skyway {

struct SweepConfig {
  std::vector<int> node_counts{25, 50, 75, 100};
  double runs_fraction = 50.0;  // percent of the node count, runs = ceil(N * f / 100)
  ScenarioConfig base;          // node_count and seed overridden per run
  std::uint64_t master_seed = 1;
};

struct RunRecord {
  int node_count = 0;
  int run_index = 0;
  PlannerKind planner = PlannerKind::PredictionBased;
  double plan_wall_ms = 0.0;       // planning calls only
  double mean_delivery_min = 0.0;  // over delivered players; NaN when none
  bool feasible = false;           // every player planned and delivered
  bool budget_exceeded = false;    // any player hit the enumeration budget
};

struct AggregateRecord {
  int node_count = 0;
  PlannerKind planner = PlannerKind::PredictionBased;
  int runs = 0;
  int feasible_runs = 0;
  int budget_exceeded = 0;  // exclusion tally
  double mean_ms = 0.0, median_ms = 0.0, stddev_ms = 0.0;
  double mean_delivery = 0.0, median_delivery = 0.0, stddev_delivery = 0.0;
};

// Per-player comparisons of the two planners on identical scenarios under
// zero jitter. A violation is a player whose greedy delivery beat the
// exhaustive baseline.
struct DominanceStats {
  std::int64_t comparisons = 0;
  std::int64_t violations = 0;
};

struct ExperimentResult {
  std::vector<RunRecord> runs;
  std::vector<AggregateRecord> aggregates;
  DominanceStats dominance;
};

double mean(const std::vector<double>& xs);
double median(std::vector<double> xs);
double sample_stddev(const std::vector<double>& xs);

// Mean/median/stddev per (node_count, planner) over feasible runs.
std::vector<AggregateRecord> aggregate(const std::vector<RunRecord>& runs);

// For each node count, runs both planners on the same freshly generated
// scenarios, times the planning calls, and reads delivery times off a
// zero-jitter execution of the committed plans.
ExperimentResult run_sweep(const SweepConfig& config);

// runs.csv (one row per run per planner) and aggregates.csv, under out_dir.
void emit_metrics(const ExperimentResult& result, const std::filesystem::path& out_dir);

}  // namespace skyway
