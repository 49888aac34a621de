#include "skyway/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>

#include "skyway/errors.hpp"
#include "skyway/rng.hpp"
#include "skyway/sim.hpp"

namespace skyway {

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double median(std::vector<double> xs) {
  if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  if (xs.size() % 2 == 1) return xs[mid];
  return (xs[mid - 1] + xs[mid]) / 2.0;
}

double sample_stddev(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double mu = mean(xs);
  double sum = 0.0;
  for (double x : xs) sum += (x - mu) * (x - mu);
  return std::sqrt(sum / static_cast<double>(xs.size() - 1));
}

std::vector<AggregateRecord> aggregate(const std::vector<RunRecord>& runs) {
  std::vector<AggregateRecord> out;
  for (const RunRecord& run : runs) {
    AggregateRecord* agg = nullptr;
    for (AggregateRecord& a : out) {
      if (a.node_count == run.node_count && a.planner == run.planner) {
        agg = &a;
        break;
      }
    }
    if (agg == nullptr) {
      out.push_back(AggregateRecord{run.node_count, run.planner});
      agg = &out.back();
    }
    agg->runs += 1;
    if (run.budget_exceeded) agg->budget_exceeded += 1;
    if (run.feasible) agg->feasible_runs += 1;
  }
  for (AggregateRecord& agg : out) {
    std::vector<double> ms;
    std::vector<double> delivery;
    for (const RunRecord& run : runs) {
      if (run.node_count != agg.node_count || run.planner != agg.planner) continue;
      if (!run.feasible) continue;
      ms.push_back(run.plan_wall_ms);
      delivery.push_back(run.mean_delivery_min);
    }
    agg.mean_ms = mean(ms);
    agg.median_ms = median(ms);
    agg.stddev_ms = sample_stddev(ms);
    agg.mean_delivery = mean(delivery);
    agg.median_delivery = median(delivery);
    agg.stddev_delivery = sample_stddev(delivery);
  }
  return out;
}

namespace {

struct PlannedRun {
  RunRecord record;
  std::vector<double> deliveries;  // per player, NaN when not delivered
};

PlannedRun execute_one(const Scenario& scenario, PlannerKind kind, int node_count,
                       int run_index) {
  PlannedRun out;
  out.record.node_count = node_count;
  out.record.run_index = run_index;
  out.record.planner = kind;

  World world = make_world(scenario);

  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<PlanOutcome> outcomes = plan_all_players(world, kind);
  const auto t1 = std::chrono::steady_clock::now();
  out.record.plan_wall_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();

  std::vector<CompositionPlan> plans;
  plans.reserve(outcomes.size());
  bool all_planned = true;
  for (const PlanOutcome& outcome : outcomes) {
    plans.push_back(outcome.plan);
    if (outcome.status == PlanStatus::BudgetExceeded) out.record.budget_exceeded = true;
    if (outcome.status != PlanStatus::Planned) all_planned = false;
  }

  const ExecutionTrace trace = simulate(world, plans, JitterModel{});  // zero jitter

  out.deliveries.assign(outcomes.size(), std::numeric_limits<double>::quiet_NaN());
  std::vector<double> delivered;
  bool all_delivered = all_planned;
  for (std::size_t i = 0; i < trace.drones.size(); ++i) {
    if (trace.drones[i].outcome == DroneOutcome::Delivered) {
      out.deliveries[i] = trace.drones[i].delivery.count();
      delivered.push_back(out.deliveries[i]);
    } else {
      all_delivered = false;
    }
  }
  out.record.feasible = all_delivered && !out.record.budget_exceeded;
  out.record.mean_delivery_min = mean(delivered);
  return out;
}

}  // namespace

ExperimentResult run_sweep(const SweepConfig& config) {
  if (config.runs_fraction <= 0.0 || config.runs_fraction > 100.0) {
    throw DomainError("runs_fraction must be in (0, 100]");
  }
  ExperimentResult result;
  for (const int n : config.node_counts) {
    const int runs = static_cast<int>(
        std::ceil(static_cast<double>(n) * config.runs_fraction / 100.0));
    for (int r = 0; r < runs; ++r) {
      ScenarioConfig scenario_config = config.base;
      scenario_config.node_count = n;
      scenario_config.seed = mix_seed(config.master_seed,
                                      static_cast<std::uint64_t>(n) * 1'000'003ULL +
                                          static_cast<std::uint64_t>(r));
      const Scenario scenario = generate(scenario_config);

      const PlannedRun pb =
          execute_one(scenario, PlannerKind::PredictionBased, n, r);
      const PlannedRun ci =
          execute_one(scenario, PlannerKind::CompleteInformation, n, r);
      result.runs.push_back(pb.record);
      result.runs.push_back(ci.record);

      for (std::size_t p = 0; p < pb.deliveries.size(); ++p) {
        if (std::isnan(pb.deliveries[p]) || std::isnan(ci.deliveries[p])) continue;
        result.dominance.comparisons += 1;
        if (pb.deliveries[p] < ci.deliveries[p] - 1e-9) {
          result.dominance.violations += 1;
        }
      }
    }
  }
  result.aggregates = aggregate(result.runs);
  return result;
}

namespace {

std::string csv_double(double value) {
  if (std::isnan(value)) return "";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace

void emit_metrics(const ExperimentResult& result, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create " + out_dir.string() + ": " + ec.message());

  const auto runs_path = out_dir / "runs.csv";
  {
    std::ofstream out(runs_path);
    if (!out) throw Error("cannot open " + runs_path.string() + " for writing");
    out << "node_count,run,planner,plan_ms,delivery_min,feasible,budget_exceeded\n";
    for (const RunRecord& run : result.runs) {
      out << run.node_count << ',' << run.run_index << ',' << planner_name(run.planner) << ','
          << csv_double(run.plan_wall_ms) << ',' << csv_double(run.mean_delivery_min) << ','
          << (run.feasible ? 1 : 0) << ',' << (run.budget_exceeded ? 1 : 0) << '\n';
    }
    if (!out) throw Error("failed writing " + runs_path.string());
  }

  const auto agg_path = out_dir / "aggregates.csv";
  {
    std::ofstream out(agg_path);
    if (!out) throw Error("cannot open " + agg_path.string() + " for writing");
    out << "node_count,planner,runs,feasible_runs,budget_exceeded,"
           "mean_plan_ms,median_plan_ms,stddev_plan_ms,"
           "mean_delivery_min,median_delivery_min,stddev_delivery_min\n";
    for (const AggregateRecord& agg : result.aggregates) {
      out << agg.node_count << ',' << planner_name(agg.planner) << ',' << agg.runs << ','
          << agg.feasible_runs << ',' << agg.budget_exceeded << ',' << csv_double(agg.mean_ms)
          << ',' << csv_double(agg.median_ms) << ',' << csv_double(agg.stddev_ms) << ','
          << csv_double(agg.mean_delivery) << ',' << csv_double(agg.median_delivery) << ','
          << csv_double(agg.stddev_delivery) << '\n';
    }
    if (!out) throw Error("failed writing " + agg_path.string());
  }
}

}  // namespace skyway
