#pragma once

#include <iosfwd>
#include <map>

#include "sop/ans.hpp"
#include "sop/booking.hpp"
#include "sop/io.hpp"
#include "sop/tsptw.hpp"

namespace sop {

// Full experiment grid. Every reported number is a pure function of this
// struct; wall-clock columns are the only nondeterministic output.
struct ExperimentConfig {
  std::vector<WindowLayout> layouts{WindowLayout::disjoint_hourly};
  std::vector<FillScenario> scenarios{FillScenario::non_optimized};
  std::vector<int> vehicle_counts{5, 10};
  std::vector<double> fill_levels{0.85, 0.90, 0.95, 0.99};
  std::vector<Method> methods{Method::simple, Method::tsptw, Method::ans};
  int instances_per_cell = 10;
  int probes_per_instance = 1;
  int pool_size = 1000;
  std::uint64_t seed_base = 1;
  int jobs = 1;  // instance-level parallelism; each timed solve stays single-threaded
  TsptwOptions tsptw_options;
  AnsConfig ans_config;
  GenConfig gen_template;  // seed/vehicles/pool/layout overridden per cell
};

// The scale used for the published-style runs: 100 instances per cell,
// 5000-customer pools, fleets of 20/40/60.
ExperimentConfig full_scale_config();

struct MethodStats {
  bool present = false;
  double avg_slots = 0.0;
  double avg_seconds = 0.0;
};

struct ResultRow {
  WindowLayout layout = WindowLayout::disjoint_hourly;
  FillScenario scenario = FillScenario::non_optimized;
  int vehicles = 0;
  double fill = 0.0;
  int queries = 0;
  double avg_saturation = 0.0;  // mean orders at 100% fill
  MethodStats simple;
  MethodStats tsptw;
  MethodStats ans;
  double combined_avg = 0.0;  // union of the methods' per-window verdicts

  const MethodStats& stats(Method method) const;
  MethodStats& stats(Method method);
};

// Runs the grid. Optional `log` receives one progress line per instance.
std::vector<ResultRow> run_bench(const ExperimentConfig& config, std::ostream* log = nullptr);

// Stable column order; timing columns carry wall-clock seconds.
std::string results_to_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> results_from_csv(const std::string& text);

// Aligned text tables, one block per (layout, scenario, vehicles).
std::string render_report(const std::vector<ResultRow>& rows);

// min:sec.ms rendering: ".051", "1.308", "2:24.469".
std::string format_clock(double seconds);

// Dispatches one query to the chosen solver.
SlotResult run_method(Method method, const SlotQuery& query, const TsptwOptions& tsptw_options,
                      const AnsConfig& ans_config);

}  // namespace sop
