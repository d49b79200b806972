#include <CLI11.hpp>
#include <iostream>

#include "sop/bench.hpp"

namespace {

std::string hhmm(sop::TimeInstant t) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%02lld:%02lld", static_cast<long long>(t / 3600),
                static_cast<long long>((t % 3600) / 60));
  return buf;
}

std::vector<sop::Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<sop::Method> methods;
  for (const std::string& name : names) {
    const auto method = sop::method_from_name(name);
    if (!method) throw CLI::ValidationError("methods", "unknown method '" + name + "'");
    methods.push_back(*method);
  }
  return methods;
}

void cmd_generate(const std::string& out, sop::GenConfig config, const std::string& layout,
                  const std::string& depot) {
  config.layout = sop::window_layout_from_name(layout);
  if (depot == "center") {
    config.depot_placement = sop::DepotPlacement::center;
  } else if (depot == "top-left") {
    config.depot_placement = sop::DepotPlacement::top_left_quadrant;
  } else {
    throw CLI::ValidationError("depot", "expected 'center' or 'top-left'");
  }
  const sop::Instance instance = sop::generate_instance(config);
  sop::write_file(out, sop::serialize_instance(instance));
  std::cout << "wrote instance (" << instance.pool.size() << " customers, "
            << instance.windows.size() << " windows) to " << out << "\n";
}

void cmd_fill(const std::string& instance_path, const std::string& scenario_name,
              const std::string& out, double snapshot_fill, const std::string& schedule_out,
              bool validate) {
  const auto instance =
      std::make_shared<const sop::Instance>(sop::parse_instance(sop::read_file(instance_path)));
  const sop::FillScenario scenario = sop::fill_scenario_from_name(scenario_name);
  const sop::FillTrajectory trajectory = sop::fill_schedule(instance, scenario, validate);
  if (!out.empty()) {
    sop::write_file(out, sop::serialize_trajectory(trajectory));
  }
  std::cout << "accepted " << trajectory.total_accepted() << " of " << instance->pool.size()
            << " customers (" << sop::fill_scenario_name(scenario) << ")\n";
  if (!schedule_out.empty()) {
    const sop::Schedule snapshot = sop::snapshot_at_fill(trajectory, snapshot_fill);
    sop::write_file(schedule_out, sop::serialize_schedule(snapshot));
    std::cout << "wrote " << snapshot_fill * 100 << "% fill snapshot ("
              << snapshot.orders.size() << " orders) to " << schedule_out << "\n";
  }
}

void cmd_solve(const std::string& schedule_path, const std::string& instance_path,
               std::uint64_t probe_seed, std::vector<std::string> method_names,
               std::int64_t at_x, std::int64_t at_y, int weight, sop::Duration service) {
  const sop::Schedule schedule = sop::parse_schedule(sop::read_file(schedule_path));

  sop::Order candidate;
  if (!instance_path.empty()) {
    const sop::Instance instance = sop::parse_instance(sop::read_file(instance_path));
    candidate = sop::probe_customers(instance, schedule, 1, probe_seed).at(0);
  } else {
    candidate.id = 1'000'000'000;
    while (schedule.orders.contains(candidate.id)) ++candidate.id;
    candidate.location = {static_cast<std::int32_t>(at_x), static_cast<std::int32_t>(at_y)};
    candidate.weight = static_cast<sop::Weight>(weight);
    candidate.service = service;
    candidate.window = schedule.windows.windows().front().id;
  }
  std::cout << "candidate at (" << candidate.location.x << ", " << candidate.location.y
            << "), weight " << candidate.weight << ", service " << candidate.service << "s\n";

  sop::SlotQuery query;
  query.schedule = schedule;
  query.candidate = candidate;

  std::vector<sop::Method> methods = parse_methods(method_names);
  std::vector<sop::SlotResult> results;
  for (sop::Method method : methods) {
    results.push_back(sop::run_method(method, query, {}, {}));
  }

  for (std::size_t w = 0; w < schedule.windows.size(); ++w) {
    const sop::TimeWindow& window = schedule.windows.windows()[w];
    std::cout << "window " << window.id << " [" << hhmm(window.start) << "-" << hhmm(window.end)
              << "]:";
    for (std::size_t m = 0; m < methods.size(); ++m) {
      const sop::WindowVerdict& verdict = results[m].verdicts[w];
      std::cout << "  " << sop::method_name(methods[m]) << "=";
      if (verdict.feasible) {
        std::cout << "yes(vehicle " << verdict.vehicle;
        if (!verdict.sequence.empty()) {
          std::cout << ", resequenced";
        } else {
          std::cout << ", index " << verdict.position;
        }
        if (!verdict.moves.empty()) std::cout << ", " << verdict.moves.size() << " moves";
        std::cout << ")";
      } else if (verdict.status == sop::VerdictStatus::budget_exhausted) {
        std::cout << "no(budget)";
      } else if (verdict.status == sop::VerdictStatus::size_cap) {
        std::cout << "no(size-cap)";
      } else {
        std::cout << "no";
      }
    }
    std::cout << "\n";
  }
  for (std::size_t m = 0; m < methods.size(); ++m) {
    std::cout << sop::method_name(methods[m]) << ": " << results[m].available().size() << " of "
              << schedule.windows.size() << " windows, "
              << sop::format_clock(std::chrono::duration<double>(results[m].total_elapsed()).count())
              << "\n";
  }
}

void cmd_bench(sop::ExperimentConfig config, const std::vector<std::string>& layout_names,
               const std::vector<std::string>& scenario_names,
               const std::vector<std::string>& method_names, bool full, const std::string& out,
               bool report, bool quiet) {
  if (full) {
    const sop::ExperimentConfig scale = sop::full_scale_config();
    config.vehicle_counts = scale.vehicle_counts;
    config.instances_per_cell = scale.instances_per_cell;
    config.pool_size = scale.pool_size;
  }
  if (!layout_names.empty()) {
    config.layouts.clear();
    for (const std::string& name : layout_names) {
      config.layouts.push_back(sop::window_layout_from_name(name));
    }
  }
  if (!scenario_names.empty()) {
    config.scenarios.clear();
    for (const std::string& name : scenario_names) {
      config.scenarios.push_back(sop::fill_scenario_from_name(name));
    }
  }
  if (!method_names.empty()) config.methods = parse_methods(method_names);

  const std::vector<sop::ResultRow> rows = sop::run_bench(config, quiet ? nullptr : &std::cerr);
  const std::string csv = sop::results_to_csv(rows);
  if (!out.empty()) {
    sop::write_file(out, csv);
    std::cout << "wrote " << rows.size() << " result rows to " << out << "\n";
  } else {
    std::cout << csv;
  }
  if (report) std::cout << sop::render_report(rows);
}

void cmd_report(const std::string& in) {
  std::cout << sop::render_report(sop::results_from_csv(sop::read_file(in)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slot availability solvers and benchmarks for attended home delivery"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "write a benchmark instance file");
  sop::GenConfig gen;
  std::string gen_layout = "I";
  std::string gen_depot = "center";
  std::string gen_out = "instance.txt";
  generate->add_option("--seed", gen.seed, "instance seed");
  generate->add_option("--layout", gen_layout, "window layout: I, II, or III");
  generate->add_option("--vehicles", gen.vehicles, "fleet size");
  generate->add_option("--pool", gen.pool_size, "customer pool size");
  generate->add_option("--capacity", gen.capacity, "vehicle capacity (weight units)");
  generate->add_option("--service", gen.service, "service time per customer (seconds)");
  generate->add_option("--depot", gen_depot, "depot placement: center or top-left");
  generate->add_option("--shift-start", gen.shift_start, "shift start (seconds since midnight)");
  generate->add_option("--shift-end", gen.shift_end, "shift end (seconds since midnight)");
  generate->add_option("-o,--out", gen_out, "output path")->required();
  generate->callback([&] { cmd_generate(gen_out, gen, gen_layout, gen_depot); });

  // fill
  auto* fill = app.add_subcommand("fill", "book the pool into an empty schedule");
  std::string fill_instance, fill_out, fill_schedule_out;
  std::string fill_scenario = "non-optimized";
  double fill_snapshot = 1.0;
  bool fill_validate = false;
  fill->add_option("-i,--instance", fill_instance, "instance file")->required();
  fill->add_option("--scenario", fill_scenario, "non-optimized or optimized");
  fill->add_option("-o,--out", fill_out, "trajectory output path");
  fill->add_option("--snapshot", fill_snapshot, "fill level for --schedule-out");
  fill->add_option("--schedule-out", fill_schedule_out, "write the snapshot schedule here");
  fill->add_flag("--validate", fill_validate, "re-check feasibility after every acceptance");
  fill->callback([&] {
    cmd_fill(fill_instance, fill_scenario, fill_out, fill_snapshot, fill_schedule_out,
             fill_validate);
  });

  // solve
  auto* solve = app.add_subcommand("solve", "answer one slot query against a schedule");
  std::string solve_schedule, solve_instance;
  std::uint64_t solve_probe_seed = 1;
  std::vector<std::string> solve_methods{"simple", "tsptw", "ans"};
  std::int64_t solve_x = 0, solve_y = 0;
  int solve_weight = 7;
  sop::Duration solve_service = 300;
  solve->add_option("-s,--schedule", solve_schedule, "schedule file")->required();
  solve->add_option("-i,--instance", solve_instance,
                    "sample the prospective customer from this instance");
  solve->add_option("--probe-seed", solve_probe_seed, "seed for the sampled customer");
  solve->add_option("--methods", solve_methods, "methods to run")->delimiter(',');
  solve->add_option("--at-x", solve_x, "explicit candidate x (meters)");
  solve->add_option("--at-y", solve_y, "explicit candidate y (meters)");
  solve->add_option("--weight", solve_weight, "explicit candidate weight");
  solve->add_option("--service", solve_service, "explicit candidate service (seconds)");
  solve->callback([&] {
    cmd_solve(solve_schedule, solve_instance, solve_probe_seed, solve_methods, solve_x, solve_y,
              solve_weight, solve_service);
  });

  // bench
  auto* bench = app.add_subcommand("bench", "run the full experiment grid");
  sop::ExperimentConfig experiment;
  std::vector<std::string> bench_layouts, bench_scenarios, bench_methods;
  std::string bench_out;
  bool bench_full = false, bench_report = false, bench_quiet = false;
  bench->add_option("--layouts", bench_layouts, "window layouts (I,II,III)")->delimiter(',');
  bench->add_option("--scenarios", bench_scenarios, "nonopt,opt")->delimiter(',');
  bench->add_option("--vehicles", experiment.vehicle_counts, "fleet sizes")->delimiter(',');
  bench->add_option("--fills", experiment.fill_levels, "fill levels")->delimiter(',');
  bench->add_option("--methods", bench_methods, "methods to run")->delimiter(',');
  bench->add_option("--instances", experiment.instances_per_cell, "instances per cell");
  bench->add_option("--probes", experiment.probes_per_instance, "prospective customers per instance");
  bench->add_option("--pool", experiment.pool_size, "customer pool size");
  bench->add_option("--seed", experiment.seed_base, "base seed");
  bench->add_option("--jobs", experiment.jobs, "parallel workers over instances");
  bench->add_flag("--full", bench_full, "published scale: 100 instances, pool 5000, 20/40/60 vehicles");
  bench->add_flag("--report", bench_report, "also print aligned tables");
  bench->add_flag("--quiet", bench_quiet, "suppress per-instance progress");
  bench->add_option("-o,--out", bench_out, "CSV output path");
  bench->callback([&] {
    cmd_bench(experiment, bench_layouts, bench_scenarios, bench_methods, bench_full, bench_out,
              bench_report, bench_quiet);
  });

  // report
  auto* report = app.add_subcommand("report", "render tables from a results CSV");
  std::string report_in;
  report->add_option("-i,--in", report_in, "results CSV")->required();
  report->callback([&] { cmd_report(report_in); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const sop::ParseError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
