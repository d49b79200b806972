#include "sop/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace sop {

ExperimentConfig full_scale_config() {
  ExperimentConfig config;
  config.vehicle_counts = {20, 40, 60};
  config.instances_per_cell = 100;
  config.pool_size = 5000;
  return config;
}

const MethodStats& ResultRow::stats(Method method) const {
  switch (method) {
    case Method::simple: return simple;
    case Method::tsptw: return tsptw;
    case Method::ans: return ans;
  }
  throw std::logic_error("unreachable");
}

MethodStats& ResultRow::stats(Method method) {
  switch (method) {
    case Method::simple: return simple;
    case Method::tsptw: return tsptw;
    case Method::ans: return ans;
  }
  throw std::logic_error("unreachable");
}

SlotResult run_method(Method method, const SlotQuery& query, const TsptwOptions& tsptw_options,
                      const AnsConfig& ans_config) {
  switch (method) {
    case Method::simple: return solve_simple(query);
    case Method::tsptw: return solve_tsptw(query, tsptw_options);
    case Method::ans: return solve_ans(query, ans_config);
  }
  throw std::logic_error("unreachable");
}

namespace {

struct MethodAccum {
  long long slots = 0;
  double seconds = 0.0;
};

// Accumulated numbers for one (scenario, fill) cell of one instance.
struct CellAccum {
  int queries = 0;
  double saturation = 0.0;
  int saturation_count = 0;
  std::map<Method, MethodAccum> per_method;
  long long combined_slots = 0;
};

// Results of one work item: one generated instance evaluated over every
// scenario and fill level.
struct InstanceOutcome {
  // indexed [scenario][fill]
  std::vector<std::vector<CellAccum>> cells;
};

InstanceOutcome evaluate_instance(const ExperimentConfig& config, WindowLayout layout,
                                  int vehicles, int index, std::ostream* log,
                                  std::mutex* log_mutex) {
  GenConfig gen = config.gen_template;
  gen.layout = layout;
  gen.vehicles = vehicles;
  gen.pool_size = config.pool_size;
  gen.seed = Rng::mix(config.seed_base,
                      fnv1a64(std::string(window_layout_name(layout)) + "/" +
                              std::to_string(vehicles) + "/" + std::to_string(index)));

  const auto instance = std::make_shared<const Instance>(generate_instance(gen));
  const std::vector<Order> probes = probe_customers(
      *instance, empty_schedule(*instance), config.probes_per_instance, Rng::mix(gen.seed, 0xbeef));

  InstanceOutcome outcome;
  outcome.cells.assign(config.scenarios.size(),
                       std::vector<CellAccum>(config.fill_levels.size()));

  for (std::size_t s = 0; s < config.scenarios.size(); ++s) {
    const FillTrajectory trajectory = fill_schedule(instance, config.scenarios[s]);
    for (std::size_t f = 0; f < config.fill_levels.size(); ++f) {
      CellAccum& cell = outcome.cells[s][f];
      cell.saturation += static_cast<double>(trajectory.total_accepted());
      cell.saturation_count += 1;

      const Schedule snapshot = snapshot_at_fill(trajectory, config.fill_levels[f]);
      for (const Order& probe : probes) {
        SlotQuery query;
        query.schedule = snapshot;
        query.candidate = probe;

        std::set<WindowId> combined;
        for (Method method : config.methods) {
          const auto started = std::chrono::steady_clock::now();
          const SlotResult result =
              run_method(method, query, config.tsptw_options, config.ans_config);
          const std::chrono::duration<double> elapsed =
              std::chrono::steady_clock::now() - started;

          MethodAccum& accum = cell.per_method[method];
          const std::vector<WindowId> available = result.available();
          accum.slots += static_cast<long long>(available.size());
          accum.seconds += elapsed.count();
          combined.insert(available.begin(), available.end());
        }
        cell.combined_slots += static_cast<long long>(combined.size());
        cell.queries += 1;
      }
    }
    if (log) {
      std::lock_guard<std::mutex> lock(*log_mutex);
      *log << "bench: layout " << window_layout_name(layout) << ", " << vehicles
           << " vehicles, instance " << index << ", " << fill_scenario_name(config.scenarios[s])
           << ": saturation " << trajectory.total_accepted() << "\n";
    }
  }
  return outcome;
}

}  // namespace

std::vector<ResultRow> run_bench(const ExperimentConfig& config, std::ostream* log) {
  if (config.instances_per_cell < 1) throw std::invalid_argument("need at least one instance");
  if (config.probes_per_instance < 1) throw std::invalid_argument("need at least one probe");
  if (config.methods.empty()) throw std::invalid_argument("need at least one method");

  struct WorkItem {
    WindowLayout layout;
    int vehicles;
    int index;
  };
  std::vector<WorkItem> items;
  for (WindowLayout layout : config.layouts) {
    for (int vehicles : config.vehicle_counts) {
      for (int index = 0; index < config.instances_per_cell; ++index) {
        items.push_back({layout, vehicles, index});
      }
    }
  }

  std::vector<InstanceOutcome> outcomes(items.size());
  std::mutex log_mutex;
  const int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    for (std::size_t k = 0; k < items.size(); ++k) {
      outcomes[k] = evaluate_instance(config, items[k].layout, items[k].vehicles, items[k].index,
                                      log, &log_mutex);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= items.size()) return;
            outcomes[k] = evaluate_instance(config, items[k].layout, items[k].vehicles,
                                            items[k].index, log, &log_mutex);
          }
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (std::thread& worker : workers) worker.join();
    for (const std::exception_ptr& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  // Deterministic reduction in item order, then row emission in grid order.
  std::vector<ResultRow> rows;
  for (WindowLayout layout : config.layouts) {
    for (std::size_t s = 0; s < config.scenarios.size(); ++s) {
      for (int vehicles : config.vehicle_counts) {
        for (std::size_t f = 0; f < config.fill_levels.size(); ++f) {
          CellAccum total;
          for (std::size_t k = 0; k < items.size(); ++k) {
            if (items[k].layout != layout || items[k].vehicles != vehicles) continue;
            const CellAccum& cell = outcomes[k].cells[s][f];
            total.queries += cell.queries;
            total.saturation += cell.saturation;
            total.saturation_count += cell.saturation_count;
            total.combined_slots += cell.combined_slots;
            for (const auto& [method, accum] : cell.per_method) {
              total.per_method[method].slots += accum.slots;
              total.per_method[method].seconds += accum.seconds;
            }
          }
          ResultRow row;
          row.layout = layout;
          row.scenario = config.scenarios[s];
          row.vehicles = vehicles;
          row.fill = config.fill_levels[f];
          row.queries = total.queries;
          row.avg_saturation = total.saturation_count == 0
                                   ? 0.0
                                   : total.saturation / total.saturation_count;
          for (Method method : config.methods) {
            MethodStats& stats = row.stats(method);
            stats.present = true;
            const MethodAccum& accum = total.per_method[method];
            stats.avg_slots =
                total.queries == 0 ? 0.0 : static_cast<double>(accum.slots) / total.queries;
            stats.avg_seconds = total.queries == 0 ? 0.0 : accum.seconds / total.queries;
          }
          row.combined_avg = total.queries == 0
                                 ? 0.0
                                 : static_cast<double>(total.combined_slots) / total.queries;
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

namespace {

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

}  // namespace

std::string format_clock(double seconds) {
  const long long total_ms = std::llround(seconds * 1000.0);
  const long long minutes = total_ms / 60000;
  const long long secs = (total_ms % 60000) / 1000;
  const long long ms = total_ms % 1000;
  char buf[48];
  if (minutes > 0) {
    std::snprintf(buf, sizeof(buf), "%lld:%02lld.%03lld", minutes, secs, ms);
  } else if (secs > 0) {
    std::snprintf(buf, sizeof(buf), "%lld.%03lld", secs, ms);
  } else {
    std::snprintf(buf, sizeof(buf), ".%03lld", ms);
  }
  return buf;
}

std::string results_to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  out << "layout,scenario,vehicles,fill,queries,avg_p_hat,"
         "simple_slots,simple_seconds,tsptw_slots,tsptw_seconds,ans_slots,ans_seconds,"
         "combined_slots\n";
  for (const ResultRow& row : rows) {
    out << window_layout_name(row.layout) << "," << fill_scenario_name(row.scenario) << ","
        << row.vehicles << "," << fixed(row.fill, 2) << "," << row.queries << ","
        << fixed(row.avg_saturation, 1);
    for (Method method : {Method::simple, Method::tsptw, Method::ans}) {
      const MethodStats& stats = row.stats(method);
      if (stats.present) {
        out << "," << fixed(stats.avg_slots, 4) << "," << fixed(stats.avg_seconds, 6);
      } else {
        out << ",,";
      }
    }
    out << "," << fixed(row.combined_avg, 4) << "\n";
  }
  return out.str();
}

std::vector<ResultRow> results_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty results file");

  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (line.back() == ',') fields.push_back("");
    if (fields.size() != 13) throw ParseError("expected 13 CSV fields, got line: " + line);

    ResultRow row;
    row.layout = window_layout_from_name(fields[0]);
    row.scenario = fill_scenario_from_name(fields[1]);
    row.vehicles = std::stoi(fields[2]);
    row.fill = std::stod(fields[3]);
    row.queries = std::stoi(fields[4]);
    row.avg_saturation = std::stod(fields[5]);
    const Method methods[] = {Method::simple, Method::tsptw, Method::ans};
    for (std::size_t m = 0; m < 3; ++m) {
      const std::string& slots = fields[6 + 2 * m];
      const std::string& seconds = fields[7 + 2 * m];
      if (!slots.empty()) {
        MethodStats& stats = row.stats(methods[m]);
        stats.present = true;
        stats.avg_slots = std::stod(slots);
        stats.avg_seconds = std::stod(seconds);
      }
    }
    row.combined_avg = std::stod(fields[12]);
    rows.push_back(row);
  }
  return rows;
}

std::string render_report(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  // Rows sharing (layout, scenario, vehicles) become one table block with
  // one column per fill level.
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    while (j < rows.size() && rows[j].layout == rows[i].layout &&
           rows[j].scenario == rows[i].scenario && rows[j].vehicles == rows[i].vehicles) {
      ++j;
    }
    const ResultRow& head = rows[i];
    out << "Setup " << window_layout_name(head.layout) << " - "
        << fill_scenario_name(head.scenario) << " schedules - " << head.vehicles
        << " vehicles (avg orders at 100% fill: " << fixed(head.avg_saturation, 1) << ")\n";

    auto print_row = [&](const std::string& label, auto cell) {
      out << "  " << label;
      for (std::size_t pad = label.size(); pad < 18; ++pad) out << ' ';
      for (std::size_t k = i; k < j; ++k) {
        const std::string value = cell(rows[k]);
        for (std::size_t pad = value.size(); pad < 10; ++pad) out << ' ';
        out << value;
      }
      out << "\n";
    };

    print_row("fill level", [&](const ResultRow& row) { return fixed(row.fill * 100.0, 0) + "%"; });
    out << "  avg run time (min:sec.ms)\n";
    for (Method method : {Method::simple, Method::tsptw, Method::ans}) {
      if (!head.stats(method).present) continue;
      print_row(std::string("  ") + method_name(method),
                [&](const ResultRow& row) { return format_clock(row.stats(method).avg_seconds); });
    }
    out << "  avg feasible slots\n";
    for (Method method : {Method::simple, Method::tsptw, Method::ans}) {
      if (!head.stats(method).present) continue;
      print_row(std::string("  ") + method_name(method),
                [&](const ResultRow& row) { return fixed(row.stats(method).avg_slots, 2); });
    }
    print_row("  combined", [&](const ResultRow& row) { return fixed(row.combined_avg, 2); });
    out << "\n";
    i = j;
  }
  return out.str();
}

}  // namespace sop
