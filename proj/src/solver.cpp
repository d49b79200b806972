#include "sop/solver.hpp"

#include <algorithm>

namespace sop {

const char* method_name(Method method) {
  switch (method) {
    case Method::simple: return "simple";
    case Method::tsptw: return "tsptw";
    case Method::ans: return "ans";
  }
  return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
  if (name == "simple") return Method::simple;
  if (name == "tsptw") return Method::tsptw;
  if (name == "ans") return Method::ans;
  return std::nullopt;
}

void apply_move(Schedule& schedule, const Move& move) {
  Tour& source = schedule.tour_of_vehicle(move.source);
  Tour& target = schedule.tour_of_vehicle(move.target);
  if (move.source == move.target) {
    throw std::invalid_argument("move source and target tours must differ");
  }
  if (source.at_position(move.source_position) != move.order) {
    throw std::invalid_argument("move does not match schedule state: order " +
                                std::to_string(move.order) + " not at recorded position");
  }
  Tour new_source = remove_at(source, move.source_position);
  Tour new_target = target;
  if (move.kind == Move::Kind::exchange) {
    if (target.at_position(move.counterpart_position) != move.counterpart) {
      throw std::invalid_argument("move does not match schedule state: counterpart " +
                                  std::to_string(move.counterpart) + " not at recorded position");
    }
    new_target = remove_at(new_target, move.counterpart_position);
    new_source = insert_at(new_source, move.counterpart_index, move.counterpart);
  }
  new_target = insert_at(new_target, move.target_index, move.order);
  source = std::move(new_source);
  target = std::move(new_target);
}

std::vector<WindowId> SlotQuery::window_ids() const {
  if (!windows.empty()) return windows;
  std::vector<WindowId> ids;
  ids.reserve(schedule.windows.size());
  for (const TimeWindow& w : schedule.windows) ids.push_back(w.id);
  return ids;
}

void validate_query(const SlotQuery& query) {
  validate_schedule(query.schedule);
  if (!is_schedule_feasible(query.schedule)) {
    throw std::invalid_argument("slot query requires a feasible schedule");
  }
  if (query.schedule.orders.contains(query.candidate.id)) {
    throw std::invalid_argument("candidate id " + std::to_string(query.candidate.id) +
                                " is already scheduled");
  }
  if (query.candidate.weight < 1 || query.candidate.service <= 0) {
    throw std::invalid_argument("candidate must have positive weight and service time");
  }
  for (WindowId id : query.windows) {
    if (!query.schedule.windows.contains(id)) {
      throw std::invalid_argument("query references unknown window " + std::to_string(id));
    }
  }
}

std::vector<WindowId> SlotResult::available() const {
  std::vector<WindowId> out;
  for (const WindowVerdict& v : verdicts) {
    if (v.feasible) out.push_back(v.window);
  }
  return out;
}

bool SlotResult::window_available(WindowId id) const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [&](const WindowVerdict& v) { return v.window == id && v.feasible; });
}

std::chrono::nanoseconds SlotResult::total_elapsed() const {
  std::chrono::nanoseconds total{0};
  for (const WindowVerdict& v : verdicts) total += v.elapsed;
  return total;
}

Schedule commit_verdict(const Schedule& schedule, const Order& candidate,
                        const WindowVerdict& verdict) {
  if (!verdict.feasible) throw std::invalid_argument("cannot commit an infeasible verdict");
  Schedule out = schedule;
  Order booked = candidate;
  booked.window = verdict.window;
  out.orders.add(booked);

  for (const Move& move : verdict.moves) apply_move(out, move);

  Tour& tour = out.tour_of_vehicle(verdict.vehicle);
  if (!verdict.sequence.empty()) {
    tour.visits = verdict.sequence;
  } else {
    tour = insert_at(tour, verdict.position, booked.id);
  }
  if (!is_schedule_feasible(out)) {
    throw std::logic_error("committed verdict does not replay to a feasible schedule");
  }
  return out;
}

SlotResult solve_simple(const SlotQuery& query) {
  validate_query(query);
  const Schedule& schedule = query.schedule;

  // Per-tour profiles are reused across all queried windows.
  std::vector<ArrivalProfile> profiles;
  profiles.reserve(schedule.tours.size());
  for (const Tour& tour : schedule.tours) {
    profiles.push_back(compute_arrival_profile(tour, schedule));
  }

  SlotResult result;
  result.method = Method::simple;
  for (WindowId id : query.window_ids()) {
    const auto started = std::chrono::steady_clock::now();
    const TimeWindow& window = schedule.windows.by_id(id);
    WindowVerdict verdict;
    verdict.window = id;
    verdict.method = Method::simple;
    for (std::size_t k = 0; k < schedule.tours.size(); ++k) {
      const std::optional<std::size_t> position =
          simple_insert(schedule.tours[k], profiles[k], query.candidate, window, schedule);
      if (position) {
        verdict.feasible = true;
        verdict.status = VerdictStatus::feasible;
        verdict.vehicle = schedule.tours[k].vehicle;
        verdict.position = *position;
        break;
      }
    }
    verdict.elapsed = std::chrono::steady_clock::now() - started;
    result.verdicts.push_back(std::move(verdict));
  }
  return result;
}

}  // namespace sop
