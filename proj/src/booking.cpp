#include "sop/booking.hpp"

#include <algorithm>
#include <cmath>

namespace sop {

const char* fill_scenario_name(FillScenario scenario) {
  return scenario == FillScenario::optimized ? "optimized" : "non-optimized";
}

FillScenario fill_scenario_from_name(const std::string& name) {
  if (name == "optimized" || name == "opt") return FillScenario::optimized;
  if (name == "non-optimized" || name == "nonopt" || name == "plain") {
    return FillScenario::non_optimized;
  }
  throw std::invalid_argument("unknown fill scenario '" + name + "'");
}

Duration total_travel_time(const Schedule& schedule) {
  Duration total = 0;
  for (const Tour& tour : schedule.tours) {
    for (std::size_t p = 0; p <= tour.size(); ++p) {
      total += schedule.travel_between(schedule.location_at(tour, p),
                                       schedule.location_at(tour, p + 1));
    }
  }
  return total;
}

namespace {

// Travel added to `tour` by splicing `loc` in after `index`.
Duration splice_cost(const Schedule& schedule, const Tour& tour, std::size_t index,
                     const Location& loc) {
  const Location& before = schedule.location_at(tour, index);
  const Location& after = schedule.location_at(tour, index + 1);
  return schedule.travel_between(before, loc) + schedule.travel_between(loc, after) -
         schedule.travel_between(before, after);
}

// Travel saved by removing the visit at `position` from `tour`.
Duration removal_gain(const Schedule& schedule, const Tour& tour, std::size_t position) {
  const Location& before = schedule.location_at(tour, position - 1);
  const Location& here = schedule.location_at(tour, position);
  const Location& after = schedule.location_at(tour, position + 1);
  return schedule.travel_between(before, here) + schedule.travel_between(here, after) -
         schedule.travel_between(before, after);
}

struct DescentMove {
  Move move;
  Duration delta = 0;  // negative = improvement
};

std::optional<DescentMove> best_descent_move(const Schedule& schedule) {
  std::optional<DescentMove> best;
  std::vector<ArrivalProfile> profiles;
  profiles.reserve(schedule.tours.size());
  for (const Tour& tour : schedule.tours) {
    profiles.push_back(compute_arrival_profile(tour, schedule));
  }

  for (std::size_t s = 0; s < schedule.tours.size(); ++s) {
    const Tour& source = schedule.tours[s];
    for (std::size_t position = 1; position <= source.size(); ++position) {
      const OrderId id = source.at_position(position);
      const Order& order = schedule.orders.at(id);
      const TimeWindow& window = schedule.windows.by_id(order.window);
      const Duration gain = removal_gain(schedule, source, position);

      // The shrunk source must stay feasible on its own (asymmetric travel
      // can make removal harmful).
      const Tour reduced = remove_at(source, position);
      if (!is_tour_feasible(reduced, schedule)) continue;

      for (std::size_t t = 0; t < schedule.tours.size(); ++t) {
        if (t == s) continue;
        const Tour& target = schedule.tours[t];
        if (profiles[t].load + order.weight > target.capacity) continue;
        const InsertionRange range =
            insertion_range(target, profiles[t], order, window, schedule);
        for (std::size_t i = range.lo; !range.empty() && i <= range.hi; ++i) {
          if (!check_insertion_time_feasible(target, profiles[t], i, order, window, schedule)) {
            continue;
          }
          const Duration delta = splice_cost(schedule, target, i, order.location) - gain;
          if (delta >= 0) continue;
          if (!best || delta < best->delta) {
            DescentMove candidate;
            candidate.delta = delta;
            candidate.move.kind = Move::Kind::relocate;
            candidate.move.order = id;
            candidate.move.source = source.vehicle;
            candidate.move.target = target.vehicle;
            candidate.move.source_position = position;
            candidate.move.target_index = i;
            best = candidate;
          }
        }
      }
    }
  }
  return best;
}

}  // namespace

std::vector<Move> optimize_travel_time_in_place(Schedule& schedule) {
  std::vector<Move> applied;
  for (;;) {
    const std::optional<DescentMove> best = best_descent_move(schedule);
    if (!best) break;
    apply_move(schedule, best->move);
    applied.push_back(best->move);
  }
  return applied;
}

Schedule optimize_travel_time(const Schedule& schedule) {
  Schedule out = schedule;
  optimize_travel_time_in_place(out);
  return out;
}

FillTrajectory fill_schedule(std::shared_ptr<const Instance> instance, FillScenario scenario,
                             bool validate) {
  if (!instance) throw std::invalid_argument("fill_schedule requires an instance");
  FillTrajectory trajectory;
  trajectory.scenario = scenario;
  trajectory.instance = instance;

  Schedule schedule = empty_schedule(*instance);
  for (const Order& customer : instance->pool) {
    const TimeWindow& window = schedule.windows.by_id(customer.window);
    for (std::size_t k = 0; k < schedule.tours.size(); ++k) {
      const Tour& tour = schedule.tours[k];
      const std::optional<std::size_t> position =
          simple_insert(tour, customer, window, schedule);
      if (!position) continue;

      schedule.orders.add(customer);
      schedule.tours[k] = insert_at(tour, *position, customer.id);

      AcceptanceEvent event;
      event.order = customer.id;
      event.vehicle = tour.vehicle;
      event.position = *position;
      if (scenario == FillScenario::optimized) {
        event.post_moves = optimize_travel_time_in_place(schedule);
      }
      if (validate && !is_schedule_feasible(schedule)) {
        throw std::logic_error("booking run produced an infeasible schedule");
      }
      trajectory.events.push_back(std::move(event));
      break;
    }
  }
  return trajectory;
}

Schedule snapshot_at_fill(const FillTrajectory& trajectory, double fill) {
  if (!(fill > 0.0) || fill > 1.0) {
    throw std::invalid_argument("fill level must lie in (0, 1]");
  }
  if (!trajectory.instance) throw std::invalid_argument("trajectory has no instance");
  const auto wanted = static_cast<std::size_t>(
      std::ceil(fill * static_cast<double>(trajectory.total_accepted())));

  const Instance& instance = *trajectory.instance;
  std::unordered_map<OrderId, const Order*> pool_index;
  pool_index.reserve(instance.pool.size());
  for (const Order& order : instance.pool) pool_index.emplace(order.id, &order);

  Schedule schedule = empty_schedule(instance);
  for (std::size_t e = 0; e < wanted && e < trajectory.events.size(); ++e) {
    const AcceptanceEvent& event = trajectory.events[e];
    const auto it = pool_index.find(event.order);
    if (it == pool_index.end()) {
      throw std::out_of_range("trajectory references unknown order " +
                              std::to_string(event.order));
    }
    schedule.orders.add(*it->second);
    Tour& tour = schedule.tour_of_vehicle(event.vehicle);
    tour = insert_at(tour, event.position, event.order);
    for (const Move& move : event.post_moves) apply_move(schedule, move);
  }
  return schedule;
}

}  // namespace sop
