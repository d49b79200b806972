#include "sop/tsptw.hpp"

#include <algorithm>
#include <numeric>

namespace sop {

namespace {

class DepthFirstSearch {
 public:
  DepthFirstSearch(const TsptwInstance& instance, const TsptwOptions& options)
      : instance_(instance), options_(options), n_(instance.stops.size()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    // Chronological branching makes the window-deadline prune bite early.
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      const auto& sa = instance_.stops[a];
      const auto& sb = instance_.stops[b];
      if (sa.window_start != sb.window_start) return sa.window_start < sb.window_start;
      return sa.id < sb.id;
    });
    visited_.assign(n_, false);
    path_.reserve(n_);
  }

  TsptwOutcome run() {
    TsptwOutcome outcome;
    Weight total = 0;
    for (const auto& stop : instance_.stops) total += stop.weight;
    if (total > instance_.capacity) {
      outcome.status = TsptwStatus::infeasible;
      return outcome;
    }
    const bool found = extend(instance_.depot, instance_.shift_start, 0);
    outcome.expanded = expanded_;
    if (found) {
      outcome.status = TsptwStatus::feasible;
      outcome.sequence = path_;
    } else {
      outcome.status = exhausted_ ? TsptwStatus::budget_exhausted : TsptwStatus::infeasible;
    }
    return outcome;
  }

 private:
  // `ready` is the moment the vehicle can leave `from` (arrival + service).
  bool extend(const Location& from, TimeInstant ready, std::size_t depth) {
    if (exhausted_) return false;
    if (++expanded_ > options_.node_budget) {
      exhausted_ = true;
      return false;
    }
    if (depth == n_) {
      return ready + instance_.travel->travel(from, instance_.depot) <= instance_.shift_end;
    }
    if (options_.prune) {
      // With t >= 0 no later arrival can undercut `ready`, so a stop whose
      // window already closed, or a shift end already passed, is final.
      if (ready > instance_.shift_end) return false;
      for (std::size_t k = 0; k < n_; ++k) {
        if (!visited_[k] && ready > instance_.stops[k].window_end) return false;
      }
    }
    for (std::size_t idx : order_) {
      if (visited_[idx]) continue;
      const auto& stop = instance_.stops[idx];
      const TimeInstant reached = ready + instance_.travel->travel(from, stop.location);
      const TimeInstant arrival = std::max(stop.window_start, reached);
      if (arrival > stop.window_end) continue;
      visited_[idx] = true;
      path_.push_back(stop.id);
      if (extend(stop.location, arrival + stop.service, depth + 1)) return true;
      path_.pop_back();
      visited_[idx] = false;
      if (exhausted_) return false;
    }
    return false;
  }

  const TsptwInstance& instance_;
  const TsptwOptions& options_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<bool> visited_;
  std::vector<OrderId> path_;
  std::uint64_t expanded_ = 0;
  bool exhausted_ = false;
};

}  // namespace

TsptwInstance make_tsptw_instance(const Tour& tour, const Order& candidate,
                                  const TimeWindow& window, const Schedule& schedule) {
  TsptwInstance instance;
  instance.depot = schedule.depot;
  instance.shift_start = tour.shift_start;
  instance.shift_end = tour.shift_end;
  instance.capacity = tour.capacity;
  instance.travel = schedule.travel.get();
  instance.stops.reserve(tour.size() + 1);
  for (OrderId id : tour.visits) {
    const Order& order = schedule.orders.at(id);
    const TimeWindow& w = schedule.windows.by_id(order.window);
    instance.stops.push_back({id, order.location, w.start, w.end, order.service, order.weight});
  }
  instance.stops.push_back(
      {candidate.id, candidate.location, window.start, window.end, candidate.service,
       candidate.weight});
  return instance;
}

TsptwOutcome tsptw_feasible(const TsptwInstance& instance, const TsptwOptions& options) {
  if (instance.stops.size() > options.size_cap) {
    return TsptwOutcome{TsptwStatus::size_cap, {}, 0};
  }
  DepthFirstSearch search(instance, options);
  return search.run();
}

SlotResult solve_tsptw(const SlotQuery& query, const TsptwOptions& options) {
  validate_query(query);
  const Schedule& schedule = query.schedule;

  SlotResult result;
  result.method = Method::tsptw;
  for (WindowId id : query.window_ids()) {
    const auto started = std::chrono::steady_clock::now();
    const TimeWindow& window = schedule.windows.by_id(id);
    WindowVerdict verdict;
    verdict.window = id;
    verdict.method = Method::tsptw;
    for (const Tour& tour : schedule.tours) {
      const TsptwInstance instance = make_tsptw_instance(tour, query.candidate, window, schedule);
      const TsptwOutcome outcome = tsptw_feasible(instance, options);
      if (outcome.status == TsptwStatus::feasible) {
        verdict.feasible = true;
        verdict.status = VerdictStatus::feasible;
        verdict.vehicle = tour.vehicle;
        verdict.sequence = outcome.sequence;
        break;
      }
      // Keep the strongest caveat seen so a "no" backed by an aborted search
      // is distinguishable from a proven "no".
      if (outcome.status == TsptwStatus::budget_exhausted) {
        verdict.status = VerdictStatus::budget_exhausted;
      } else if (outcome.status == TsptwStatus::size_cap &&
                 verdict.status != VerdictStatus::budget_exhausted) {
        verdict.status = VerdictStatus::size_cap;
      }
    }
    verdict.elapsed = std::chrono::steady_clock::now() - started;
    result.verdicts.push_back(std::move(verdict));
  }
  return result;
}

}  // namespace sop
