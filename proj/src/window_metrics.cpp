#include "sop/window_metrics.hpp"

#include <algorithm>
#include <limits>

namespace sop {

namespace {

// Visit accessor for a tour with the candidate virtually spliced in after
// `index`; merged positions run 1..n+1. Avoids materializing a tour (the
// candidate does not live in the schedule's order map).
struct MergedTour {
  const Tour& tour;
  const Order& candidate;
  std::size_t index;

  std::size_t size() const { return tour.size() + 1; }
  bool is_candidate(std::size_t p) const { return p == index + 1; }

  const Order& order_at(const Schedule& schedule, std::size_t p) const {
    if (is_candidate(p)) return candidate;
    const std::size_t original = p <= index ? p : p - 1;
    return schedule.orders.at(tour.visits[original - 1]);
  }
};

// Free time of `window` after inserting the candidate at `index`. The
// candidate counts as assigned to the trial window, so the span always
// exists in the merged tour.
Duration free_time_after_insertion(const Tour& tour, std::size_t index, const Order& candidate,
                                   const TimeWindow& window, const Schedule& schedule) {
  const MergedTour merged{tour, candidate, index};
  std::size_t first = 0;
  std::size_t last = 0;
  for (std::size_t p = 1; p <= merged.size(); ++p) {
    const bool nested =
        merged.is_candidate(p) ||
        window_within(schedule.windows.by_id(merged.order_at(schedule, p).window), window);
    if (nested) {
      if (first == 0) first = p;
      last = p;
    }
  }
  Duration committed = 0;
  for (std::size_t p = first; p < last; ++p) {
    const Order& a = merged.order_at(schedule, p);
    const Order& b = merged.order_at(schedule, p + 1);
    committed += a.service + schedule.travel_between(a.location, b.location);
  }
  return window.length() - committed;
}

}  // namespace

WindowSpan window_span(const Tour& tour, const TimeWindow& window, const Schedule& schedule) {
  WindowSpan span;
  for (std::size_t p = 1; p <= tour.size(); ++p) {
    const Order& order = schedule.orders.at(tour.visits[p - 1]);
    if (window_within(schedule.windows.by_id(order.window), window)) {
      if (!span.first) span.first = p;
      span.last = p;
    }
  }
  return span;
}

InsideOutside partition_inside_outside(const Tour& tour, const TimeWindow& window,
                                       const Schedule& schedule) {
  const WindowSpan span = window_span(tour, window, schedule);
  InsideOutside split;
  for (std::size_t p = 1; p <= tour.size(); ++p) {
    if (span.defined() && *span.first <= p && p <= *span.last) {
      split.inside.push_back(p);
    } else {
      split.outside.push_back(p);
    }
  }
  return split;
}

Duration free_time(const Tour& tour, const TimeWindow& window, const Schedule& schedule) {
  const WindowSpan span = window_span(tour, window, schedule);
  Duration committed = 0;
  if (span.defined()) {
    for (std::size_t p = *span.first; p < *span.last; ++p) {
      const Order& a = schedule.orders.at(tour.visits[p - 1]);
      const Order& b = schedule.orders.at(tour.visits[p]);
      committed += a.service + schedule.travel_between(a.location, b.location);
    }
  }
  return window.length() - committed;
}

SlotMetrics slot_metrics(const Tour& tour, const ArrivalProfile& profile, const Order& candidate,
                         const TimeWindow& window, const Schedule& schedule) {
  SlotMetrics metrics;
  metrics.free = free_time(tour, window, schedule);

  const InsertionRange range = insertion_range(tour, profile, candidate, window, schedule);
  metrics.range_empty = range.empty();

  const WindowSpan span = window_span(tour, window, schedule);
  if (span.defined()) {
    const std::size_t first = *span.first;
    const std::size_t last = *span.last;
    // The bounds start from the span's own arrivals; indices in the
    // insertion range that sit at or before (after) the span may bind harder.
    TimeInstant entry_bound = profile.earliest[first];
    TimeInstant exit_bound = profile.latest[last];
    if (!range.empty()) {
      for (std::size_t i = range.lo; i <= range.hi; ++i) {
        const CandidateArrival arrival =
            candidate_arrival(tour, profile, i, candidate, window, schedule);
        if (i <= first) entry_bound = std::max(entry_bound, arrival.earliest);
        if (i >= last) exit_bound = std::min(exit_bound, arrival.latest);
      }
    }
    metrics.entrance = entry_bound - window.start;
    metrics.exit = window.end - exit_bound;
    metrics.loss = *metrics.entrance + *metrics.exit;
  } else if (!range.empty()) {
    Duration worst = std::numeric_limits<Duration>::min();
    for (std::size_t i = range.lo; i <= range.hi; ++i) {
      const CandidateArrival arrival =
          candidate_arrival(tour, profile, i, candidate, window, schedule);
      worst = std::max(worst,
                       (arrival.earliest - window.start) + (window.end - arrival.latest));
    }
    metrics.loss = worst;
  }
  return metrics;
}

std::optional<Duration> best_free_time_after_insertion(const Tour& tour,
                                                       const ArrivalProfile& profile,
                                                       const Order& candidate,
                                                       const TimeWindow& window,
                                                       const Schedule& schedule) {
  const InsertionRange range = insertion_range(tour, profile, candidate, window, schedule);
  if (range.empty()) return std::nullopt;
  Duration best = std::numeric_limits<Duration>::min();
  for (std::size_t i = range.lo; i <= range.hi; ++i) {
    best = std::max(best, free_time_after_insertion(tour, i, candidate, window, schedule));
  }
  return best;
}

bool infeasibility_condition(const Tour& tour, const ArrivalProfile& profile,
                             const Order& candidate, const TimeWindow& window,
                             const Schedule& schedule) {
  const std::optional<Duration> best =
      best_free_time_after_insertion(tour, profile, candidate, window, schedule);
  return !best.has_value() || *best < 0;
}

bool feasibility_condition(const Tour& tour, const ArrivalProfile& profile,
                           const Order& candidate, const TimeWindow& window,
                           const Schedule& schedule) {
  if (schedule.windows.overlapping()) {
    throw std::invalid_argument("feasibility condition is only valid for non-overlapping windows");
  }
  const std::optional<Duration> best =
      best_free_time_after_insertion(tour, profile, candidate, window, schedule);
  if (!best.has_value()) return false;
  const SlotMetrics metrics = slot_metrics(tour, profile, candidate, window, schedule);
  return metrics.loss.has_value() && *best - *metrics.loss >= 0;
}

}  // namespace sop
