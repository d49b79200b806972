#include "sop/core.hpp"

#include <algorithm>

namespace sop {

ArrivalProfile compute_arrival_profile(const Tour& tour, const Schedule& schedule) {
  const std::size_t n = tour.size();
  ArrivalProfile profile;
  profile.earliest.assign(n + 2, 0);
  profile.latest.assign(n + 2, 0);

  // Forward sweep. Arrivals at customers wait for the window to open; the
  // return to the depot has no window of its own.
  profile.earliest[0] = tour.shift_start;
  {
    const Location* prev_loc = &schedule.depot;
    Duration prev_service = 0;
    for (std::size_t p = 1; p <= n; ++p) {
      const Order& order = schedule.orders.at(tour.visits[p - 1]);
      const TimeWindow& w = schedule.windows.by_id(order.window);
      const TimeInstant reached =
          profile.earliest[p - 1] + prev_service + schedule.travel_between(*prev_loc, order.location);
      profile.earliest[p] = std::max(w.start, reached);
      profile.load += order.weight;
      prev_loc = &order.location;
      prev_service = order.service;
    }
    profile.earliest[n + 1] =
        profile.earliest[n] + prev_service + schedule.travel_between(*prev_loc, schedule.depot);
  }

  // Backward sweep. Latest arrivals are capped by window closings; the
  // departure anchor is simply the first customer's bound minus the leg out.
  profile.latest[n + 1] = tour.shift_end;
  {
    const Location* next_loc = &schedule.depot;
    for (std::size_t p = n; p >= 1; --p) {
      const Order& order = schedule.orders.at(tour.visits[p - 1]);
      const TimeWindow& w = schedule.windows.by_id(order.window);
      const TimeInstant must_leave =
          profile.latest[p + 1] - order.service - schedule.travel_between(order.location, *next_loc);
      profile.latest[p] = std::min(w.end, must_leave);
      next_loc = &order.location;
    }
    profile.latest[0] = profile.latest[1] - schedule.travel_between(schedule.depot, *next_loc);
  }
  return profile;
}

Weight tour_load(const Tour& tour, const Schedule& schedule) {
  Weight load = 0;
  for (OrderId id : tour.visits) load += schedule.orders.at(id).weight;
  return load;
}

bool is_tour_time_feasible(const Tour& tour, const ArrivalProfile& profile,
                           const Schedule& schedule) {
  const std::size_t n = tour.size();
  for (std::size_t p = 1; p <= n; ++p) {
    const Order& order = schedule.orders.at(tour.visits[p - 1]);
    const TimeWindow& w = schedule.windows.by_id(order.window);
    if (profile.earliest[p] < w.start || profile.earliest[p] > w.end) return false;
  }
  return profile.earliest[n + 1] <= tour.shift_end;
}

bool is_tour_feasible(const Tour& tour, const Schedule& schedule) {
  const ArrivalProfile profile = compute_arrival_profile(tour, schedule);
  return profile.load <= tour.capacity && is_tour_time_feasible(tour, profile, schedule);
}

bool is_schedule_feasible(const Schedule& schedule) {
  return std::all_of(schedule.tours.begin(), schedule.tours.end(),
                     [&](const Tour& tour) { return is_tour_feasible(tour, schedule); });
}

InsertionRange insertion_range(const Tour& tour, const ArrivalProfile& profile,
                               const Order& candidate, const TimeWindow& window,
                               const Schedule& schedule) {
  const std::size_t n = tour.size();
  if (n == 0) return InsertionRange{0, 0};

  InsertionRange range;
  bool found_lo = false;
  for (std::size_t i = 0; i <= n; ++i) {
    if (window.start + candidate.service <= profile.latest[i + 1]) {
      range.lo = i;
      found_lo = true;
      break;
    }
  }
  if (!found_lo) return InsertionRange{1, 0};

  bool found_hi = false;
  for (std::size_t i = n + 1; i-- > 0;) {
    const Duration service = i == 0 ? 0 : schedule.orders.at(tour.visits[i - 1]).service;
    if (profile.earliest[i] + service <= window.end) {
      range.hi = i;
      found_hi = true;
      break;
    }
  }
  if (!found_hi || range.lo > range.hi) return InsertionRange{1, 0};
  return range;
}

CandidateArrival candidate_arrival(const Tour& tour, const ArrivalProfile& profile,
                                   std::size_t index, const Order& candidate,
                                   const TimeWindow& window, const Schedule& schedule) {
  const std::size_t n = tour.size();
  if (index > n) throw std::out_of_range("insertion index out of range");

  const Location& before = schedule.location_at(tour, index);
  const Location& after = schedule.location_at(tour, index + 1);
  const Duration service_before =
      index == 0 ? 0 : schedule.orders.at(tour.visits[index - 1]).service;

  CandidateArrival arrival{};
  arrival.earliest = std::max(window.start, profile.earliest[index] + service_before +
                                                schedule.travel_between(before, candidate.location));
  arrival.latest = std::min(window.end, profile.latest[index + 1] - candidate.service -
                                            schedule.travel_between(candidate.location, after));
  return arrival;
}

bool check_insertion_time_feasible(const Tour& tour, const ArrivalProfile& profile,
                                   std::size_t index, const Order& candidate,
                                   const TimeWindow& window, const Schedule& schedule) {
  return candidate_arrival(tour, profile, index, candidate, window, schedule).feasible();
}

bool check_insertion_feasible(const Tour& tour, const ArrivalProfile& profile,
                              std::size_t index, const Order& candidate,
                              const TimeWindow& window, const Schedule& schedule) {
  if (profile.load + candidate.weight > tour.capacity) return false;
  return check_insertion_time_feasible(tour, profile, index, candidate, window, schedule);
}

std::optional<std::size_t> simple_insert(const Tour& tour, const ArrivalProfile& profile,
                                         const Order& candidate, const TimeWindow& window,
                                         const Schedule& schedule) {
  if (profile.load + candidate.weight > tour.capacity) return std::nullopt;
  const InsertionRange range = insertion_range(tour, profile, candidate, window, schedule);
  for (std::size_t i = range.lo; !range.empty() && i <= range.hi; ++i) {
    if (check_insertion_time_feasible(tour, profile, i, candidate, window, schedule)) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> simple_insert(const Tour& tour, const Order& candidate,
                                         const TimeWindow& window, const Schedule& schedule) {
  return simple_insert(tour, compute_arrival_profile(tour, schedule), candidate, window, schedule);
}

bool any_time_feasible_insertion(const Tour& tour, const ArrivalProfile& profile,
                                 const Order& candidate, const TimeWindow& window,
                                 const Schedule& schedule) {
  const InsertionRange range = insertion_range(tour, profile, candidate, window, schedule);
  for (std::size_t i = range.lo; !range.empty() && i <= range.hi; ++i) {
    if (check_insertion_time_feasible(tour, profile, i, candidate, window, schedule)) return true;
  }
  return false;
}

}  // namespace sop
