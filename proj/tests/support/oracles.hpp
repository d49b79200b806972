#pragma once

#include <algorithm>
#include <numeric>
#include <optional>

#include "sop/core.hpp"
#include "sop/tsptw.hpp"

// Independent reference evaluations used to freeze expected values and to
// cross-check the library. Everything here recomputes from first principles,
// none of it reuses the library's profile/range machinery.
namespace soptest::oracle {

// Literal transcription of the earliest-arrival recursion, position by
// position, as plain recursion.
inline sop::TimeInstant alpha(const sop::Tour& tour, const sop::Schedule& s, std::size_t j) {
  if (j == 0) return tour.shift_start;
  const auto prev_loc = [&](std::size_t p) -> const sop::Location& {
    return p == 0 ? s.depot : s.orders.at(tour.visits[p - 1]).location;
  };
  const sop::Duration prev_service =
      j - 1 == 0 ? 0 : s.orders.at(tour.visits[j - 2]).service;
  if (j == tour.size() + 1) {
    return alpha(tour, s, j - 1) + prev_service + s.travel_between(prev_loc(j - 1), s.depot);
  }
  const sop::Order& order = s.orders.at(tour.visits[j - 1]);
  const sop::TimeInstant reached =
      alpha(tour, s, j - 1) + prev_service + s.travel_between(prev_loc(j - 1), order.location);
  return std::max(s.windows.by_id(order.window).start, reached);
}

// Literal transcription of the latest-arrival recursion.
inline sop::TimeInstant beta(const sop::Tour& tour, const sop::Schedule& s, std::size_t j) {
  const std::size_t n = tour.size();
  if (j == n + 1) return tour.shift_end;
  const auto loc = [&](std::size_t p) -> const sop::Location& {
    return (p == 0 || p == n + 1) ? s.depot : s.orders.at(tour.visits[p - 1]).location;
  };
  if (j == 0) return beta(tour, s, 1) - s.travel_between(s.depot, loc(1));
  const sop::Order& order = s.orders.at(tour.visits[j - 1]);
  const sop::TimeInstant must_leave =
      beta(tour, s, j + 1) - order.service - s.travel_between(order.location, loc(j + 1));
  return std::min(s.windows.by_id(order.window).end, must_leave);
}

// Stop description used by the simulation oracles; assembled from schedule
// orders or from a candidate with a trial window.
struct Stop {
  sop::Location location;
  sop::TimeInstant window_start = 0;
  sop::TimeInstant window_end = 0;
  sop::Duration service = 0;
  sop::Weight weight = 0;
};

inline Stop stop_of(const sop::Schedule& s, sop::OrderId id) {
  const sop::Order& order = s.orders.at(id);
  const sop::TimeWindow& w = s.windows.by_id(order.window);
  return {order.location, w.start, w.end, order.service, order.weight};
}

inline Stop stop_of(const sop::Order& candidate, const sop::TimeWindow& trial) {
  return {candidate.location, trial.start, trial.end, candidate.service, candidate.weight};
}

// Ground-truth tour feasibility by forward simulation: wait for windows,
// reject late arrivals, respect the shift end and capacity.
inline bool simulate_feasible(const std::vector<Stop>& stops, const sop::Location& depot,
                              sop::TimeInstant shift_start, sop::TimeInstant shift_end,
                              sop::Weight capacity, const sop::TravelTimeProvider& travel) {
  sop::TimeInstant clock = shift_start;
  const sop::Location* at = &depot;
  sop::Weight load = 0;
  for (const Stop& stop : stops) {
    sop::TimeInstant arrival = clock + travel.travel(*at, stop.location);
    if (arrival < stop.window_start) arrival = stop.window_start;
    if (arrival > stop.window_end) return false;
    clock = arrival + stop.service;
    at = &stop.location;
    load += stop.weight;
  }
  if (load > capacity) return false;
  return clock + travel.travel(*at, depot) <= shift_end;
}

inline bool tour_feasible(const sop::Tour& tour, const sop::Schedule& s) {
  std::vector<Stop> stops;
  stops.reserve(tour.size());
  for (sop::OrderId id : tour.visits) stops.push_back(stop_of(s, id));
  return simulate_feasible(stops, s.depot, tour.shift_start, tour.shift_end, tour.capacity,
                           *s.travel);
}

// Feasibility of inserting the candidate after position `index`, judged by
// simulating the merged stop sequence from scratch.
inline bool insertion_feasible(const sop::Tour& tour, std::size_t index,
                               const sop::Order& candidate, const sop::TimeWindow& trial,
                               const sop::Schedule& s) {
  std::vector<Stop> stops;
  stops.reserve(tour.size() + 1);
  for (std::size_t p = 1; p <= tour.size(); ++p) {
    if (p == index + 1) stops.push_back(stop_of(candidate, trial));
    stops.push_back(stop_of(s, tour.visits[p - 1]));
  }
  if (index == tour.size()) stops.push_back(stop_of(candidate, trial));
  return simulate_feasible(stops, s.depot, tour.shift_start, tour.shift_end, tour.capacity,
                           *s.travel);
}

// True when some insertion index in [0, n] admits the candidate.
inline bool any_insertion_feasible(const sop::Tour& tour, const sop::Order& candidate,
                                   const sop::TimeWindow& trial, const sop::Schedule& s) {
  for (std::size_t i = 0; i <= tour.size(); ++i) {
    if (insertion_feasible(tour, i, candidate, trial, s)) return true;
  }
  return false;
}

// Insertion-index bounds evaluated directly from their defining set
// comprehensions over the recursion oracles.
inline sop::InsertionRange theta(const sop::Tour& tour, const sop::Order& candidate,
                                 const sop::TimeWindow& trial, const sop::Schedule& s) {
  const std::size_t n = tour.size();
  if (n == 0) return {0, 0};
  std::optional<std::size_t> lo, hi;
  for (std::size_t i = 0; i <= n; ++i) {
    if (trial.start + candidate.service <= beta(tour, s, i + 1) && !lo) lo = i;
    const sop::Duration service = i == 0 ? 0 : s.orders.at(tour.visits[i - 1]).service;
    if (alpha(tour, s, i) + service <= trial.end) hi = i;
  }
  if (!lo || !hi || *lo > *hi) return {1, 0};
  return {*lo, *hi};
}

// Exact single-tour resequencing feasibility by full permutation
// enumeration; the reference for the search-based oracle.
inline bool tsptw_by_enumeration(const sop::TsptwInstance& instance) {
  sop::Weight load = 0;
  for (const auto& stop : instance.stops) load += stop.weight;
  if (load > instance.capacity) return false;

  std::vector<std::size_t> perm(instance.stops.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end());
  do {
    sop::TimeInstant clock = instance.shift_start;
    const sop::Location* at = &instance.depot;
    bool ok = true;
    for (std::size_t idx : perm) {
      const auto& stop = instance.stops[idx];
      sop::TimeInstant arrival = clock + instance.travel->travel(*at, stop.location);
      if (arrival < stop.window_start) arrival = stop.window_start;
      if (arrival > stop.window_end) {
        ok = false;
        break;
      }
      clock = arrival + stop.service;
      at = &stop.location;
    }
    if (ok && clock + instance.travel->travel(*at, instance.depot) <= instance.shift_end) {
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace soptest::oracle
