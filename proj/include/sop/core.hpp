#pragma once

#include <optional>

#include "sop/schedule.hpp"

namespace sop {

// Earliest/latest arrival instants per tour position (0 .. n+1). `earliest`
// propagates forward from the shift start, waiting at window openings;
// `latest` propagates backward from the shift end, capped by window closings.
// The profile is total: it exists for infeasible tours too, feasibility is a
// separate judgement. `load` is the summed visit weight, carried here so a
// cached profile makes single-position insertion checks O(1).
struct ArrivalProfile {
  std::vector<TimeInstant> earliest;  // size n + 2
  std::vector<TimeInstant> latest;    // size n + 2
  Weight load = 0;

  std::size_t positions() const { return earliest.size(); }
};

ArrivalProfile compute_arrival_profile(const Tour& tour, const Schedule& schedule);

// Summed visit weight of the tour.
Weight tour_load(const Tour& tour, const Schedule& schedule);

// Time-window feasibility: every customer is reached within its assigned
// window and the vehicle is back at the depot by the end of the shift.
bool is_tour_time_feasible(const Tour& tour, const ArrivalProfile& profile,
                           const Schedule& schedule);

// Time-window feasibility AND capacity feasibility.
bool is_tour_feasible(const Tour& tour, const Schedule& schedule);
bool is_schedule_feasible(const Schedule& schedule);

// Candidate insertion indices for one (tour, window) pair: the order may be
// tried directly after any position in [lo, hi]. Empty (lo > hi) encodes
// that no index can possibly admit the order.
struct InsertionRange {
  std::size_t lo = 1;
  std::size_t hi = 0;

  bool empty() const { return lo > hi; }

  friend bool operator==(const InsertionRange&, const InsertionRange&) = default;
};

// Bounds the indices worth probing: the lower end needs enough slack after
// the window opens to still reach the successor, the upper end must leave
// the predecessor early enough to arrive before the window closes. Both are
// necessary conditions only; individual indices still need the full check.
// An empty tour always yields [0, 0].
InsertionRange insertion_range(const Tour& tour, const ArrivalProfile& profile,
                               const Order& candidate, const TimeWindow& window,
                               const Schedule& schedule);

// Earliest and latest possible arrival at the candidate when spliced in
// directly after position `index`, clamped to the trial window.
struct CandidateArrival {
  TimeInstant earliest;
  TimeInstant latest;

  bool feasible() const { return earliest <= latest; }
};

CandidateArrival candidate_arrival(const Tour& tour, const ArrivalProfile& profile,
                                   std::size_t index, const Order& candidate,
                                   const TimeWindow& window, const Schedule& schedule);

// O(1) feasibility of inserting `candidate` after position `index`, given a
// profile of the (feasible) tour: time via the arrival pincer above, weight
// via the cached load.
bool check_insertion_feasible(const Tour& tour, const ArrivalProfile& profile,
                              std::size_t index, const Order& candidate,
                              const TimeWindow& window, const Schedule& schedule);

// Time half of the check only (capacity ignored).
bool check_insertion_time_feasible(const Tour& tour, const ArrivalProfile& profile,
                                   std::size_t index, const Order& candidate,
                                   const TimeWindow& window, const Schedule& schedule);

// First index in the insertion range poising a feasible insertion, scanning
// ascending. This is the whole baseline heuristic for one (tour, window).
std::optional<std::size_t> simple_insert(const Tour& tour, const ArrivalProfile& profile,
                                         const Order& candidate, const TimeWindow& window,
                                         const Schedule& schedule);
std::optional<std::size_t> simple_insert(const Tour& tour, const Order& candidate,
                                         const TimeWindow& window, const Schedule& schedule);

// True when at least one index admits the candidate time-wise.
bool any_time_feasible_insertion(const Tour& tour, const ArrivalProfile& profile,
                                 const Order& candidate, const TimeWindow& window,
                                 const Schedule& schedule);

}  // namespace sop
