#pragma once

#include <optional>

#include "sop/core.hpp"

namespace sop {

// First and last tour positions whose assigned window is nested within the
// reference window. Absent when no visit qualifies.
struct WindowSpan {
  std::optional<std::size_t> first;
  std::optional<std::size_t> last;

  bool defined() const { return first.has_value(); }

  friend bool operator==(const WindowSpan&, const WindowSpan&) = default;
};

WindowSpan window_span(const Tour& tour, const TimeWindow& window, const Schedule& schedule);

// Positions 1..n split around the span: everything between first and last
// (inclusive) counts as inside, even visits assigned to other windows that
// happen to be captured there. Depot anchors belong to neither side.
struct InsideOutside {
  std::vector<std::size_t> inside;
  std::vector<std::size_t> outside;
};

InsideOutside partition_inside_outside(const Tour& tour, const TimeWindow& window,
                                       const Schedule& schedule);

// Boundary and load figures for one (tour, window, candidate) triple.
//
//   entrance  dead time after the window opens before the first inside visit
//             (or the candidate, whichever binds) can be reached
//   exit      dead time before the window closes after the last moment the
//             inside block (or the candidate) may still be served
//   loss      entrance + exit; when the tour has no inside visits it is the
//             best achievable sum of both boundary gaps over the insertion
//             range instead, and entrance/exit are individually undefined
//   free      window length minus the service and travel already committed
//             between the first and last inside visit
//
// `range_empty` flags that no insertion index exists at all; loss is then
// undefined and callers treat the pair as infeasible.
struct SlotMetrics {
  std::optional<Duration> entrance;
  std::optional<Duration> exit;
  std::optional<Duration> loss;
  Duration free = 0;
  bool range_empty = false;
};

SlotMetrics slot_metrics(const Tour& tour, const ArrivalProfile& profile, const Order& candidate,
                         const TimeWindow& window, const Schedule& schedule);

// Free time of the window on the tour as it stands (no candidate involved).
Duration free_time(const Tour& tour, const TimeWindow& window, const Schedule& schedule);

// Rejection test: true when even the best insertion index leaves negative
// free time, so no index can admit the candidate. Also true when the
// insertion range is empty. Never produces a false rejection.
bool infeasibility_condition(const Tour& tour, const ArrivalProfile& profile,
                             const Order& candidate, const TimeWindow& window,
                             const Schedule& schedule);

// Acceptance test, valid only for non-overlapping window sets: true when the
// best-case free time after insertion covers the boundary loss, which
// guarantees some index admits the candidate. Throws std::invalid_argument
// when the schedule's windows overlap.
bool feasibility_condition(const Tour& tour, const ArrivalProfile& profile,
                           const Order& candidate, const TimeWindow& window,
                           const Schedule& schedule);

// Largest free time after insertion over the insertion range, absent when
// the range is empty. Exposed for the neighborhood search and for tests.
std::optional<Duration> best_free_time_after_insertion(const Tour& tour,
                                                       const ArrivalProfile& profile,
                                                       const Order& candidate,
                                                       const TimeWindow& window,
                                                       const Schedule& schedule);

}  // namespace sop
