#pragma once

#include "sop/solver.hpp"
#include "sop/window_metrics.hpp"

namespace sop {

// Tie-break ordering for scanning the receiving tours of a repair move.
enum class TargetTourOrder { by_id, by_load };

struct AnsConfig {
  bool enable_swap = false;            // allow exchanges next to relocations
  std::size_t max_moves_per_step = 0;  // 0 = unbounded
  TargetTourOrder target_order = TargetTourOrder::by_id;
  bool validate_each_move = false;     // re-check the whole schedule per move
};

// Outcome of a relocation attempt, before committing anything.
struct RelocationResult {
  Tour new_source;
  Tour new_target;
  std::size_t target_index = 0;
};

// Removes the visit at `source_position` from `source` and reinserts it into
// `target` inside its own assigned window. Succeeds only when both resulting
// tours are feasible (removal alone can break feasibility when travel times
// violate the triangle inequality, so the shrunk tour is re-checked).
std::optional<RelocationResult> try_relocate(const Tour& source, std::size_t source_position,
                                             const Tour& target, const Schedule& schedule);

struct ExchangeResult {
  Tour new_source;
  Tour new_target;
  Move move;
};

// Exchanges the visit at `source_position` against a visit of `target`; each
// order lands inside its own assigned window and both tours must come out
// feasible. Partners are tried in ascending target position; the first
// feasible partner wins.
std::optional<ExchangeResult> try_exchange(const Tour& source, std::size_t source_position,
                                           const Tour& target, const Schedule& schedule);

struct AnsOutcome {
  Schedule schedule;        // snapshot with the candidate inserted
  std::vector<Move> moves;  // repair script in commit order
  VehicleId vehicle = 0;
  std::size_t position = 0;  // final insertion index of the candidate
};

// Tries to make room for `candidate` in `window` on the tour of `vehicle`
// by relocating (optionally exchanging) visits to the other tours, then
// inserts it. Works on a private copy of the schedule and discards all edits
// on failure. Stages, each driven to the first success or a local optimum of
// its own objective:
//   1) shed weight until the candidate fits capacity-wise,
//   2) move visits out of the window region until the free-time rejection
//      test clears,
//   3) move visits outside the window region to shrink the boundary loss,
//      keeping the rejection test cleared,
//   4) keep freeing window time until some index admits the candidate.
// Moves in stages 2-4 must leave spare capacity for the candidate.
std::optional<AnsOutcome> ans_insert(const Schedule& schedule, VehicleId vehicle,
                                     const Order& candidate, WindowId window,
                                     const AnsConfig& config = {});

// Full solver: per window, tours are tried in declaration order and each
// attempt starts from the unmodified input snapshot, so window verdicts are
// independent of evaluation order. The winning repair script is recorded so
// a chosen slot can be committed later.
SlotResult solve_ans(const SlotQuery& query, const AnsConfig& config = {});

}  // namespace sop
