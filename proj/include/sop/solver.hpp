#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "sop/core.hpp"

namespace sop {

enum class Method { simple, tsptw, ans };

const char* method_name(Method method);
std::optional<Method> method_from_name(const std::string& name);

// Inter-tour repair operation. A relocation takes `order` out of `source`
// and splices it into `target` after index `target_index`; an exchange
// additionally brings `counterpart` back from `target` into `source` after
// index `counterpart_index`. Replay removes first (both sides for an
// exchange), then reinserts, so the recorded indices refer to the tours
// after removal.
struct Move {
  enum class Kind { relocate, exchange };

  Kind kind = Kind::relocate;
  OrderId order = kNoOrder;
  VehicleId source = 0;
  VehicleId target = 0;
  std::size_t source_position = 0;   // position of `order` in source before the move
  std::size_t target_index = 0;      // insertion index of `order` into target
  OrderId counterpart = kNoOrder;    // exchange only
  std::size_t counterpart_position = 0;
  std::size_t counterpart_index = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

// Applies one move to the schedule in place. Throws std::invalid_argument if
// the recorded positions do not match the schedule state.
void apply_move(Schedule& schedule, const Move& move);

// One prospective order against a schedule snapshot. An empty `windows`
// vector queries every window of the schedule.
struct SlotQuery {
  Schedule schedule;
  Order candidate;
  std::vector<WindowId> windows;

  std::vector<WindowId> window_ids() const;
};

// Throws std::invalid_argument unless the schedule is feasible and the
// candidate id is unused.
void validate_query(const SlotQuery& query);

enum class VerdictStatus { feasible, infeasible, budget_exhausted, size_cap };

// Per-window outcome with enough detail to replay the accepted insertion.
struct WindowVerdict {
  WindowId window = 0;
  bool feasible = false;
  Method method = Method::simple;
  VerdictStatus status = VerdictStatus::infeasible;
  VehicleId vehicle = -1;
  std::size_t position = 0;          // insertion index (simple / ans)
  std::vector<OrderId> sequence;     // full resequenced tour (tsptw)
  std::vector<Move> moves;           // repair script (ans)
  std::chrono::nanoseconds elapsed{0};
};

struct SlotResult {
  Method method = Method::simple;
  std::vector<WindowVerdict> verdicts;

  std::vector<WindowId> available() const;
  bool window_available(WindowId id) const;
  std::chrono::nanoseconds total_elapsed() const;
};

// Materializes an accepted verdict: applies the repair moves (ans) or the
// resequencing (tsptw), inserts the candidate bound to the verdict's window,
// and returns the new schedule. Throws std::logic_error if the replayed
// schedule ends up infeasible.
Schedule commit_verdict(const Schedule& schedule, const Order& candidate,
                        const WindowVerdict& verdict);

// Baseline solver: first feasible position per tour in declaration order,
// window accepted at the first tour that admits the candidate. Never touches
// the input schedule.
SlotResult solve_simple(const SlotQuery& query);

}  // namespace sop
