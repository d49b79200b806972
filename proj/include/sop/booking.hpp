#pragma once

#include "sop/instance.hpp"
#include "sop/solver.hpp"

namespace sop {

enum class FillScenario { non_optimized, optimized };

const char* fill_scenario_name(FillScenario scenario);
FillScenario fill_scenario_from_name(const std::string& name);

// One accepted booking: where the order went in, plus the travel-time
// descent moves that followed it (optimized scenario only).
struct AcceptanceEvent {
  OrderId order = kNoOrder;
  VehicleId vehicle = 0;
  std::size_t position = 0;
  std::vector<Move> post_moves;
};

// Compact replay log of a booking run. Any fill level's schedule is
// recovered by replaying a prefix of the events against the empty fleet,
// so long trajectories stay cheap to keep around.
struct FillTrajectory {
  FillScenario scenario = FillScenario::non_optimized;
  std::shared_ptr<const Instance> instance;
  std::vector<AcceptanceEvent> events;

  // Orders accepted out of the full pool; the saturation count used to
  // anchor fill levels.
  std::size_t total_accepted() const { return events.size(); }
};

// Sum over tours of the travel between consecutive stops, depot legs
// included. Service time is not part of this objective.
Duration total_travel_time(const Schedule& schedule);

// Applies the best travel-time-reducing relocation (any customer to any
// other tour, staying in its assigned window) until none improves. Returns
// the applied moves in order.
std::vector<Move> optimize_travel_time_in_place(Schedule& schedule);
Schedule optimize_travel_time(const Schedule& schedule);

// Books the pool in order against an initially empty schedule. Each customer
// is offered only their preferred window (first feasible tour and position,
// no resequencing); refusals are dropped. In the optimized scenario the
// schedule is re-optimized after every acceptance. Setting `validate`
// re-checks schedule feasibility after every acceptance and throws
// std::logic_error on violation.
FillTrajectory fill_schedule(std::shared_ptr<const Instance> instance, FillScenario scenario,
                             bool validate = false);

// Schedule state right after acceptance ceil(fill * total) was committed
// (including its descent moves). fill must lie in (0, 1].
Schedule snapshot_at_fill(const FillTrajectory& trajectory, double fill);

}  // namespace sop
