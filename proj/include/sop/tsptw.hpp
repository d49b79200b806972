#pragma once

#include <cstdint>

#include "sop/solver.hpp"

namespace sop {

struct TsptwOptions {
  std::size_t size_cap = 64;             // orders per instance before refusing
  std::uint64_t node_budget = 10'000'000;  // DFS expansions before giving up
  bool prune = true;                     // disable only to validate pruning
};

// Single-tour feasibility instance: the tour's orders plus the candidate
// bound to the trial window, between the original depot anchors, under the
// original capacity.
struct TsptwInstance {
  struct Stop {
    OrderId id;
    Location location;
    TimeInstant window_start;
    TimeInstant window_end;
    Duration service;
    Weight weight;
  };

  std::vector<Stop> stops;
  Location depot;
  TimeInstant shift_start = 0;
  TimeInstant shift_end = 0;
  Weight capacity = 0;
  const TravelTimeProvider* travel = nullptr;
};

TsptwInstance make_tsptw_instance(const Tour& tour, const Order& candidate,
                                  const TimeWindow& window, const Schedule& schedule);

enum class TsptwStatus { feasible, infeasible, budget_exhausted, size_cap };

struct TsptwOutcome {
  TsptwStatus status = TsptwStatus::infeasible;
  std::vector<OrderId> sequence;  // feasible visit order, set iff feasible
  std::uint64_t expanded = 0;     // DFS nodes expanded
};

// Complete depth-first search over visit sequences. Branches chronologically
// by window start; prunes only with arguments that assume nothing beyond
// t >= 0, so verdicts are exact for asymmetric, triangle-violating travel.
// Exceeding the node budget or the size cap is reported as its own status,
// never conflated with infeasibility.
TsptwOutcome tsptw_feasible(const TsptwInstance& instance, const TsptwOptions& options = {});

// Per window and tour in declaration order, accept the window on the first
// tour whose single-tour instance is feasible; all other tours stay as they
// are. Budget/size-cap outcomes are surfaced in the verdict status.
SlotResult solve_tsptw(const SlotQuery& query, const TsptwOptions& options = {});

}  // namespace sop
