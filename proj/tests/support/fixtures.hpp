#pragma once

#include <memory>
#include <vector>

#include "sop/core.hpp"
#include "sop/rng.hpp"

// Hand-built and randomized worlds for the unit and acceptance suites.
//
// Matrix-travel fixtures place the depot at synthetic location (0, 0) and
// order k at (k + 1, 0), so order ids map 1:1 onto travel-matrix nodes and
// arbitrary asymmetric, triangle-violating matrices can be written down
// directly.
namespace soptest {

inline sop::Location depot_node() { return {0, 0}; }
inline sop::Location order_node(sop::OrderId id) { return {id + 1, 0}; }

// node 0 = depot, node k+1 = order k.
inline std::shared_ptr<sop::MatrixTravel> matrix_travel(
    std::vector<std::vector<sop::Duration>> matrix) {
  std::vector<sop::Location> nodes;
  nodes.reserve(matrix.size());
  nodes.push_back(depot_node());
  for (std::size_t k = 1; k < matrix.size(); ++k) {
    nodes.push_back(order_node(static_cast<sop::OrderId>(k - 1)));
  }
  return std::make_shared<sop::MatrixTravel>(std::move(nodes), std::move(matrix));
}

inline std::shared_ptr<sop::MatrixTravel> uniform_travel(std::size_t n_orders,
                                                         sop::Duration leg) {
  std::vector<std::vector<sop::Duration>> matrix(
      n_orders + 1, std::vector<sop::Duration>(n_orders + 1, leg));
  for (std::size_t i = 0; i <= n_orders; ++i) matrix[i][i] = 0;
  return matrix_travel(std::move(matrix));
}

inline sop::Order make_order(sop::OrderId id, sop::Weight weight, sop::Duration service,
                             sop::WindowId window) {
  sop::Order order;
  order.id = id;
  order.location = order_node(id);
  order.weight = weight;
  order.service = service;
  order.window = window;
  return order;
}

// `count` consecutive windows of `length` starting at `from`, ids 1..count.
inline sop::WindowSet consecutive_windows(sop::TimeInstant from, int count,
                                          sop::Duration length) {
  std::vector<sop::TimeWindow> windows;
  for (int i = 0; i < count; ++i) {
    windows.push_back({i + 1, from + i * length, from + (i + 1) * length});
  }
  return sop::WindowSet(std::move(windows));
}

struct RandomWorldParams {
  int tours = 2;
  int order_attempts = 8;
  int n_windows = 4;
  bool overlapping = false;
  sop::Duration window_length = 3600;
  sop::Duration max_travel = 1500;   // legs drawn uniformly from [0, max_travel]
  sop::Duration max_service = 420;   // from [60, max_service]
  sop::Weight max_weight = 12;
  sop::Weight capacity = 60;
  sop::TimeInstant shift_start = 7 * 3600;
  sop::TimeInstant shift_end = 7 * 3600 + 3600 * (2 + 4);  // adjusted below by windows
};

// Feasible random schedule: a fresh asymmetric travel matrix (independent
// per-direction legs, so triangle violations are routine), then a booking
// pass that keeps whatever fits. Matrix nodes are reserved for
// `order_attempts` pool orders plus one extra candidate slot.
inline sop::Schedule random_schedule(sop::Rng& rng, const RandomWorldParams& params) {
  const std::size_t n_nodes = static_cast<std::size_t>(params.order_attempts) + 2;
  std::vector<std::vector<sop::Duration>> matrix(n_nodes,
                                                 std::vector<sop::Duration>(n_nodes, 0));
  for (std::size_t i = 0; i < n_nodes; ++i) {
    for (std::size_t j = 0; j < n_nodes; ++j) {
      if (i != j) matrix[i][j] = rng.uniform_int(0, params.max_travel);
    }
  }

  std::vector<sop::TimeWindow> windows;
  const sop::TimeInstant horizon = 8 * 3600;
  for (int i = 0; i < params.n_windows; ++i) {
    if (params.overlapping) {
      const sop::TimeInstant start = horizon + i * (params.window_length / 2);
      windows.push_back({i + 1, start, start + params.window_length});
    } else {
      const sop::TimeInstant start = horizon + i * params.window_length;
      windows.push_back({i + 1, start, start + params.window_length});
    }
  }

  sop::Schedule schedule;
  schedule.windows = sop::WindowSet(windows);
  schedule.depot = depot_node();
  schedule.travel = matrix_travel(std::move(matrix));
  const sop::TimeInstant last_end = windows.back().end;
  for (int v = 0; v < params.tours; ++v) {
    sop::Tour tour;
    tour.vehicle = v;
    tour.shift_start = params.shift_start;
    tour.shift_end = last_end + 3600;
    tour.capacity = params.capacity;
    schedule.tours.push_back(tour);
  }

  for (int k = 0; k < params.order_attempts; ++k) {
    sop::Order order = make_order(static_cast<sop::OrderId>(k),
                                  static_cast<sop::Weight>(rng.uniform_int(1, params.max_weight)),
                                  rng.uniform_int(60, params.max_service),
                                  windows[static_cast<std::size_t>(
                                              rng.uniform_int(0, params.n_windows - 1))]
                                      .id);
    for (std::size_t t = 0; t < schedule.tours.size(); ++t) {
      const sop::Tour& tour = schedule.tours[t];
      const auto position = sop::simple_insert(
          tour, order, schedule.windows.by_id(order.window), schedule);
      if (position) {
        schedule.orders.add(order);
        schedule.tours[t] = sop::insert_at(tour, *position, order.id);
        break;
      }
    }
  }
  return schedule;
}

// Candidate order on the reserved extra matrix node.
inline sop::Order random_candidate(sop::Rng& rng, const RandomWorldParams& params) {
  return make_order(static_cast<sop::OrderId>(params.order_attempts),
                    static_cast<sop::Weight>(rng.uniform_int(1, params.max_weight)),
                    rng.uniform_int(60, params.max_service), 1);
}

}  // namespace soptest
