#pragma once

#include "sop/rng.hpp"
#include "sop/schedule.hpp"

namespace sop {

// Benchmark window layouts.
//   I   ten disjoint one-hour windows, 08:00-18:00
//   II  ten windows starting hourly 08:00-17:00; the first nine last 1.5 h
//       (each overlapping its predecessor by 30 min), the last one 1 h
//   III nine consecutive one-hour windows 08:00-17:00 plus three three-hour
//       blocks (morning / noon / afternoon) covering the same span
enum class WindowLayout { disjoint_hourly = 1, staggered = 2, nested = 3 };

const char* window_layout_name(WindowLayout layout);
WindowLayout window_layout_from_name(const std::string& name);

WindowSet window_setup(WindowLayout layout);

enum class DepotPlacement { center, top_left_quadrant };

struct GenConfig {
  std::uint64_t seed = 1;
  std::int32_t grid_width = 20'000;   // meters
  std::int32_t grid_height = 20'000;  // meters
  int n_clusters = 15;
  double clustered_fraction = 0.8;
  int pool_size = 5'000;
  int vehicles = 20;
  DepotPlacement depot_placement = DepotPlacement::center;
  double speed_m_per_s = 20'000.0 / 3'600.0;  // 20 km/h
  double distance_correction = 1.5;
  Duration service = 300;
  double weight_mean = 7.0;
  double weight_stddev = 2.0;
  Weight weight_min = 1;
  Weight weight_max = 15;
  Weight capacity = 200;
  WindowLayout layout = WindowLayout::disjoint_hourly;
  // Generous margins around the window horizon so shifts never become the
  // binding constraint.
  TimeInstant shift_start = 27'000;  // 07:30
  TimeInstant shift_end = 66'600;    // 18:30
  // Cluster spread: per-axis standard deviation drawn uniformly from this
  // range (meters).
  double cluster_sigma_min = 100.0;
  double cluster_sigma_max = 2'000.0;
};

void validate_config(const GenConfig& config);

// Sampled cluster: center, per-axis variance, rotation.
struct ClusterShape {
  double cx = 0, cy = 0;
  double sigma_x = 0, sigma_y = 0;
  double angle = 0;
};

struct Instance {
  GenConfig config;
  std::vector<ClusterShape> clusters;
  Location depot;
  WindowSet windows;
  std::vector<Order> pool;  // booking arrival order (randomly permuted ids)
  std::shared_ptr<const TravelTimeProvider> travel;
};

// Deterministic in the seed: cluster shapes first, then customer locations
// (clustered_fraction from a uniformly chosen cluster, the rest uniform on
// the grid), weights from the truncated normal, preferred windows uniform,
// and finally a random permutation of the booking order.
Instance generate_instance(const GenConfig& config);

// Empty schedule with the instance's fleet, windows, and travel provider.
Schedule empty_schedule(const Instance& instance);

// Samples k fresh prospective customers from the instance's spatial and
// weight distributions. Ids continue after the pool so they can never
// collide with scheduled orders.
std::vector<Order> probe_customers(const Instance& instance, const Schedule& schedule, int k,
                                   std::uint64_t seed);

}  // namespace sop
