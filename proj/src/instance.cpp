#include "sop/instance.hpp"

#include <algorithm>
#include <cmath>

namespace sop {

const char* window_layout_name(WindowLayout layout) {
  switch (layout) {
    case WindowLayout::disjoint_hourly: return "I";
    case WindowLayout::staggered: return "II";
    case WindowLayout::nested: return "III";
  }
  return "?";
}

WindowLayout window_layout_from_name(const std::string& name) {
  if (name == "I" || name == "1") return WindowLayout::disjoint_hourly;
  if (name == "II" || name == "2") return WindowLayout::staggered;
  if (name == "III" || name == "3") return WindowLayout::nested;
  throw std::invalid_argument("unknown window layout '" + name + "' (expected I, II, or III)");
}

WindowSet window_setup(WindowLayout layout) {
  constexpr TimeInstant kHour = 3600;
  constexpr TimeInstant k0800 = 8 * kHour;
  std::vector<TimeWindow> windows;
  switch (layout) {
    case WindowLayout::disjoint_hourly:
      for (WindowId i = 0; i < 10; ++i) {
        windows.push_back({i + 1, k0800 + i * kHour, k0800 + (i + 1) * kHour});
      }
      break;
    case WindowLayout::staggered:
      for (WindowId i = 0; i < 9; ++i) {
        windows.push_back({i + 1, k0800 + i * kHour, k0800 + i * kHour + kHour + kHour / 2});
      }
      windows.push_back({10, k0800 + 9 * kHour, k0800 + 10 * kHour});
      break;
    case WindowLayout::nested:
      for (WindowId i = 0; i < 9; ++i) {
        windows.push_back({i + 1, k0800 + i * kHour, k0800 + (i + 1) * kHour});
      }
      windows.push_back({10, k0800, k0800 + 3 * kHour});
      windows.push_back({11, k0800 + 3 * kHour, k0800 + 6 * kHour});
      windows.push_back({12, k0800 + 6 * kHour, k0800 + 9 * kHour});
      break;
  }
  return WindowSet(std::move(windows));
}

void validate_config(const GenConfig& config) {
  if (config.grid_width < 1 || config.grid_height < 1) {
    throw std::invalid_argument("grid dimensions must be positive");
  }
  if (config.n_clusters < 1) throw std::invalid_argument("need at least one cluster");
  if (config.clustered_fraction < 0.0 || config.clustered_fraction > 1.0) {
    throw std::invalid_argument("clustered fraction must lie in [0, 1]");
  }
  if (config.pool_size < 1) throw std::invalid_argument("pool size must be positive");
  if (config.vehicles < 1) throw std::invalid_argument("vehicle count must be positive");
  if (config.speed_m_per_s <= 0.0 || config.distance_correction <= 0.0) {
    throw std::invalid_argument("speed and distance correction must be positive");
  }
  if (config.service <= 0) throw std::invalid_argument("service time must be positive");
  if (config.weight_min < 1 || config.weight_min > config.weight_max) {
    throw std::invalid_argument("weight bounds must satisfy 1 <= min <= max");
  }
  if (config.capacity < 1) throw std::invalid_argument("capacity must be positive");
  if (config.shift_start >= config.shift_end) {
    throw std::invalid_argument("shift must have start < end");
  }
  if (config.cluster_sigma_min <= 0.0 || config.cluster_sigma_min > config.cluster_sigma_max) {
    throw std::invalid_argument("cluster sigma range must satisfy 0 < min <= max");
  }
}

namespace {

std::int32_t clamp_coord(double value, std::int32_t hi) {
  const double rounded = std::round(value);
  if (rounded < 0.0) return 0;
  if (rounded > static_cast<double>(hi)) return hi;
  return static_cast<std::int32_t>(rounded);
}

Location sample_location(Rng& rng, const GenConfig& config,
                         const std::vector<ClusterShape>& clusters) {
  if (rng.uniform01() < config.clustered_fraction) {
    const auto k = static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(clusters.size()) - 1));
    const ClusterShape& c = clusters[k];
    const double u = rng.normal(0.0, c.sigma_x);
    const double v = rng.normal(0.0, c.sigma_y);
    const double x = c.cx + u * std::cos(c.angle) - v * std::sin(c.angle);
    const double y = c.cy + u * std::sin(c.angle) + v * std::cos(c.angle);
    return {clamp_coord(x, config.grid_width), clamp_coord(y, config.grid_height)};
  }
  return {clamp_coord(rng.uniform(0.0, config.grid_width), config.grid_width),
          clamp_coord(rng.uniform(0.0, config.grid_height), config.grid_height)};
}

Weight sample_weight(Rng& rng, const GenConfig& config) {
  const double w = rng.truncated_normal(config.weight_mean, config.weight_stddev,
                                        config.weight_min, config.weight_max);
  return static_cast<Weight>(std::llround(w));
}

}  // namespace

Instance generate_instance(const GenConfig& config) {
  validate_config(config);

  Instance instance;
  instance.config = config;
  instance.windows = window_setup(config.layout);
  instance.depot = config.depot_placement == DepotPlacement::center
                       ? Location{config.grid_width / 2, config.grid_height / 2}
                       : Location{config.grid_width / 4, 3 * config.grid_height / 4};
  instance.travel =
      std::make_shared<EuclideanTravel>(config.distance_correction, config.speed_m_per_s);

  Rng rng(config.seed);
  instance.clusters.reserve(static_cast<std::size_t>(config.n_clusters));
  for (int k = 0; k < config.n_clusters; ++k) {
    ClusterShape c;
    c.cx = rng.uniform(0.0, config.grid_width);
    c.cy = rng.uniform(0.0, config.grid_height);
    c.sigma_x = rng.uniform(config.cluster_sigma_min, config.cluster_sigma_max);
    c.sigma_y = rng.uniform(config.cluster_sigma_min, config.cluster_sigma_max);
    c.angle = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    instance.clusters.push_back(c);
  }

  const auto q = static_cast<std::int64_t>(instance.windows.size());
  instance.pool.reserve(static_cast<std::size_t>(config.pool_size));
  for (int i = 0; i < config.pool_size; ++i) {
    Order order;
    order.id = i;
    order.location = sample_location(rng, config, instance.clusters);
    order.weight = sample_weight(rng, config);
    order.service = config.service;
    order.window = instance.windows.windows()[static_cast<std::size_t>(
                                                  rng.uniform_int(0, q - 1))]
                       .id;
    instance.pool.push_back(order);
  }
  rng.shuffle(instance.pool);
  return instance;
}

Schedule empty_schedule(const Instance& instance) {
  Schedule schedule;
  schedule.windows = instance.windows;
  schedule.depot = instance.depot;
  schedule.travel = instance.travel;
  schedule.tours.reserve(static_cast<std::size_t>(instance.config.vehicles));
  for (int v = 0; v < instance.config.vehicles; ++v) {
    Tour tour;
    tour.vehicle = v;
    tour.shift_start = instance.config.shift_start;
    tour.shift_end = instance.config.shift_end;
    tour.capacity = instance.config.capacity;
    schedule.tours.push_back(std::move(tour));
  }
  return schedule;
}

std::vector<Order> probe_customers(const Instance& instance, const Schedule& schedule, int k,
                                   std::uint64_t seed) {
  if (k < 0) throw std::invalid_argument("probe count must be non-negative");
  Rng rng(Rng::mix(seed, 0x70726f6265ULL));  // independent of the pool stream
  OrderId next_id = static_cast<OrderId>(instance.pool.size());
  while (schedule.orders.contains(next_id)) ++next_id;

  const auto q = static_cast<std::int64_t>(instance.windows.size());
  std::vector<Order> probes;
  probes.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    Order probe;
    probe.id = next_id++;
    probe.location = sample_location(rng, instance.config, instance.clusters);
    probe.weight = sample_weight(rng, instance.config);
    probe.service = instance.config.service;
    probe.window =
        instance.windows.windows()[static_cast<std::size_t>(rng.uniform_int(0, q - 1))].id;
    probes.push_back(probe);
  }
  return probes;
}

}  // namespace sop
