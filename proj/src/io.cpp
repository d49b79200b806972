#include "sop/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sop {

namespace {

std::string fmt_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string fmt_u64_hex(std::uint64_t value) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, value);
  return buf;
}

// Whitespace-token stream over the whole file with line tracking for error
// messages.
class Reader {
 public:
  explicit Reader(const std::string& text) : in_(text) {}

  std::string word() {
    std::string token;
    if (!(in_ >> token)) throw ParseError("unexpected end of file");
    return token;
  }

  void expect(const std::string& literal) {
    const std::string token = word();
    if (token != literal) {
      throw ParseError("expected '" + literal + "', found '" + token + "'");
    }
  }

  std::int64_t integer() {
    const std::string token = word();
    try {
      std::size_t used = 0;
      const std::int64_t value = std::stoll(token, &used);
      if (used != token.size()) throw ParseError("trailing characters in integer '" + token + "'");
      return value;
    } catch (const std::invalid_argument&) {
      throw ParseError("expected integer, found '" + token + "'");
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range: '" + token + "'");
    }
  }

  std::uint64_t unsigned64() {
    const std::string token = word();
    try {
      std::size_t used = 0;
      const std::uint64_t value = std::stoull(token, &used);
      if (used != token.size()) throw ParseError("trailing characters in integer '" + token + "'");
      return value;
    } catch (const std::exception&) {
      throw ParseError("expected unsigned integer, found '" + token + "'");
    }
  }

  double real() {
    const std::string token = word();
    try {
      std::size_t used = 0;
      const double value = std::stod(token, &used);
      if (used != token.size()) throw ParseError("trailing characters in number '" + token + "'");
      return value;
    } catch (const std::exception&) {
      throw ParseError("expected number, found '" + token + "'");
    }
  }

 private:
  std::istringstream in_;
};

void write_window_section(std::ostream& out, const WindowSet& windows) {
  out << "windows " << windows.size() << "\n";
  for (const TimeWindow& w : windows) {
    out << "w " << w.id << " " << w.start << " " << w.end << "\n";
  }
}

WindowSet read_window_section(Reader& reader) {
  reader.expect("windows");
  const std::int64_t q = reader.integer();
  std::vector<TimeWindow> windows;
  windows.reserve(static_cast<std::size_t>(q));
  for (std::int64_t i = 0; i < q; ++i) {
    reader.expect("w");
    TimeWindow w;
    w.id = static_cast<WindowId>(reader.integer());
    w.start = reader.integer();
    w.end = reader.integer();
    windows.push_back(w);
  }
  return WindowSet(std::move(windows));
}

void write_order_line(std::ostream& out, const Order& order) {
  out << "o " << order.id << " " << order.location.x << " " << order.location.y << " "
      << order.weight << " " << order.service << " " << order.window << "\n";
}

Order read_order_line(Reader& reader) {
  reader.expect("o");
  Order order;
  order.id = static_cast<OrderId>(reader.integer());
  order.location.x = static_cast<std::int32_t>(reader.integer());
  order.location.y = static_cast<std::int32_t>(reader.integer());
  order.weight = static_cast<Weight>(reader.integer());
  order.service = reader.integer();
  order.window = static_cast<WindowId>(reader.integer());
  return order;
}

}  // namespace

std::string serialize_instance(const Instance& instance) {
  const GenConfig& c = instance.config;
  std::ostringstream out;
  out << "sop-instance v1\n";
  out << "seed " << c.seed << "\n";
  out << "grid " << c.grid_width << " " << c.grid_height << "\n";
  out << "depot-placement "
      << (c.depot_placement == DepotPlacement::center ? "center" : "top-left") << "\n";
  out << "speed " << fmt_double(c.speed_m_per_s) << "\n";
  out << "correction " << fmt_double(c.distance_correction) << "\n";
  out << "service " << c.service << "\n";
  out << "weights " << fmt_double(c.weight_mean) << " " << fmt_double(c.weight_stddev) << " "
      << c.weight_min << " " << c.weight_max << "\n";
  out << "capacity " << c.capacity << "\n";
  out << "vehicles " << c.vehicles << "\n";
  out << "shift " << c.shift_start << " " << c.shift_end << "\n";
  out << "layout " << window_layout_name(c.layout) << "\n";
  out << "clustered-fraction " << fmt_double(c.clustered_fraction) << "\n";
  out << "sigma-range " << fmt_double(c.cluster_sigma_min) << " "
      << fmt_double(c.cluster_sigma_max) << "\n";
  out << "pool-size " << c.pool_size << "\n";
  out << "depot " << instance.depot.x << " " << instance.depot.y << "\n";
  write_window_section(out, instance.windows);
  out << "clusters " << instance.clusters.size() << "\n";
  for (const ClusterShape& k : instance.clusters) {
    out << "k " << fmt_double(k.cx) << " " << fmt_double(k.cy) << " " << fmt_double(k.sigma_x)
        << " " << fmt_double(k.sigma_y) << " " << fmt_double(k.angle) << "\n";
  }
  out << "orders " << instance.pool.size() << "\n";
  for (const Order& order : instance.pool) write_order_line(out, order);
  out << "end\n";
  return out.str();
}

Instance parse_instance(const std::string& text) {
  Reader reader(text);
  reader.expect("sop-instance");
  reader.expect("v1");

  Instance instance;
  GenConfig& c = instance.config;
  reader.expect("seed");
  c.seed = reader.unsigned64();
  reader.expect("grid");
  c.grid_width = static_cast<std::int32_t>(reader.integer());
  c.grid_height = static_cast<std::int32_t>(reader.integer());
  reader.expect("depot-placement");
  const std::string placement = reader.word();
  if (placement == "center") {
    c.depot_placement = DepotPlacement::center;
  } else if (placement == "top-left") {
    c.depot_placement = DepotPlacement::top_left_quadrant;
  } else {
    throw ParseError("unknown depot placement '" + placement + "'");
  }
  reader.expect("speed");
  c.speed_m_per_s = reader.real();
  reader.expect("correction");
  c.distance_correction = reader.real();
  reader.expect("service");
  c.service = reader.integer();
  reader.expect("weights");
  c.weight_mean = reader.real();
  c.weight_stddev = reader.real();
  c.weight_min = static_cast<Weight>(reader.integer());
  c.weight_max = static_cast<Weight>(reader.integer());
  reader.expect("capacity");
  c.capacity = static_cast<Weight>(reader.integer());
  reader.expect("vehicles");
  c.vehicles = static_cast<int>(reader.integer());
  reader.expect("shift");
  c.shift_start = reader.integer();
  c.shift_end = reader.integer();
  reader.expect("layout");
  c.layout = window_layout_from_name(reader.word());
  reader.expect("clustered-fraction");
  c.clustered_fraction = reader.real();
  reader.expect("sigma-range");
  c.cluster_sigma_min = reader.real();
  c.cluster_sigma_max = reader.real();
  reader.expect("pool-size");
  c.pool_size = static_cast<int>(reader.integer());

  reader.expect("depot");
  instance.depot.x = static_cast<std::int32_t>(reader.integer());
  instance.depot.y = static_cast<std::int32_t>(reader.integer());
  instance.windows = read_window_section(reader);

  reader.expect("clusters");
  const std::int64_t n_clusters = reader.integer();
  c.n_clusters = static_cast<int>(n_clusters);
  for (std::int64_t i = 0; i < n_clusters; ++i) {
    reader.expect("k");
    ClusterShape k;
    k.cx = reader.real();
    k.cy = reader.real();
    k.sigma_x = reader.real();
    k.sigma_y = reader.real();
    k.angle = reader.real();
    instance.clusters.push_back(k);
  }

  reader.expect("orders");
  const std::int64_t p = reader.integer();
  instance.pool.reserve(static_cast<std::size_t>(p));
  for (std::int64_t i = 0; i < p; ++i) {
    Order order = read_order_line(reader);
    validate_order(order, instance.windows);
    instance.pool.push_back(order);
  }
  reader.expect("end");

  instance.travel =
      std::make_shared<EuclideanTravel>(c.distance_correction, c.speed_m_per_s);
  return instance;
}

std::string serialize_schedule(const Schedule& schedule) {
  std::ostringstream out;
  out << "sop-schedule v1\n";
  out << "depot " << schedule.depot.x << " " << schedule.depot.y << "\n";
  write_window_section(out, schedule.windows);
  const std::vector<OrderId> ids = schedule.orders.sorted_ids();
  out << "orders " << ids.size() << "\n";
  for (OrderId id : ids) write_order_line(out, schedule.orders.at(id));
  out << "tours " << schedule.tours.size() << "\n";
  for (const Tour& tour : schedule.tours) {
    out << "t " << tour.vehicle << " " << tour.shift_start << " " << tour.shift_end << " "
        << tour.capacity << " " << tour.size();
    for (OrderId id : tour.visits) out << " " << id;
    out << "\n";
  }
  if (const auto* euclid = dynamic_cast<const EuclideanTravel*>(schedule.travel.get())) {
    out << "travel euclidean " << fmt_double(euclid->correction()) << " "
        << fmt_double(euclid->speed_m_per_s()) << "\n";
  } else if (const auto* matrix = dynamic_cast<const MatrixTravel*>(schedule.travel.get())) {
    // Node order: depot, then orders ascending by id.
    out << "travel matrix " << (ids.size() + 1) << "\n";
    std::vector<Location> nodes{schedule.depot};
    for (OrderId id : ids) nodes.push_back(schedule.orders.at(id).location);
    for (const Location& from : nodes) {
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        out << (j == 0 ? "" : " ") << matrix->travel(from, nodes[j]);
      }
      out << "\n";
    }
  } else {
    throw ParseError("schedule travel provider is not serializable");
  }
  out << "end\n";
  return out.str();
}

Schedule parse_schedule(const std::string& text) {
  Reader reader(text);
  reader.expect("sop-schedule");
  reader.expect("v1");

  Schedule schedule;
  reader.expect("depot");
  schedule.depot.x = static_cast<std::int32_t>(reader.integer());
  schedule.depot.y = static_cast<std::int32_t>(reader.integer());
  schedule.windows = read_window_section(reader);

  reader.expect("orders");
  const std::int64_t p = reader.integer();
  for (std::int64_t i = 0; i < p; ++i) {
    Order order = read_order_line(reader);
    validate_order(order, schedule.windows);
    schedule.orders.add(order);
  }

  reader.expect("tours");
  const std::int64_t m = reader.integer();
  for (std::int64_t i = 0; i < m; ++i) {
    reader.expect("t");
    Tour tour;
    tour.vehicle = static_cast<VehicleId>(reader.integer());
    tour.shift_start = reader.integer();
    tour.shift_end = reader.integer();
    tour.capacity = static_cast<Weight>(reader.integer());
    const std::int64_t n = reader.integer();
    tour.visits.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
      tour.visits.push_back(static_cast<OrderId>(reader.integer()));
    }
    schedule.tours.push_back(std::move(tour));
  }

  reader.expect("travel");
  const std::string kind = reader.word();
  if (kind == "euclidean") {
    const double correction = reader.real();
    const double speed = reader.real();
    schedule.travel = std::make_shared<EuclideanTravel>(correction, speed);
  } else if (kind == "matrix") {
    const std::int64_t n_nodes = reader.integer();
    const std::vector<OrderId> ids = schedule.orders.sorted_ids();
    if (n_nodes != static_cast<std::int64_t>(ids.size()) + 1) {
      throw ParseError("travel matrix node count does not match depot + orders");
    }
    std::vector<Location> nodes{schedule.depot};
    for (OrderId id : ids) nodes.push_back(schedule.orders.at(id).location);
    std::vector<std::vector<Duration>> matrix(static_cast<std::size_t>(n_nodes));
    for (auto& row : matrix) {
      row.resize(static_cast<std::size_t>(n_nodes));
      for (auto& cell : row) cell = reader.integer();
    }
    schedule.travel = std::make_shared<MatrixTravel>(std::move(nodes), std::move(matrix));
  } else {
    throw ParseError("unknown travel kind '" + kind + "'");
  }
  reader.expect("end");

  try {
    validate_schedule(schedule);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid schedule: ") + e.what());
  }
  return schedule;
}

std::string serialize_trajectory(const FillTrajectory& trajectory) {
  if (!trajectory.instance) throw std::invalid_argument("trajectory has no instance");
  std::ostringstream out;
  out << "sop-trajectory v1\n";
  out << "scenario " << fill_scenario_name(trajectory.scenario) << "\n";
  out << "instance " << fmt_u64_hex(instance_hash(*trajectory.instance)) << "\n";
  out << "events " << trajectory.events.size() << "\n";
  for (const AcceptanceEvent& event : trajectory.events) {
    out << "a " << event.order << " " << event.vehicle << " " << event.position << " "
        << event.post_moves.size() << "\n";
    for (const Move& move : event.post_moves) {
      out << "m " << move.order << " " << move.source << " " << move.source_position << " "
          << move.target << " " << move.target_index << "\n";
    }
  }
  out << "end\n";
  return out.str();
}

FillTrajectory parse_trajectory(const std::string& text,
                                std::shared_ptr<const Instance> instance) {
  if (!instance) throw std::invalid_argument("parse_trajectory requires an instance");
  Reader reader(text);
  reader.expect("sop-trajectory");
  reader.expect("v1");

  FillTrajectory trajectory;
  trajectory.instance = instance;
  reader.expect("scenario");
  trajectory.scenario = fill_scenario_from_name(reader.word());
  reader.expect("instance");
  const std::string hash = reader.word();
  if (hash != fmt_u64_hex(instance_hash(*instance))) {
    throw ParseError("trajectory was recorded against a different instance");
  }
  reader.expect("events");
  const std::int64_t n = reader.integer();
  trajectory.events.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    reader.expect("a");
    AcceptanceEvent event;
    event.order = static_cast<OrderId>(reader.integer());
    event.vehicle = static_cast<VehicleId>(reader.integer());
    event.position = static_cast<std::size_t>(reader.integer());
    const std::int64_t k = reader.integer();
    for (std::int64_t j = 0; j < k; ++j) {
      reader.expect("m");
      Move move;
      move.kind = Move::Kind::relocate;
      move.order = static_cast<OrderId>(reader.integer());
      move.source = static_cast<VehicleId>(reader.integer());
      move.source_position = static_cast<std::size_t>(reader.integer());
      move.target = static_cast<VehicleId>(reader.integer());
      move.target_index = static_cast<std::size_t>(reader.integer());
      event.post_moves.push_back(move);
    }
    trajectory.events.push_back(std::move(event));
  }
  reader.expect("end");
  return trajectory;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char ch : data) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::uint64_t instance_hash(const Instance& instance) {
  return fnv1a64(serialize_instance(instance));
}

std::uint64_t schedule_hash(const Schedule& schedule) {
  return fnv1a64(serialize_schedule(schedule));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

}  // namespace sop
