#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sop {

// All clock values are integer seconds since midnight of the delivery day;
// durations are non-negative integer seconds. Travel times are rounded to
// whole seconds, so every quantity derived from them is exact.
using TimeInstant = std::int64_t;
using Duration = std::int64_t;

using OrderId = std::int32_t;
using VehicleId = std::int32_t;
using WindowId = std::int32_t;
using Weight = std::int32_t;

inline constexpr OrderId kNoOrder = -1;

// Integer meters on the delivery grid.
struct Location {
  std::int32_t x = 0;
  std::int32_t y = 0;

  friend bool operator==(const Location&, const Location&) = default;
};

struct TimeWindow {
  WindowId id = 0;
  TimeInstant start = 0;
  TimeInstant end = 0;

  Duration length() const { return end - start; }

  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

inline bool windows_overlap(const TimeWindow& a, const TimeWindow& b) {
  return a.start < b.end && b.start < a.end;
}

// True when `inner` lies entirely within `outer` (boundaries included).
inline bool window_within(const TimeWindow& inner, const TimeWindow& outer) {
  return outer.start <= inner.start && inner.end <= outer.end;
}

// Ordered collection of delivery windows. Construction rejects degenerate
// windows and duplicate (start, end) pairs; the overlap flag is derived once.
class WindowSet {
 public:
  WindowSet() = default;
  explicit WindowSet(std::vector<TimeWindow> windows);

  const std::vector<TimeWindow>& windows() const { return windows_; }
  std::size_t size() const { return windows_.size(); }
  bool empty() const { return windows_.empty(); }
  bool overlapping() const { return overlapping_; }

  bool contains(WindowId id) const;
  const TimeWindow& by_id(WindowId id) const;

  auto begin() const { return windows_.begin(); }
  auto end() const { return windows_.end(); }

  friend bool operator==(const WindowSet&, const WindowSet&) = default;

 private:
  std::vector<TimeWindow> windows_;
  bool overlapping_ = false;
};

struct Order {
  OrderId id = kNoOrder;
  Location location;
  Weight weight = 1;        // positive demand units
  Duration service = 1;     // on-site service time, > 0
  WindowId window = 0;      // assigned delivery window

  friend bool operator==(const Order&, const Order&) = default;
};

// Throws std::invalid_argument unless the order satisfies the basic field
// invariants against the given window set.
void validate_order(const Order& order, const WindowSet& windows);

// Id-keyed order storage. Lookup of an unknown id is a structural error.
class OrderMap {
 public:
  bool contains(OrderId id) const { return orders_.count(id) != 0; }
  const Order& at(OrderId id) const;

  void add(Order order);
  std::size_t size() const { return orders_.size(); }

  // Ids in ascending order; the canonical iteration order for serialization.
  std::vector<OrderId> sorted_ids() const;

  friend bool operator==(const OrderMap&, const OrderMap&) = default;

 private:
  std::unordered_map<OrderId, Order> orders_;
};

}  // namespace sop
