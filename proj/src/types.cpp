#include "sop/types.hpp"

#include <algorithm>

namespace sop {

WindowSet::WindowSet(std::vector<TimeWindow> windows) : windows_(std::move(windows)) {
  for (std::size_t i = 0; i < windows_.size(); ++i) {
    const TimeWindow& w = windows_[i];
    if (w.start >= w.end) {
      throw std::invalid_argument("window " + std::to_string(w.id) + " has start >= end");
    }
    for (std::size_t j = i + 1; j < windows_.size(); ++j) {
      const TimeWindow& v = windows_[j];
      if (w.id == v.id) {
        throw std::invalid_argument("duplicate window id " + std::to_string(w.id));
      }
      if (w.start == v.start && w.end == v.end) {
        throw std::invalid_argument("duplicate window bounds for ids " + std::to_string(w.id) +
                                    " and " + std::to_string(v.id));
      }
      if (windows_overlap(w, v)) overlapping_ = true;
    }
  }
}

bool WindowSet::contains(WindowId id) const {
  for (const TimeWindow& w : windows_) {
    if (w.id == id) return true;
  }
  return false;
}

const TimeWindow& WindowSet::by_id(WindowId id) const {
  for (const TimeWindow& w : windows_) {
    if (w.id == id) return w;
  }
  throw std::out_of_range("unknown window id " + std::to_string(id));
}

void validate_order(const Order& order, const WindowSet& windows) {
  if (order.id < 0) throw std::invalid_argument("order id must be non-negative");
  if (order.weight < 1) throw std::invalid_argument("order weight must be >= 1");
  if (order.service <= 0) throw std::invalid_argument("order service time must be > 0");
  if (!windows.contains(order.window)) {
    throw std::invalid_argument("order " + std::to_string(order.id) +
                                " references unknown window " + std::to_string(order.window));
  }
}

const Order& OrderMap::at(OrderId id) const {
  auto it = orders_.find(id);
  if (it == orders_.end()) {
    throw std::out_of_range("unknown order id " + std::to_string(id));
  }
  return it->second;
}

void OrderMap::add(Order order) {
  if (orders_.count(order.id) != 0) {
    throw std::invalid_argument("duplicate order id " + std::to_string(order.id));
  }
  orders_.emplace(order.id, std::move(order));
}

std::vector<OrderId> OrderMap::sorted_ids() const {
  std::vector<OrderId> ids;
  ids.reserve(orders_.size());
  for (const auto& [id, order] : orders_) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace sop
