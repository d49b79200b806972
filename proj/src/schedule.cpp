#include "sop/schedule.hpp"

#include <unordered_set>

namespace sop {

OrderId Tour::at_position(std::size_t position) const {
  if (position < 1 || position > visits.size()) {
    throw std::out_of_range("tour position " + std::to_string(position) + " out of range");
  }
  return visits[position - 1];
}

const Tour& Schedule::tour_of_vehicle(VehicleId vehicle) const {
  for (const Tour& t : tours) {
    if (t.vehicle == vehicle) return t;
  }
  throw std::out_of_range("unknown vehicle id " + std::to_string(vehicle));
}

Tour& Schedule::tour_of_vehicle(VehicleId vehicle) {
  for (Tour& t : tours) {
    if (t.vehicle == vehicle) return t;
  }
  throw std::out_of_range("unknown vehicle id " + std::to_string(vehicle));
}

const Location& Schedule::location_at(const Tour& tour, std::size_t position) const {
  if (position == 0 || position == tour.size() + 1) return depot;
  return orders.at(tour.at_position(position)).location;
}

void validate_schedule(const Schedule& schedule) {
  if (!schedule.travel) throw std::invalid_argument("schedule has no travel time provider");
  std::unordered_set<VehicleId> vehicles;
  std::unordered_set<OrderId> seen;
  for (const Tour& tour : schedule.tours) {
    if (!vehicles.insert(tour.vehicle).second) {
      throw std::invalid_argument("duplicate vehicle id " + std::to_string(tour.vehicle));
    }
    if (tour.shift_start >= tour.shift_end) {
      throw std::invalid_argument("tour shift must have start < end");
    }
    if (tour.capacity < 1) throw std::invalid_argument("tour capacity must be positive");
    for (OrderId id : tour.visits) {
      if (!schedule.orders.contains(id)) {
        throw std::invalid_argument("tour references unknown order " + std::to_string(id));
      }
      if (!seen.insert(id).second) {
        throw std::invalid_argument("order " + std::to_string(id) +
                                    " appears in more than one tour position");
      }
      validate_order(schedule.orders.at(id), schedule.windows);
    }
  }
  if (seen.size() != schedule.orders.size()) {
    throw std::invalid_argument("schedule holds orders that appear in no tour");
  }
}

Tour insert_at(const Tour& tour, std::size_t index, OrderId order) {
  if (index > tour.size()) {
    throw std::out_of_range("insertion index " + std::to_string(index) + " exceeds tour size " +
                            std::to_string(tour.size()));
  }
  Tour out = tour;
  out.visits.insert(out.visits.begin() + static_cast<std::ptrdiff_t>(index), order);
  return out;
}

Tour remove_at(const Tour& tour, std::size_t position) {
  if (position < 1 || position > tour.size()) {
    throw std::out_of_range("removal position " + std::to_string(position) + " out of range");
  }
  Tour out = tour;
  out.visits.erase(out.visits.begin() + static_cast<std::ptrdiff_t>(position - 1));
  return out;
}

}  // namespace sop
