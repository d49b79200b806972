#pragma once

#include <memory>
#include <vector>

#include "sop/travel.hpp"
#include "sop/types.hpp"

namespace sop {

// One vehicle's visit sequence. Positions follow the usual tour indexing:
// position 0 is the departure from the depot, customers occupy positions
// 1..n, and position n+1 is the return to the depot. The two depot anchors
// are implicit and can never be moved or removed.
struct Tour {
  VehicleId vehicle = 0;
  TimeInstant shift_start = 0;
  TimeInstant shift_end = 0;
  Weight capacity = 0;
  std::vector<OrderId> visits;  // customer at position p is visits[p - 1]

  std::size_t size() const { return visits.size(); }
  bool empty() const { return visits.empty(); }

  OrderId at_position(std::size_t position) const;

  friend bool operator==(const Tour&, const Tour&) = default;
};

// Immutable snapshot of the delivery plan. Copies are cheap enough that all
// what-if evaluation works on private copies; nothing in the library mutates
// a schedule it did not create.
struct Schedule {
  std::vector<Tour> tours;
  OrderMap orders;
  WindowSet windows;
  Location depot;
  std::shared_ptr<const TravelTimeProvider> travel;

  const Tour& tour_of_vehicle(VehicleId vehicle) const;
  Tour& tour_of_vehicle(VehicleId vehicle);

  // Location of the visit at `position` in `tour` (depot for the anchors).
  const Location& location_at(const Tour& tour, std::size_t position) const;

  Duration travel_between(const Location& from, const Location& to) const {
    return travel->travel(from, to);
  }
};

// Structural validation: unique vehicle ids, sane shifts, every visit id
// known and appearing in exactly one tour, every order window defined.
// Throws std::invalid_argument on violation.
void validate_schedule(const Schedule& schedule);

// Returns a copy of `tour` with `order` spliced in directly after position
// `index` (index 0 inserts right after the departure depot). index must lie
// in [0, n].
Tour insert_at(const Tour& tour, std::size_t index, OrderId order);

// Returns a copy of `tour` with the visit at `position` removed.
// position must lie in [1, n].
Tour remove_at(const Tour& tour, std::size_t position);

}  // namespace sop
