#pragma once

#include <string>
#include <string_view>

#include "sop/booking.hpp"

namespace sop {

// Malformed or inconsistent input files.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Versioned, line-oriented text formats with explicit integer units. Doubles
// are printed with 17 significant digits so every file round-trips exactly.
std::string serialize_instance(const Instance& instance);
Instance parse_instance(const std::string& text);

// Self-contained: windows, orders, tours, and either the euclidean travel
// directive or an explicit matrix (node order: depot, then orders by id;
// requires pairwise distinct locations).
std::string serialize_schedule(const Schedule& schedule);
Schedule parse_schedule(const std::string& text);

// Event log only; the instance travels separately and is bound at parse
// time, guarded by a content hash.
std::string serialize_trajectory(const FillTrajectory& trajectory);
FillTrajectory parse_trajectory(const std::string& text,
                                std::shared_ptr<const Instance> instance);

std::uint64_t fnv1a64(std::string_view data);
std::uint64_t instance_hash(const Instance& instance);
std::uint64_t schedule_hash(const Schedule& schedule);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace sop
