#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "sop/types.hpp"

namespace sop {

// Travel times between locations (customers and depot). Implementations may
// be asymmetric and may violate the triangle inequality; the only guarantees
// consumers may rely on are t >= 0 and t(a, a) = 0.
class TravelTimeProvider {
 public:
  virtual ~TravelTimeProvider() = default;
  virtual Duration travel(const Location& from, const Location& to) const = 0;
};

// Straight-line distances scaled by a road-network correction factor and a
// constant vehicle speed, rounded to whole seconds. Symmetric by nature, but
// callers must not depend on that.
class EuclideanTravel final : public TravelTimeProvider {
 public:
  EuclideanTravel(double correction, double speed_m_per_s);

  Duration travel(const Location& from, const Location& to) const override;

  double correction() const { return correction_; }
  double speed_m_per_s() const { return speed_; }

 private:
  double correction_;
  double speed_;
};

// Explicit dense matrix keyed by location. Every node of the instance must
// have a distinct location; the diagonal must be zero.
class MatrixTravel final : public TravelTimeProvider {
 public:
  MatrixTravel(std::vector<Location> nodes, std::vector<std::vector<Duration>> matrix);

  Duration travel(const Location& from, const Location& to) const override;

  const std::vector<Location>& nodes() const { return nodes_; }
  const std::vector<std::vector<Duration>>& matrix() const { return matrix_; }

 private:
  std::size_t index_of(const Location& loc) const;

  std::vector<Location> nodes_;
  std::vector<std::vector<Duration>> matrix_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace sop
