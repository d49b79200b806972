#include "sop/travel.hpp"

#include <cmath>

namespace sop {

namespace {

std::uint64_t location_key(const Location& loc) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(loc.x)) << 32) |
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(loc.y));
}

}  // namespace

EuclideanTravel::EuclideanTravel(double correction, double speed_m_per_s)
    : correction_(correction), speed_(speed_m_per_s) {
  if (correction <= 0.0 || speed_m_per_s <= 0.0) {
    throw std::invalid_argument("correction factor and speed must be positive");
  }
}

Duration EuclideanTravel::travel(const Location& from, const Location& to) const {
  const double dx = static_cast<double>(from.x) - static_cast<double>(to.x);
  const double dy = static_cast<double>(from.y) - static_cast<double>(to.y);
  const double meters = std::sqrt(dx * dx + dy * dy);
  return static_cast<Duration>(std::llround(correction_ * meters / speed_));
}

MatrixTravel::MatrixTravel(std::vector<Location> nodes,
                           std::vector<std::vector<Duration>> matrix)
    : nodes_(std::move(nodes)), matrix_(std::move(matrix)) {
  const std::size_t n = nodes_.size();
  if (matrix_.size() != n) throw std::invalid_argument("travel matrix row count mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix_[i].size() != n) throw std::invalid_argument("travel matrix column count mismatch");
    if (matrix_[i][i] != 0) throw std::invalid_argument("travel matrix diagonal must be zero");
    for (Duration d : matrix_[i]) {
      if (d < 0) throw std::invalid_argument("travel times must be non-negative");
    }
    auto [it, inserted] = index_.emplace(location_key(nodes_[i]), i);
    if (!inserted) {
      throw std::invalid_argument("matrix travel requires pairwise distinct node locations");
    }
  }
}

std::size_t MatrixTravel::index_of(const Location& loc) const {
  auto it = index_.find(location_key(loc));
  if (it == index_.end()) {
    throw std::out_of_range("location (" + std::to_string(loc.x) + ", " + std::to_string(loc.y) +
                            ") is not a node of the travel matrix");
  }
  return it->second;
}

Duration MatrixTravel::travel(const Location& from, const Location& to) const {
  const std::size_t i = index_of(from);
  const std::size_t j = index_of(to);
  if (i == j) return 0;
  return matrix_[i][j];
}

}  // namespace sop
