#include <doctest.h>

#include "sop/core.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace sop;
using namespace soptest;

namespace {

// World for the single-customer profile examples: one window 08:00-09:00,
// 600 s legs everywhere, service 300 s. The matrix carries a spare node so
// tests can aim an extra candidate (id 1) at the same world.
Schedule one_order_world() {
  Schedule schedule;
  schedule.windows = WindowSet({{1, 28800, 32400}});
  schedule.depot = depot_node();
  schedule.travel = uniform_travel(2, 600);
  Tour tour;
  tour.vehicle = 0;
  tour.shift_start = 28800;
  tour.shift_end = 36000;
  tour.capacity = 10;
  tour.visits = {0};
  schedule.tours.push_back(tour);
  schedule.orders.add(make_order(0, 5, 300, 1));
  return schedule;
}

}  // namespace

TEST_CASE("arrival profile of an empty tour pins both anchors to the shift") {
  Schedule schedule = one_order_world();
  Tour empty = schedule.tours[0];
  empty.visits.clear();
  const ArrivalProfile profile = compute_arrival_profile(empty, schedule);
  CHECK(profile.earliest == std::vector<TimeInstant>{28800, 28800});
  CHECK(profile.latest == std::vector<TimeInstant>{36000, 36000});
  CHECK(profile.load == 0);
}

TEST_CASE("arrival profile of a one-order tour matches the recursion") {
  const Schedule schedule = one_order_world();
  const Tour& tour = schedule.tours[0];
  const ArrivalProfile profile = compute_arrival_profile(tour, schedule);
  CHECK(profile.earliest == std::vector<TimeInstant>{28800, 29400, 30300});
  CHECK(profile.latest == std::vector<TimeInstant>{31800, 32400, 36000});
  CHECK(profile.load == 5);
  for (std::size_t j = 0; j <= tour.size() + 1; ++j) {
    CHECK(profile.earliest[j] == oracle::alpha(tour, schedule, j));
    CHECK(profile.latest[j] == oracle::beta(tour, schedule, j));
  }
}

TEST_CASE("profile computation is total even when the tour is infeasible") {
  Schedule schedule = one_order_world();
  schedule.tours[0].shift_start = 33000;  // reaches the customer after 09:00
  const ArrivalProfile profile = compute_arrival_profile(schedule.tours[0], schedule);
  CHECK(profile.earliest[1] == 33600);
  CHECK(profile.earliest[1] > profile.latest[1]);
  CHECK_FALSE(is_tour_feasible(schedule.tours[0], schedule));
}

TEST_CASE("tour feasibility covers time windows, shift end, and capacity") {
  Schedule schedule = one_order_world();
  SUBCASE("empty tour is feasible") {
    Tour empty = schedule.tours[0];
    empty.visits.clear();
    CHECK(is_tour_feasible(empty, schedule));
  }
  SUBCASE("the one-order example is feasible") {
    CHECK(is_tour_feasible(schedule.tours[0], schedule));
  }
  SUBCASE("capacity below the order weight fails") {
    schedule.tours[0].capacity = 4;
    CHECK_FALSE(is_tour_feasible(schedule.tours[0], schedule));
  }
}

TEST_CASE("schedule feasibility is the conjunction over tours") {
  Schedule schedule = one_order_world();
  Tour second = schedule.tours[0];
  second.vehicle = 1;
  second.visits.clear();
  schedule.tours.push_back(second);
  CHECK(is_schedule_feasible(schedule));
  schedule.tours[0].shift_start = 33000;
  CHECK_FALSE(is_schedule_feasible(schedule));
}

TEST_CASE("insert_at splices by index and never mutates its input") {
  Tour tour;
  tour.visits = {10, 20};
  SUBCASE("into the middle") {
    const Tour out = insert_at(tour, 1, 15);
    CHECK(out.visits == std::vector<OrderId>{10, 15, 20});
    CHECK(tour.visits == std::vector<OrderId>{10, 20});
  }
  SUBCASE("at the tail") {
    CHECK(insert_at(tour, 2, 30).visits == std::vector<OrderId>{10, 20, 30});
  }
  SUBCASE("into an empty tour") {
    tour.visits.clear();
    CHECK(insert_at(tour, 0, 7).visits == std::vector<OrderId>{7});
  }
  SUBCASE("out of range throws") {
    CHECK_THROWS_AS((void)insert_at(tour, 3, 30), std::out_of_range);
  }
}

TEST_CASE("insertion range on an empty tour is [0, 0]") {
  Schedule schedule = one_order_world();
  Tour empty = schedule.tours[0];
  empty.visits.clear();
  const Order candidate = make_order(1, 1, 300, 1);
  const ArrivalProfile profile = compute_arrival_profile(empty, schedule);
  const InsertionRange range =
      insertion_range(empty, profile, candidate, schedule.windows.by_id(1), schedule);
  CHECK(range == InsertionRange{0, 0});
}

TEST_CASE("insertion range is empty when both defining sets are empty") {
  // Shift starts after the trial window closes, and the latest arrivals sit
  // below the window start plus the candidate's service everywhere.
  Schedule schedule;
  schedule.windows = WindowSet({{1, 1000, 1100}, {2, 1250, 1350}});
  schedule.depot = depot_node();
  schedule.travel = uniform_travel(2, 0);
  Tour tour;
  tour.vehicle = 0;
  tour.shift_start = 1200;
  tour.shift_end = 1400;
  tour.capacity = 50;
  tour.visits = {0};
  schedule.tours.push_back(tour);
  schedule.orders.add(make_order(0, 1, 100, 2));
  REQUIRE(is_tour_feasible(tour, schedule));

  const Order candidate = make_order(1, 1, 500, 1);
  const ArrivalProfile profile = compute_arrival_profile(tour, schedule);
  const InsertionRange range =
      insertion_range(tour, profile, candidate, schedule.windows.by_id(1), schedule);
  CHECK(range.empty());
  CHECK(oracle::theta(tour, candidate, schedule.windows.by_id(1), schedule).empty());
}

TEST_CASE("insertion range brackets the middle customer's window") {
  // Three customers in consecutive hourly windows, uniform 600 s legs,
  // candidate aimed at the middle window.
  Schedule schedule;
  schedule.windows = consecutive_windows(28800, 3, 3600);
  schedule.depot = depot_node();
  schedule.travel = uniform_travel(4, 600);
  Tour tour;
  tour.vehicle = 0;
  tour.shift_start = 27000;
  tour.shift_end = 43200;
  tour.capacity = 100;
  tour.visits = {0, 1, 2};
  schedule.tours.push_back(tour);
  for (OrderId id = 0; id < 3; ++id) {
    schedule.orders.add(make_order(id, 1, 300, id + 1));
  }
  REQUIRE(is_tour_feasible(tour, schedule));

  const Order candidate = make_order(3, 1, 300, 2);
  const TimeWindow& middle = schedule.windows.by_id(2);
  const ArrivalProfile profile = compute_arrival_profile(tour, schedule);
  const InsertionRange range = insertion_range(tour, profile, candidate, middle, schedule);
  CHECK(range == InsertionRange{1, 2});
  CHECK(range == oracle::theta(tour, candidate, middle, schedule));
}

TEST_CASE("single-position check handles the trivial cases") {
  Schedule schedule = one_order_world();
  Tour empty = schedule.tours[0];
  empty.visits.clear();
  const ArrivalProfile profile = compute_arrival_profile(empty, schedule);
  const TimeWindow& window = schedule.windows.by_id(1);

  Order candidate = make_order(1, 1, 300, 1);
  CHECK(check_insertion_feasible(empty, profile, 0, candidate, window, schedule));

  candidate.weight = 11;  // over the tour capacity of 10
  CHECK_FALSE(check_insertion_feasible(empty, profile, 0, candidate, window, schedule));
}

TEST_CASE("single-position check equals full recomputation on random worlds") {
  // The central consistency property, exercised on asymmetric
  // triangle-violating travel. The acceptance suite runs this at full scale.
  Rng rng(20240811);
  int checked = 0;
  for (int round = 0; round < 300; ++round) {
    RandomWorldParams params;
    params.order_attempts = static_cast<int>(rng.uniform_int(0, 12));
    params.overlapping = round % 3 == 0;
    const Schedule schedule = random_schedule(rng, params);
    const Order candidate = random_candidate(rng, params);
    for (const Tour& tour : schedule.tours) {
      const ArrivalProfile profile = compute_arrival_profile(tour, schedule);
      for (const TimeWindow& window : schedule.windows) {
        for (std::size_t i = 0; i <= tour.size(); ++i) {
          const bool fast = check_insertion_feasible(tour, profile, i, candidate, window, schedule);
          const bool slow = oracle::insertion_feasible(tour, i, candidate, window, schedule);
          CHECK(fast == slow);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("feasible insertion indices always lie within the insertion range") {
  Rng rng(777);
  for (int round = 0; round < 200; ++round) {
    RandomWorldParams params;
    params.order_attempts = static_cast<int>(rng.uniform_int(1, 10));
    params.overlapping = round % 2 == 0;
    const Schedule schedule = random_schedule(rng, params);
    const Order candidate = random_candidate(rng, params);
    for (const Tour& tour : schedule.tours) {
      const ArrivalProfile profile = compute_arrival_profile(tour, schedule);
      for (const TimeWindow& window : schedule.windows) {
        const InsertionRange range = insertion_range(tour, profile, candidate, window, schedule);
        for (std::size_t i = 0; i <= tour.size(); ++i) {
          if (check_insertion_feasible(tour, profile, i, candidate, window, schedule)) {
            REQUIRE_FALSE(range.empty());
            CHECK(range.lo <= i);
            CHECK(i <= range.hi);
          }
        }
      }
    }
  }
}

TEST_CASE("insertion leaves the prefix of earliest and suffix of latest intact") {
  Rng rng(4242);
  for (int round = 0; round < 150; ++round) {
    RandomWorldParams params;
    params.order_attempts = static_cast<int>(rng.uniform_int(1, 10));
    Schedule schedule = random_schedule(rng, params);
    Order candidate = random_candidate(rng, params);
    const Tour& tour = schedule.tours[0];
    const std::size_t index =
        static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(tour.size())));
    candidate.window =
        schedule.windows.windows()[static_cast<std::size_t>(
                                       rng.uniform_int(0, params.n_windows - 1))]
            .id;

    const ArrivalProfile before = compute_arrival_profile(tour, schedule);
    Schedule grown = schedule;
    grown.orders.add(candidate);
    const Tour inserted = insert_at(tour, index, candidate.id);
    const ArrivalProfile after = compute_arrival_profile(inserted, grown);

    for (std::size_t p = 0; p <= index; ++p) {
      CHECK(after.earliest[p] == before.earliest[p]);
    }
    // Old position p >= index + 1 shifts to p + 1 in the grown tour.
    for (std::size_t p = index + 1; p <= tour.size() + 1; ++p) {
      CHECK(after.latest[p + 1] == before.latest[p]);
    }
  }
}

TEST_CASE("travel providers reject malformed matrices and keep zero diagonals") {
  CHECK_THROWS_AS(MatrixTravel({{0, 0}, {1, 0}}, {{0, 5}, {5, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(MatrixTravel({{0, 0}, {0, 0}}, {{0, 5}, {5, 0}}), std::invalid_argument);
  const EuclideanTravel travel(1.5, 20000.0 / 3600.0);
  CHECK(travel.travel({100, 200}, {100, 200}) == 0);
}

TEST_CASE("triangle-violating asymmetric legs flow through verbatim") {
  const auto travel = matrix_travel({
      {0, 50, 1, 9},
      {7, 0, 30, 9},
      {1, 1, 0, 9},
      {9, 9, 9, 0},
  });
  CHECK(travel->travel(depot_node(), order_node(0)) == 50);
  CHECK(travel->travel(order_node(0), depot_node()) == 7);
  CHECK(travel->travel(depot_node(), order_node(1)) +
            travel->travel(order_node(1), order_node(0)) <
        travel->travel(depot_node(), order_node(0)));
}
