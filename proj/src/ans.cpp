#include "sop/ans.hpp"

#include <algorithm>

namespace sop {

std::optional<RelocationResult> try_relocate(const Tour& source, std::size_t source_position,
                                             const Tour& target, const Schedule& schedule) {
  const OrderId id = source.at_position(source_position);
  const Order& order = schedule.orders.at(id);
  const TimeWindow& window = schedule.windows.by_id(order.window);

  if (tour_load(target, schedule) + order.weight > target.capacity) return std::nullopt;

  Tour new_source = remove_at(source, source_position);
  if (!is_tour_feasible(new_source, schedule)) return std::nullopt;

  const std::optional<std::size_t> index = simple_insert(target, order, window, schedule);
  if (!index) return std::nullopt;

  return RelocationResult{std::move(new_source), insert_at(target, *index, id), *index};
}

std::optional<ExchangeResult> try_exchange(const Tour& source, std::size_t source_position,
                                           const Tour& target, const Schedule& schedule) {
  const OrderId id = source.at_position(source_position);
  const Order& order = schedule.orders.at(id);
  const TimeWindow& window = schedule.windows.by_id(order.window);

  const Tour source_minus = remove_at(source, source_position);
  if (!is_tour_feasible(source_minus, schedule)) return std::nullopt;
  const ArrivalProfile source_minus_profile = compute_arrival_profile(source_minus, schedule);

  for (std::size_t p = 1; p <= target.size(); ++p) {
    const OrderId partner_id = target.at_position(p);
    const Order& partner = schedule.orders.at(partner_id);
    const TimeWindow& partner_window = schedule.windows.by_id(partner.window);

    if (source_minus_profile.load + partner.weight > source.capacity) continue;

    const std::optional<std::size_t> back_index =
        simple_insert(source_minus, source_minus_profile, partner, partner_window, schedule);
    if (!back_index) continue;

    Tour target_minus = remove_at(target, p);
    if (tour_load(target_minus, schedule) + order.weight > target.capacity) continue;
    if (!is_tour_feasible(target_minus, schedule)) continue;
    const std::optional<std::size_t> fwd_index =
        simple_insert(target_minus, order, window, schedule);
    if (!fwd_index) continue;

    ExchangeResult result;
    result.new_source = insert_at(source_minus, *back_index, partner_id);
    result.new_target = insert_at(target_minus, *fwd_index, id);
    result.move.kind = Move::Kind::exchange;
    result.move.order = id;
    result.move.source = source.vehicle;
    result.move.target = target.vehicle;
    result.move.source_position = source_position;
    result.move.target_index = *fwd_index;
    result.move.counterpart = partner_id;
    result.move.counterpart_position = p;
    result.move.counterpart_index = *back_index;
    return result;
  }
  return std::nullopt;
}

namespace {

// One candidate repair move with its committed tour states and the value of
// the stage objective it achieves.
struct ScoredMove {
  Move move;
  Tour new_source;
  Tour new_target;
  long long improvement = 0;
};

enum class Neighborhood { all, inside, outside };

class AnsRun {
 public:
  AnsRun(const Schedule& schedule, VehicleId vehicle, const Order& candidate,
         const TimeWindow& window, const AnsConfig& config)
      : working_(schedule),
        candidate_(candidate),
        window_(window),
        config_(config),
        vehicle_(vehicle) {
    std::size_t customers = 0;
    for (const Tour& t : working_.tours) customers += t.size();
    // Each stage objective is integral and strictly improves per committed
    // move, so this generous bound only trips if that invariant breaks.
    safety_cap_ = customers * std::max<std::size_t>(working_.tours.size(), 1) + 16;
  }

  std::optional<AnsOutcome> run() {
    const Tour& tour = working_.tour_of_vehicle(vehicle_);

    // 1) Capacity: shed visit weight until the candidate fits.
    improve(Neighborhood::all, Stage::weight);
    if (tour_load(tour, working_) + candidate_.weight > tour.capacity) return std::nullopt;

    // 2) Window load: free time inside the window until the rejection test
    //    no longer rules every insertion index out.
    improve(Neighborhood::inside, Stage::free_time);
    if (rejected(tour)) return std::nullopt;

    // 3) Boundary loss: push visits outside the window region away to widen
    //    the usable part of the window.
    improve(Neighborhood::outside, Stage::loss_time);

    // 4) Last resort: keep freeing window time until an index opens up.
    improve(Neighborhood::inside, Stage::free_time_until_insertable);
    const ArrivalProfile profile = compute_arrival_profile(tour, working_);
    const std::optional<std::size_t> position =
        simple_insert(tour, profile, candidate_, window_, working_);
    if (!position) return std::nullopt;

    AnsOutcome outcome;
    outcome.vehicle = vehicle_;
    outcome.position = *position;
    outcome.moves = std::move(moves_);

    Order booked = candidate_;
    booked.window = window_.id;
    working_.orders.add(booked);
    working_.tour_of_vehicle(vehicle_) = insert_at(tour, *position, booked.id);
    outcome.schedule = std::move(working_);
    return outcome;
  }

 private:
  enum class Stage { weight, free_time, loss_time, free_time_until_insertable };

  bool rejected(const Tour& tour) const {
    const ArrivalProfile profile = compute_arrival_profile(tour, working_);
    return infeasibility_condition(tour, profile, candidate_, window_, working_);
  }

  bool insertable(const Tour& tour) const {
    const ArrivalProfile profile = compute_arrival_profile(tour, working_);
    return any_time_feasible_insertion(tour, profile, candidate_, window_, working_);
  }

  Duration loss_time(const Tour& tour) const {
    const ArrivalProfile profile = compute_arrival_profile(tour, working_);
    const SlotMetrics metrics = slot_metrics(tour, profile, candidate_, window_, working_);
    return metrics.loss.value_or(0);
  }

  bool stage_done(Stage stage, const Tour& tour) const {
    switch (stage) {
      case Stage::weight:
        return tour_load(tour, working_) + candidate_.weight <= tour.capacity;
      case Stage::free_time:
        return !rejected(tour);
      case Stage::loss_time:
        return insertable(tour) || loss_time(tour) <= 0;
      case Stage::free_time_until_insertable:
        return insertable(tour);
    }
    return true;
  }

  long long objective(Stage stage, const Tour& tour) const {
    switch (stage) {
      case Stage::weight:
        return -static_cast<long long>(tour_load(tour, working_));
      case Stage::free_time:
      case Stage::free_time_until_insertable:
        return free_time(tour, window_, working_);
      case Stage::loss_time:
        return -loss_time(tour);
    }
    return 0;
  }

  // Positions eligible as move sources in the current stage.
  std::vector<std::size_t> neighborhood(Neighborhood kind, const Tour& tour) const {
    if (kind == Neighborhood::all) {
      std::vector<std::size_t> all(tour.size());
      for (std::size_t p = 1; p <= tour.size(); ++p) all[p - 1] = p;
      return all;
    }
    InsideOutside split = partition_inside_outside(tour, window_, working_);
    return kind == Neighborhood::inside ? std::move(split.inside) : std::move(split.outside);
  }

  std::vector<const Tour*> targets_in_order() const {
    std::vector<const Tour*> targets;
    for (const Tour& t : working_.tours) {
      if (t.vehicle != vehicle_) targets.push_back(&t);
    }
    std::sort(targets.begin(), targets.end(), [&](const Tour* a, const Tour* b) {
      if (config_.target_order == TargetTourOrder::by_load) {
        const Weight la = tour_load(*a, working_);
        const Weight lb = tour_load(*b, working_);
        if (la != lb) return la < lb;
      }
      return a->vehicle < b->vehicle;
    });
    return targets;
  }

  // Guards shared by stages 2-4: the reshaped tour must still leave room for
  // the candidate; stage 3 additionally may not re-trigger the rejection
  // test.
  bool acceptable(Stage stage, const Tour& reshaped) const {
    if (stage == Stage::weight) return true;
    if (tour_load(reshaped, working_) + candidate_.weight > reshaped.capacity) return false;
    if (stage == Stage::loss_time) {
      const ArrivalProfile profile = compute_arrival_profile(reshaped, working_);
      if (infeasibility_condition(reshaped, profile, candidate_, window_, working_)) return false;
    }
    return true;
  }

  // Best-improvement scan over the stage's neighborhood. Iteration order is
  // the tie-break: ascending source position, then target order, relocation
  // before exchange.
  std::optional<ScoredMove> scan(Neighborhood kind, Stage stage) {
    const Tour& tour = working_.tour_of_vehicle(vehicle_);
    const long long base = objective(stage, tour);
    std::optional<ScoredMove> best;

    for (std::size_t position : neighborhood(kind, tour)) {
      for (const Tour* target : targets_in_order()) {
        if (auto relocated = try_relocate(tour, position, *target, working_)) {
          if (acceptable(stage, relocated->new_source)) {
            const long long value = objective(stage, relocated->new_source);
            if (value > base && (!best || value > best->improvement)) {
              ScoredMove scored;
              scored.move.kind = Move::Kind::relocate;
              scored.move.order = tour.at_position(position);
              scored.move.source = vehicle_;
              scored.move.target = target->vehicle;
              scored.move.source_position = position;
              scored.move.target_index = relocated->target_index;
              scored.new_source = std::move(relocated->new_source);
              scored.new_target = std::move(relocated->new_target);
              scored.improvement = value;
              best = std::move(scored);
            }
          }
        }
        if (config_.enable_swap) {
          if (auto exchanged = try_exchange(tour, position, *target, working_)) {
            if (acceptable(stage, exchanged->new_source)) {
              const long long value = objective(stage, exchanged->new_source);
              if (value > base && (!best || value > best->improvement)) {
                ScoredMove scored;
                scored.move = exchanged->move;
                scored.new_source = std::move(exchanged->new_source);
                scored.new_target = std::move(exchanged->new_target);
                scored.improvement = value;
                best = std::move(scored);
              }
            }
          }
        }
      }
    }
    return best;
  }

  void improve(Neighborhood kind, Stage stage) {
    std::size_t committed = 0;
    while (!stage_done(stage, working_.tour_of_vehicle(vehicle_))) {
      if (config_.max_moves_per_step != 0 && committed >= config_.max_moves_per_step) return;
      std::optional<ScoredMove> best = scan(kind, stage);
      if (!best) return;  // local optimum for this stage
      commit(*best);
      ++committed;
      if (committed > safety_cap_) {
        throw std::logic_error("repair stage exceeded its move bound; objective not improving");
      }
    }
  }

  void commit(ScoredMove& scored) {
    working_.tour_of_vehicle(scored.move.source) = std::move(scored.new_source);
    working_.tour_of_vehicle(scored.move.target) = std::move(scored.new_target);
    moves_.push_back(scored.move);
    if (config_.validate_each_move && !is_schedule_feasible(working_)) {
      throw std::logic_error("committed repair move broke schedule feasibility");
    }
  }

  Schedule working_;
  const Order& candidate_;
  const TimeWindow& window_;
  AnsConfig config_;
  VehicleId vehicle_;
  std::vector<Move> moves_;
  std::size_t safety_cap_ = 0;
};

}  // namespace

std::optional<AnsOutcome> ans_insert(const Schedule& schedule, VehicleId vehicle,
                                     const Order& candidate, WindowId window,
                                     const AnsConfig& config) {
  const TimeWindow& w = schedule.windows.by_id(window);
  AnsRun run(schedule, vehicle, candidate, w, config);
  return run.run();
}

SlotResult solve_ans(const SlotQuery& query, const AnsConfig& config) {
  validate_query(query);
  const Schedule& schedule = query.schedule;

  SlotResult result;
  result.method = Method::ans;
  for (WindowId id : query.window_ids()) {
    const auto started = std::chrono::steady_clock::now();
    WindowVerdict verdict;
    verdict.window = id;
    verdict.method = Method::ans;
    for (const Tour& tour : schedule.tours) {
      // Every attempt starts from the caller's snapshot: edits made while
      // probing one window can never leak into another.
      std::optional<AnsOutcome> outcome =
          ans_insert(schedule, tour.vehicle, query.candidate, id, config);
      if (outcome) {
        verdict.feasible = true;
        verdict.status = VerdictStatus::feasible;
        verdict.vehicle = outcome->vehicle;
        verdict.position = outcome->position;
        verdict.moves = std::move(outcome->moves);
        break;
      }
    }
    verdict.elapsed = std::chrono::steady_clock::now() - started;
    result.verdicts.push_back(std::move(verdict));
  }
  return result;
}

}  // namespace sop
