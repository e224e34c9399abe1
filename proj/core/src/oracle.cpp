#include "tassp/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "tassp/approx.hpp"
#include "tassp/bounds.hpp"

namespace tassp {
namespace {

using Clock = std::chrono::steady_clock;

enum class RobotPhase : std::uint8_t { Traveling, Waiting, Processing, Done };

// Snapshot of the simulation between dispatch decisions. Small enough to
// copy per branch at oracle scale.
struct SimState {
  double time = 0.0;
  int free_ops = 0;
  std::vector<RobotPhase> phase;
  std::vector<int> pos;       // tasks completed per robot
  std::vector<double> rtime;  // arrival / completion / depot-return instant
  std::vector<double> tst;    // task start per target vertex - 1
};

class Search {
 public:
  Search(const Instance& instance, const OracleLimits& limits)
      : instance_(instance), metric_(instance.metric()), limits_(limits) {}

  ExactResult run() {
    const int n = instance_.num_targets();
    deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(limits_.max_seconds));

    const ApproxSolution start = approx(instance_);
    best_cost_ = start.cost();
    best_routes_ = start.best().routes;
    best_tst_ = start.best().timeline.task_start;

    const double l_max = lower_bounds(instance_).l_max;
    if (best_cost_ <= l_max) {
      aborted_ = false;
      return finish();
    }

    unused_.assign(static_cast<std::size_t>(n) + 1, true);
    unused_[0] = false;
    unused_count_ = n;
    route_bound_max_ = 0.0;
    enumerate_routes(0, 0);
    return finish();
  }

 private:
  ExactResult finish() {
    ExactResult result;
    result.opt_cost = best_cost_;
    result.routes = best_routes_;
    result.routes.routes.resize(static_cast<std::size_t>(instance_.k()));
    result.timeline = timeline_from_starts(instance_, result.routes, best_tst_);
    result.nodes_explored = nodes_;
    result.proven = !aborted_;
    return result;
  }

  bool budget_exhausted() {
    if (aborted_) return true;
    ++nodes_;
    if (nodes_ > limits_.max_nodes) aborted_ = true;
    if ((nodes_ & 0xFFF) == 0 && Clock::now() > deadline_) aborted_ = true;
    return aborted_;
  }

  // Builds nonempty routes with strictly increasing first targets; every
  // multiset of routes is reached exactly once. route_bound_max_ carries the
  // best-case mission time (travel + own processing) of finished routes.
  void enumerate_routes(int route_index, int prev_leader) {
    if (budget_exhausted()) return;
    if (unused_count_ == 0) {
      evaluate_route_set();
      return;
    }
    if (route_index == instance_.k()) return;
    for (int leader = prev_leader + 1; leader <= instance_.num_targets(); ++leader) {
      if (!unused_[static_cast<std::size_t>(leader)]) continue;
      routes_.push_back({leader});
      unused_[static_cast<std::size_t>(leader)] = false;
      --unused_count_;
      extend_route(route_index, leader, metric_.cost(0, leader),
                   instance_.processing(leader));
      unused_[static_cast<std::size_t>(leader)] = true;
      ++unused_count_;
      routes_.pop_back();
    }
  }

  void extend_route(int route_index, int leader, double path_cost, double proc_sum) {
    if (budget_exhausted()) return;
    const int last = routes_.back().back();
    const double bound = path_cost + metric_.cost(last, 0) + proc_sum;
    if (bound >= best_cost_) return;  // no completion of this route can win

    const double saved_max = route_bound_max_;
    route_bound_max_ = std::max(route_bound_max_, bound);
    enumerate_routes(route_index + 1, leader);
    route_bound_max_ = saved_max;

    for (int next = 1; next <= instance_.num_targets(); ++next) {
      if (!unused_[static_cast<std::size_t>(next)]) continue;
      routes_.back().push_back(next);
      unused_[static_cast<std::size_t>(next)] = false;
      --unused_count_;
      extend_route(route_index, leader, path_cost + metric_.cost(last, next),
                   proc_sum + instance_.processing(next));
      unused_[static_cast<std::size_t>(next)] = true;
      ++unused_count_;
      routes_.back().pop_back();
    }
  }

  void evaluate_route_set() {
    if (route_bound_max_ >= best_cost_) return;
    prepare_route_tables();
    SimState state;
    state.free_ops = instance_.m();
    const int r = static_cast<int>(routes_.size());
    state.phase.assign(static_cast<std::size_t>(r), RobotPhase::Traveling);
    state.pos.assign(static_cast<std::size_t>(r), 0);
    state.rtime.assign(static_cast<std::size_t>(r), 0.0);
    state.tst.assign(static_cast<std::size_t>(instance_.num_targets()), 0.0);
    for (int i = 0; i < r; ++i)
      state.rtime[static_cast<std::size_t>(i)] = metric_.cost(0, routes_[static_cast<std::size_t>(i)][0]);
    dfs(state, 0);
  }

  void prepare_route_tables() {
    suffix_travel_.assign(routes_.size(), {});
    suffix_proc_.assign(routes_.size(), {});
    for (std::size_t r = 0; r < routes_.size(); ++r) {
      const auto& route = routes_[r];
      auto& travel = suffix_travel_[r];
      auto& proc = suffix_proc_[r];
      travel.assign(route.size() + 1, 0.0);
      proc.assign(route.size() + 1, 0.0);
      travel[route.size() - 1] = metric_.cost(route.back(), 0);
      proc[route.size() - 1] = instance_.processing(route.back());
      for (std::size_t i = route.size() - 1; i-- > 0;) {
        travel[i] = metric_.cost(route[i], route[i + 1]) + travel[i + 1];
        proc[i] = instance_.processing(route[i]) + proc[i + 1];
      }
    }
  }

  // Advances deterministic events (task completions first, then arrivals at
  // equal instants) until a dispatch decision is pending or everything is
  // done. Returns true when all robots are done.
  bool advance(SimState& s) const {
    for (;;) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t r = 0; r < routes_.size(); ++r) {
          if (s.phase[r] == RobotPhase::Processing && s.rtime[r] <= s.time) {
            ++s.pos[r];
            ++s.free_ops;
            const auto& route = routes_[r];
            const int at = route[static_cast<std::size_t>(s.pos[r]) - 1];
            if (s.pos[r] == static_cast<int>(route.size())) {
              s.phase[r] = RobotPhase::Done;
              s.rtime[r] = s.time + metric_.cost(at, 0);
            } else {
              s.phase[r] = RobotPhase::Traveling;
              s.rtime[r] = s.time + metric_.cost(at, route[static_cast<std::size_t>(s.pos[r])]);
            }
            changed = true;
          }
        }
        for (std::size_t r = 0; r < routes_.size(); ++r) {
          if (s.phase[r] == RobotPhase::Traveling && s.rtime[r] <= s.time) {
            s.phase[r] = RobotPhase::Waiting;
            changed = true;
          }
        }
      }
      if (s.free_ops > 0) {
        for (std::size_t r = 0; r < routes_.size(); ++r)
          if (s.phase[r] == RobotPhase::Waiting) return false;
      }
      double next = std::numeric_limits<double>::infinity();
      bool all_done = true;
      for (std::size_t r = 0; r < routes_.size(); ++r) {
        if (s.phase[r] == RobotPhase::Done) continue;
        all_done = false;
        if (s.phase[r] != RobotPhase::Waiting) next = std::min(next, s.rtime[r]);
      }
      if (all_done) return true;
      if (next == std::numeric_limits<double>::infinity()) return false;  // starved
      s.time = next;
    }
  }

  double lower_bound(const SimState& s) const {
    double lb = 0.0;
    double unstarted_p = 0.0;
    for (std::size_t r = 0; r < routes_.size(); ++r) {
      double rb = 0.0;
      const auto pos = static_cast<std::size_t>(s.pos[r]);
      switch (s.phase[r]) {
        case RobotPhase::Done:
          rb = s.rtime[r];
          break;
        case RobotPhase::Processing:
          rb = s.rtime[r] + suffix_travel_[r][pos] + suffix_proc_[r][pos + 1];
          unstarted_p += suffix_proc_[r][pos + 1];
          break;
        case RobotPhase::Waiting:
          rb = s.time + suffix_proc_[r][pos] + suffix_travel_[r][pos];
          unstarted_p += suffix_proc_[r][pos];
          break;
        case RobotPhase::Traveling:
          rb = s.rtime[r] + suffix_proc_[r][pos] + suffix_travel_[r][pos];
          unstarted_p += suffix_proc_[r][pos];
          break;
      }
      lb = std::max(lb, rb);
    }
    lb = std::max(lb, s.time + unstarted_p / instance_.m());
    return lb;
  }

  // min_robot dedups permutations of simultaneous dispatches: within one
  // timestamp, robots are served in increasing index order.
  void dfs(SimState s, int min_robot) {
    if (budget_exhausted()) return;
    const double before = s.time;
    const bool done = advance(s);
    if (s.time != before) min_robot = 0;
    if (done) {
      double makespan = 0.0;
      for (std::size_t r = 0; r < routes_.size(); ++r)
        makespan = std::max(makespan, s.rtime[r]);
      if (makespan < best_cost_) {
        best_cost_ = makespan;
        best_routes_.routes = routes_;
        best_tst_ = s.tst;
      }
      return;
    }
    if (lower_bound(s) >= best_cost_) return;

    bool has_pending_event = false;
    for (std::size_t r = 0; r < routes_.size(); ++r)
      if (s.phase[r] == RobotPhase::Traveling || s.phase[r] == RobotPhase::Processing) {
        has_pending_event = true;
        break;
      }

    for (int r = min_robot; r < static_cast<int>(routes_.size()); ++r) {
      if (s.phase[static_cast<std::size_t>(r)] != RobotPhase::Waiting) continue;
      SimState child = s;
      const auto idx = static_cast<std::size_t>(r);
      const int target = routes_[idx][static_cast<std::size_t>(child.pos[idx])];
      child.phase[idx] = RobotPhase::Processing;
      child.rtime[idx] = child.time + instance_.processing(target);
      child.tst[static_cast<std::size_t>(target) - 1] = child.time;
      --child.free_ops;
      dfs(std::move(child), r + 1);
      if (aborted_) return;
    }

    if (has_pending_event) {
      // Hold every free operator: jump to the next event and re-decide.
      double next = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < routes_.size(); ++r)
        if (s.phase[r] == RobotPhase::Traveling || s.phase[r] == RobotPhase::Processing)
          next = std::min(next, s.rtime[r]);
      SimState child = std::move(s);
      child.time = next;
      dfs(std::move(child), 0);
    }
  }

  const Instance& instance_;
  const Metric& metric_;
  OracleLimits limits_;
  Clock::time_point deadline_;

  std::vector<std::vector<int>> routes_;
  std::vector<bool> unused_;
  int unused_count_ = 0;
  double route_bound_max_ = 0.0;
  std::vector<std::vector<double>> suffix_travel_;
  std::vector<std::vector<double>> suffix_proc_;

  double best_cost_ = std::numeric_limits<double>::infinity();
  RouteSet best_routes_;
  std::vector<double> best_tst_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

ExactResult exact_solve(const Instance& instance, const OracleLimits& limits) {
  if (instance.num_targets() > limits.max_targets)
    throw std::invalid_argument("exact_solve: instance above the target cap");
  if (instance.k() > limits.max_robots)
    throw std::invalid_argument("exact_solve: instance above the robot cap");
  return Search(instance, limits).run();
}

bool monotonicity_check(const Instance& instance, int m1, int m2, const OracleLimits& limits) {
  if (m1 < m2) throw std::invalid_argument("monotonicity_check: requires m1 >= m2");
  auto with_m = [&](int m) {
    return Instance(instance.name(), instance.k(), m, instance.depot_pos(), instance.targets(),
                    instance.metric());
  };
  const ExactResult r1 = exact_solve(with_m(m1), limits);
  const ExactResult r2 = exact_solve(with_m(m2), limits);
  return r1.opt_cost <= r2.opt_cost;
}

}  // namespace tassp
