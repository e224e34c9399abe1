#include "tassp/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tassp {
namespace {

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string fmt(double t) {
  std::ostringstream os;
  os.precision(12);
  os << t;
  return os.str();
}

void require_partition(const Instance& instance, const RouteSet& routes) {
  auto violations = check_partition(routes, instance.num_targets());
  if (!violations.empty())
    throw std::invalid_argument("routes do not partition the target set: " + violations.front());
}

}  // namespace

Timeline greedy_schedule(const Instance& instance, const RouteSet& routes) {
  require_partition(instance, routes);
  const Metric& metric = instance.metric();
  const int num_robots = static_cast<int>(routes.routes.size());

  Timeline timeline;
  timeline.routes = routes;
  timeline.robot_intervals.assign(static_cast<std::size_t>(num_robots), {});
  timeline.task_start.assign(static_cast<std::size_t>(instance.num_targets()), 0.0);
  timeline.mission_time.assign(static_cast<std::size_t>(num_robots), 0.0);

  // Event key: (time, kind, robot). Releases (kind 0) outrank arrivals
  // (kind 1) at equal times.
  struct Event {
    double time;
    int kind;
    int robot;
    bool operator>(const Event& other) const {
      if (time != other.time) return time > other.time;
      if (kind != other.kind) return kind > other.kind;
      return robot > other.robot;
    }
  };
  std::priority_queue<Event, std::vector<Event>, std::greater<>> events;

  struct RobotState {
    std::size_t next_index = 0;  // position in the route of the pending target
    double arrival_time = 0.0;
  };
  std::vector<RobotState> state(static_cast<std::size_t>(num_robots));

  // Waiting robots keyed by (arrival time, robot index, pending target id).
  auto queue_key = [&](int robot) {
    const auto& st = state[static_cast<std::size_t>(robot)];
    const int target = routes.routes[static_cast<std::size_t>(robot)][st.next_index];
    return std::tuple<double, int, int>(st.arrival_time, robot, target);
  };
  std::set<std::tuple<double, int, int>> waiting;

  int free_operators = instance.m();

  auto push_travel = [&](int robot, double start, int from, int to) {
    Interval iv;
    iv.phase = Phase::Travel;
    iv.start = start;
    iv.end = start + metric.cost(from, to);
    iv.from = from;
    iv.to = to;
    timeline.robot_intervals[static_cast<std::size_t>(robot)].push_back(iv);
    return iv.end;
  };

  auto depart = [&](int robot, double now) {
    auto& st = state[static_cast<std::size_t>(robot)];
    const auto& route = routes.routes[static_cast<std::size_t>(robot)];
    const int from = st.next_index == 0 ? 0 : route[st.next_index - 1];
    if (st.next_index == route.size()) {
      timeline.mission_time[static_cast<std::size_t>(robot)] =
          route.empty() ? 0.0 : push_travel(robot, now, from, 0);
      return;
    }
    st.arrival_time = push_travel(robot, now, from, route[st.next_index]);
    events.push({st.arrival_time, 1, robot});
  };

  auto start_processing = [&](int robot, double now) {
    auto& st = state[static_cast<std::size_t>(robot)];
    const int target = routes.routes[static_cast<std::size_t>(robot)][st.next_index];
    if (now > st.arrival_time) {
      Interval iv;
      iv.phase = Phase::Wait;
      iv.start = st.arrival_time;
      iv.end = now;
      iv.target = target;
      timeline.robot_intervals[static_cast<std::size_t>(robot)].push_back(iv);
    }
    const double p = instance.processing(target);
    Interval iv;
    iv.phase = Phase::Process;
    iv.start = now;
    iv.end = now + p;
    iv.target = target;
    timeline.robot_intervals[static_cast<std::size_t>(robot)].push_back(iv);
    timeline.task_start[static_cast<std::size_t>(target) - 1] = now;
    --free_operators;
    ++st.next_index;
    events.push({now + p, 0, robot});
  };

  for (int r = 0; r < num_robots; ++r) depart(r, 0.0);

  while (!events.empty()) {
    const Event ev = events.top();
    events.pop();
    if (ev.kind == 0) {
      ++free_operators;
      depart(ev.robot, ev.time);
      while (free_operators > 0 && !waiting.empty()) {
        const int robot = std::get<1>(*waiting.begin());
        waiting.erase(waiting.begin());
        start_processing(robot, ev.time);
      }
    } else {
      if (free_operators > 0)
        start_processing(ev.robot, ev.time);
      else
        waiting.insert(queue_key(ev.robot));
    }
  }

  timeline.makespan = 0.0;
  for (double t : timeline.mission_time) timeline.makespan = std::max(timeline.makespan, t);
  return timeline;
}

Timeline timeline_from_starts(const Instance& instance, const RouteSet& routes,
                              const std::vector<double>& task_start) {
  require_partition(instance, routes);
  if (task_start.size() != static_cast<std::size_t>(instance.num_targets()))
    throw std::invalid_argument("timeline_from_starts: task_start size mismatch");
  const Metric& metric = instance.metric();
  const int num_robots = static_cast<int>(routes.routes.size());

  Timeline timeline;
  timeline.routes = routes;
  timeline.robot_intervals.assign(static_cast<std::size_t>(num_robots), {});
  timeline.task_start = task_start;
  timeline.mission_time.assign(static_cast<std::size_t>(num_robots), 0.0);

  for (int r = 0; r < num_robots; ++r) {
    const auto& route = routes.routes[static_cast<std::size_t>(r)];
    auto& intervals = timeline.robot_intervals[static_cast<std::size_t>(r)];
    if (route.empty()) continue;
    double now = 0.0;
    int at = 0;
    for (int target : route) {
      Interval travel;
      travel.phase = Phase::Travel;
      travel.start = now;
      travel.end = now + metric.cost(at, target);
      travel.from = at;
      travel.to = target;
      intervals.push_back(travel);
      now = travel.end;
      const double ts = task_start[static_cast<std::size_t>(target) - 1];
      if (ts > now) {
        Interval wait;
        wait.phase = Phase::Wait;
        wait.start = now;
        wait.end = ts;
        wait.target = target;
        intervals.push_back(wait);
        now = ts;
      }
      Interval process;
      process.phase = Phase::Process;
      process.start = now;
      process.end = now + instance.processing(target);
      process.target = target;
      intervals.push_back(process);
      now = process.end;
      at = target;
    }
    Interval back;
    back.phase = Phase::Travel;
    back.start = now;
    back.end = now + metric.cost(at, 0);
    back.from = at;
    back.to = 0;
    intervals.push_back(back);
    timeline.mission_time[static_cast<std::size_t>(r)] = back.end;
  }

  timeline.makespan = 0.0;
  for (double t : timeline.mission_time) timeline.makespan = std::max(timeline.makespan, t);
  return timeline;
}

ValidationReport validate_solution(const Instance& instance, const Timeline& timeline,
                                   double tol) {
  ValidationReport report;
  auto add = [&](const std::string& v) { report.violations.push_back(v); };

  const int n = instance.num_targets();
  const int k = instance.k();
  const Metric& metric = instance.metric();

  if (static_cast<int>(timeline.routes.routes.size()) != k)
    add("expected " + std::to_string(k) + " routes, timeline has " +
        std::to_string(timeline.routes.routes.size()));
  for (const auto& v : check_partition(timeline.routes, n)) add(v);
  if (timeline.robot_intervals.size() != timeline.routes.routes.size())
    add("interval chains do not match route count");
  if (timeline.task_start.size() != static_cast<std::size_t>(n))
    add("task_start must hold one entry per target");
  if (!report.ok()) return report;

  std::vector<int> processed(static_cast<std::size_t>(n) + 1, 0);

  for (std::size_t r = 0; r < timeline.routes.routes.size(); ++r) {
    const auto& route = timeline.routes.routes[r];
    const auto& intervals = timeline.robot_intervals[r];
    const std::string who = "robot " + std::to_string(r);

    if (route.empty()) {
      if (!intervals.empty()) add(who + ": empty route but nonempty interval chain");
      if (timeline.mission_time[r] != 0.0) add(who + ": empty route with nonzero mission time");
      continue;
    }

    double now = 0.0;
    bool chain_ok = true;
    for (const auto& iv : intervals) {
      if (!close(iv.start, now, tol)) {
        add(who + ": interval chain gap at t=" + fmt(iv.start) + " (expected t=" + fmt(now) + ")");
        chain_ok = false;
        break;
      }
      if (iv.end < iv.start - tol) {
        add(who + ": interval with negative duration at t=" + fmt(iv.start));
        chain_ok = false;
        break;
      }
      now = iv.end;
    }
    if (!chain_ok) continue;

    // Expected structure: Travel, (Wait?), Process per target, final Travel.
    std::size_t pos = 0;
    int at = 0;
    bool structure_ok = true;
    for (int target : route) {
      if (pos >= intervals.size() || intervals[pos].phase != Phase::Travel ||
          intervals[pos].from != at || intervals[pos].to != target) {
        add(who + ": route/travel mismatch before target vertex " + std::to_string(target));
        structure_ok = false;
        break;
      }
      if (!close(intervals[pos].end - intervals[pos].start, metric.cost(at, target), tol)) {
        add(who + ": travel " + std::to_string(at) + "->" + std::to_string(target) +
            " has length " + fmt(intervals[pos].end - intervals[pos].start) + ", metric says " +
            fmt(metric.cost(at, target)));
        structure_ok = false;
        break;
      }
      ++pos;
      if (pos < intervals.size() && intervals[pos].phase == Phase::Wait) {
        if (intervals[pos].target != target) {
          add(who + ": wait interval tagged with wrong target");
          structure_ok = false;
          break;
        }
        ++pos;
      }
      if (pos >= intervals.size() || intervals[pos].phase != Phase::Process ||
          intervals[pos].target != target) {
        add(who + ": missing process interval for target vertex " + std::to_string(target));
        structure_ok = false;
        break;
      }
      const double duration = intervals[pos].end - intervals[pos].start;
      if (!close(duration, instance.processing(target), tol)) {
        add(who + ": preemption/duration violation on target vertex " + std::to_string(target) +
            " (interval " + fmt(duration) + ", p=" + fmt(instance.processing(target)) + ")");
        structure_ok = false;
        break;
      }
      if (!close(intervals[pos].start, timeline.task_start[static_cast<std::size_t>(target) - 1],
                 tol)) {
        add(who + ": task_start disagrees with process interval for target vertex " +
            std::to_string(target));
        structure_ok = false;
        break;
      }
      ++processed[static_cast<std::size_t>(target)];
      ++pos;
      at = target;
    }
    if (!structure_ok) continue;
    if (pos + 1 != intervals.size() || intervals[pos].phase != Phase::Travel ||
        intervals[pos].from != at || intervals[pos].to != 0) {
      add(who + ": interval chain must end with travel back to the depot");
      continue;
    }
    if (!close(intervals[pos].end - intervals[pos].start, metric.cost(at, 0), tol)) {
      add(who + ": return travel length mismatch");
      continue;
    }
    if (!close(timeline.mission_time[r], intervals[pos].end, tol))
      add(who + ": mission time " + fmt(timeline.mission_time[r]) +
          " does not equal depot-return time " + fmt(intervals[pos].end));
  }

  for (int t = 1; t <= n; ++t)
    if (processed[static_cast<std::size_t>(t)] > 1)
      add("target vertex " + std::to_string(t) + " processed more than once");

  // Operator capacity sweep; a task ending at t frees its operator for one
  // starting at t.
  std::vector<std::pair<double, int>> events;
  for (const auto& intervals : timeline.robot_intervals)
    for (const auto& iv : intervals)
      if (iv.phase == Phase::Process) {
        events.emplace_back(iv.start, +1);
        events.emplace_back(iv.end, -1);
      }
  std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  int concurrent = 0;
  for (const auto& [time, delta] : events) {
    concurrent += delta;
    if (concurrent > instance.m()) {
      add("operator capacity exceeded at t=" + fmt(time) + " (" + std::to_string(concurrent) +
          " > m=" + std::to_string(instance.m()) + ")");
      break;
    }
  }

  double makespan = 0.0;
  for (double t : timeline.mission_time) makespan = std::max(makespan, t);
  if (!close(timeline.makespan, makespan, tol))
    add("makespan " + fmt(timeline.makespan) + " does not equal max mission time " +
        fmt(makespan));

  return report;
}

CostBreakdown cost_breakdown(const Instance& instance, const Timeline& timeline) {
  auto report = validate_solution(instance, timeline);
  if (!report.ok())
    throw std::logic_error("cost_breakdown: invalid timeline: " + report.violations.front());

  CostBreakdown breakdown;
  breakdown.makespan = timeline.makespan;
  breakdown.robots.resize(timeline.robot_intervals.size());
  for (std::size_t r = 0; r < timeline.robot_intervals.size(); ++r) {
    for (const auto& iv : timeline.robot_intervals[r]) {
      const double d = iv.end - iv.start;
      switch (iv.phase) {
        case Phase::Travel:
          breakdown.robots[r].travel += d;
          break;
        case Phase::Wait:
          breakdown.robots[r].wait += d;
          break;
        case Phase::Process:
          breakdown.robots[r].process += d;
          break;
      }
    }
  }

  const double total_p = instance.total_processing();
  const double m = instance.m();
  constexpr double tol = 1e-9;
  for (std::size_t r = 0; r < breakdown.robots.size(); ++r) {
    double route_p = 0.0;
    for (int t : timeline.routes.routes[r]) route_p += instance.processing(t);
    const double off_route_p = total_p - route_p;
    const double wait = breakdown.robots[r].wait;
    const double scale = std::max({1.0, m * wait, off_route_p});
    if (m * wait > off_route_p + tol * scale)
      throw std::logic_error("cost_breakdown: wait bound violated on robot " + std::to_string(r));
    const double cost_r = timeline.mission_time[r];
    const double bound =
        breakdown.robots[r].travel + (1.0 - 1.0 / m) * route_p + total_p / m;
    if (cost_r > bound + tol * std::max({1.0, cost_r, bound}))
      throw std::logic_error("cost_breakdown: mission-time bound violated on robot " +
                             std::to_string(r));
  }
  return breakdown;
}

}  // namespace tassp
