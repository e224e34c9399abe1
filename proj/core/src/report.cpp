#include "tassp/report.hpp"

#include <sstream>

#include <json.hpp>

namespace tassp {
namespace {

using json = nlohmann::ordered_json;

std::string fixed(double v, int decimals) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(decimals);
  os << v;
  return os.str();
}

std::string join_flags(const std::vector<std::string>& flags) {
  std::string out;
  for (const auto& f : flags) {
    if (!out.empty()) out += ';';
    out += f;
  }
  return out;
}

json timeline_json(const Instance& instance, const Timeline& timeline) {
  auto vertex_name = [&](int v) {
    return v == 0 ? std::string("d") : instance.target(v).id;
  };
  json routes = json::array();
  for (const auto& route : timeline.routes.routes) {
    json r = json::array();
    for (int t : route) r.push_back(vertex_name(t));
    routes.push_back(std::move(r));
  }
  json robots = json::array();
  for (const auto& intervals : timeline.robot_intervals) {
    json chain = json::array();
    for (const auto& iv : intervals) {
      json o;
      switch (iv.phase) {
        case Phase::Travel:
          o["phase"] = "travel";
          o["from"] = vertex_name(iv.from);
          o["to"] = vertex_name(iv.to);
          break;
        case Phase::Wait:
          o["phase"] = "wait";
          o["target"] = vertex_name(iv.target);
          break;
        case Phase::Process:
          o["phase"] = "process";
          o["target"] = vertex_name(iv.target);
          break;
      }
      o["start"] = iv.start;
      o["end"] = iv.end;
      chain.push_back(std::move(o));
    }
    robots.push_back(std::move(chain));
  }
  json task_start = json::object();
  for (int t = 1; t <= instance.num_targets(); ++t)
    task_start[instance.target(t).id] = timeline.task_start[static_cast<std::size_t>(t) - 1];
  json out;
  out["routes"] = std::move(routes);
  out["intervals"] = std::move(robots);
  out["task_start"] = std::move(task_start);
  out["mission_times"] = timeline.mission_time;
  out["makespan"] = timeline.makespan;
  return out;
}

}  // namespace

SolveReport make_report(const Instance& instance, const ApproxSolution& solution,
                        const BoundsReport& bounds, const std::optional<ExactResult>& exact,
                        std::optional<double> oracle_runtime) {
  SolveReport report;
  report.name = instance.name();
  report.num_vertices = instance.num_vertices();
  report.k = instance.k();
  report.m = instance.m();
  report.cost_s1 = solution.s1.cost;
  report.cost_s2 = solution.s2.cost;
  report.cost_approx = solution.cost();
  report.runtime_approx = solution.runtime_seconds();
  report.l1 = bounds.l1;
  report.l2 = bounds.l2;
  report.l3 = bounds.l3;
  report.l_max = bounds.l_max;
  if (bounds.l1 >= bounds.l2 && bounds.l1 >= bounds.l3)
    report.binding_bound = "L1";
  else if (bounds.l2 >= bounds.l3)
    report.binding_bound = "L2";
  else
    report.binding_bound = "L3";
  if (exact) {
    report.opt_cost = exact->opt_cost;
    report.runtime_oracle = oracle_runtime;
    report.guarantee_vs_opt = a_posteriori(report.cost_approx, exact->opt_cost);
  }
  report.guarantee_vs_lb = a_posteriori(report.cost_approx, bounds.l_max);
  report.flags = solution.flags;
  if (bounds.tsp_bound_kind == TspBoundKind::ChristofidesDerived)
    report.flags.push_back("l1-christofides-derived");
  if (exact && !exact->proven) report.flags.push_back("oracle-unproven");
  return report;
}

std::string report_csv_header() {
  return "name,V,k,m,cost_s1,cost_s2,cost_approx,runtime_approx,l1,l2,l3,l_max,"
         "binding_bound,opt_cost,runtime_oracle,guarantee_vs_opt,guarantee_vs_lb,flags";
}

std::string report_csv_row(const SolveReport& r) {
  std::ostringstream os;
  os << r.name << ',' << r.num_vertices << ',' << r.k << ',' << r.m << ','
     << fixed(r.cost_s1, 1) << ',' << fixed(r.cost_s2, 1) << ',' << fixed(r.cost_approx, 1)
     << ',' << fixed(r.runtime_approx, 3) << ',' << fixed(r.l1, 1) << ',' << fixed(r.l2, 1)
     << ',' << fixed(r.l3, 1) << ',' << fixed(r.l_max, 1) << ',' << r.binding_bound << ',';
  if (r.opt_cost) os << fixed(*r.opt_cost, 1);
  os << ',';
  if (r.runtime_oracle) os << fixed(*r.runtime_oracle, 3);
  os << ',';
  if (r.guarantee_vs_opt) os << fixed(*r.guarantee_vs_opt, 2);
  os << ',' << fixed(r.guarantee_vs_lb, 2) << ',' << join_flags(r.flags);
  return os.str();
}

std::string report_json(const SolveReport& r) {
  json o;
  o["name"] = r.name;
  o["V"] = r.num_vertices;
  o["k"] = r.k;
  o["m"] = r.m;
  o["cost_s1"] = r.cost_s1;
  o["cost_s2"] = r.cost_s2;
  o["cost_approx"] = r.cost_approx;
  o["runtime_approx"] = r.runtime_approx;
  o["l1"] = r.l1;
  o["l2"] = r.l2;
  o["l3"] = r.l3;
  o["l_max"] = r.l_max;
  o["binding_bound"] = r.binding_bound;
  o["opt_cost"] = r.opt_cost ? json(*r.opt_cost) : json(nullptr);
  o["runtime_oracle"] = r.runtime_oracle ? json(*r.runtime_oracle) : json(nullptr);
  o["guarantee_vs_opt"] = r.guarantee_vs_opt ? json(*r.guarantee_vs_opt) : json(nullptr);
  o["guarantee_vs_lb"] = r.guarantee_vs_lb;
  o["flags"] = r.flags;
  return o.dump();
}

std::string solution_to_json(const Instance& instance, const ApproxSolution& solution) {
  json o;
  o["instance"] = instance.name();
  o["chosen"] = solution.chosen == 1 ? "s1" : "s2";
  o["cost"] = solution.cost();
  o["flags"] = solution.flags;
  json s1;
  s1["cost"] = solution.s1.cost;
  s1["runtime_seconds"] = solution.s1.runtime_seconds;
  s1["timeline"] = timeline_json(instance, solution.s1.timeline);
  o["s1"] = std::move(s1);
  json s2;
  s2["cost"] = solution.s2.cost;
  s2["runtime_seconds"] = solution.s2.runtime_seconds;
  s2["timeline"] = timeline_json(instance, solution.s2.timeline);
  o["s2"] = std::move(s2);
  return o.dump(2) + "\n";
}

}  // namespace tassp
