#include "tassp/milp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tassp/tsp.hpp"

namespace tassp {
namespace {

std::string xvar(int i, int j) {
  return "x_" + std::to_string(i) + "_" + std::to_string(j);
}
std::string yvar(int u, int v) {
  return "y_" + std::to_string(u) + "_" + std::to_string(v);
}
std::string vet(int i) { return "vet_" + std::to_string(i); }
std::string vlt(int i) { return "vlt_" + std::to_string(i); }
std::string tst(int i) { return "tst_" + std::to_string(i); }

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

MilpModel build_milp(const Instance& instance) {
  const int n = instance.num_targets();
  const int nv = instance.num_vertices();
  const Metric& metric = instance.metric();

  MilpModel model;
  model.instance_name = instance.name();
  model.num_vertices = nv;
  model.k = instance.k();
  model.m = instance.m();
  model.big_m = christofides(metric).cost + instance.total_processing();
  model.notes.push_back(
      "timing rows c9/c11 force strictly increasing start times along travel arcs "
      "between targets, so x-cycles avoiding the depot are infeasible; "
      "verify_assignment still checks depot connectivity independently");

  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      if (i == j) continue;
      model.binaries.push_back(xvar(i, j));
    }
  for (int u = 0; u < nv; ++u)
    for (int v = 0; v < nv; ++v) {
      if (u == v) continue;
      model.binaries.push_back(yvar(u, v));
    }
  for (int i = 1; i <= n; ++i) {
    model.continuous.push_back(vet(i));
    model.continuous.push_back(vlt(i));
    model.continuous.push_back(tst(i));
  }
  model.continuous.push_back("MT");

  auto row = [&](std::string name, char sense, double rhs) -> MilpRow& {
    model.rows.push_back({std::move(name), {}, sense, rhs});
    return model.rows.back();
  };

  // (5) depot robot degree, clamped.
  const int robot_degree = std::min(instance.k(), n);
  {
    auto& out = row("c5_x_out", '=', robot_degree);
    for (int j = 1; j <= n; ++j) out.terms.emplace_back(1.0, xvar(0, j));
    auto& in = row("c5_x_in", '=', robot_degree);
    for (int j = 1; j <= n; ++j) in.terms.emplace_back(1.0, xvar(j, 0));
  }

  // (6) unit degree per target.
  for (int j = 1; j <= n; ++j) {
    auto& in = row("c6_in_" + std::to_string(j), '=', 1.0);
    for (int i = 0; i < nv; ++i)
      if (i != j) in.terms.emplace_back(1.0, xvar(i, j));
    auto& out = row("c6_out_" + std::to_string(j), '=', 1.0);
    for (int i = 0; i < nv; ++i)
      if (i != j) out.terms.emplace_back(1.0, xvar(j, i));
  }

  // (7) operator chains out of / into the depot, clamped.
  const int operator_degree = std::min(instance.m(), n);
  {
    auto& out = row("c7_y_out", '=', operator_degree);
    for (int j = 1; j <= n; ++j) out.terms.emplace_back(1.0, yvar(0, j));
    auto& in = row("c7_y_in", '=', operator_degree);
    for (int j = 1; j <= n; ++j) in.terms.emplace_back(1.0, yvar(j, 0));
  }

  // (8) unit succession degree per target.
  for (int j = 1; j <= n; ++j) {
    auto& in = row("c8_in_" + std::to_string(j), '=', 1.0);
    for (int u = 0; u < nv; ++u)
      if (u != j) in.terms.emplace_back(1.0, yvar(u, j));
    auto& out = row("c8_out_" + std::to_string(j), '=', 1.0);
    for (int u = 0; u < nv; ++u)
      if (u != j) out.terms.emplace_back(1.0, yvar(j, u));
  }

  const double M = model.big_m;

  // (9) travel timing: vet_j - tst_i - M x_i_j >= c(i,j) + p_i - M.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      auto& r = row("c9_" + std::to_string(i) + "_" + std::to_string(j), '>',
                    metric.cost(i, j) + instance.processing(i) - M);
      r.terms.emplace_back(1.0, vet(j));
      r.terms.emplace_back(-1.0, tst(i));
      r.terms.emplace_back(-M, xvar(i, j));
    }

  // (10) succession timing: tst_j - tst_i - M y_i_j >= p_i - M.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      auto& r = row("c10_" + std::to_string(i) + "_" + std::to_string(j), '>',
                    instance.processing(i) - M);
      r.terms.emplace_back(1.0, tst(j));
      r.terms.emplace_back(-1.0, tst(i));
      r.terms.emplace_back(-M, yvar(i, j));
    }

  // (11) first-leg arrival: vet_i - c(d,i) x_0_i >= 0.
  for (int i = 1; i <= n; ++i) {
    auto& r = row("c11_" + std::to_string(i), '>', 0.0);
    r.terms.emplace_back(1.0, vet(i));
    r.terms.emplace_back(-metric.cost(0, i), xvar(0, i));
  }

  // (12) processing after arrival: tst_i - vet_i >= 0.
  for (int i = 1; i <= n; ++i) {
    auto& r = row("c12_" + std::to_string(i), '>', 0.0);
    r.terms.emplace_back(1.0, tst(i));
    r.terms.emplace_back(-1.0, vet(i));
  }

  // (13) makespan: tst_i + c(i,d) x_i_0 - MT <= -p_i.
  for (int i = 1; i <= n; ++i) {
    auto& r = row("c13_" + std::to_string(i), '<', -instance.processing(i));
    r.terms.emplace_back(1.0, tst(i));
    r.terms.emplace_back(metric.cost(i, 0), xvar(i, 0));
    r.terms.emplace_back(-1.0, "MT");
  }

  // vlt pinned to task completion; it appears in no structural row.
  for (int i = 1; i <= n; ++i) {
    auto& r = row("vlt_def_" + std::to_string(i), '=', instance.processing(i));
    r.terms.emplace_back(1.0, vlt(i));
    r.terms.emplace_back(-1.0, tst(i));
  }

  return model;
}

std::string lp_text(const MilpModel& model) {
  std::ostringstream os;
  os << "\\ TASSP model\n";
  os << "\\ instance: " << model.instance_name << "\n";
  os << "\\ |V| = " << model.num_vertices << ", k = " << model.k << ", m = " << model.m << "\n";
  os << "\\ big-M = " << num(model.big_m) << "\n";
  for (const auto& note : model.notes) os << "\\ note: " << note << "\n";
  os << "Minimize\n obj: MT\n";
  os << "Subject To\n";
  for (const auto& r : model.rows) {
    os << " " << r.name << ":";
    for (const auto& [coeff, var] : r.terms) {
      if (coeff >= 0.0)
        os << " + " << num(coeff) << " " << var;
      else
        os << " - " << num(-coeff) << " " << var;
    }
    const char* sense = r.sense == '<' ? "<=" : (r.sense == '>' ? ">=" : "=");
    os << " " << sense << " " << num(r.rhs) << "\n";
  }
  os << "Binaries\n";
  for (std::size_t i = 0; i < model.binaries.size(); ++i) {
    os << " " << model.binaries[i];
    if (i % 8 == 7 || i + 1 == model.binaries.size()) os << "\n";
  }
  os << "End\n";
  return os.str();
}

void write_lp(const MilpModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << lp_text(model);
  if (!out) throw std::runtime_error(path + ": write failed");
}

MilpAssignment map_solution(const Instance& instance, const Timeline& timeline) {
  const int n = instance.num_targets();
  const Metric& metric = instance.metric();

  // Nonempty routes, split down to exactly min(k, n).
  std::vector<std::vector<int>> routes;
  for (const auto& route : timeline.routes.routes)
    if (!route.empty()) routes.push_back(route);
  const int want_routes = std::min(instance.k(), n);
  while (static_cast<int>(routes.size()) < want_routes) {
    auto longest = std::max_element(
        routes.begin(), routes.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const int moved = longest->back();
    longest->pop_back();
    routes.push_back({moved});
  }

  // Process intervals first-fit into operator chains, then split to
  // exactly min(m, n).
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double sa = timeline.task_start[static_cast<std::size_t>(a) - 1];
    const double sb = timeline.task_start[static_cast<std::size_t>(b) - 1];
    if (sa != sb) return sa < sb;
    return a < b;
  });
  std::vector<std::vector<int>> chains;
  std::vector<double> chain_end;
  for (int t : order) {
    const double start = timeline.task_start[static_cast<std::size_t>(t) - 1];
    bool placed = false;
    for (std::size_t c = 0; c < chains.size(); ++c) {
      if (chain_end[c] <= start) {
        chains[c].push_back(t);
        chain_end[c] = start + instance.processing(t);
        placed = true;
        break;
      }
    }
    if (!placed) {
      chains.push_back({t});
      chain_end.push_back(start + instance.processing(t));
    }
  }
  const int want_chains = std::min(instance.m(), n);
  if (static_cast<int>(chains.size()) > want_chains)
    throw std::logic_error("map_solution: timeline needs more operator chains than m");
  while (static_cast<int>(chains.size()) < want_chains) {
    auto longest = std::max_element(
        chains.begin(), chains.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const int moved = longest->back();
    longest->pop_back();
    chains.push_back({moved});
  }

  MilpAssignment a;
  for (const auto& route : routes) {
    a[xvar(0, route.front())] = 1.0;
    for (std::size_t i = 0; i + 1 < route.size(); ++i) a[xvar(route[i], route[i + 1])] = 1.0;
    a[xvar(route.back(), 0)] = 1.0;
  }
  for (const auto& chain : chains) {
    a[yvar(0, chain.front())] = 1.0;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) a[yvar(chain[i], chain[i + 1])] = 1.0;
    a[yvar(chain.back(), 0)] = 1.0;
  }
  for (int t = 1; t <= n; ++t) {
    a[tst(t)] = timeline.task_start[static_cast<std::size_t>(t) - 1];
    a[vlt(t)] = a[tst(t)] + instance.processing(t);
  }
  // Arrivals re-derived from the (possibly split) routes; splitting only
  // shortens first legs, so tst_i >= vet_i survives.
  for (const auto& route : routes) {
    double depart = 0.0;
    int at = 0;
    for (int t : route) {
      a[vet(t)] = depart + metric.cost(at, t);
      depart = a[tst(t)] + instance.processing(t);
      at = t;
    }
  }
  a["MT"] = timeline.makespan;
  return a;
}

std::vector<std::string> verify_assignment(const MilpModel& model,
                                           const MilpAssignment& assignment, double tol) {
  std::vector<std::string> violations;
  auto value = [&](const std::string& var) {
    auto it = assignment.find(var);
    return it == assignment.end() ? 0.0 : it->second;
  };

  for (const auto& var : model.binaries) {
    const double v = value(var);
    if (std::abs(v - std::round(v)) > tol || v < -tol || v > 1.0 + tol)
      violations.push_back(var + " = " + std::to_string(v) + " is not binary");
  }
  for (const auto& var : model.continuous) {
    const double v = value(var);
    if (v < -tol) violations.push_back(var + " = " + std::to_string(v) + " is negative");
  }

  for (const auto& r : model.rows) {
    double lhs = 0.0;
    for (const auto& [coeff, var] : r.terms) lhs += coeff * value(var);
    const double scale = std::max({1.0, std::abs(lhs), std::abs(r.rhs)});
    bool ok = true;
    switch (r.sense) {
      case '<':
        ok = lhs <= r.rhs + tol * scale;
        break;
      case '>':
        ok = lhs >= r.rhs - tol * scale;
        break;
      default:
        ok = std::abs(lhs - r.rhs) <= tol * scale;
        break;
    }
    if (!ok)
      violations.push_back(r.name + ": lhs " + std::to_string(lhs) + " violates " + r.sense +
                           " " + std::to_string(r.rhs));
  }

  // Depot connectivity of the x arcs.
  const int nv = model.num_vertices;
  std::vector<std::vector<int>> next(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      if (i == j) continue;
      if (std::abs(value(xvar(i, j)) - 1.0) <= tol)
        next[static_cast<std::size_t>(i)].push_back(j);
    }
  std::vector<bool> reached(static_cast<std::size_t>(nv), false);
  std::vector<int> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : next[static_cast<std::size_t>(u)])
      if (!reached[static_cast<std::size_t>(v)]) {
        reached[static_cast<std::size_t>(v)] = true;
        stack.push_back(v);
      }
  }
  for (int t = 1; t < nv; ++t)
    if (!reached[static_cast<std::size_t>(t)])
      violations.push_back("target vertex " + std::to_string(t) +
                           " not connected to the depot by x arcs");

  return violations;
}

}  // namespace tassp
