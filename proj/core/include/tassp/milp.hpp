#ifndef TASSP_MILP_HPP_
#define TASSP_MILP_HPP_

#include <map>
#include <string>
#include <vector>

#include "tassp/instance.hpp"
#include "tassp/schedule.hpp"

namespace tassp {

// One linear row: sum of coeff * var  (sense)  rhs, sense in {'<', '>', '='}.
struct MilpRow {
  std::string name;
  std::vector<std::pair<double, std::string>> terms;
  char sense = '<';
  double rhs = 0.0;
};

// Mixed-integer model of an instance. Binaries are the travel arcs x_i_j and
// the operator succession arcs y_u_v over all ordered vertex pairs (0 is the
// depot, i >= 1 the i-th target); continuous variables are vet_i (vehicle
// arrival), vlt_i (vehicle departure), tst_i (task start) per target plus the
// makespan MT being minimized.
struct MilpModel {
  std::string instance_name;
  int num_vertices = 0;
  int k = 0;
  int m = 0;
  double big_m = 0.0;
  std::vector<std::string> binaries;
  std::vector<std::string> continuous;
  std::vector<MilpRow> rows;
  std::vector<std::string> notes;
};

// Builds the full model. The bilinear timing products are emitted as big-M
// implications (exact for a binary times a bounded difference):
//   vet_j - tst_i >= c(i,j) + p_i - M(1 - x_i_j)
//   tst_j - tst_i >= p_i     - M(1 - y_i_j)
// with M = christofides tour cost + total processing, a valid horizon bound.
// Depot degrees are min(k, n) and operator chain counts min(m, n): surplus
// robots and operators can always idle without changing the optimum, and the
// unclamped rows are infeasible when k or m exceeds n. vlt_i appears in no
// structural row and is pinned by vlt_i = tst_i + p_i.
MilpModel build_milp(const Instance& instance);

// LP-format text: objective, named rows, binary list; deterministic ordering.
std::string lp_text(const MilpModel& model);

// Writes lp_text to a file. Throws std::runtime_error on I/O failure.
void write_lp(const MilpModel& model, const std::string& path);

// Variable assignment by name; absent variables read as 0.
using MilpAssignment = std::map<std::string, double>;

// Translates a feasible timeline into model variables with objective value
// equal to the timeline makespan. Routes are split (last target moved to a
// fresh route) until exactly min(k, n) are nonempty, and process intervals
// are first-fit packed into operator chains, then split the same way to
// exactly min(m, n); both rewrites preserve feasibility under the triangle
// inequality.
MilpAssignment map_solution(const Instance& instance, const Timeline& timeline);

// Checks every row numerically, binary integrality, nonnegativity, and that
// the x arcs connect every target to the depot (the timing rows make
// depot-free cycles infeasible, but the check is independent of that
// argument). Returns violations; empty means feasible.
std::vector<std::string> verify_assignment(const MilpModel& model,
                                           const MilpAssignment& assignment, double tol = 1e-6);

}  // namespace tassp

#endif  // TASSP_MILP_HPP_
