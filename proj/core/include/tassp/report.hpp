#ifndef TASSP_REPORT_HPP_
#define TASSP_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tassp/approx.hpp"
#include "tassp/bounds.hpp"
#include "tassp/instance.hpp"
#include "tassp/oracle.hpp"

namespace tassp {

// One benchmark row per solved instance. CSV formatting rounds costs to one
// decimal and ratios to two; the JSON sidecar keeps full precision.
struct SolveReport {
  std::string name;
  int num_vertices = 0;
  int k = 0;
  int m = 0;
  double cost_s1 = 0.0;
  double cost_s2 = 0.0;
  double cost_approx = 0.0;
  double runtime_approx = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;
  double l_max = 0.0;
  std::string binding_bound;  // "L1" | "L2" | "L3"
  std::optional<double> opt_cost;
  std::optional<double> runtime_oracle;
  std::optional<double> guarantee_vs_opt;
  double guarantee_vs_lb = 0.0;
  std::vector<std::string> flags;
};

SolveReport make_report(const Instance& instance, const ApproxSolution& solution,
                        const BoundsReport& bounds,
                        const std::optional<ExactResult>& exact = std::nullopt,
                        std::optional<double> oracle_runtime = std::nullopt);

// Column order: name,V,k,m,cost_s1,cost_s2,cost_approx,runtime_approx,
// l1,l2,l3,l_max,binding_bound,opt_cost,runtime_oracle,guarantee_vs_opt,
// guarantee_vs_lb,flags. Optional blanks stay empty; flags joined with ';'.
std::string report_csv_header();
std::string report_csv_row(const SolveReport& report);

// Full-precision JSON object for the sidecar file.
std::string report_json(const SolveReport& report);

// Solution file payload: chosen solution marker, both route sets, interval
// timelines, mission times and costs, target ids as written in the instance.
std::string solution_to_json(const Instance& instance, const ApproxSolution& solution);

}  // namespace tassp

#endif  // TASSP_REPORT_HPP_
