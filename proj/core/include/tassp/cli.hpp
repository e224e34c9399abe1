#ifndef TASSP_CLI_HPP_
#define TASSP_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tassp/generate.hpp"
#include "tassp/matching.hpp"
#include "tassp/oracle.hpp"

namespace tassp {

// Exit codes shared by every command: 0 all good, 1 a requested check
// failed, 2 usage or I/O trouble (the CLI front end maps exceptions to 2).
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Expands instance arguments: .json paths pass through, anything else is
// read as a manifest (one instance path per line, resolved relative to the
// manifest's directory).
std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs);

struct GenerateOptions {
  GeneratorParams params;  // n, k, m, area, processing fractions, first seed
  int count = 1;
  std::string out_dir = ".";
};

// Writes `count` instances with seeds params.seed .. params.seed + count - 1
// plus manifest.txt listing their file names.
int cmd_generate(const GenerateOptions& options, std::ostream& out);

struct SolveOptions {
  std::vector<std::string> inputs;
  std::string out_dir = ".";
  bool exact = false;
  bool emit_lp = false;
  std::optional<std::pair<int, int>> m_sweep;  // inclusive m range
  int jobs = 1;
  bool strict = false;
  MatchingMode matching = MatchingMode::Exact;
  OracleLimits oracle_limits;
};

// Runs approx + bounds (optionally the oracle and an LP export) on every
// instance, writes one solution file per solve plus report.csv and
// report.json, and echoes the CSV rows. Rows appear in manifest order no
// matter how many jobs run. Instances beyond the oracle caps under --exact
// are flagged in the row; they fail the run only under --strict.
int cmd_solve(const SolveOptions& options, std::ostream& out);

struct CertifyOptions {
  std::vector<std::string> inputs;
  OracleLimits oracle_limits;
};

// Asserts, per instance: both solutions feasible, the wait-time and
// mission-time inequalities, the split guarantee on both tours, zero wait
// and the modified-cost identity when m >= k, and (when the oracle applies
// and k >= 2) cost within theorem_ratio of the optimum. One PASS/FAIL line
// per instance.
int cmd_certify(const CertifyOptions& options, std::ostream& out);

struct BoundsOptions {
  std::vector<std::string> inputs;
};

int cmd_bounds(const BoundsOptions& options, std::ostream& out);

struct ExactOptions {
  std::vector<std::string> inputs;
  OracleLimits limits;
};

int cmd_exact(const ExactOptions& options, std::ostream& out);

struct ExportMilpOptions {
  std::vector<std::string> inputs;
  std::string out_dir = ".";
};

int cmd_export_milp(const ExportMilpOptions& options, std::ostream& out);

}  // namespace tassp

#endif  // TASSP_CLI_HPP_
