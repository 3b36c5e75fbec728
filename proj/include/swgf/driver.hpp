#pragma once

#include "swgf/cases.hpp"
#include "swgf/dec_time.hpp"
#include "swgf/scheme.hpp"
#include "swgf/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace swgf {

struct RunConfig {
  std::string case_name;
  std::string scheme = "gf_wb";
  int order = 5;
  int cells = 100;
  double cfl = 0.4;
  std::string dec_nodes = "equispaced";
  double t_end = -1.0; // negative: use the case default
  double epsilon = 1e-8;
  std::string out_prefix; // empty: no files written
  std::vector<double> snapshot_times;
};

struct RunResult {
  double t_final = 0.0;
  long steps = 0;
  bool reached_steady = false;
  ArrayXd h, q;          // interior cell averages
  ArrayXd qbar_flux;     // quadrature discharge average (gf schemes)
  std::optional<ArrayXd> Kbar;
  std::optional<ErrorReport> errors; // against the case reference
  double drift_q = -1.0; // max |qbar - q0|, steady cases only
  double drift_K = -1.0; // max |Kbar - K0|, gf steady cases only
  ArrayXd h_eq;          // unperturbed steady depth (perturbation cases)
  double max_dev_heq = -1.0; // max over all steps of max |h - h_eq|
};

/// Runs one configuration, writing snapshot/final/summary files when
/// out_prefix is set. Throws SolverError on solver failure.
RunResult run_case(const RunConfig& config);

struct ConvergenceResult {
  std::vector<int> meshes;
  std::vector<ErrorReport> errors;
  std::vector<double> eoa_h, eoa_q; // negative where undefined
};

/// Refinement study; requires the case to have a reference solution.
ConvergenceResult run_convergence(const RunConfig& base,
                                  const std::vector<int>& meshes);

} // namespace swgf
