#pragma once

#include "swgf/grid.hpp"
#include "swgf/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace swgf {

struct SnapshotColumns {
  ArrayXd x, h, q, u, b, eta, pert;
  std::optional<ArrayXd> K; // absent for the classical scheme
};

/// Plain whitespace columns with a fixed header; every value must be finite.
void write_snapshot(const std::string& path, const SnapshotColumns& cols);

struct ConvergenceRow {
  int cells = 0;
  double l2_h = 0.0, l2_q = 0.0;
  double eoa_h = -1.0, eoa_q = -1.0; // negative marks an undefined entry
};

void write_convergence_table(const std::string& path,
                             const std::vector<ConvergenceRow>& rows);

void write_text_file(const std::string& path, const std::string& content);

} // namespace swgf
