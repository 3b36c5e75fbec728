#pragma once

#include "swgf/cases.hpp"
#include "swgf/global_flux.hpp"
#include "swgf/grid.hpp"
#include "swgf/types.hpp"
#include "swgf/weno.hpp"

#include <memory>
#include <optional>
#include <string>

namespace swgf {

enum class SchemeKind { gf_wb, gf_nonwb, classical };

SchemeKind parse_scheme(const std::string& name);
std::string scheme_name(SchemeKind kind);

/// Semi-discrete operator dU/dt for one case on one grid. The state vector
/// seen by the time integrator is the flattened interior [h; q].
class SemiDiscrete {
public:
  SemiDiscrete(const CaseSpec& cs, int n_cells, SchemeKind kind, int order,
               double epsilon = 1e-8);

  const Grid& grid() const { return grid_; }
  const CaseSpec& spec() const { return case_; }
  SchemeKind kind() const { return kind_; }
  int order() const { return order_; }
  const ArrayXd& bathymetry_averages() const;

  int dof() const { return 2 * grid_.n_interior; }
  ArrayXd initial_state() const;
  ArrayXd pack(const State& s) const;
  State unpack(const ArrayXd& y) const;

  ArrayXd rhs(const ArrayXd& y, double t) const;
  double max_wave_speed(const ArrayXd& y) const;

  struct FluxAverages {
    ArrayXd qbar; // quadrature average of q per interior cell
    ArrayXd Kbar; // momentum global flux average (gf schemes only)
  };
  // Diagnostic global-flux averages of the interior cells (gf schemes).
  FluxAverages flux_averages(const ArrayXd& y) const;

private:
  State padded(const ArrayXd& y, double t) const;
  ArrayXd rhs_global_flux(const State& s, double t) const;
  ArrayXd rhs_classical(const State& s, double t) const;

  CaseSpec case_;
  Grid grid_;
  SchemeKind kind_;
  int order_;
  double eps_;
  QuadratureRule sample_rule_; // bathymetry/initial-data sampling
  BathymetryData bath_;
  std::unique_ptr<GlobalFluxAssembler> gf_;
  std::unique_ptr<WenoReconstructor> recon_iface_;   // gf: interface traces of G
  std::unique_ptr<WenoReconstructor> recon_classic_; // classical: edges + source nodes
  QuadratureRule source_rule_; // classical source quadrature
  ArrayXXd bslope_src_;        // analytic slope at classical source nodes
  mutable GlobalFluxFields fields_;
};

} // namespace swgf
