#include "swgf/driver.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

using namespace swgf;

namespace {

void print_run(const RunConfig& cfg, const RunResult& r) {
  std::printf("case=%s scheme=%s order=%d cells=%d\n", cfg.case_name.c_str(),
              cfg.scheme.c_str(), cfg.order, cfg.cells);
  std::printf("t_final=%.6f steps=%ld reached_steady=%d\n", r.t_final, r.steps,
              r.reached_steady ? 1 : 0);
  if (r.errors)
    std::printf("l2_h=%.6e l2_q=%.6e\n", r.errors->l2_h, r.errors->l2_q);
  if (r.drift_q >= 0.0) std::printf("max_drift_q=%.6e\n", r.drift_q);
  if (r.drift_K >= 0.0) std::printf("max_drift_K=%.6e\n", r.drift_K);
  if (r.max_dev_heq >= 0.0) std::printf("max_dev_heq=%.6e\n", r.max_dev_heq);
}

void print_convergence(const ConvergenceResult& r) {
  std::printf("# cells l2_h eoa_h l2_q eoa_q\n");
  for (size_t i = 0; i < r.meshes.size(); ++i) {
    std::printf("%d %.6e ", r.meshes[i], r.errors[i].l2_h);
    if (r.eoa_h[i] < 0.0)
      std::printf("--");
    else
      std::printf("%.3f", r.eoa_h[i]);
    std::printf(" %.6e ", r.errors[i].l2_q);
    if (r.eoa_q[i] < 0.0)
      std::printf("--");
    else
      std::printf("%.3f", r.eoa_q[i]);
    std::printf("\n");
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D shallow water finite volume solver (flux globalization)"};
  app.set_config("--config", "", "plain key=value configuration file");

  RunConfig cfg;
  std::vector<int> meshes{25, 50, 100, 200, 400, 800};

  app.add_option("--case", cfg.case_name, "benchmark case name")->required();
  app.add_option("--scheme", cfg.scheme, "gf_wb | gf_nonwb | classical");
  app.add_option("--order", cfg.order, "spatial order, 3 or 5");
  app.add_option("--cells", cfg.cells, "interior cell count");
  app.add_option("--cfl", cfg.cfl, "CFL number");
  app.add_option("--nodes", cfg.dec_nodes, "equispaced | lobatto");
  app.add_option("--tend", cfg.t_end, "final time (default: case value)");
  app.add_option("--epsilon", cfg.epsilon, "reconstruction regularization");
  app.add_option("--out", cfg.out_prefix, "output file prefix");
  app.add_option("--snapshots", cfg.snapshot_times, "snapshot times")
      ->delimiter(',');

  CLI::App* run = app.add_subcommand("run", "run one case");
  CLI::App* conv =
      app.add_subcommand("convergence", "mesh refinement error study");
  conv->add_option("--meshes", meshes, "interior cell counts")->delimiter(',');
  run->fallthrough();
  conv->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    find_case(cfg.case_name);
    parse_scheme(cfg.scheme);
    parse_dec_nodes(cfg.dec_nodes);
    if (cfg.order != 3 && cfg.order != 5)
      throw SolverError("order must be 3 or 5");
    if (cfg.cells < cfg.order) throw SolverError("too few cells");
    if (!(cfg.cfl > 0.0)) throw SolverError("cfl must be positive");
    for (int m : meshes)
      if (m < cfg.order) throw SolverError("too few cells in mesh list");
    std::sort(cfg.snapshot_times.begin(), cfg.snapshot_times.end());
  } catch (const SolverError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }

  try {
    if (conv->parsed()) {
      print_convergence(run_convergence(cfg, meshes));
    } else {
      print_run(cfg, run_case(cfg));
    }
  } catch (const SolverError& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return 3;
  }
  return 0;
}
