#include "swgf/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace swgf {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

void require_finite(const ArrayXd& v, const char* name) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v[i]))
      throw SolverError(std::string("non-finite value in output column ") + name);
}

} // namespace

void write_snapshot(const std::string& path, const SnapshotColumns& cols) {
  const Eigen::Index n = cols.x.size();
  auto check = [&](const ArrayXd& v, const char* name) {
    if (v.size() != n)
      throw SolverError(std::string("output column size mismatch: ") + name);
    require_finite(v, name);
  };
  check(cols.x, "x");
  check(cols.h, "h");
  check(cols.q, "q");
  check(cols.u, "u");
  check(cols.b, "b");
  check(cols.eta, "eta");
  check(cols.pert, "pert");
  if (cols.K) check(*cols.K, "K");

  std::ostringstream out;
  out << "# x h q u b eta";
  if (cols.K) out << " K";
  out << " pert\n";
  for (Eigen::Index i = 0; i < n; ++i) {
    out << fmt(cols.x[i]) << ' ' << fmt(cols.h[i]) << ' ' << fmt(cols.q[i])
        << ' ' << fmt(cols.u[i]) << ' ' << fmt(cols.b[i]) << ' '
        << fmt(cols.eta[i]);
    if (cols.K) out << ' ' << fmt((*cols.K)[i]);
    out << ' ' << fmt(cols.pert[i]) << "\n";
  }
  write_text_file(path, out.str());
}

void write_convergence_table(const std::string& path,
                             const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  out << "# cells l2_h eoa_h l2_q eoa_q\n";
  for (const auto& r : rows) {
    out << r.cells << ' ' << fmt(r.l2_h) << ' ';
    if (r.eoa_h < 0.0)
      out << "--";
    else
      out << fmt(r.eoa_h);
    out << ' ' << fmt(r.l2_q) << ' ';
    if (r.eoa_q < 0.0)
      out << "--";
    else
      out << fmt(r.eoa_q);
    out << "\n";
  }
  write_text_file(path, out.str());
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw SolverError("cannot open output file: " + path);
  f << content;
  if (!f) throw SolverError("write failed: " + path);
}

} // namespace swgf
