#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace swgf {

using Eigen::ArrayXd;
using Eigen::ArrayXXd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Thrown when the solver reaches a state it cannot continue from
// (dry cell, failed root bracket, invalid configuration at run time).
class SolverError : public std::runtime_error {
public:
  explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace swgf
