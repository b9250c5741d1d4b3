#pragma once

#include <Eigen/Dense>

namespace speclap {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

}  // namespace speclap
