#pragma once

#include <Eigen/Dense>

namespace mfgnet {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Vec2 = Eigen::Vector2d;

// Two populations everywhere: 0 = workers, 1 = firms.
inline constexpr int kNumPopulations = 2;

} // namespace mfgnet
