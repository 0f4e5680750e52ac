#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace quadrl {

constexpr int kNumLegs = 4;
constexpr int kNumJoints = 12;   // 3 revolute joints per leg
constexpr int kPosDim = 19;      // base position (3) + quaternion (4) + joints (12)
constexpr int kVelDim = 18;      // base linear (3) + angular (3) + joints (12)

using Vec3 = Eigen::Vector3d;
using Vec12 = Eigen::Matrix<double, 12, 1>;
using VecX = Eigen::VectorXd;
using Mat3 = Eigen::Matrix3d;
using MatX = Eigen::MatrixXd;
using Quat = Eigen::Quaterniond;

/// Leg order used everywhere: left-front, right-front, left-hind, right-hind.
enum LegIndex { kLF = 0, kRF = 1, kLH = 2, kRH = 3 };

}  // namespace quadrl
