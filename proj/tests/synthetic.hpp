// Synthetic skeletons and randomized inputs shared by the test suites.
#ifndef POSECLONE_TESTS_SYNTHETIC_HPP_
#define POSECLONE_TESTS_SYNTHETIC_HPP_

#include <cmath>
#include <numbers>
#include <random>

#include "poseclone/pose.hpp"

namespace synthetic {

inline constexpr double kArmSegment = 40.0;  // px
inline constexpr int kCanvas = 256;

inline double radians(double degrees) {
  return degrees * std::numbers::pi / 180.0;
}

// 256-px stick figure with 40 px arm segments. Both arms hang straight down
// at angle 0 and swing outward as the angle grows; 90 means horizontal.
inline poseclone::Skeleton stick_figure(double arm_angle_deg = 0.0) {
  using namespace poseclone;
  const double s = std::sin(radians(arm_angle_deg));
  const double c = std::cos(radians(arm_angle_deg));
  Skeleton sk;
  sk.set(kNose, 128, 30);
  sk.set(kNeck, 128, 60);
  sk.set(kShoulderR, 108, 60);
  sk.set(kShoulderL, 148, 60);
  const double rex = 108 - kArmSegment * s;
  const double rey = 60 + kArmSegment * c;
  sk.set(kElbowR, rex, rey);
  sk.set(kWristR, rex - kArmSegment * s, rey + kArmSegment * c);
  const double lex = 148 + kArmSegment * s;
  const double ley = 60 + kArmSegment * c;
  sk.set(kElbowL, lex, ley);
  sk.set(kWristL, lex + kArmSegment * s, ley + kArmSegment * c);
  sk.set(kHipR, 108, 140);
  sk.set(kHipL, 148, 140);
  sk.set(kKneeR, 108, 180);
  sk.set(kAnkleR, 108, 220);
  sk.set(kKneeL, 148, 180);
  sk.set(kAnkleL, 148, 220);
  sk.set(kEyeR, 120, 25);
  sk.set(kEyeL, 136, 25);
  sk.set(kEarR, 112, 30);
  sk.set(kEarL, 144, 30);
  return sk;
}

// Stick figure with only the right forearm rotated away from straight-down.
inline poseclone::Skeleton rotated_forearm_figure(double forearm_angle_deg) {
  using namespace poseclone;
  Skeleton sk = stick_figure(0.0);
  const double s = std::sin(radians(forearm_angle_deg));
  const double c = std::cos(radians(forearm_angle_deg));
  const Joint elbow = *sk.joints[kElbowR];
  sk.set(kWristR, elbow.x - kArmSegment * s, elbow.y + kArmSegment * c);
  return sk;
}

inline poseclone::PoseDescriptor random_descriptor(std::mt19937_64& rng,
                                                   double limit = 100.0) {
  std::uniform_real_distribution<double> dist(-limit, limit);
  poseclone::PoseDescriptor d;
  for (auto& limb : d.limbs) {
    limb = poseclone::LimbDisplacement{dist(rng), dist(rng)};
  }
  return d;
}

inline poseclone::PoseDescriptor random_partial_descriptor(
    std::mt19937_64& rng, double valid_probability = 0.8,
    double limit = 100.0) {
  std::uniform_real_distribution<double> dist(-limit, limit);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  poseclone::PoseDescriptor d;
  for (auto& limb : d.limbs) {
    if (coin(rng) < valid_probability) {
      limb = poseclone::LimbDisplacement{dist(rng), dist(rng)};
    }
  }
  return d;
}

// Sub-pixel coordinates on a 1/64 px grid: dense enough to act as arbitrary
// reals, yet exactly representable so that adding dyadic offsets stays exact
// and translation cancels bitwise in the descriptor.
inline poseclone::Skeleton random_full_skeleton(std::mt19937_64& rng,
                                                double width = 256.0,
                                                double height = 256.0) {
  std::uniform_int_distribution<long> gx(0, static_cast<long>(width - 1) * 64);
  std::uniform_int_distribution<long> gy(0,
                                         static_cast<long>(height - 1) * 64);
  poseclone::Skeleton sk;
  for (int j = 0; j < poseclone::kJointCount; ++j) {
    sk.set(j, static_cast<double>(gx(rng)) / 64.0,
           static_cast<double>(gy(rng)) / 64.0);
  }
  return sk;
}

}  // namespace synthetic

#endif  // POSECLONE_TESTS_SYNTHETIC_HPP_
