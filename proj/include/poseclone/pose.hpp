#ifndef POSECLONE_POSE_HPP_
#define POSECLONE_POSE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "poseclone/errors.hpp"

namespace poseclone {

inline constexpr int kJointCount = 18;
inline constexpr int kLimbCount = 12;
inline constexpr double kDefaultMinConfidence = 0.05;

/// Indices of the fixed 18-joint skeleton layout.
enum JointId : int {
  kNose = 0,
  kNeck = 1,
  kShoulderR = 2,
  kElbowR = 3,
  kWristR = 4,
  kShoulderL = 5,
  kElbowL = 6,
  kWristL = 7,
  kHipR = 8,
  kKneeR = 9,
  kAnkleR = 10,
  kHipL = 11,
  kKneeL = 12,
  kAnkleL = 13,
  kEyeR = 14,
  kEyeL = 15,
  kEarR = 16,
  kEarL = 17,
};

/// One estimated joint location in image coordinates (x = column, y = row).
struct Joint {
  double x = 0.0;
  double y = 0.0;
  double confidence = 1.0;
};

/// 18 joint slots; joints the extractor could not locate are nullopt.
struct Skeleton {
  std::array<std::optional<Joint>, kJointCount> joints;

  void set(int index, double x, double y, double confidence = 1.0) {
    joints.at(static_cast<std::size_t>(index)) = Joint{x, y, confidence};
  }

  /// Copy of this skeleton with every present joint shifted by (tx, ty).
  Skeleton translated(double tx, double ty) const;
};

/// A limb connects two joints of the skeleton, first -> second.
struct Limb {
  int first = 0;
  int second = 0;
};

/// Ordered set of exactly 12 limbs with indices in [0, 18) and no duplicates.
class LimbSet {
 public:
  explicit LimbSet(const std::vector<Limb>& limbs);

  /// The default connectivity: 3 limbs per arm/shoulder chain and 3 per leg,
  /// head joints excluded.
  static const LimbSet& standard();

  const std::array<Limb, kLimbCount>& limbs() const { return limbs_; }
  const Limb& operator[](int i) const {
    return limbs_[static_cast<std::size_t>(i)];
  }

 private:
  std::array<Limb, kLimbCount> limbs_{};
};

/// 2D displacement between the endpoints of one limb.
struct LimbDisplacement {
  double dx = 0.0;
  double dy = 0.0;
};

/// Translation-invariant pose summary: one displacement per limb, nullopt
/// where an endpoint joint is absent.
struct PoseDescriptor {
  std::array<std::optional<LimbDisplacement>, kLimbCount> limbs;
};

/// Stack of per-joint confidence maps: `joints` channels of height x width
/// values, row-major within a channel.
struct ConfidenceVolume {
  int height = 0;
  int width = 0;
  int joints = 0;
  std::vector<double> data;

  ConfidenceVolume() = default;
  ConfidenceVolume(int height, int width, int joints = kJointCount);

  std::size_t index(int joint, int y, int x) const {
    return (static_cast<std::size_t>(joint) * height + y) * width + x;
  }
  double at(int joint, int y, int x) const { return data[index(joint, y, x)]; }
  double& at(int joint, int y, int x) { return data[index(joint, y, x)]; }

  std::span<const double> channel(int joint) const;
  std::span<double> channel(int joint);

  bool well_formed() const;
};

/// Locates each joint at the maximum of its confidence map. Channels whose
/// maximum falls below min_confidence yield an absent joint. Ties resolve to
/// the smallest row, then the smallest column.
Skeleton extract_skeleton(const ConfidenceVolume& volume,
                          double min_confidence = kDefaultMinConfidence);

/// Renders one 2D Gaussian of width sigma per present joint, sampled at
/// pixel centers; absent joints produce all-zero channels.
ConfidenceVolume render_pose(const Skeleton& skeleton, int height, int width,
                             double sigma);

/// Limb displacement descriptor of a skeleton: entry l is
/// (x1 - x2, y1 - y2) of limb l, nullopt when either endpoint is absent.
PoseDescriptor descriptor(const Skeleton& skeleton,
                          const LimbSet& limbs = LimbSet::standard());

/// Default Gaussian width for rendering: 6 px at 256x256, scaled linearly
/// with the smaller image dimension.
double default_render_sigma(int height, int width);

}  // namespace poseclone

#endif  // POSECLONE_POSE_HPP_
