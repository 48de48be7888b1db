#ifndef POSECLONE_TEMPORAL_HPP_
#define POSECLONE_TEMPORAL_HPP_

#include <cstddef>
#include <vector>

#include "poseclone/pose.hpp"

namespace poseclone {

/// RGB frame with values in [0, 255], stored as 3 planar channels of
/// height x width doubles.
struct Frame {
  int height = 0;
  int width = 0;
  std::vector<double> data;

  Frame() = default;
  Frame(int height, int width);

  std::size_t index(int channel, int y, int x) const {
    return (static_cast<std::size_t>(channel) * height + y) * width + x;
  }
  double at(int channel, int y, int x) const {
    return data[index(channel, y, x)];
  }
  double& at(int channel, int y, int x) { return data[index(channel, y, x)]; }

  bool well_formed() const;
};

/// Dense per-pixel displacement between two frames: a du plane followed by a
/// dv plane, each height x width.
struct FlowField {
  int height = 0;
  int width = 0;
  std::vector<double> data;

  FlowField() = default;
  FlowField(int height, int width);

  double du(int y, int x) const {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  double dv(int y, int x) const {
    return data[(static_cast<std::size_t>(height) + y) * width + x];
  }
  double& du(int y, int x) {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  double& dv(int y, int x) {
    return data[(static_cast<std::size_t>(height) + y) * width + x];
  }

  bool well_formed() const;
};

/// Spatial weighting field with values in [0, 1], peaking on limb segments.
struct WeightMap {
  int height = 0;
  int width = 0;
  std::vector<double> data;

  WeightMap() = default;
  WeightMap(int height, int width);

  double at(int y, int x) const {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  double& at(int y, int x) {
    return data[static_cast<std::size_t>(y) * width + x];
  }
};

/// N consecutive confidence volumes packed frame-major into one
/// (joints * N) x height x width tensor.
struct PoseWindow {
  int poses = 0;
  int joints = 0;
  int height = 0;
  int width = 0;
  std::vector<double> packed;
};

/// Backward-warps the image: output(p) is the bilinear sample of the image at
/// p + flow(p), with sample coordinates clamped to the image border.
Frame warp(const Frame& image, const FlowField& flow);

/// Euclidean distance from point (px, py) to segment (ax, ay)-(bx, by).
double point_segment_distance(double px, double py, double ax, double ay,
                              double bx, double by);

/// Gaussian falloff from the skeleton limbs:
/// alpha(p) = exp(-dist(p)^2 / (2 sigma_alpha^2)) where dist(p) is the
/// distance from the pixel center to the nearest valid limb segment.
/// A skeleton with no valid limbs yields an all-zero map.
WeightMap limb_weight_map(const Skeleton& skeleton, const LimbSet& limbs,
                          int height, int width, double sigma_alpha);

/// How the weighted L1 temporal-coherence sum is normalized.
enum class TcNormalization {
  kMeanPerElement,  // divide by pixel count * channels (default)
  kSum,             // raw weighted sum
  kMeanPerAlpha,    // divide by channels * sum of alpha
};

/// Weighted L1 difference between the flow-warped current frame and the next
/// frame: mean over pixels and channels of alpha(p) * |W(gen_i, flow)(p) -
/// gen_next(p)| under the default normalization.
double tc_loss(const Frame& gen_i, const Frame& gen_next,
               const FlowField& flow, const WeightMap& alpha,
               TcNormalization normalization = TcNormalization::kMeanPerElement);

/// Mean over frames, pixels, and channels of the squared RGB difference.
double mse(const std::vector<Frame>& a, const std::vector<Frame>& b);

/// Contiguous, order-preserving train/test split of [0, length).
struct SplitRange {
  std::size_t train_begin = 0;
  std::size_t train_end = 0;  // == test_begin
  std::size_t test_begin = 0;
  std::size_t test_end = 0;
};

/// Splits at k = floor(length * train_fraction): train is [0, k), test is
/// [k, length). Requires length >= 3 and 0 < train_fraction < 1.
SplitRange reenact_split(std::size_t length, double train_fraction = 2.0 / 3.0);

/// Packs N volumes of identical shape frame-major: channels [0, J) hold pose
/// 0, [J, 2J) pose 1, and so on.
PoseWindow pack_pose_window(const std::vector<ConfidenceVolume>& poses);

/// Recovers the packed volumes bitwise.
std::vector<ConfidenceVolume> unpack_pose_window(const PoseWindow& window);

/// Default falloff width: 10 px at 256x256, scaled linearly with the smaller
/// image dimension.
double default_alpha_sigma(int height, int width);

}  // namespace poseclone

#endif  // POSECLONE_TEMPORAL_HPP_
