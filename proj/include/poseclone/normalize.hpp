#ifndef POSECLONE_NORMALIZE_HPP_
#define POSECLONE_NORMALIZE_HPP_

#include <utility>
#include <vector>

#include "poseclone/pose.hpp"

namespace poseclone {

/// Std threshold under which a channel is treated as constant.
inline constexpr double kDegenerateStd = 1e-8;

/// All skeletons of one video, sharing a coordinate frame.
struct SkeletonSequence {
  std::vector<Skeleton> frames;
  int frame_height = 0;
  int frame_width = 0;
};

/// Per-video alignment, applied as p' = scale * p + translate to every frame.
struct SimilarityTransform {
  double scale = 1.0;
  double tx = 0.0;
  double ty = 0.0;

  Joint apply(const Joint& j) const {
    return Joint{scale * j.x + tx, scale * j.y + ty, j.confidence};
  }
};

/// Per-channel statistics over all pixels and frames of a sequence.
struct ChannelStats {
  std::vector<double> mean;
  std::vector<double> stddev;  // population std; 0 marks a degenerate channel
};

/// Scales the sequence so the mean hip width (over frames with both hips)
/// equals target_hip_width, then translates so the time-average of per-frame
/// joint centroids lands on target_center. Scale applies before translation.
/// Throws UnalignableSequence when no frame carries both hips.
std::pair<SkeletonSequence, SimilarityTransform> align_sequence(
    const SkeletonSequence& seq, double target_center_x,
    double target_center_y, double target_hip_width);

/// Standardizes each joint channel to zero mean and unit variance, with
/// statistics taken over all frames. Channels with std below kDegenerateStd
/// come back all zero and are recorded with std 0.
std::pair<std::vector<ConfidenceVolume>, ChannelStats> standardize_channels(
    const std::vector<ConfidenceVolume>& volumes);

}  // namespace poseclone

#endif  // POSECLONE_NORMALIZE_HPP_
