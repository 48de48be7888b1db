#include "poseclone/normalize.hpp"

#include <cmath>
#include <string>

#include "poseclone/parallel.hpp"

namespace poseclone {

std::pair<SkeletonSequence, SimilarityTransform> align_sequence(
    const SkeletonSequence& seq, double target_center_x,
    double target_center_y, double target_hip_width) {
  if (seq.frames.empty()) {
    throw StructuralError("cannot align an empty skeleton sequence");
  }
  if (!(target_hip_width > 0.0)) {
    throw StructuralError("target hip width must be positive");
  }

  double hip_width_sum = 0.0;
  std::size_t hip_frames = 0;
  double centroid_x_sum = 0.0, centroid_y_sum = 0.0;
  std::size_t centroid_frames = 0;

  for (const Skeleton& s : seq.frames) {
    const auto& hip_r = s.joints[kHipR];
    const auto& hip_l = s.joints[kHipL];
    if (hip_r && hip_l) {
      hip_width_sum +=
          std::hypot(hip_r->x - hip_l->x, hip_r->y - hip_l->y);
      ++hip_frames;
    }
    double sx = 0.0, sy = 0.0;
    std::size_t present = 0;
    for (const auto& joint : s.joints) {
      if (joint) {
        sx += joint->x;
        sy += joint->y;
        ++present;
      }
    }
    if (present > 0) {
      centroid_x_sum += sx / static_cast<double>(present);
      centroid_y_sum += sy / static_cast<double>(present);
      ++centroid_frames;
    }
  }

  if (hip_frames == 0) {
    throw UnalignableSequence(
        "unalignable sequence: no frame carries both hip joints");
  }
  const double mean_hip_width =
      hip_width_sum / static_cast<double>(hip_frames);
  if (!(mean_hip_width > 0.0)) {
    throw UnalignableSequence("unalignable sequence: mean hip width is zero");
  }

  SimilarityTransform transform;
  transform.scale = target_hip_width / mean_hip_width;
  // hip_frames > 0 implies at least one centroid frame
  const double center_x = centroid_x_sum / static_cast<double>(centroid_frames);
  const double center_y = centroid_y_sum / static_cast<double>(centroid_frames);
  transform.tx = target_center_x - transform.scale * center_x;
  transform.ty = target_center_y - transform.scale * center_y;

  SkeletonSequence aligned;
  aligned.frame_height = seq.frame_height;
  aligned.frame_width = seq.frame_width;
  aligned.frames.reserve(seq.frames.size());
  for (const Skeleton& s : seq.frames) {
    Skeleton out;
    for (std::size_t i = 0; i < s.joints.size(); ++i) {
      if (s.joints[i]) {
        out.joints[i] = transform.apply(*s.joints[i]);
      }
    }
    aligned.frames.push_back(out);
  }
  return {std::move(aligned), transform};
}

std::pair<std::vector<ConfidenceVolume>, ChannelStats> standardize_channels(
    const std::vector<ConfidenceVolume>& volumes) {
  if (volumes.empty()) {
    throw StructuralError("cannot standardize an empty volume sequence");
  }
  const int height = volumes.front().height;
  const int width = volumes.front().width;
  const int joints = volumes.front().joints;
  for (const ConfidenceVolume& v : volumes) {
    if (!v.well_formed() || v.height != height || v.width != width ||
        v.joints != joints) {
      throw StructuralError("volumes must share height, width, and joints");
    }
  }

  const std::size_t plane = static_cast<std::size_t>(height) * width;
  const double count =
      static_cast<double>(volumes.size()) * static_cast<double>(plane);

  ChannelStats stats;
  stats.mean.assign(joints, 0.0);
  stats.stddev.assign(joints, 0.0);

  std::vector<ConfidenceVolume> out(volumes.size(),
                                    ConfidenceVolume(height, width, joints));

  // Two-pass statistics per channel. Frames are reduced in sequence order,
  // so the result is independent of how channels are scheduled.
  parallel_for(static_cast<std::size_t>(joints), [&](std::size_t j) {
    const int joint = static_cast<int>(j);
    double sum = 0.0;
    for (const ConfidenceVolume& v : volumes) {
      double frame_sum = 0.0;
      for (const double value : v.channel(joint)) {
        frame_sum += value;
      }
      sum += frame_sum;
    }
    const double mean = sum / count;

    double sq_sum = 0.0;
    for (const ConfidenceVolume& v : volumes) {
      double frame_sq = 0.0;
      for (const double value : v.channel(joint)) {
        const double d = value - mean;
        frame_sq += d * d;
      }
      sq_sum += frame_sq;
    }
    const double stddev = std::sqrt(sq_sum / count);

    stats.mean[j] = mean;
    if (stddev < kDegenerateStd) {
      stats.stddev[j] = 0.0;  // output channels stay zero
      return;
    }
    stats.stddev[j] = stddev;
    const double inv = 1.0 / stddev;
    for (std::size_t t = 0; t < volumes.size(); ++t) {
      const std::span<const double> in = volumes[t].channel(joint);
      const std::span<double> dst = out[t].channel(joint);
      for (std::size_t i = 0; i < plane; ++i) {
        dst[i] = (in[i] - mean) * inv;
      }
    }
  });

  return {std::move(out), std::move(stats)};
}

}  // namespace poseclone
