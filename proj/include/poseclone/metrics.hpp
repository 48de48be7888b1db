#ifndef POSECLONE_METRICS_HPP_
#define POSECLONE_METRICS_HPP_

#include <array>
#include <optional>
#include <vector>

#include "poseclone/pose.hpp"

namespace poseclone {

/// Default per-limb flag threshold, in the coordinate units of the
/// descriptors under comparison.
inline constexpr double kDefaultGamma = 8.0;

using DescriptorSequence = std::vector<PoseDescriptor>;

/// Mean Euclidean distance between corresponding limb displacements, over
/// limbs valid in both descriptors. Throws IncomparablePoses when no limb is
/// valid on both sides.
double pose_distance(const PoseDescriptor& a, const PoseDescriptor& b);

struct LimbDistance {
  std::optional<double> distance;  // nullopt when the limb is invalid
  bool flagged = false;            // distance > gamma; invalid limbs never flag
};

/// Per-limb Euclidean distances between two descriptors with threshold flags.
std::array<LimbDistance, kLimbCount> per_limb_distances(
    const PoseDescriptor& a, const PoseDescriptor& b, double gamma);

struct LimbMatch {
  double distance = 0.0;
  int nn_frame = 0;
};

struct PoseToSequenceResult {
  /// Mean of per-limb nearest-neighbor distances over contributing limbs.
  double distance = 0.0;
  /// Best match per limb; nullopt where the limb is invalid in the query or
  /// excluded for lack of any valid counterpart in the sequence.
  std::array<std::optional<LimbMatch>, kLimbCount> per_limb;
  /// Limbs valid in the query but valid in no frame of the sequence.
  std::vector<int> excluded_limbs;
};

/// For each valid limb of p, the distance to its nearest counterpart anywhere
/// in v (ties to the smallest frame index), averaged over contributing limbs.
/// Throws IncomparablePoses when no limb contributes.
PoseToSequenceResult pose_to_sequence(const PoseDescriptor& p,
                                      const DescriptorSequence& v);

struct CoverageLimb {
  double distance = 0.0;
  int nn_frame = 0;
  bool flagged = false;
};

struct CoverageFrame {
  int frame_index = 0;
  /// Pose-to-sequence distance; nullopt when the frame is incomparable.
  std::optional<double> distance;
  std::array<std::optional<CoverageLimb>, kLimbCount> per_limb;
};

struct CoverageSummary {
  std::optional<double> mean_distance;  // over comparable frames
  std::optional<double> max_distance;
  double fraction_frames_with_any_flag = 0.0;  // over all driving frames
};

struct CoverageReport {
  std::vector<CoverageFrame> per_frame;
  CoverageSummary summary;
};

/// Scores every driving frame against the whole reference sequence with the
/// pose-to-sequence metric, flagging limbs whose nearest-neighbor distance
/// exceeds gamma. Incomparable frames are recorded with a null distance.
CoverageReport coverage_report(const DescriptorSequence& driving,
                               const DescriptorSequence& reference,
                               double gamma = kDefaultGamma);

struct LossWeights {
  double lambda_vgg = 10.0;
  double lambda_s = 0.1;
  double lambda_tc = 10.0;
};

/// Externally supplied scalar values of the four training loss terms.
struct LossComponents {
  double gan_p = 0.0;
  double vgg = 0.0;
  double gan_s = 0.0;
  double tc = 0.0;
};

struct AggregatedLoss {
  double rec = 0.0;
  double total = 0.0;
};

/// rec = gan_p + lambda_vgg * vgg;
/// total = rec + lambda_s * (gan_s + lambda_tc * tc).
AggregatedLoss aggregate_losses(const LossComponents& c,
                                const LossWeights& w = LossWeights{});

}  // namespace poseclone

#endif  // POSECLONE_METRICS_HPP_
