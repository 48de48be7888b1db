#include "poseclone/metrics.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "poseclone/parallel.hpp"

namespace poseclone {

namespace {

inline double limb_sq_distance(const LimbDisplacement& a,
                               const LimbDisplacement& b) {
  const double dx = a.dx - b.dx;
  const double dy = a.dy - b.dy;
  return dx * dx + dy * dy;
}

// Reference sequence rearranged per limb for the flat coverage scan: only
// frames where the limb is valid, in ascending frame order.
struct LimbColumns {
  std::vector<double> dx;
  std::vector<double> dy;
  std::vector<int> frame;
};

}  // namespace

double pose_distance(const PoseDescriptor& a, const PoseDescriptor& b) {
  double sum = 0.0;
  int shared = 0;
  for (int l = 0; l < kLimbCount; ++l) {
    if (a.limbs[l] && b.limbs[l]) {
      sum += std::sqrt(limb_sq_distance(*a.limbs[l], *b.limbs[l]));
      ++shared;
    }
  }
  if (shared == 0) {
    throw IncomparablePoses("descriptors share no valid limb");
  }
  return sum / shared;
}

std::array<LimbDistance, kLimbCount> per_limb_distances(
    const PoseDescriptor& a, const PoseDescriptor& b, double gamma) {
  std::array<LimbDistance, kLimbCount> out;
  for (int l = 0; l < kLimbCount; ++l) {
    if (a.limbs[l] && b.limbs[l]) {
      const double d = std::sqrt(limb_sq_distance(*a.limbs[l], *b.limbs[l]));
      out[l] = LimbDistance{d, d > gamma};
    }
  }
  return out;
}

PoseToSequenceResult pose_to_sequence(const PoseDescriptor& p,
                                      const DescriptorSequence& v) {
  if (v.empty()) {
    throw StructuralError("reference sequence must be non-empty");
  }
  PoseToSequenceResult result;
  double sum = 0.0;
  int contributing = 0;
  for (int l = 0; l < kLimbCount; ++l) {
    if (!p.limbs[l]) {
      continue;
    }
    // Scan in frame order with strict < so ties keep the smallest index.
    double best_sq = std::numeric_limits<double>::infinity();
    int best_frame = -1;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!v[j].limbs[l]) {
        continue;
      }
      const double sq = limb_sq_distance(*p.limbs[l], *v[j].limbs[l]);
      if (sq < best_sq) {
        best_sq = sq;
        best_frame = static_cast<int>(j);
      }
    }
    if (best_frame < 0) {
      result.excluded_limbs.push_back(l);
      continue;
    }
    const double d = std::sqrt(best_sq);
    result.per_limb[l] = LimbMatch{d, best_frame};
    sum += d;
    ++contributing;
  }
  if (contributing == 0) {
    throw IncomparablePoses("no limb of the pose has a valid counterpart");
  }
  result.distance = sum / contributing;
  return result;
}

CoverageReport coverage_report(const DescriptorSequence& driving,
                               const DescriptorSequence& reference,
                               double gamma) {
  if (driving.empty() || reference.empty()) {
    throw StructuralError("driving and reference sequences must be non-empty");
  }

  std::array<LimbColumns, kLimbCount> columns;
  for (int l = 0; l < kLimbCount; ++l) {
    for (std::size_t j = 0; j < reference.size(); ++j) {
      if (reference[j].limbs[l]) {
        columns[l].dx.push_back(reference[j].limbs[l]->dx);
        columns[l].dy.push_back(reference[j].limbs[l]->dy);
        columns[l].frame.push_back(static_cast<int>(j));
      }
    }
  }

  CoverageReport report;
  report.per_frame.resize(driving.size());

  parallel_for(driving.size(), [&](std::size_t i) {
    CoverageFrame frame;
    frame.frame_index = static_cast<int>(i);
    double sum = 0.0;
    int contributing = 0;
    for (int l = 0; l < kLimbCount; ++l) {
      if (!driving[i].limbs[l] || columns[l].frame.empty()) {
        continue;
      }
      const double qx = driving[i].limbs[l]->dx;
      const double qy = driving[i].limbs[l]->dy;
      const LimbColumns& col = columns[l];
      const std::size_t n = col.frame.size();
      double best_sq = std::numeric_limits<double>::infinity();
      std::size_t best = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const double dx = qx - col.dx[k];
        const double dy = qy - col.dy[k];
        const double sq = dx * dx + dy * dy;
        if (sq < best_sq) {
          best_sq = sq;
          best = k;
        }
      }
      const double d = std::sqrt(best_sq);
      frame.per_limb[l] = CoverageLimb{d, col.frame[best], d > gamma};
      sum += d;
      ++contributing;
    }
    if (contributing > 0) {
      frame.distance = sum / contributing;
    }
    report.per_frame[i] = std::move(frame);
  });

  double total = 0.0;
  std::size_t comparable = 0;
  std::optional<double> max_distance;
  std::size_t flagged_frames = 0;
  for (const CoverageFrame& frame : report.per_frame) {
    if (frame.distance) {
      total += *frame.distance;
      ++comparable;
      if (!max_distance || *frame.distance > *max_distance) {
        max_distance = *frame.distance;
      }
    }
    for (const auto& limb : frame.per_limb) {
      if (limb && limb->flagged) {
        ++flagged_frames;
        break;
      }
    }
  }
  if (comparable > 0) {
    report.summary.mean_distance = total / static_cast<double>(comparable);
    report.summary.max_distance = max_distance;
  }
  report.summary.fraction_frames_with_any_flag =
      static_cast<double>(flagged_frames) /
      static_cast<double>(driving.size());
  return report;
}

AggregatedLoss aggregate_losses(const LossComponents& c,
                                const LossWeights& w) {
  if (!std::isfinite(c.gan_p) || !std::isfinite(c.vgg) ||
      !std::isfinite(c.gan_s) || !std::isfinite(c.tc)) {
    throw StructuralError("loss components must be finite");
  }
  if (!(w.lambda_vgg >= 0.0) || !(w.lambda_s >= 0.0) ||
      !(w.lambda_tc >= 0.0)) {
    throw StructuralError("loss weights must be non-negative");
  }
  AggregatedLoss out;
  out.rec = c.gan_p + w.lambda_vgg * c.vgg;
  out.total = out.rec + w.lambda_s * (c.gan_s + w.lambda_tc * c.tc);
  return out;
}

}  // namespace poseclone
