// Independent reference implementations the tests check the library against.
// Each one re-derives its quantity directly from the definition and stays
// off the library's code paths.
#ifndef POSECLONE_TESTS_ORACLES_HPP_
#define POSECLONE_TESTS_ORACLES_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "poseclone/pose.hpp"
#include "poseclone/temporal.hpp"

namespace oracles {

// Mean of per-limb Euclidean distances over limbs valid on both sides.
inline double mean_limb_distance(const poseclone::PoseDescriptor& a,
                                 const poseclone::PoseDescriptor& b) {
  double sum = 0.0;
  int count = 0;
  for (int l = 0; l < poseclone::kLimbCount; ++l) {
    if (a.limbs[l].has_value() && b.limbs[l].has_value()) {
      const double dx = a.limbs[l]->dx - b.limbs[l]->dx;
      const double dy = a.limbs[l]->dy - b.limbs[l]->dy;
      sum += std::sqrt(dx * dx + dy * dy);
      count += 1;
    }
  }
  return sum / count;
}

struct NnScan {
  std::array<bool, poseclone::kLimbCount> matched{};
  std::array<double, poseclone::kLimbCount> distance{};
  std::array<int, poseclone::kLimbCount> frame{};
  double mean = 0.0;
};

// Exhaustive double loop over limbs x frames; ties keep the first frame.
inline NnScan nn_scan(const poseclone::PoseDescriptor& p,
                      const std::vector<poseclone::PoseDescriptor>& v) {
  NnScan result;
  double sum = 0.0;
  int contributing = 0;
  for (int l = 0; l < poseclone::kLimbCount; ++l) {
    if (!p.limbs[l].has_value()) {
      continue;
    }
    double best = std::numeric_limits<double>::infinity();
    int best_frame = -1;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!v[j].limbs[l].has_value()) {
        continue;
      }
      const double dx = p.limbs[l]->dx - v[j].limbs[l]->dx;
      const double dy = p.limbs[l]->dy - v[j].limbs[l]->dy;
      const double sq = dx * dx + dy * dy;
      if (sq < best) {
        best = sq;
        best_frame = static_cast<int>(j);
      }
    }
    if (best_frame >= 0) {
      result.matched[l] = true;
      result.distance[l] = std::sqrt(best);
      result.frame[l] = best_frame;
      sum += result.distance[l];
      contributing += 1;
    }
  }
  result.mean = contributing > 0 ? sum / contributing : 0.0;
  return result;
}

// Scalar 4-neighbor bilinear sample with border clamping, written out as the
// explicit weight formula.
inline double bilinear_sample(const poseclone::Frame& image, int channel,
                              double sample_x, double sample_y) {
  const int w = image.width;
  const int h = image.height;
  if (sample_x < 0.0) sample_x = 0.0;
  if (sample_x > w - 1.0) sample_x = w - 1.0;
  if (sample_y < 0.0) sample_y = 0.0;
  if (sample_y > h - 1.0) sample_y = h - 1.0;
  const int x0 = static_cast<int>(std::floor(sample_x));
  const int y0 = static_cast<int>(std::floor(sample_y));
  const int x1 = x0 + 1 < w ? x0 + 1 : w - 1;
  const int y1 = y0 + 1 < h ? y0 + 1 : h - 1;
  const double fx = sample_x - x0;
  const double fy = sample_y - y0;
  const double w00 = (1.0 - fx) * (1.0 - fy);
  const double w10 = fx * (1.0 - fy);
  const double w01 = (1.0 - fx) * fy;
  const double w11 = fx * fy;
  return w00 * image.at(channel, y0, x0) + w10 * image.at(channel, y0, x1) +
         w01 * image.at(channel, y1, x0) + w11 * image.at(channel, y1, x1);
}

// Point-to-segment distance via the three stationary candidates: both
// endpoints and the unclamped projection foot when it lands inside.
inline double segment_distance(double px, double py, double ax, double ay,
                               double bx, double by) {
  const auto dist_to = [px, py](double qx, double qy) {
    return std::sqrt((px - qx) * (px - qx) + (py - qy) * (py - qy));
  };
  double best = std::min(dist_to(ax, ay), dist_to(bx, by));
  const double ux = bx - ax;
  const double uy = by - ay;
  const double len_sq = ux * ux + uy * uy;
  if (len_sq > 0.0) {
    const double t = ((px - ax) * ux + (py - ay) * uy) / len_sq;
    if (t > 0.0 && t < 1.0) {
      best = std::min(best, dist_to(ax + t * ux, ay + t * uy));
    }
  }
  return best;
}

struct MeanVar {
  double mean = 0.0;
  double variance = 0.0;
};

// Two-pass mean and population variance of one channel over all frames.
inline MeanVar channel_mean_var(
    const std::vector<poseclone::ConfidenceVolume>& volumes, int joint) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& v : volumes) {
    for (const double value : v.channel(joint)) {
      sum += value;
      n += 1;
    }
  }
  MeanVar out;
  out.mean = sum / static_cast<double>(n);
  double sq = 0.0;
  for (const auto& v : volumes) {
    for (const double value : v.channel(joint)) {
      sq += (value - out.mean) * (value - out.mean);
    }
  }
  out.variance = sq / static_cast<double>(n);
  return out;
}

// Naive triple loop over frames, pixels, channels.
inline double sequence_mse(const std::vector<poseclone::Frame>& a,
                           const std::vector<poseclone::Frame>& b) {
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int c = 0; c < 3; ++c) {
      for (int y = 0; y < a[i].height; ++y) {
        for (int x = 0; x < a[i].width; ++x) {
          const double d = a[i].at(c, y, x) - b[i].at(c, y, x);
          sum += d * d;
          n += 1;
        }
      }
    }
  }
  return sum / static_cast<double>(n);
}

// Position and value of the per-channel maximum by exhaustive scan.
struct PeakScan {
  int x = 0;
  int y = 0;
  double value = -std::numeric_limits<double>::infinity();
};

inline PeakScan channel_peak(const poseclone::ConfidenceVolume& volume,
                             int joint) {
  PeakScan peak;
  for (int y = 0; y < volume.height; ++y) {
    for (int x = 0; x < volume.width; ++x) {
      const double v = volume.at(joint, y, x);
      if (v > peak.value) {
        peak.value = v;
        peak.x = x;
        peak.y = y;
      }
    }
  }
  return peak;
}

}  // namespace oracles

#endif  // POSECLONE_TESTS_ORACLES_HPP_
