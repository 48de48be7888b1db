#include "poseclone/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "poseclone/parallel.hpp"

namespace poseclone {

Frame::Frame(int height, int width) : height(height), width(width) {
  if (height <= 0 || width <= 0) {
    throw StructuralError("frame dimensions must be positive");
  }
  data.assign(3 * static_cast<std::size_t>(height) * width, 0.0);
}

bool Frame::well_formed() const {
  return height > 0 && width > 0 &&
         data.size() == 3 * static_cast<std::size_t>(height) * width;
}

FlowField::FlowField(int height, int width) : height(height), width(width) {
  if (height <= 0 || width <= 0) {
    throw StructuralError("flow field dimensions must be positive");
  }
  data.assign(2 * static_cast<std::size_t>(height) * width, 0.0);
}

bool FlowField::well_formed() const {
  return height > 0 && width > 0 &&
         data.size() == 2 * static_cast<std::size_t>(height) * width;
}

WeightMap::WeightMap(int height, int width) : height(height), width(width) {
  if (height <= 0 || width <= 0) {
    throw StructuralError("weight map dimensions must be positive");
  }
  data.assign(static_cast<std::size_t>(height) * width, 0.0);
}

Frame warp(const Frame& image, const FlowField& flow) {
  if (!image.well_formed() || !flow.well_formed()) {
    throw StructuralError("warp inputs are malformed");
  }
  if (image.height != flow.height || image.width != flow.width) {
    throw StructuralError("image and flow dimensions must match");
  }
  const int h = image.height;
  const int w = image.width;
  Frame out(h, w);

  parallel_chunks(static_cast<std::size_t>(h),
                  [&](std::size_t row_begin, std::size_t row_end) {
    for (std::size_t row = row_begin; row < row_end; ++row) {
      const int y = static_cast<int>(row);
      for (int x = 0; x < w; ++x) {
        // Sample position, clamped to the border.
        double sx = x + flow.du(y, x);
        double sy = y + flow.dv(y, x);
        sx = std::clamp(sx, 0.0, static_cast<double>(w - 1));
        sy = std::clamp(sy, 0.0, static_cast<double>(h - 1));
        const int x0 = static_cast<int>(std::floor(sx));
        const int y0 = static_cast<int>(std::floor(sy));
        const int x1 = std::min(x0 + 1, w - 1);
        const int y1 = std::min(y0 + 1, h - 1);
        const double fx = sx - x0;
        const double fy = sy - y0;
        for (int c = 0; c < 3; ++c) {
          const double top = (1.0 - fx) * image.at(c, y0, x0) +
                             fx * image.at(c, y0, x1);
          const double bottom = (1.0 - fx) * image.at(c, y1, x0) +
                                fx * image.at(c, y1, x1);
          out.at(c, y, x) = (1.0 - fy) * top + fy * bottom;
        }
      }
    }
  });
  return out;
}

double point_segment_distance(double px, double py, double ax, double ay,
                              double bx, double by) {
  const double abx = bx - ax;
  const double aby = by - ay;
  const double len_sq = abx * abx + aby * aby;
  double t = 0.0;
  if (len_sq > 0.0) {
    t = ((px - ax) * abx + (py - ay) * aby) / len_sq;
    t = std::clamp(t, 0.0, 1.0);
  }
  const double cx = ax + t * abx;
  const double cy = ay + t * aby;
  return std::hypot(px - cx, py - cy);
}

WeightMap limb_weight_map(const Skeleton& skeleton, const LimbSet& limbs,
                          int height, int width, double sigma_alpha) {
  if (height <= 0 || width <= 0) {
    throw StructuralError("weight map dimensions must be positive");
  }
  if (!(sigma_alpha > 0.0)) {
    throw StructuralError("sigma_alpha must be positive");
  }
  WeightMap map(height, width);

  struct Segment {
    double ax, ay, bx, by;
  };
  std::vector<Segment> segments;
  for (int l = 0; l < kLimbCount; ++l) {
    const auto& a = skeleton.joints[limbs[l].first];
    const auto& b = skeleton.joints[limbs[l].second];
    if (a && b) {
      segments.push_back(Segment{a->x, a->y, b->x, b->y});
    }
  }
  if (segments.empty()) {
    return map;  // all zero
  }

  const double inv_two_sigma_sq = 1.0 / (2.0 * sigma_alpha * sigma_alpha);
  parallel_chunks(static_cast<std::size_t>(height),
                  [&](std::size_t row_begin, std::size_t row_end) {
    for (std::size_t row = row_begin; row < row_end; ++row) {
      const int y = static_cast<int>(row);
      for (int x = 0; x < width; ++x) {
        double best = std::numeric_limits<double>::infinity();
        for (const Segment& s : segments) {
          const double d =
              point_segment_distance(x, y, s.ax, s.ay, s.bx, s.by);
          best = std::min(best, d);
        }
        map.at(y, x) = std::exp(-best * best * inv_two_sigma_sq);
      }
    }
  });
  return map;
}

double tc_loss(const Frame& gen_i, const Frame& gen_next,
               const FlowField& flow, const WeightMap& alpha,
               TcNormalization normalization) {
  if (!gen_i.well_formed() || !gen_next.well_formed()) {
    throw StructuralError("tc_loss frames are malformed");
  }
  if (gen_i.height != gen_next.height || gen_i.width != gen_next.width ||
      flow.height != gen_i.height || flow.width != gen_i.width ||
      alpha.height != gen_i.height || alpha.width != gen_i.width) {
    throw StructuralError("tc_loss inputs must share dimensions");
  }
  const Frame warped = warp(gen_i, flow);
  const int h = gen_i.height;
  const int w = gen_i.width;

  // Per-row partial sums, combined in row order: deterministic for any
  // worker count.
  std::vector<double> row_sums(static_cast<std::size_t>(h), 0.0);
  parallel_for(static_cast<std::size_t>(h), [&](std::size_t row) {
    const int y = static_cast<int>(row);
    double sum = 0.0;
    for (int c = 0; c < 3; ++c) {
      for (int x = 0; x < w; ++x) {
        sum += alpha.at(y, x) *
               std::abs(warped.at(c, y, x) - gen_next.at(c, y, x));
      }
    }
    row_sums[row] = sum;
  });
  double total = 0.0;
  for (const double s : row_sums) {
    total += s;
  }

  switch (normalization) {
    case TcNormalization::kSum:
      return total;
    case TcNormalization::kMeanPerAlpha: {
      double alpha_sum = 0.0;
      for (const double a : alpha.data) {
        alpha_sum += a;
      }
      if (alpha_sum == 0.0) {
        return 0.0;
      }
      return total / (3.0 * alpha_sum);
    }
    case TcNormalization::kMeanPerElement:
    default:
      return total / (3.0 * static_cast<double>(h) * w);
  }
}

double mse(const std::vector<Frame>& a, const std::vector<Frame>& b) {
  if (a.size() != b.size()) {
    throw StructuralError("sequences must have equal length");
  }
  if (a.empty()) {
    throw StructuralError("sequences must be non-empty");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].well_formed() || !b[i].well_formed() ||
        a[i].height != b[i].height || a[i].width != b[i].width) {
      throw StructuralError("frame dimensions must match");
    }
  }

  std::vector<double> frame_sums(a.size(), 0.0);
  parallel_for(a.size(), [&](std::size_t i) {
    double sum = 0.0;
    const std::size_t n = a[i].data.size();
    for (std::size_t k = 0; k < n; ++k) {
      const double d = a[i].data[k] - b[i].data[k];
      sum += d * d;
    }
    frame_sums[i] = sum;
  });

  double total = 0.0;
  std::size_t elements = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += frame_sums[i];
    elements += a[i].data.size();
  }
  return total / static_cast<double>(elements);
}

SplitRange reenact_split(std::size_t length, double train_fraction) {
  if (length < 3) {
    throw StructuralError("split length must be at least 3");
  }
  if (!(train_fraction > 0.0) || !(train_fraction < 1.0)) {
    throw StructuralError("train fraction must lie in (0, 1)");
  }
  // The nudge makes floor exact for rational fractions (2/3 of 3000 is
  // 2000, not 1999) despite their inexact double representation.
  const std::size_t k = static_cast<std::size_t>(
      std::floor(static_cast<double>(length) * train_fraction + 1e-9));
  SplitRange split;
  split.train_begin = 0;
  split.train_end = k;
  split.test_begin = k;
  split.test_end = length;
  return split;
}

PoseWindow pack_pose_window(const std::vector<ConfidenceVolume>& poses) {
  if (poses.empty()) {
    throw StructuralError("pose window needs at least one volume");
  }
  const ConfidenceVolume& first = poses.front();
  for (const ConfidenceVolume& v : poses) {
    if (!v.well_formed() || v.height != first.height ||
        v.width != first.width || v.joints != first.joints) {
      throw StructuralError("pose window volumes must share shape");
    }
  }
  PoseWindow window;
  window.poses = static_cast<int>(poses.size());
  window.joints = first.joints;
  window.height = first.height;
  window.width = first.width;
  window.packed.reserve(poses.size() * first.data.size());
  for (const ConfidenceVolume& v : poses) {
    window.packed.insert(window.packed.end(), v.data.begin(), v.data.end());
  }
  return window;
}

std::vector<ConfidenceVolume> unpack_pose_window(const PoseWindow& window) {
  if (window.poses <= 0 || window.joints <= 0 || window.height <= 0 ||
      window.width <= 0 ||
      window.packed.size() != static_cast<std::size_t>(window.poses) *
                                  window.joints * window.height *
                                  window.width) {
    throw StructuralError("pose window shape does not match its data");
  }
  std::vector<ConfidenceVolume> out;
  out.reserve(static_cast<std::size_t>(window.poses));
  const std::size_t stride = static_cast<std::size_t>(window.joints) *
                             window.height * window.width;
  for (int i = 0; i < window.poses; ++i) {
    ConfidenceVolume v(window.height, window.width, window.joints);
    std::copy_n(window.packed.begin() + i * stride, stride, v.data.begin());
    out.push_back(std::move(v));
  }
  return out;
}

double default_alpha_sigma(int height, int width) {
  return 10.0 * std::min(height, width) / 256.0;
}

}  // namespace poseclone
