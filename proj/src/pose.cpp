#include "poseclone/pose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <utility>

namespace poseclone {

Skeleton Skeleton::translated(double tx, double ty) const {
  Skeleton out;
  for (std::size_t i = 0; i < joints.size(); ++i) {
    if (joints[i]) {
      out.joints[i] = Joint{joints[i]->x + tx, joints[i]->y + ty,
                            joints[i]->confidence};
    }
  }
  return out;
}

LimbSet::LimbSet(const std::vector<Limb>& limbs) {
  if (limbs.size() != kLimbCount) {
    throw StructuralError("limb set must contain exactly " +
                          std::to_string(kLimbCount) + " limbs, got " +
                          std::to_string(limbs.size()));
  }
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < limbs.size(); ++i) {
    const Limb& l = limbs[i];
    if (l.first < 0 || l.first >= kJointCount || l.second < 0 ||
        l.second >= kJointCount) {
      throw StructuralError("limb joint index out of range [0, 18)");
    }
    const std::pair<int, int> key = std::minmax(l.first, l.second);
    if (!seen.insert(key).second) {
      throw StructuralError("duplicate limb pair (" +
                            std::to_string(l.first) + ", " +
                            std::to_string(l.second) + ")");
    }
    limbs_[i] = l;
  }
}

const LimbSet& LimbSet::standard() {
  static const LimbSet set(std::vector<Limb>{
      // arm and shoulder chains
      {kNeck, kShoulderR},
      {kShoulderR, kElbowR},
      {kElbowR, kWristR},
      {kNeck, kShoulderL},
      {kShoulderL, kElbowL},
      {kElbowL, kWristL},
      // legs
      {kNeck, kHipR},
      {kHipR, kKneeR},
      {kKneeR, kAnkleR},
      {kNeck, kHipL},
      {kHipL, kKneeL},
      {kKneeL, kAnkleL},
  });
  return set;
}

ConfidenceVolume::ConfidenceVolume(int height, int width, int joints)
    : height(height), width(width), joints(joints) {
  if (height <= 0 || width <= 0 || joints <= 0) {
    throw StructuralError("confidence volume dimensions must be positive");
  }
  data.assign(static_cast<std::size_t>(joints) * height * width, 0.0);
}

std::span<const double> ConfidenceVolume::channel(int joint) const {
  const std::size_t plane = static_cast<std::size_t>(height) * width;
  return {data.data() + joint * plane, plane};
}

std::span<double> ConfidenceVolume::channel(int joint) {
  const std::size_t plane = static_cast<std::size_t>(height) * width;
  return {data.data() + joint * plane, plane};
}

bool ConfidenceVolume::well_formed() const {
  return height > 0 && width > 0 && joints > 0 &&
         data.size() == static_cast<std::size_t>(joints) * height * width;
}

Skeleton extract_skeleton(const ConfidenceVolume& volume,
                          double min_confidence) {
  if (!volume.well_formed()) {
    throw StructuralError("confidence volume shape does not match its data");
  }
  Skeleton skeleton;
  const int n = std::min(volume.joints, kJointCount);
  for (int j = 0; j < n; ++j) {
    const std::span<const double> map = volume.channel(j);
    double best = -std::numeric_limits<double>::infinity();
    int best_y = 0, best_x = 0;
    std::size_t idx = 0;
    // Strict > keeps the first maximum in scan order: smallest row, then
    // smallest column.
    for (int y = 0; y < volume.height; ++y) {
      for (int x = 0; x < volume.width; ++x, ++idx) {
        if (map[idx] > best) {
          best = map[idx];
          best_y = y;
          best_x = x;
        }
      }
    }
    if (best >= min_confidence) {
      skeleton.joints[j] = Joint{static_cast<double>(best_x),
                                 static_cast<double>(best_y), best};
    }
  }
  return skeleton;
}

ConfidenceVolume render_pose(const Skeleton& skeleton, int height, int width,
                             double sigma) {
  if (height <= 0 || width <= 0) {
    throw StructuralError("render dimensions must be positive");
  }
  if (!(sigma > 0.0)) {
    throw StructuralError("render sigma must be positive");
  }
  ConfidenceVolume volume(height, width);
  const double inv_two_sigma_sq = 1.0 / (2.0 * sigma * sigma);
  for (int j = 0; j < kJointCount; ++j) {
    if (!skeleton.joints[j]) {
      continue;  // absent joints keep an all-zero channel
    }
    const double jx = skeleton.joints[j]->x;
    const double jy = skeleton.joints[j]->y;
    std::span<double> map = volume.channel(j);
    std::size_t idx = 0;
    for (int y = 0; y < height; ++y) {
      const double dy = y - jy;
      for (int x = 0; x < width; ++x, ++idx) {
        const double dx = x - jx;
        map[idx] = std::exp(-(dx * dx + dy * dy) * inv_two_sigma_sq);
      }
    }
  }
  return volume;
}

PoseDescriptor descriptor(const Skeleton& skeleton, const LimbSet& limbs) {
  PoseDescriptor out;
  for (int l = 0; l < kLimbCount; ++l) {
    const auto& a = skeleton.joints[limbs[l].first];
    const auto& b = skeleton.joints[limbs[l].second];
    if (a && b) {
      out.limbs[l] = LimbDisplacement{a->x - b->x, a->y - b->y};
    }
  }
  return out;
}

double default_render_sigma(int height, int width) {
  return 6.0 * std::min(height, width) / 256.0;
}

}  // namespace poseclone
