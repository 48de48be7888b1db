#ifndef POSECLONE_IO_HPP_
#define POSECLONE_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "poseclone/metrics.hpp"
#include "poseclone/normalize.hpp"
#include "poseclone/pose.hpp"
#include "poseclone/temporal.hpp"

namespace poseclone {

// ---------------------------------------------------------------------------
// PSQ1 pose-sequence container: "PSQ1", then little-endian u32
// version(=1), frames, joints, height, width, then frames*joints*height*width
// float32 values, frame-major, channel-major, row-major.
// ---------------------------------------------------------------------------

/// Streams confidence volumes into a PSQ1 file. The file appears atomically:
/// data goes to a temporary sibling that finish() renames into place.
class PoseSequenceWriter {
 public:
  PoseSequenceWriter(const std::string& path, std::uint32_t frames,
                     std::uint32_t joints, std::uint32_t height,
                     std::uint32_t width);
  ~PoseSequenceWriter();

  PoseSequenceWriter(const PoseSequenceWriter&) = delete;
  PoseSequenceWriter& operator=(const PoseSequenceWriter&) = delete;

  void append(const ConfidenceVolume& volume);
  void finish();

 private:
  std::filesystem::path path_;
  std::filesystem::path temp_path_;
  std::ofstream out_;
  std::uint32_t declared_frames_;
  std::uint32_t joints_, height_, width_;
  std::uint32_t written_ = 0;
  bool finished_ = false;
};

/// Reads a PSQ1 file one frame at a time.
class PoseSequenceReader {
 public:
  explicit PoseSequenceReader(const std::string& path);

  std::uint32_t frames() const { return frames_; }
  std::uint32_t joints() const { return joints_; }
  std::uint32_t height() const { return height_; }
  std::uint32_t width() const { return width_; }

  /// Next volume in file order. Throws StructuralError past the last frame.
  ConfidenceVolume read_next();

 private:
  std::ifstream in_;
  std::uint32_t frames_ = 0, joints_ = 0, height_ = 0, width_ = 0;
  std::uint32_t read_ = 0;
};

void write_pose_sequence(const std::string& path,
                         const std::vector<ConfidenceVolume>& frames);
std::vector<ConfidenceVolume> read_pose_sequence(const std::string& path);

// ---------------------------------------------------------------------------
// Skeleton JSON: {"width": int, "height": int, "frames": [[18 x ([x, y,
// confidence] | null)], ...]}.
// ---------------------------------------------------------------------------

void write_skeleton_file(const std::string& path, const SkeletonSequence& seq);
SkeletonSequence read_skeleton_file(const std::string& path);

// ---------------------------------------------------------------------------
// Middlebury .flo: float32 magic 202021.25, i32 width, i32 height, then
// height*width interleaved (du, dv) float32 pairs, row-major.
// ---------------------------------------------------------------------------

inline constexpr float kFlowMagic = 202021.25f;

void write_flow(const std::string& path, const FlowField& flow);
FlowField read_flow(const std::string& path);

// ---------------------------------------------------------------------------
// Binary PPM (P6, maxval 255). Values are rounded to the nearest byte on
// write; files decode to exact integer values in [0, 255].
// ---------------------------------------------------------------------------

void write_ppm(const std::string& path, const Frame& frame);
Frame read_ppm(const std::string& path);

// ---------------------------------------------------------------------------
// Coverage report serialization.
// ---------------------------------------------------------------------------

/// One CSV row per driving frame x limb: frame,limb,distance,nn_frame,flagged.
/// Invalid limbs leave distance and nn_frame empty and never flag.
void write_coverage_csv(const std::string& path, const CoverageReport& report);

/// Serialized JSON summary of a coverage report.
std::string coverage_summary_json(const CoverageReport& report);

// ---------------------------------------------------------------------------
// Helpers.
// ---------------------------------------------------------------------------

/// Files with the given extension in a directory, sorted by filename, so
/// zero-padded numbered sequences come back in order.
std::vector<std::filesystem::path> list_sequence_files(
    const std::string& directory, const std::string& extension);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

/// Atomically replaces path with the given contents (write temp, rename).
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace poseclone

#endif  // POSECLONE_IO_HPP_
