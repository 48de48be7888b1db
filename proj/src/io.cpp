#include "poseclone/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string_view>
#include <system_error>

#include <json.hpp>

namespace poseclone {

namespace fs = std::filesystem;

namespace {

constexpr std::uint32_t kPsqVersion = 1;
// Guards header-driven allocations against implausible declared sizes.
constexpr std::uint64_t kMaxPayloadElements = 1ull << 34;

void put_u32(std::ostream& out, std::uint32_t v) {
  const std::array<char, 4> b{
      static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
      static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(b.data(), b.size());
}

std::uint32_t get_u32(std::istream& in) {
  std::array<unsigned char, 4> b{};
  in.read(reinterpret_cast<char*>(b.data()), b.size());
  return static_cast<std::uint32_t>(b[0]) |
         (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f32(std::ostream& out, float v) {
  put_u32(out, std::bit_cast<std::uint32_t>(v));
}

float get_f32(std::istream& in) {
  return std::bit_cast<float>(get_u32(in));
}

void put_i32(std::ostream& out, std::int32_t v) {
  put_u32(out, std::bit_cast<std::uint32_t>(v));
}

std::int32_t get_i32(std::istream& in) {
  return std::bit_cast<std::int32_t>(get_u32(in));
}

fs::path temp_sibling(const fs::path& path) {
  fs::path t = path;
  t += ".tmp";
  return t;
}

void rename_into_place(const fs::path& temp, const fs::path& target) {
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw IoError("cannot move temporary file into place at " +
                  target.string());
  }
}

std::uintmax_t file_size_of(std::istream& in) {
  const auto pos = in.tellg();
  in.seekg(0, std::ios::end);
  const auto end = in.tellg();
  in.seekg(pos);
  return static_cast<std::uintmax_t>(end);
}

}  // namespace

// ---------------------------------------------------------------------------
// PSQ1
// ---------------------------------------------------------------------------

PoseSequenceWriter::PoseSequenceWriter(const std::string& path,
                                       std::uint32_t frames,
                                       std::uint32_t joints,
                                       std::uint32_t height,
                                       std::uint32_t width)
    : path_(path),
      temp_path_(temp_sibling(path_)),
      declared_frames_(frames),
      joints_(joints),
      height_(height),
      width_(width) {
  if (frames == 0 || joints == 0 || height == 0 || width == 0) {
    throw StructuralError("PSQ1 dimensions must be positive");
  }
  const std::uint64_t elements = static_cast<std::uint64_t>(frames) * joints *
                                 height * width;
  if (elements > kMaxPayloadElements) {
    throw StructuralError("PSQ1 payload implausibly large");
  }
  out_.open(temp_path_, std::ios::binary | std::ios::trunc);
  if (!out_) {
    throw IoError("cannot open " + temp_path_.string() + " for writing");
  }
  out_.write("PSQ1", 4);
  put_u32(out_, kPsqVersion);
  put_u32(out_, frames);
  put_u32(out_, joints);
  put_u32(out_, height);
  put_u32(out_, width);
}

PoseSequenceWriter::~PoseSequenceWriter() {
  if (!finished_) {
    out_.close();
    std::error_code ec;
    fs::remove(temp_path_, ec);
  }
}

void PoseSequenceWriter::append(const ConfidenceVolume& volume) {
  if (finished_) {
    throw StructuralError("writer already finished");
  }
  if (written_ >= declared_frames_) {
    throw StructuralError("more frames appended than declared");
  }
  if (!volume.well_formed() ||
      volume.joints != static_cast<int>(joints_) ||
      volume.height != static_cast<int>(height_) ||
      volume.width != static_cast<int>(width_)) {
    throw StructuralError("appended volume does not match the declared shape");
  }
  for (const double v : volume.data) {
    put_f32(out_, static_cast<float>(v));
  }
  if (!out_) {
    throw IoError("write failure on " + temp_path_.string());
  }
  ++written_;
}

void PoseSequenceWriter::finish() {
  if (finished_) {
    return;
  }
  if (written_ != declared_frames_) {
    throw StructuralError("frame count mismatch: declared " +
                          std::to_string(declared_frames_) + ", wrote " +
                          std::to_string(written_));
  }
  out_.flush();
  if (!out_) {
    throw IoError("write failure on " + temp_path_.string());
  }
  out_.close();
  rename_into_place(temp_path_, path_);
  finished_ = true;
}

PoseSequenceReader::PoseSequenceReader(const std::string& path) {
  in_.open(path, std::ios::binary);
  if (!in_) {
    throw IoError("cannot open " + path + " for reading");
  }
  std::array<char, 4> magic{};
  in_.read(magic.data(), magic.size());
  if (!in_ || std::string_view(magic.data(), 4) != "PSQ1") {
    throw StructuralError("not a PSQ1 file: " + path);
  }
  const std::uint32_t version = get_u32(in_);
  if (version != kPsqVersion) {
    throw StructuralError("unsupported PSQ1 version " +
                          std::to_string(version));
  }
  frames_ = get_u32(in_);
  joints_ = get_u32(in_);
  height_ = get_u32(in_);
  width_ = get_u32(in_);
  if (!in_ || joints_ == 0 || height_ == 0 || width_ == 0) {
    throw StructuralError("invalid PSQ1 header in " + path);
  }
  const std::uint64_t elements = static_cast<std::uint64_t>(frames_) *
                                 joints_ * height_ * width_;
  if (elements > kMaxPayloadElements) {
    throw StructuralError("PSQ1 payload implausibly large");
  }
  const std::uintmax_t expected = 24 + elements * 4;
  if (file_size_of(in_) != expected) {
    throw StructuralError("PSQ1 payload length does not match its header");
  }
}

ConfidenceVolume PoseSequenceReader::read_next() {
  if (read_ >= frames_) {
    throw StructuralError("no frames left to read");
  }
  ConfidenceVolume volume(static_cast<int>(height_), static_cast<int>(width_),
                          static_cast<int>(joints_));
  for (double& v : volume.data) {
    v = static_cast<double>(get_f32(in_));
  }
  if (!in_) {
    throw StructuralError("truncated PSQ1 payload");
  }
  ++read_;
  return volume;
}

void write_pose_sequence(const std::string& path,
                         const std::vector<ConfidenceVolume>& frames) {
  if (frames.empty()) {
    throw StructuralError("cannot write an empty pose sequence");
  }
  const ConfidenceVolume& first = frames.front();
  if (!first.well_formed()) {
    throw StructuralError("malformed confidence volume");
  }
  PoseSequenceWriter writer(path, static_cast<std::uint32_t>(frames.size()),
                            static_cast<std::uint32_t>(first.joints),
                            static_cast<std::uint32_t>(first.height),
                            static_cast<std::uint32_t>(first.width));
  for (const ConfidenceVolume& v : frames) {
    writer.append(v);
  }
  writer.finish();
}

std::vector<ConfidenceVolume> read_pose_sequence(const std::string& path) {
  PoseSequenceReader reader(path);
  std::vector<ConfidenceVolume> out;
  out.reserve(reader.frames());
  for (std::uint32_t i = 0; i < reader.frames(); ++i) {
    out.push_back(reader.read_next());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Skeleton JSON
// ---------------------------------------------------------------------------

void write_skeleton_file(const std::string& path,
                         const SkeletonSequence& seq) {
  nlohmann::json doc;
  doc["width"] = seq.frame_width;
  doc["height"] = seq.frame_height;
  nlohmann::json frames = nlohmann::json::array();
  for (const Skeleton& s : seq.frames) {
    nlohmann::json frame = nlohmann::json::array();
    for (const auto& joint : s.joints) {
      if (joint) {
        frame.push_back({joint->x, joint->y, joint->confidence});
      } else {
        frame.push_back(nullptr);
      }
    }
    frames.push_back(std::move(frame));
  }
  doc["frames"] = std::move(frames);
  write_text_file(path, doc.dump());
}

SkeletonSequence read_skeleton_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path + " for reading");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError("malformed skeleton JSON in " + path + ": " +
                          e.what());
  }
  if (!doc.is_object() || !doc.contains("width") || !doc.contains("height") ||
      !doc.contains("frames") || !doc["width"].is_number_integer() ||
      !doc["height"].is_number_integer() || !doc["frames"].is_array()) {
    throw StructuralError("skeleton JSON must carry width, height, frames");
  }
  SkeletonSequence seq;
  seq.frame_width = doc["width"].get<int>();
  seq.frame_height = doc["height"].get<int>();
  if (seq.frame_width <= 0 || seq.frame_height <= 0) {
    throw StructuralError("skeleton JSON dimensions must be positive");
  }
  for (const auto& frame : doc["frames"]) {
    if (!frame.is_array() ||
        frame.size() != static_cast<std::size_t>(kJointCount)) {
      throw StructuralError("every skeleton frame needs exactly 18 entries");
    }
    Skeleton s;
    for (std::size_t i = 0; i < static_cast<std::size_t>(kJointCount); ++i) {
      const auto& entry = frame[i];
      if (entry.is_null()) {
        continue;
      }
      if (!entry.is_array() || entry.size() != 3 ||
          !entry[0].is_number() || !entry[1].is_number() ||
          !entry[2].is_number()) {
        throw StructuralError("joint entries must be [x, y, confidence]");
      }
      const double x = entry[0].get<double>();
      const double y = entry[1].get<double>();
      const double confidence = entry[2].get<double>();
      if (!std::isfinite(x) || !std::isfinite(y)) {
        throw StructuralError("present joints must have finite coordinates");
      }
      s.joints[i] = Joint{x, y, confidence};
    }
    seq.frames.push_back(s);
  }
  return seq;
}

// ---------------------------------------------------------------------------
// Middlebury .flo
// ---------------------------------------------------------------------------

void write_flow(const std::string& path, const FlowField& flow) {
  if (!flow.well_formed()) {
    throw StructuralError("malformed flow field");
  }
  for (const double v : flow.data) {
    if (!std::isfinite(v)) {
      throw StructuralError("flow displacements must be finite");
    }
  }
  const fs::path target(path);
  const fs::path temp = temp_sibling(target);
  std::ofstream out(temp, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + temp.string() + " for writing");
  }
  put_f32(out, kFlowMagic);
  put_i32(out, flow.width);
  put_i32(out, flow.height);
  for (int y = 0; y < flow.height; ++y) {
    for (int x = 0; x < flow.width; ++x) {
      put_f32(out, static_cast<float>(flow.du(y, x)));
      put_f32(out, static_cast<float>(flow.dv(y, x)));
    }
  }
  out.flush();
  if (!out) {
    throw IoError("write failure on " + temp.string());
  }
  out.close();
  rename_into_place(temp, target);
}

FlowField read_flow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path + " for reading");
  }
  const float magic = get_f32(in);
  if (!in || magic != kFlowMagic) {
    throw StructuralError("bad .flo magic in " + path);
  }
  const std::int32_t width = get_i32(in);
  const std::int32_t height = get_i32(in);
  if (!in || width <= 0 || height <= 0 ||
      static_cast<std::uint64_t>(width) * height > kMaxPayloadElements) {
    throw StructuralError("invalid .flo dimensions in " + path);
  }
  const std::uintmax_t expected =
      12 + static_cast<std::uintmax_t>(width) * height * 8;
  if (file_size_of(in) != expected) {
    throw StructuralError(".flo payload length does not match its header");
  }
  FlowField flow(height, width);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const float du = get_f32(in);
      const float dv = get_f32(in);
      if (!std::isfinite(du) || !std::isfinite(dv)) {
        throw StructuralError(".flo displacements must be finite");
      }
      flow.du(y, x) = du;
      flow.dv(y, x) = dv;
    }
  }
  if (!in) {
    throw StructuralError("truncated .flo payload");
  }
  return flow;
}

// ---------------------------------------------------------------------------
// PPM
// ---------------------------------------------------------------------------

namespace {

// Reads one PPM header token, skipping whitespace and # comments.
std::string ppm_token(std::istream& in) {
  std::string token;
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') {
        c = in.get();
      }
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  while (c != EOF && !std::isspace(c)) {
    token.push_back(static_cast<char>(c));
    c = in.get();
  }
  return token;
}

int ppm_int(std::istream& in, const std::string& what) {
  const std::string token = ppm_token(in);
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw StructuralError("bad PPM " + what);
  }
  return value;
}

}  // namespace

void write_ppm(const std::string& path, const Frame& frame) {
  if (!frame.well_formed()) {
    throw StructuralError("malformed frame");
  }
  const fs::path target(path);
  const fs::path temp = temp_sibling(target);
  std::ofstream out(temp, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + temp.string() + " for writing");
  }
  out << "P6\n" << frame.width << " " << frame.height << "\n255\n";
  std::vector<unsigned char> row(static_cast<std::size_t>(frame.width) * 3);
  for (int y = 0; y < frame.height; ++y) {
    std::size_t k = 0;
    for (int x = 0; x < frame.width; ++x) {
      for (int c = 0; c < 3; ++c) {
        const double v = std::clamp(frame.at(c, y, x), 0.0, 255.0);
        row[k++] = static_cast<unsigned char>(std::llround(v));
      }
    }
    out.write(reinterpret_cast<const char*>(row.data()), row.size());
  }
  out.flush();
  if (!out) {
    throw IoError("write failure on " + temp.string());
  }
  out.close();
  rename_into_place(temp, target);
}

Frame read_ppm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path + " for reading");
  }
  if (ppm_token(in) != "P6") {
    throw StructuralError("not a binary PPM (P6): " + path);
  }
  const int width = ppm_int(in, "width");
  const int height = ppm_int(in, "height");
  const int maxval = ppm_int(in, "maxval");
  if (width <= 0 || height <= 0 ||
      static_cast<std::uint64_t>(width) * height > kMaxPayloadElements) {
    throw StructuralError("invalid PPM dimensions in " + path);
  }
  if (maxval != 255) {
    throw StructuralError("PPM maxval must be 255, got " +
                          std::to_string(maxval));
  }
  // ppm_token consumed exactly one whitespace byte after the maxval.
  Frame frame(height, width);
  std::vector<unsigned char> row(static_cast<std::size_t>(width) * 3);
  for (int y = 0; y < height; ++y) {
    in.read(reinterpret_cast<char*>(row.data()), row.size());
    if (!in) {
      throw StructuralError("truncated PPM payload in " + path);
    }
    std::size_t k = 0;
    for (int x = 0; x < width; ++x) {
      for (int c = 0; c < 3; ++c) {
        frame.at(c, y, x) = static_cast<double>(row[k++]);
      }
    }
  }
  return frame;
}

// ---------------------------------------------------------------------------
// Coverage serialization
// ---------------------------------------------------------------------------

void write_coverage_csv(const std::string& path,
                        const CoverageReport& report) {
  std::ostringstream out;
  out << "frame,limb,distance,nn_frame,flagged\n";
  for (const CoverageFrame& frame : report.per_frame) {
    for (int l = 0; l < kLimbCount; ++l) {
      out << frame.frame_index << "," << l << ",";
      const auto& limb = frame.per_limb[l];
      if (limb) {
        out << format_double(limb->distance) << "," << limb->nn_frame << ","
            << (limb->flagged ? 1 : 0);
      } else {
        out << ",,0";
      }
      out << "\n";
    }
  }
  write_text_file(path, out.str());
}

std::string coverage_summary_json(const CoverageReport& report) {
  nlohmann::json doc;
  doc["frames"] = report.per_frame.size();
  if (report.summary.mean_distance) {
    doc["mean_distance"] = *report.summary.mean_distance;
  } else {
    doc["mean_distance"] = nullptr;
  }
  if (report.summary.max_distance) {
    doc["max_distance"] = *report.summary.max_distance;
  } else {
    doc["max_distance"] = nullptr;
  }
  doc["fraction_frames_with_any_flag"] =
      report.summary.fraction_frames_with_any_flag;
  return doc.dump();
}

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

std::vector<fs::path> list_sequence_files(const std::string& directory,
                                          const std::string& extension) {
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    throw IoError(directory + " is not a readable directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == extension) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().string() < b.filename().string();
            });
  return files;
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(),
                                       value);
  if (ec != std::errc{}) {
    std::snprintf(buf.data(), buf.size(), "%.17g", value);
    return std::string(buf.data());
  }
  return std::string(buf.data(), ptr);
}

void write_text_file(const std::string& path, const std::string& contents) {
  const fs::path target(path);
  const fs::path temp = temp_sibling(target);
  std::ofstream out(temp, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + temp.string() + " for writing");
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) {
    throw IoError("write failure on " + temp.string());
  }
  out.close();
  rename_into_place(temp, target);
}

}  // namespace poseclone
