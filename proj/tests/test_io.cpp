#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "poseclone/io.hpp"
#include "synthetic.hpp"

using namespace poseclone;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() /
                       ("poseclone_io_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

std::vector<char> slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::vector<char>(std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>());
}

// Random values that are exactly representable as float32, so write/read
// cycles must reproduce files bitwise.
double random_f32(std::mt19937_64& rng) {
  std::uniform_real_distribution<float> dist(-100.0f, 100.0f);
  return static_cast<double>(dist(rng));
}

}  // namespace

TEST_CASE("PSQ1 files round-trip bitwise") {
  const fs::path dir = temp_dir();
  std::mt19937_64 rng(201);
  std::vector<ConfidenceVolume> frames;
  for (int t = 0; t < 3; ++t) {
    ConfidenceVolume v(5, 7, 4);
    for (double& x : v.data) {
      x = random_f32(rng);
    }
    frames.push_back(std::move(v));
  }

  const fs::path first = dir / "a.psq";
  const fs::path second = dir / "b.psq";
  write_pose_sequence(first.string(), frames);
  const auto back = read_pose_sequence(first.string());
  REQUIRE(back.size() == frames.size());
  for (std::size_t t = 0; t < frames.size(); ++t) {
    CHECK(back[t].data == frames[t].data);
  }
  write_pose_sequence(second.string(), back);
  CHECK(slurp(first) == slurp(second));
}

TEST_CASE("PSQ1 header is validated") {
  const fs::path dir = temp_dir();
  const fs::path path = dir / "bad.psq";

  CHECK_THROWS_AS(read_pose_sequence((dir / "missing.psq").string()),
                  IoError);

  {
    std::ofstream out(path, std::ios::binary);
    out << "JUNKJUNKJUNKJUNKJUNKJUNKJUNK";
  }
  CHECK_THROWS_AS(read_pose_sequence(path.string()), StructuralError);

  // A declared payload larger than the file.
  std::vector<ConfidenceVolume> frames{ConfidenceVolume(4, 4, 2)};
  write_pose_sequence(path.string(), frames);
  auto bytes = slurp(path);
  bytes.resize(bytes.size() - 4);
  {
    std::ofstream out(path, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
  CHECK_THROWS_AS(read_pose_sequence(path.string()), StructuralError);
}

TEST_CASE("PSQ1 writer enforces the declared shape and count") {
  const fs::path dir = temp_dir();
  const fs::path path = dir / "strict.psq";
  PoseSequenceWriter writer(path.string(), 2, 3, 4, 4);
  writer.append(ConfidenceVolume(4, 4, 3));
  CHECK_THROWS_AS(writer.append(ConfidenceVolume(4, 5, 3)), StructuralError);
  CHECK_THROWS_AS(writer.finish(), StructuralError);  // one frame missing
  // An unfinished writer leaves no file behind.
  CHECK_FALSE(fs::exists(path));
}

TEST_CASE("skeleton JSON round-trips bitwise") {
  const fs::path dir = temp_dir();
  std::mt19937_64 rng(203);
  SkeletonSequence seq;
  seq.frame_height = 256;
  seq.frame_width = 320;
  for (int i = 0; i < 4; ++i) {
    Skeleton s = synthetic::random_full_skeleton(rng, 320.0, 256.0);
    if (i % 2 == 1) {
      s.joints[i].reset();
      s.joints[17 - i].reset();
    }
    seq.frames.push_back(s);
  }

  const fs::path first = dir / "a.json";
  const fs::path second = dir / "b.json";
  write_skeleton_file(first.string(), seq);
  const SkeletonSequence back = read_skeleton_file(first.string());
  REQUIRE(back.frames.size() == seq.frames.size());
  CHECK(back.frame_width == seq.frame_width);
  CHECK(back.frame_height == seq.frame_height);
  for (std::size_t i = 0; i < seq.frames.size(); ++i) {
    for (int j = 0; j < kJointCount; ++j) {
      const auto& a = seq.frames[i].joints[j];
      const auto& b = back.frames[i].joints[j];
      CHECK(a.has_value() == b.has_value());
      if (a && b) {
        CHECK(a->x == b->x);
        CHECK(a->y == b->y);
        CHECK(a->confidence == b->confidence);
      }
    }
  }
  write_skeleton_file(second.string(), back);
  CHECK(slurp(first) == slurp(second));
}

TEST_CASE("skeleton JSON rejects malformed documents") {
  const fs::path dir = temp_dir();
  const fs::path path = dir / "bad.json";

  CHECK_THROWS_AS(read_skeleton_file((dir / "missing.json").string()),
                  IoError);

  const auto write_raw = [&](const std::string& text) {
    std::ofstream out(path);
    out << text;
  };

  write_raw("{not json");
  CHECK_THROWS_AS(read_skeleton_file(path.string()), StructuralError);

  write_raw(R"({"width": 10, "frames": []})");
  CHECK_THROWS_AS(read_skeleton_file(path.string()), StructuralError);

  // 17 joints instead of 18.
  nlohmann::json doc;
  doc["width"] = 8;
  doc["height"] = 8;
  doc["frames"] = {std::vector<nlohmann::json>(17, nullptr)};
  write_raw(doc.dump());
  CHECK_THROWS_AS(read_skeleton_file(path.string()), StructuralError);

  // Non-finite coordinate.
  doc["frames"] = {std::vector<nlohmann::json>(18, nullptr)};
  doc["frames"][0][3] = {1.0, 2.0, 0.5};
  write_raw(doc.dump());
  CHECK_NOTHROW(read_skeleton_file(path.string()));
  write_raw(
      R"({"width": 8, "height": 8, "frames": [[null,null,null,[1e999,2,0.5],)"
      R"(null,null,null,null,null,null,null,null,null,null,null,null,null,)"
      R"(null]]})");
  CHECK_THROWS_AS(read_skeleton_file(path.string()), StructuralError);
}

TEST_CASE("flow files round-trip bitwise and carry the published magic") {
  const fs::path dir = temp_dir();
  std::mt19937_64 rng(207);
  FlowField flow(6, 9);
  for (double& v : flow.data) {
    v = random_f32(rng);
  }

  const fs::path first = dir / "a.flo";
  const fs::path second = dir / "b.flo";
  write_flow(first.string(), flow);

  const auto bytes = slurp(first);
  REQUIRE(bytes.size() == 12 + 6 * 9 * 8);
  float magic = 0.0f;
  std::memcpy(&magic, bytes.data(), 4);
  CHECK(magic == 202021.25f);
  std::int32_t width = 0, height = 0;
  std::memcpy(&width, bytes.data() + 4, 4);
  std::memcpy(&height, bytes.data() + 8, 4);
  CHECK(width == 9);
  CHECK(height == 6);

  const FlowField back = read_flow(first.string());
  CHECK(back.data == flow.data);
  write_flow(second.string(), back);
  CHECK(slurp(first) == slurp(second));
}

TEST_CASE("flow reader rejects bad headers and payloads") {
  const fs::path dir = temp_dir();
  const fs::path path = dir / "bad.flo";

  CHECK_THROWS_AS(read_flow((dir / "missing.flo").string()), IoError);

  {
    std::ofstream out(path, std::ios::binary);
    const float wrong = 123.0f;
    out.write(reinterpret_cast<const char*>(&wrong), 4);
    const std::int32_t dims[2] = {2, 2};
    out.write(reinterpret_cast<const char*>(dims), 8);
  }
  CHECK_THROWS_AS(read_flow(path.string()), StructuralError);

  FlowField flow(2, 2);
  flow.du(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(write_flow(path.string(), flow), Error);
}

TEST_CASE("non-finite flow payloads are rejected on read") {
  const fs::path dir = temp_dir();
  const fs::path path = dir / "nan.flo";
  {
    std::ofstream out(path, std::ios::binary);
    const float magic = kFlowMagic;
    out.write(reinterpret_cast<const char*>(&magic), 4);
    const std::int32_t dims[2] = {1, 1};
    out.write(reinterpret_cast<const char*>(dims), 8);
    const float values[2] = {std::numeric_limits<float>::quiet_NaN(), 0.0f};
    out.write(reinterpret_cast<const char*>(values), 8);
  }
  CHECK_THROWS_AS(read_flow(path.string()), StructuralError);
}

TEST_CASE("PPM files round-trip bitwise") {
  const fs::path dir = temp_dir();
  std::mt19937_64 rng(211);
  std::uniform_int_distribution<int> byte(0, 255);
  Frame frame(11, 5);
  for (double& v : frame.data) {
    v = static_cast<double>(byte(rng));
  }

  const fs::path first = dir / "a.ppm";
  const fs::path second = dir / "b.ppm";
  write_ppm(first.string(), frame);
  const Frame back = read_ppm(first.string());
  CHECK(back.data == frame.data);
  write_ppm(second.string(), back);
  CHECK(slurp(first) == slurp(second));
}

TEST_CASE("PPM reader understands comments and rejects bad input") {
  const fs::path dir = temp_dir();
  const fs::path path = dir / "hand.ppm";
  {
    std::ofstream out(path, std::ios::binary);
    out << "P6\n# hand-written example\n2 1\n# another comment\n255\n";
    const unsigned char px[6] = {1, 2, 3, 250, 251, 252};
    out.write(reinterpret_cast<const char*>(px), 6);
  }
  const Frame frame = read_ppm(path.string());
  CHECK(frame.width == 2);
  CHECK(frame.height == 1);
  CHECK(frame.at(0, 0, 0) == 1.0);
  CHECK(frame.at(2, 0, 1) == 252.0);

  CHECK_THROWS_AS(read_ppm((dir / "missing.ppm").string()), IoError);

  {
    std::ofstream out(path, std::ios::binary);
    out << "P5\n2 1\n255\n";
  }
  CHECK_THROWS_AS(read_ppm(path.string()), StructuralError);

  {
    std::ofstream out(path, std::ios::binary);
    out << "P6\n2 1\n65535\n";
  }
  CHECK_THROWS_AS(read_ppm(path.string()), StructuralError);

  {
    std::ofstream out(path, std::ios::binary);
    out << "P6\n2 1\n255\nab";  // truncated payload
  }
  CHECK_THROWS_AS(read_ppm(path.string()), StructuralError);
}

TEST_CASE("sequence listings come back sorted by filename") {
  const fs::path dir = temp_dir();
  for (const char* name : {"frame_0002.ppm", "frame_0000.ppm",
                           "frame_0001.ppm", "notes.txt"}) {
    std::ofstream out(dir / name);
    out << "x";
  }
  const auto files = list_sequence_files(dir.string(), ".ppm");
  REQUIRE(files.size() == 3);
  CHECK(files[0].filename() == "frame_0000.ppm");
  CHECK(files[1].filename() == "frame_0001.ppm");
  CHECK(files[2].filename() == "frame_0002.ppm");

  CHECK_THROWS_AS(list_sequence_files((dir / "nope").string(), ".ppm"),
                  IoError);
}

TEST_CASE("format_double survives a parse round-trip") {
  std::mt19937_64 rng(213);
  std::uniform_real_distribution<double> dist(-1e12, 1e12);
  for (int i = 0; i < 1000; ++i) {
    const double value = dist(rng) * std::pow(10.0, int(rng() % 25) - 12);
    CHECK(std::stod(format_double(value)) == value);
  }
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("writers do not leave temporary files around") {
  const fs::path dir = temp_dir();
  SkeletonSequence seq;
  seq.frame_height = seq.frame_width = 16;
  seq.frames.push_back(synthetic::stick_figure());
  write_skeleton_file((dir / "out.json").string(), seq);
  std::size_t entries = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    (void)entry;
    ++entries;
  }
  CHECK(entries == 1);
}
