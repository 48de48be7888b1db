// poseclone: batch toolkit for pose confidence maps, skeleton metrics,
// coverage analysis, and temporal-coherence evaluation.
//
// Exit codes: 0 success, 2 invalid input, 3 I/O failure.

#include <cstddef>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "poseclone/io.hpp"
#include "poseclone/metrics.hpp"
#include "poseclone/normalize.hpp"
#include "poseclone/pose.hpp"
#include "poseclone/temporal.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

using nlohmann::json;

struct RenderArgs {
  std::string input;
  std::string output;
  double sigma = 0.0;  // 0 = derive from frame size
};

struct ExtractArgs {
  std::string input;
  std::string output;
  double min_confidence = poseclone::kDefaultMinConfidence;
};

struct NormalizeArgs {
  std::string input;
  std::string output;
  double target_hip_width = 0.0;
  std::vector<double> target_center;  // empty = frame center
};

struct CoverageArgs {
  std::string driving;
  std::string reference;
  double gamma = poseclone::kDefaultGamma;
  std::string csv_out;
  std::string json_out;
};

struct TcLossArgs {
  std::string frames_dir;
  std::string flow_dir;
  std::string skeleton_file;
  double sigma_alpha = 0.0;  // 0 = derive from frame size
  bool flip_flow_sign = false;
  poseclone::TcNormalization normalization =
      poseclone::TcNormalization::kMeanPerElement;
};

struct MseArgs {
  std::string dir_a;
  std::string dir_b;
};

struct SplitArgs {
  std::string frames_dir;
  std::size_t length = 0;
  double fraction = 2.0 / 3.0;
};

int run_render(const RenderArgs& args) {
  const poseclone::SkeletonSequence seq =
      poseclone::read_skeleton_file(args.input);
  if (seq.frames.empty()) {
    throw poseclone::StructuralError("skeleton file has no frames");
  }
  const double sigma =
      args.sigma > 0.0
          ? args.sigma
          : poseclone::default_render_sigma(seq.frame_height, seq.frame_width);
  poseclone::PoseSequenceWriter writer(
      args.output, static_cast<std::uint32_t>(seq.frames.size()),
      poseclone::kJointCount, static_cast<std::uint32_t>(seq.frame_height),
      static_cast<std::uint32_t>(seq.frame_width));
  for (const poseclone::Skeleton& skeleton : seq.frames) {
    writer.append(poseclone::render_pose(skeleton, seq.frame_height,
                                         seq.frame_width, sigma));
  }
  writer.finish();
  std::cout << seq.frames.size() << "\n";
  return 0;
}

int run_extract(const ExtractArgs& args) {
  poseclone::PoseSequenceReader reader(args.input);
  poseclone::SkeletonSequence seq;
  seq.frame_height = static_cast<int>(reader.height());
  seq.frame_width = static_cast<int>(reader.width());
  for (std::uint32_t i = 0; i < reader.frames(); ++i) {
    seq.frames.push_back(
        poseclone::extract_skeleton(reader.read_next(), args.min_confidence));
  }
  poseclone::write_skeleton_file(args.output, seq);
  std::cout << reader.frames() << "\n";
  return 0;
}

int run_normalize(const NormalizeArgs& args) {
  const poseclone::SkeletonSequence seq =
      poseclone::read_skeleton_file(args.input);
  double cx = seq.frame_width / 2.0;
  double cy = seq.frame_height / 2.0;
  if (args.target_center.size() == 2) {
    cx = args.target_center[0];
    cy = args.target_center[1];
  }
  const auto [aligned, transform] =
      poseclone::align_sequence(seq, cx, cy, args.target_hip_width);
  poseclone::write_skeleton_file(args.output, aligned);
  json doc;
  doc["scale"] = transform.scale;
  doc["translate"] = {transform.tx, transform.ty};
  std::cout << doc.dump() << "\n";
  return 0;
}

poseclone::DescriptorSequence descriptors_of(
    const poseclone::SkeletonSequence& seq) {
  poseclone::DescriptorSequence out;
  out.reserve(seq.frames.size());
  for (const poseclone::Skeleton& s : seq.frames) {
    out.push_back(poseclone::descriptor(s));
  }
  return out;
}

int run_coverage(const CoverageArgs& args) {
  const poseclone::DescriptorSequence driving =
      descriptors_of(poseclone::read_skeleton_file(args.driving));
  const poseclone::DescriptorSequence reference =
      descriptors_of(poseclone::read_skeleton_file(args.reference));
  const poseclone::CoverageReport report =
      poseclone::coverage_report(driving, reference, args.gamma);
  if (!args.csv_out.empty()) {
    poseclone::write_coverage_csv(args.csv_out, report);
  }
  const std::string summary = poseclone::coverage_summary_json(report);
  if (!args.json_out.empty()) {
    poseclone::write_text_file(args.json_out, summary);
  }
  std::cout << summary << "\n";
  return 0;
}

int run_tc_loss(const TcLossArgs& args) {
  const auto frame_files =
      poseclone::list_sequence_files(args.frames_dir, ".ppm");
  const auto flow_files = poseclone::list_sequence_files(args.flow_dir, ".flo");
  if (frame_files.size() < 2) {
    throw poseclone::StructuralError("need at least two frames");
  }
  if (flow_files.size() != frame_files.size() - 1) {
    throw poseclone::StructuralError(
        "flow count must be frame count minus one (got " +
        std::to_string(flow_files.size()) + " flows for " +
        std::to_string(frame_files.size()) + " frames)");
  }
  const poseclone::SkeletonSequence skeletons =
      poseclone::read_skeleton_file(args.skeleton_file);
  if (skeletons.frames.size() != frame_files.size()) {
    throw poseclone::StructuralError(
        "skeleton count must match frame count");
  }

  json pairs = json::array();
  double sum = 0.0;
  poseclone::Frame current = poseclone::read_ppm(frame_files[0].string());
  for (std::size_t i = 0; i + 1 < frame_files.size(); ++i) {
    poseclone::Frame next = poseclone::read_ppm(frame_files[i + 1].string());
    poseclone::FlowField flow = poseclone::read_flow(flow_files[i].string());
    if (args.flip_flow_sign) {
      for (double& v : flow.data) {
        v = -v;
      }
    }
    const double sigma =
        args.sigma_alpha > 0.0
            ? args.sigma_alpha
            : poseclone::default_alpha_sigma(next.height, next.width);
    const poseclone::WeightMap alpha = poseclone::limb_weight_map(
        skeletons.frames[i + 1], poseclone::LimbSet::standard(), next.height,
        next.width, sigma);
    const double value =
        poseclone::tc_loss(current, next, flow, alpha, args.normalization);
    pairs.push_back(value);
    sum += value;
    current = std::move(next);
  }
  json doc;
  doc["pairs"] = std::move(pairs);
  doc["mean"] = sum / static_cast<double>(frame_files.size() - 1);
  std::cout << doc.dump() << "\n";
  return 0;
}

int run_mse(const MseArgs& args) {
  const auto files_a = poseclone::list_sequence_files(args.dir_a, ".ppm");
  const auto files_b = poseclone::list_sequence_files(args.dir_b, ".ppm");
  if (files_a.size() != files_b.size()) {
    throw poseclone::StructuralError("sequences must have equal length");
  }
  if (files_a.empty()) {
    throw poseclone::StructuralError("sequences must be non-empty");
  }
  // Streamed pair by pair; same accumulation order as poseclone::mse.
  double total = 0.0;
  std::size_t elements = 0;
  for (std::size_t i = 0; i < files_a.size(); ++i) {
    const poseclone::Frame a = poseclone::read_ppm(files_a[i].string());
    const poseclone::Frame b = poseclone::read_ppm(files_b[i].string());
    if (a.height != b.height || a.width != b.width) {
      throw poseclone::StructuralError("frame dimensions must match");
    }
    double frame_sum = 0.0;
    for (std::size_t k = 0; k < a.data.size(); ++k) {
      const double d = a.data[k] - b.data[k];
      frame_sum += d * d;
    }
    total += frame_sum;
    elements += a.data.size();
  }
  json doc;
  doc["frames"] = files_a.size();
  doc["mse"] = total / static_cast<double>(elements);
  std::cout << doc.dump() << "\n";
  return 0;
}

int run_split(const SplitArgs& args) {
  std::size_t length = args.length;
  if (!args.frames_dir.empty()) {
    length = poseclone::list_sequence_files(args.frames_dir, ".ppm").size();
  }
  const poseclone::SplitRange split =
      poseclone::reenact_split(length, args.fraction);
  json doc;
  doc["train"] = {split.train_begin, split.train_end};
  doc["test"] = {split.test_begin, split.test_end};
  std::cout << doc.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Pose confidence-map toolkit: rendering, alignment, coverage metrics, "
      "and temporal-coherence evaluation"};
  app.require_subcommand(1);

  RenderArgs render_args;
  auto* render = app.add_subcommand(
      "render", "Render a skeleton file into a PSQ1 confidence-map sequence");
  render->add_option("skeleton-file", render_args.input)->required();
  render->add_option("--sigma", render_args.sigma,
                     "Gaussian width in pixels (default scales with size)");
  render->add_option("--out", render_args.output)->required();

  ExtractArgs extract_args;
  auto* extract = app.add_subcommand(
      "extract", "Extract per-channel argmax skeletons from a PSQ1 file");
  extract->add_option("psq-file", extract_args.input)->required();
  extract->add_option("--min-confidence", extract_args.min_confidence,
                      "Peak value below which a joint is absent");
  extract->add_option("--out", extract_args.output)->required();

  NormalizeArgs normalize_args;
  auto* normalize = app.add_subcommand(
      "normalize",
      "Align a skeleton sequence: one scale and one translation per video");
  normalize->add_option("skeleton-file", normalize_args.input)->required();
  normalize->add_option("--target-hip-width", normalize_args.target_hip_width)
      ->required();
  normalize
      ->add_option("--target-center", normalize_args.target_center,
                   "Target center x y (default: frame center)")
      ->expected(2);
  normalize->add_option("--out", normalize_args.output)->required();

  CoverageArgs coverage_args;
  auto* coverage = app.add_subcommand(
      "coverage",
      "Score driving poses against a reference repertoire (per-limb NN)");
  coverage->add_option("driving-skeletons", coverage_args.driving)->required();
  coverage->add_option("reference-skeletons", coverage_args.reference)
      ->required();
  coverage->add_option("--gamma", coverage_args.gamma,
                       "Per-limb flag threshold");
  coverage->add_option("--csv", coverage_args.csv_out,
                       "Per-frame, per-limb CSV output path");
  coverage->add_option("--json", coverage_args.json_out,
                       "Summary JSON output path");

  TcLossArgs tc_args;
  auto* tc = app.add_subcommand(
      "tc-loss",
      "Temporal-coherence loss over consecutive frames and their flows");
  tc->add_option("frames-dir", tc_args.frames_dir, "Directory of .ppm frames")
      ->required();
  tc->add_option("flow-dir", tc_args.flow_dir,
                 "Directory of .flo fields, one per consecutive pair")
      ->required();
  tc->add_option("skeleton-file", tc_args.skeleton_file)->required();
  tc->add_option("--sigma-alpha", tc_args.sigma_alpha,
                 "Limb falloff width in pixels (default scales with size)");
  tc->add_flag("--flip-flow-sign", tc_args.flip_flow_sign,
               "Negate flows given in the forward convention");
  tc->add_option("--normalization", tc_args.normalization,
                 "mean (per element), sum, or alpha (per unit weight)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, poseclone::TcNormalization>{
              {"mean", poseclone::TcNormalization::kMeanPerElement},
              {"sum", poseclone::TcNormalization::kSum},
              {"alpha", poseclone::TcNormalization::kMeanPerAlpha}}));

  MseArgs mse_args;
  auto* mse_cmd = app.add_subcommand(
      "mse", "Mean squared RGB error between two frame directories");
  mse_cmd->add_option("frames-dir-a", mse_args.dir_a)->required();
  mse_cmd->add_option("frames-dir-b", mse_args.dir_b)->required();

  SplitArgs split_args;
  auto* split = app.add_subcommand(
      "split", "Self-reenactment train/test split of a frame sequence");
  split->add_option("frames-dir", split_args.frames_dir);
  auto* length_opt = split->add_option("--length", split_args.length);
  split->add_option("--fraction", split_args.fraction);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (render->parsed()) {
      return run_render(render_args);
    }
    if (extract->parsed()) {
      return run_extract(extract_args);
    }
    if (normalize->parsed()) {
      return run_normalize(normalize_args);
    }
    if (coverage->parsed()) {
      return run_coverage(coverage_args);
    }
    if (tc->parsed()) {
      return run_tc_loss(tc_args);
    }
    if (mse_cmd->parsed()) {
      return run_mse(mse_args);
    }
    if (split->parsed()) {
      if (split_args.frames_dir.empty() && length_opt->count() == 0) {
        throw poseclone::StructuralError(
            "split needs a frames directory or --length");
      }
      return run_split(split_args);
    }
  } catch (const poseclone::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const poseclone::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitInvalid;
}
