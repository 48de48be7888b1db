#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "array_cast.hpp"
#include "poseclone/normalize.hpp"
#include "poseclone/pose.hpp"

namespace poseclone::bindings {

namespace py = pybind11;

namespace {

ConfidenceVolume volume_from_array(const DoubleArray& arr) {
  if (arr.ndim() != 3 || arr.shape(0) < 1 || arr.shape(1) < 1 ||
      arr.shape(2) < 1) {
    throw StructuralError("expected a (joints, height, width) array");
  }
  ConfidenceVolume v(static_cast<int>(arr.shape(1)),
                     static_cast<int>(arr.shape(2)),
                     static_cast<int>(arr.shape(0)));
  std::copy_n(arr.data(), v.data.size(), v.data.begin());
  return v;
}

}  // namespace

void bind_pose(py::module_& m) {
  py::class_<Joint>(m, "Joint")
      .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"),
           py::arg("confidence") = 1.0)
      .def_readwrite("x", &Joint::x)
      .def_readwrite("y", &Joint::y)
      .def_readwrite("confidence", &Joint::confidence)
      .def("__repr__", [](const Joint& j) {
        return "Joint(x=" + std::to_string(j.x) + ", y=" + std::to_string(j.y) +
               ", confidence=" + std::to_string(j.confidence) + ")";
      });

  py::class_<Skeleton>(m, "Skeleton",
                       "18 joint slots; absent joints are None.")
      .def(py::init<>())
      .def("set", &Skeleton::set, py::arg("index"), py::arg("x"), py::arg("y"),
           py::arg("confidence") = 1.0)
      .def("translated", &Skeleton::translated, py::arg("tx"), py::arg("ty"))
      .def_readwrite("joints", &Skeleton::joints);

  py::class_<Limb>(m, "Limb")
      .def(py::init<int, int>(), py::arg("first"), py::arg("second"))
      .def_readwrite("first", &Limb::first)
      .def_readwrite("second", &Limb::second);

  py::class_<LimbSet>(m, "LimbSet",
                      "Ordered set of exactly 12 limbs of the skeleton.")
      .def(py::init([](const std::vector<std::pair<int, int>>& pairs) {
             std::vector<Limb> limbs;
             limbs.reserve(pairs.size());
             for (const auto& [a, b] : pairs) {
               limbs.push_back(Limb{a, b});
             }
             return LimbSet(limbs);
           }),
           py::arg("pairs"))
      .def_static("standard", &LimbSet::standard,
                  py::return_value_policy::reference)
      .def_property_readonly("pairs", [](const LimbSet& set) {
        std::vector<std::pair<int, int>> out;
        for (const Limb& l : set.limbs()) {
          out.emplace_back(l.first, l.second);
        }
        return out;
      });

  py::class_<LimbDisplacement>(m, "LimbDisplacement")
      .def(py::init<double, double>(), py::arg("dx"), py::arg("dy"))
      .def_readwrite("dx", &LimbDisplacement::dx)
      .def_readwrite("dy", &LimbDisplacement::dy)
      .def("__repr__", [](const LimbDisplacement& d) {
        return "LimbDisplacement(dx=" + std::to_string(d.dx) +
               ", dy=" + std::to_string(d.dy) + ")";
      });

  py::class_<PoseDescriptor>(m, "PoseDescriptor",
                             "12 limb displacements; invalid limbs are None.")
      .def(py::init<>())
      .def_readwrite("limbs", &PoseDescriptor::limbs);

  py::class_<ConfidenceVolume>(m, "ConfidenceVolume",
                               "Per-joint confidence maps, one channel each.")
      .def(py::init(&volume_from_array), py::arg("array"))
      .def(py::init<int, int, int>(), py::arg("height"), py::arg("width"),
           py::arg("joints") = kJointCount)
      .def_readonly("height", &ConfidenceVolume::height)
      .def_readonly("width", &ConfidenceVolume::width)
      .def_readonly("joints", &ConfidenceVolume::joints)
      .def_property_readonly("array", [](const ConfidenceVolume& v) {
        return make_array3(v.data, v.joints, v.height, v.width);
      });

  m.def("extract_skeleton", &extract_skeleton, py::arg("volume"),
        py::arg("min_confidence") = kDefaultMinConfidence,
        "Locate each joint at the maximum of its confidence map.");
  m.def("render_pose", &render_pose, py::arg("skeleton"), py::arg("height"),
        py::arg("width"), py::arg("sigma"),
        "Render one 2D Gaussian per present joint.");
  m.def("descriptor", &descriptor, py::arg("skeleton"),
        py::arg("limbs") = LimbSet::standard(),
        "Translation-invariant limb displacement descriptor.");
  m.def("default_render_sigma", &default_render_sigma, py::arg("height"),
        py::arg("width"));

  // Sequence alignment and channel standardization.
  py::class_<SkeletonSequence>(m, "SkeletonSequence")
      .def(py::init<>())
      .def(py::init([](std::vector<Skeleton> frames, int height, int width) {
             return SkeletonSequence{std::move(frames), height, width};
           }),
           py::arg("frames"), py::arg("frame_height"), py::arg("frame_width"))
      .def_readwrite("frames", &SkeletonSequence::frames)
      .def_readwrite("frame_height", &SkeletonSequence::frame_height)
      .def_readwrite("frame_width", &SkeletonSequence::frame_width);

  py::class_<SimilarityTransform>(m, "SimilarityTransform",
                                  "p' = scale * p + (tx, ty)")
      .def(py::init<>())
      .def_readwrite("scale", &SimilarityTransform::scale)
      .def_readwrite("tx", &SimilarityTransform::tx)
      .def_readwrite("ty", &SimilarityTransform::ty)
      .def("apply", &SimilarityTransform::apply, py::arg("joint"));

  py::class_<ChannelStats>(m, "ChannelStats")
      .def_readonly("mean", &ChannelStats::mean)
      .def_readonly("stddev", &ChannelStats::stddev);

  m.def("align_sequence", &align_sequence, py::arg("sequence"),
        py::arg("target_center_x"), py::arg("target_center_y"),
        py::arg("target_hip_width"),
        "One scale plus one translation for the whole video.");
  m.def("standardize_channels", &standardize_channels, py::arg("volumes"),
        "Zero-mean, unit-variance per joint channel over all frames.");
}

}  // namespace poseclone::bindings
