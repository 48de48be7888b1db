#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "array_cast.hpp"
#include "poseclone/temporal.hpp"

namespace poseclone::bindings {

namespace py = pybind11;

namespace {

Frame frame_from_array(const DoubleArray& arr) {
  check_3d(arr, 3, "(3, height, width)");
  Frame f(static_cast<int>(arr.shape(1)), static_cast<int>(arr.shape(2)));
  std::copy_n(arr.data(), f.data.size(), f.data.begin());
  return f;
}

FlowField flow_from_array(const DoubleArray& arr) {
  check_3d(arr, 2, "(2, height, width)");
  FlowField f(static_cast<int>(arr.shape(1)), static_cast<int>(arr.shape(2)));
  std::copy_n(arr.data(), f.data.size(), f.data.begin());
  return f;
}

WeightMap map_from_array(const DoubleArray& arr) {
  if (arr.ndim() != 2 || arr.shape(0) < 1 || arr.shape(1) < 1) {
    throw StructuralError("expected a (height, width) array");
  }
  WeightMap w(static_cast<int>(arr.shape(0)), static_cast<int>(arr.shape(1)));
  std::copy_n(arr.data(), w.data.size(), w.data.begin());
  return w;
}

}  // namespace

void bind_temporal(py::module_& m) {
  py::class_<Frame>(m, "Frame", "Planar RGB frame with values in [0, 255].")
      .def(py::init(&frame_from_array), py::arg("array"))
      .def(py::init<int, int>(), py::arg("height"), py::arg("width"))
      .def_readonly("height", &Frame::height)
      .def_readonly("width", &Frame::width)
      .def_property_readonly("array", [](const Frame& f) {
        return make_array3(f.data, 3, f.height, f.width);
      });

  py::class_<FlowField>(m, "FlowField",
                        "Planar (du, dv) pixel displacements.")
      .def(py::init(&flow_from_array), py::arg("array"))
      .def(py::init<int, int>(), py::arg("height"), py::arg("width"))
      .def_readonly("height", &FlowField::height)
      .def_readonly("width", &FlowField::width)
      .def_property_readonly("array", [](const FlowField& f) {
        return make_array3(f.data, 2, f.height, f.width);
      });

  py::class_<WeightMap>(m, "WeightMap", "Values in [0, 1], 1 on limbs.")
      .def(py::init(&map_from_array), py::arg("array"))
      .def(py::init<int, int>(), py::arg("height"), py::arg("width"))
      .def_readonly("height", &WeightMap::height)
      .def_readonly("width", &WeightMap::width)
      .def_property_readonly("array", [](const WeightMap& w) {
        return make_array2(w.data, w.height, w.width);
      });

  py::class_<PoseWindow>(m, "PoseWindow",
                         "N volumes packed frame-major into (J*N, H, W).")
      .def_readonly("poses", &PoseWindow::poses)
      .def_readonly("joints", &PoseWindow::joints)
      .def_readonly("height", &PoseWindow::height)
      .def_readonly("width", &PoseWindow::width)
      .def_property_readonly("array", [](const PoseWindow& w) {
        return make_array3(w.packed,
                           static_cast<py::ssize_t>(w.poses) * w.joints,
                           w.height, w.width);
      });

  py::enum_<TcNormalization>(m, "TcNormalization")
      .value("MEAN_PER_ELEMENT", TcNormalization::kMeanPerElement)
      .value("SUM", TcNormalization::kSum)
      .value("MEAN_PER_ALPHA", TcNormalization::kMeanPerAlpha);

  py::class_<SplitRange>(m, "SplitRange")
      .def_readonly("train_begin", &SplitRange::train_begin)
      .def_readonly("train_end", &SplitRange::train_end)
      .def_readonly("test_begin", &SplitRange::test_begin)
      .def_readonly("test_end", &SplitRange::test_end)
      .def_property_readonly("train",
                             [](const SplitRange& s) {
                               return py::make_tuple(s.train_begin,
                                                     s.train_end);
                             })
      .def_property_readonly("test", [](const SplitRange& s) {
        return py::make_tuple(s.test_begin, s.test_end);
      });

  m.def("warp", &warp, py::arg("image"), py::arg("flow"),
        "Backward bilinear warp with border clamping.");
  m.def("point_segment_distance", &point_segment_distance, py::arg("px"),
        py::arg("py"), py::arg("ax"), py::arg("ay"), py::arg("bx"),
        py::arg("by"));
  m.def("limb_weight_map", &limb_weight_map, py::arg("skeleton"),
        py::arg("limbs"), py::arg("height"), py::arg("width"),
        py::arg("sigma_alpha"),
        "Gaussian falloff from the skeleton limbs.");
  m.def("tc_loss", &tc_loss, py::arg("gen_i"), py::arg("gen_next"),
        py::arg("flow"), py::arg("alpha"),
        py::arg("normalization") = TcNormalization::kMeanPerElement,
        "Weighted L1 between the warped frame and the next frame.");
  m.def("mse", &mse, py::arg("a"), py::arg("b"),
        "Mean squared RGB difference over two frame sequences.");
  m.def("reenact_split", &reenact_split, py::arg("length"),
        py::arg("train_fraction") = 2.0 / 3.0,
        "Contiguous train/test split at floor(length * train_fraction).");
  m.def("pack_pose_window", &pack_pose_window, py::arg("poses"));
  m.def("unpack_pose_window", &unpack_pose_window, py::arg("window"));
  m.def("default_alpha_sigma", &default_alpha_sigma, py::arg("height"),
        py::arg("width"));
}

}  // namespace poseclone::bindings
