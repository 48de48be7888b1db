#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "poseclone/io.hpp"

namespace poseclone::bindings {

namespace py = pybind11;

void bind_io(py::module_& m) {
  m.attr("FLOW_MAGIC") = kFlowMagic;

  m.def("write_pose_sequence", &write_pose_sequence, py::arg("path"),
        py::arg("frames"), "Write confidence volumes as a PSQ1 file.");
  m.def("read_pose_sequence", &read_pose_sequence, py::arg("path"));

  m.def("write_skeleton_file", &write_skeleton_file, py::arg("path"),
        py::arg("sequence"), "Write a skeleton sequence as JSON.");
  m.def("read_skeleton_file", &read_skeleton_file, py::arg("path"));

  m.def("write_flow", &write_flow, py::arg("path"), py::arg("flow"),
        "Write a flow field in the Middlebury .flo format.");
  m.def("read_flow", &read_flow, py::arg("path"));

  m.def("write_ppm", &write_ppm, py::arg("path"), py::arg("frame"),
        "Write a frame as binary PPM (P6, maxval 255).");
  m.def("read_ppm", &read_ppm, py::arg("path"));

  m.def("write_coverage_csv", &write_coverage_csv, py::arg("path"),
        py::arg("report"));
  m.def("coverage_summary_json", &coverage_summary_json, py::arg("report"));

  m.def(
      "list_sequence_files",
      [](const std::string& directory, const std::string& extension) {
        std::vector<std::string> out;
        for (const auto& p : list_sequence_files(directory, extension)) {
          out.push_back(p.string());
        }
        return out;
      },
      py::arg("directory"), py::arg("extension"),
      "Files with the given extension, sorted by name.");
}

}  // namespace poseclone::bindings
