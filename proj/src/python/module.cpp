#include <pybind11/pybind11.h>

#include "poseclone/errors.hpp"

namespace py = pybind11;

namespace poseclone::bindings {

void bind_pose(py::module_& m);
void bind_metrics(py::module_& m);
void bind_temporal(py::module_& m);
void bind_io(py::module_& m);

}  // namespace poseclone::bindings

PYBIND11_MODULE(_poseclone, m) {
  m.doc() =
      "Deterministic numerics for pose-driven video analysis: confidence "
      "volumes, skeleton descriptors, coverage metrics, flow warping, and "
      "the self-reenactment evaluation protocol.";
  m.attr("__version__") = "0.1.0";

  // Derived errors are registered after the base so their translators run
  // first.
  auto base = py::register_exception<poseclone::Error>(m, "Error",
                                                       PyExc_RuntimeError);
  py::register_exception<poseclone::StructuralError>(m, "StructuralError",
                                                     base.ptr());
  py::register_exception<poseclone::UnalignableSequence>(
      m, "UnalignableSequenceError", base.ptr());
  py::register_exception<poseclone::IncomparablePoses>(
      m, "IncomparablePosesError", base.ptr());
  py::register_exception<poseclone::IoError>(m, "IoError", base.ptr());

  poseclone::bindings::bind_pose(m);
  poseclone::bindings::bind_metrics(m);
  poseclone::bindings::bind_temporal(m);
  poseclone::bindings::bind_io(m);
}
