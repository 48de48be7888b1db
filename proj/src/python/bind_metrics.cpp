#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "poseclone/metrics.hpp"

namespace poseclone::bindings {

namespace py = pybind11;

void bind_metrics(py::module_& m) {
  m.attr("DEFAULT_GAMMA") = kDefaultGamma;

  py::class_<LimbDistance>(m, "LimbDistance")
      .def_readonly("distance", &LimbDistance::distance)
      .def_readonly("flagged", &LimbDistance::flagged);

  py::class_<LimbMatch>(m, "LimbMatch")
      .def_readonly("distance", &LimbMatch::distance)
      .def_readonly("nn_frame", &LimbMatch::nn_frame);

  py::class_<PoseToSequenceResult>(m, "PoseToSequenceResult")
      .def_readonly("distance", &PoseToSequenceResult::distance)
      .def_readonly("per_limb", &PoseToSequenceResult::per_limb)
      .def_readonly("excluded_limbs", &PoseToSequenceResult::excluded_limbs);

  py::class_<CoverageLimb>(m, "CoverageLimb")
      .def_readonly("distance", &CoverageLimb::distance)
      .def_readonly("nn_frame", &CoverageLimb::nn_frame)
      .def_readonly("flagged", &CoverageLimb::flagged);

  py::class_<CoverageFrame>(m, "CoverageFrame")
      .def_readonly("frame_index", &CoverageFrame::frame_index)
      .def_readonly("distance", &CoverageFrame::distance)
      .def_readonly("per_limb", &CoverageFrame::per_limb);

  py::class_<CoverageSummary>(m, "CoverageSummary")
      .def_readonly("mean_distance", &CoverageSummary::mean_distance)
      .def_readonly("max_distance", &CoverageSummary::max_distance)
      .def_readonly("fraction_frames_with_any_flag",
                    &CoverageSummary::fraction_frames_with_any_flag);

  py::class_<CoverageReport>(m, "CoverageReport")
      .def_readonly("per_frame", &CoverageReport::per_frame)
      .def_readonly("summary", &CoverageReport::summary);

  py::class_<LossWeights>(m, "LossWeights")
      .def(py::init([](double lambda_vgg, double lambda_s, double lambda_tc) {
             return LossWeights{lambda_vgg, lambda_s, lambda_tc};
           }),
           py::arg("lambda_vgg") = 10.0, py::arg("lambda_s") = 0.1,
           py::arg("lambda_tc") = 10.0)
      .def_readwrite("lambda_vgg", &LossWeights::lambda_vgg)
      .def_readwrite("lambda_s", &LossWeights::lambda_s)
      .def_readwrite("lambda_tc", &LossWeights::lambda_tc);

  py::class_<LossComponents>(m, "LossComponents")
      .def(py::init([](double gan_p, double vgg, double gan_s, double tc) {
             return LossComponents{gan_p, vgg, gan_s, tc};
           }),
           py::arg("gan_p") = 0.0, py::arg("vgg") = 0.0,
           py::arg("gan_s") = 0.0, py::arg("tc") = 0.0)
      .def_readwrite("gan_p", &LossComponents::gan_p)
      .def_readwrite("vgg", &LossComponents::vgg)
      .def_readwrite("gan_s", &LossComponents::gan_s)
      .def_readwrite("tc", &LossComponents::tc);

  py::class_<AggregatedLoss>(m, "AggregatedLoss")
      .def_readonly("rec", &AggregatedLoss::rec)
      .def_readonly("total", &AggregatedLoss::total);

  m.def("pose_distance", &pose_distance, py::arg("a"), py::arg("b"),
        "Mean limb displacement distance over commonly valid limbs.");
  m.def("per_limb_distances", &per_limb_distances, py::arg("a"), py::arg("b"),
        py::arg("gamma"),
        "Per-limb distances with threshold flags.");
  m.def("pose_to_sequence", &pose_to_sequence, py::arg("pose"),
        py::arg("sequence"),
        "Per-limb nearest-neighbor distance against a whole sequence.");
  m.def("coverage_report", &coverage_report, py::arg("driving"),
        py::arg("reference"), py::arg("gamma") = kDefaultGamma,
        "Score every driving frame against the reference repertoire.");
  m.def("aggregate_losses", &aggregate_losses, py::arg("components"),
        py::arg("weights") = LossWeights{},
        "rec = gan_p + lambda_vgg*vgg; total = rec + lambda_s*(gan_s + "
        "lambda_tc*tc).");
}

}  // namespace poseclone::bindings
