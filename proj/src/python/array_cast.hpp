#ifndef POSECLONE_PYTHON_ARRAY_CAST_HPP_
#define POSECLONE_PYTHON_ARRAY_CAST_HPP_

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>

#include <algorithm>
#include <cstddef>
#include <vector>

#include "poseclone/errors.hpp"

namespace poseclone::bindings {

namespace py = pybind11;

using DoubleArray =
    py::array_t<double, py::array::c_style | py::array::forcecast>;

/// Copies a C-contiguous buffer out as a 2D numpy array.
inline py::array_t<double> make_array2(const std::vector<double>& data,
                                       py::ssize_t d0, py::ssize_t d1) {
  py::array_t<double> out({d0, d1});
  std::copy_n(data.data(), data.size(), out.mutable_data());
  return out;
}

/// Copies a C-contiguous buffer out as a 3D numpy array.
inline py::array_t<double> make_array3(const std::vector<double>& data,
                                       py::ssize_t d0, py::ssize_t d1,
                                       py::ssize_t d2) {
  py::array_t<double> out({d0, d1, d2});
  std::copy_n(data.data(), data.size(), out.mutable_data());
  return out;
}

/// Validates an (d0, height, width) input array with a fixed leading size.
inline void check_3d(const DoubleArray& arr, py::ssize_t d0,
                     const char* what) {
  if (arr.ndim() != 3 || (d0 > 0 && arr.shape(0) != d0) || arr.shape(1) < 1 ||
      arr.shape(2) < 1) {
    throw StructuralError(std::string("expected a ") + what + " array");
  }
}

}  // namespace poseclone::bindings

#endif  // POSECLONE_PYTHON_ARRAY_CAST_HPP_
