#ifndef POSECLONE_ERRORS_HPP_
#define POSECLONE_ERRORS_HPP_

#include <stdexcept>

namespace poseclone {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: shape mismatches, bad file contents,
/// out-of-range parameters.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// No frame of the sequence carries both hip joints, so the per-video
/// similarity transform is undefined.
class UnalignableSequence : public Error {
 public:
  using Error::Error;
};

/// The two poses (or the pose and the sequence) share no commonly valid limb.
class IncomparablePoses : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure: missing file, unreadable or unwritable path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace poseclone

#endif  // POSECLONE_ERRORS_HPP_
