#ifndef BIHARDY_ERRORS_HPP
#define BIHARDY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bihardy {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A shifted or multiplied coefficient would leave its degree window.
class WindowOverflow : public Error {
  using Error::Error;
};

/// An evaluation or kernel point lies on or outside the unit bidisc.
class PointOutsideDisc : public Error {
  using Error::Error;
};

/// A derivative index falls outside the degree window.
class IndexOutsideWindow : public Error {
  using Error::Error;
};

/// Every candidate vector fell below the rank tolerance.
class EmptySpan : public Error {
  using Error::Error;
};

/// The inner subspace is not contained in the ambient one.
class NotContained : public Error {
  using Error::Error;
};

/// The wandering intersection has dimension != 1; carries the found dimension.
class WanderingNotOneDim : public Error {
 public:
  WanderingNotOneDim(int dimension, const std::string& what)
      : Error(what), dimension_(dimension) {}
  int dimension() const noexcept { return dimension_; }

 private:
  int dimension_;
};

/// The wandering intersection is numerically zero.
class EmptyWandering : public Error {
  using Error::Error;
};

/// An inner-function candidate does not have unit norm.
class NotNormalized : public Error {
  using Error::Error;
};

/// The margin leaves no basis vector supported in the interior window.
class EmptyInterior : public Error {
  using Error::Error;
};

/// Malformed serialized input (bad entry, duplicate index, wrong type).
class InvalidInput : public Error {
  using Error::Error;
};

}  // namespace bihardy

#endif  // BIHARDY_ERRORS_HPP
