#ifndef BIHARDY_WINDOW_HPP
#define BIHARDY_WINDOW_HPP

#include <algorithm>

#include "bihardy/errors.hpp"

namespace bihardy {

/// Rectangular truncation window for bivariate coefficient tensors:
/// degrees 0..d1 in z1 and 0..d2 in z2, plus an interior margin used by
/// truncation-safe checks (identities are only trusted at least `margin`
/// away from the top degrees).
struct DegreeWindow {
  int d1 = 0;
  int d2 = 0;
  int margin = 0;

  DegreeWindow() = default;

  DegreeWindow(int max_deg1, int max_deg2, int interior_margin = 0)
      : d1(max_deg1), d2(max_deg2), margin(interior_margin) {
    if (d1 < 0 || d2 < 0 || margin < 0) {
      throw InvalidInput("DegreeWindow: degrees and margin must be nonnegative");
    }
    if (margin > std::min(d1, d2)) {
      throw InvalidInput("DegreeWindow: margin exceeds min(d1, d2)");
    }
  }

  int count() const noexcept { return (d1 + 1) * (d2 + 1); }

  bool contains(int m, int n) const noexcept {
    return m >= 0 && n >= 0 && m <= d1 && n <= d2;
  }

  bool contains(const DegreeWindow& other) const noexcept {
    return other.d1 <= d1 && other.d2 <= d2;
  }

  /// Window of coefficients trusted under the margin discipline.
  DegreeWindow interior() const { return DegreeWindow(d1 - margin, d2 - margin, 0); }

  bool in_interior(int m, int n) const noexcept {
    return contains(m, n) && m <= d1 - margin && n <= d2 - margin;
  }

  DegreeWindow union_with(const DegreeWindow& other) const {
    return DegreeWindow(std::max(d1, other.d1), std::max(d2, other.d2),
                        std::max(margin, other.margin));
  }

  /// Row-major flat index, the fixed deterministic ordering of the library.
  int flat_index(int m, int n) const noexcept { return m * (d2 + 1) + n; }

  friend bool operator==(const DegreeWindow& a, const DegreeWindow& b) noexcept {
    return a.d1 == b.d1 && a.d2 == b.d2 && a.margin == b.margin;
  }
};

}  // namespace bihardy

#endif  // BIHARDY_WINDOW_HPP
