#ifndef BIHARDY_SAMPLING_HPP
#define BIHARDY_SAMPLING_HPP

#include <cstdint>
#include <numbers>
#include <random>

#include "bihardy/element.hpp"

namespace bihardy {

/// Deterministic sample stream: mt19937_64 with a fixed bits-to-double map,
/// so identical seeds give identical draws on every platform.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  /// Uniform on the disc of the given radius (area measure).
  Complex disc(double radius) {
    const double r = radius * std::sqrt(unit());
    const double theta = 2.0 * std::numbers::pi * unit();
    return Complex(r * std::cos(theta), r * std::sin(theta));
  }

  DiscPoint polydisc(double radius) {
    Complex l1 = disc(radius);
    Complex l2 = disc(radius);
    return DiscPoint(l1, l2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bihardy

#endif  // BIHARDY_SAMPLING_HPP
