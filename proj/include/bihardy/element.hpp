#ifndef BIHARDY_ELEMENT_HPP
#define BIHARDY_ELEMENT_HPP

#include <Eigen/Core>
#include <complex>

#include "bihardy/window.hpp"

namespace bihardy {

using Complex = std::complex<double>;

/// A point strictly inside the unit bidisc.
struct DiscPoint {
  Complex lambda1;
  Complex lambda2;

  DiscPoint(Complex l1, Complex l2) : lambda1(l1), lambda2(l2) {
    if (std::abs(lambda1) >= 1.0 || std::abs(lambda2) >= 1.0) {
      throw PointOutsideDisc("DiscPoint: |lambda_j| must be strictly below 1");
    }
  }
};

/// Truncated analytic function on the bidisc: a dense coefficient tensor
/// a(m,n) for z1^m z2^n inside a DegreeWindow. Monomials are orthonormal,
/// so norm^2 = sum |a(m,n)|^2. Immutable in spirit: operations return new
/// values and never mutate shared state.
class HardyElement {
 public:
  explicit HardyElement(const DegreeWindow& window)
      : window_(window),
        coeffs_(Eigen::MatrixXcd::Zero(window.d1 + 1, window.d2 + 1)) {}

  static HardyElement monomial(const DegreeWindow& window, int m, int n,
                               Complex scale = Complex(1.0, 0.0));

  const DegreeWindow& window() const noexcept { return window_; }

  Complex coeff(int m, int n) const {
    if (!window_.contains(m, n)) {
      throw IndexOutsideWindow("HardyElement::coeff: index outside window");
    }
    return coeffs_(m, n);
  }

  void set_coeff(int m, int n, Complex value) {
    if (!window_.contains(m, n)) {
      throw IndexOutsideWindow("HardyElement::set_coeff: index outside window");
    }
    coeffs_(m, n) = value;
  }

  const Eigen::MatrixXcd& coeffs() const noexcept { return coeffs_; }
  Eigen::MatrixXcd& coeffs() noexcept { return coeffs_; }

  double squared_norm() const { return coeffs_.squaredNorm(); }
  double norm() const { return coeffs_.norm(); }

  /// Row-major flattening, matching DegreeWindow::flat_index.
  Eigen::VectorXcd flattened() const;

  /// Copy into a larger window (no coefficient may be lost).
  HardyElement embedded(const DegreeWindow& target) const;

  /// Restriction to a smaller window; coefficients outside are discarded.
  HardyElement cropped(const DegreeWindow& target) const;

  /// Norm of the part lying outside `inner` (degreewise).
  double mass_outside(const DegreeWindow& inner) const;

  /// Largest degree along each axis carrying a coefficient with magnitude
  /// above `tol` (0 for the zero element).
  std::pair<int, int> support_degrees(double tol = 0.0) const;

  HardyElement& operator+=(const HardyElement& other);
  HardyElement& operator-=(const HardyElement& other);
  HardyElement& operator*=(Complex scale);

  friend HardyElement operator+(HardyElement a, const HardyElement& b) {
    a += b;
    return a;
  }
  friend HardyElement operator-(HardyElement a, const HardyElement& b) {
    a -= b;
    return a;
  }
  friend HardyElement operator*(Complex scale, HardyElement f) {
    f *= scale;
    return f;
  }

 private:
  DegreeWindow window_;
  Eigen::MatrixXcd coeffs_;
};

/// Two-sided Fourier coefficients of a boundary product f * conj(g) on the
/// torus: c(k,l) for -d1 <= k <= d1, -d2 <= l <= d2.
class LaurentSpectrum {
 public:
  explicit LaurentSpectrum(const DegreeWindow& window)
      : window_(window),
        coeffs_(Eigen::MatrixXcd::Zero(2 * window.d1 + 1, 2 * window.d2 + 1)) {}

  const DegreeWindow& window() const noexcept { return window_; }

  Complex coeff(int k, int l) const {
    check(k, l);
    return coeffs_(k + window_.d1, l + window_.d2);
  }

  void set_coeff(int k, int l, Complex value) {
    check(k, l);
    coeffs_(k + window_.d1, l + window_.d2) = value;
  }

  /// max |c(k,l)| over (k,l) != (0,0).
  double max_off_origin() const;

 private:
  void check(int k, int l) const {
    if (k < -window_.d1 || k > window_.d1 || l < -window_.d2 || l > window_.d2) {
      throw IndexOutsideWindow("LaurentSpectrum: index outside window");
    }
  }

  DegreeWindow window_;
  Eigen::MatrixXcd coeffs_;
};

/// Product of a Toeplitz application: the truncated result plus a flag
/// telling whether truncation discarded any mass.
struct ToeplitzProduct {
  HardyElement value;
  bool truncated = false;
};

// Coefficient-level algebra of the truncated Hardy space. All functions are
// pure; windows are reconciled by embedding into the union window.

Complex inner_product(const HardyElement& f, const HardyElement& g);

/// Multiplication by z_axis. Throws WindowOverflow when a nonzero top-slab
/// coefficient would leave the window.
HardyElement shift(const HardyElement& f, int axis);
HardyElement shift(const HardyElement& f, int axis, const DegreeWindow& target);

/// Backward shift along `axis`; the index-0 slab is discarded. Exact within
/// the window; adjoint to `shift` under the inner product.
HardyElement adjoint_shift(const HardyElement& f, int axis);

/// Coefficient convolution symbol * f truncated to `target`. With
/// strict=true a truncation that discards mass raises WindowOverflow.
ToeplitzProduct toeplitz_apply(const HardyElement& symbol, const HardyElement& f,
                               const DegreeWindow& target, bool strict = false);

/// Adjoint Toeplitz operator with polynomial symbol, realized as iterated
/// adjoint shifts with conjugated coefficients.
HardyElement adjoint_toeplitz_apply(const HardyElement& symbol, const HardyElement& f);

LaurentSpectrum boundary_product_spectrum(const HardyElement& f, const HardyElement& g);

/// Point evaluation, summed in row-major (m,n) order for reproducibility.
Complex evaluate(const HardyElement& f, const DiscPoint& p);

/// Truncated Cauchy kernel: a(m,n) = conj(lambda1)^m conj(lambda2)^n.
HardyElement cauchy_kernel(const DiscPoint& p, const DegreeWindow& window);

/// Representer of the (j1,j2) partial derivative at the origin:
/// j1! * j2! * z1^j1 z2^j2.
HardyElement derivative_representer(int j1, int j2, const DegreeWindow& window);

}  // namespace bihardy

#endif  // BIHARDY_ELEMENT_HPP
