#include "bihardy/element.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace bihardy {

namespace {

void check_axis(int axis) {
  if (axis != 1 && axis != 2) {
    throw InvalidInput("axis must be 1 or 2");
  }
}

std::pair<HardyElement, HardyElement> common_window(const HardyElement& f,
                                                    const HardyElement& g) {
  if (f.window() == g.window()) {
    return {f, g};
  }
  DegreeWindow u = f.window().union_with(g.window());
  return {f.embedded(u), g.embedded(u)};
}

}  // namespace

HardyElement HardyElement::monomial(const DegreeWindow& window, int m, int n,
                                    Complex scale) {
  HardyElement e(window);
  e.set_coeff(m, n, scale);
  return e;
}

Eigen::VectorXcd HardyElement::flattened() const {
  Eigen::VectorXcd v(window_.count());
  for (int m = 0; m <= window_.d1; ++m) {
    for (int n = 0; n <= window_.d2; ++n) {
      v(window_.flat_index(m, n)) = coeffs_(m, n);
    }
  }
  return v;
}

HardyElement HardyElement::embedded(const DegreeWindow& target) const {
  if (!target.contains(window_)) {
    throw WindowOverflow("embedded: target window does not contain source");
  }
  HardyElement out(target);
  out.coeffs_.topLeftCorner(window_.d1 + 1, window_.d2 + 1) = coeffs_;
  return out;
}

HardyElement HardyElement::cropped(const DegreeWindow& target) const {
  HardyElement out(target);
  const int rows = std::min(window_.d1, target.d1) + 1;
  const int cols = std::min(window_.d2, target.d2) + 1;
  out.coeffs_.topLeftCorner(rows, cols) = coeffs_.topLeftCorner(rows, cols);
  return out;
}

double HardyElement::mass_outside(const DegreeWindow& inner) const {
  double sq = 0.0;
  for (int m = 0; m <= window_.d1; ++m) {
    for (int n = 0; n <= window_.d2; ++n) {
      if (!inner.contains(m, n)) {
        sq += std::norm(coeffs_(m, n));
      }
    }
  }
  return std::sqrt(sq);
}

std::pair<int, int> HardyElement::support_degrees(double tol) const {
  int p1 = 0;
  int p2 = 0;
  for (int m = 0; m <= window_.d1; ++m) {
    for (int n = 0; n <= window_.d2; ++n) {
      if (std::abs(coeffs_(m, n)) > tol) {
        p1 = std::max(p1, m);
        p2 = std::max(p2, n);
      }
    }
  }
  return {p1, p2};
}

HardyElement& HardyElement::operator+=(const HardyElement& other) {
  if (!(window_ == other.window_)) {
    throw WindowOverflow("operator+=: windows differ; embed explicitly");
  }
  coeffs_ += other.coeffs_;
  return *this;
}

HardyElement& HardyElement::operator-=(const HardyElement& other) {
  if (!(window_ == other.window_)) {
    throw WindowOverflow("operator-=: windows differ; embed explicitly");
  }
  coeffs_ -= other.coeffs_;
  return *this;
}

HardyElement& HardyElement::operator*=(Complex scale) {
  coeffs_ *= scale;
  return *this;
}

double LaurentSpectrum::max_off_origin() const {
  double best = 0.0;
  for (int k = -window_.d1; k <= window_.d1; ++k) {
    for (int l = -window_.d2; l <= window_.d2; ++l) {
      if (k == 0 && l == 0) continue;
      best = std::max(best, std::abs(coeff(k, l)));
    }
  }
  return best;
}

Complex inner_product(const HardyElement& f, const HardyElement& g) {
  auto [a, b] = common_window(f, g);
  Complex sum(0.0, 0.0);
  // Fixed row-major summation order, matching evaluate().
  for (int m = 0; m <= a.window().d1; ++m) {
    for (int n = 0; n <= a.window().d2; ++n) {
      sum += a.coeff(m, n) * std::conj(b.coeff(m, n));
    }
  }
  return sum;
}

HardyElement shift(const HardyElement& f, int axis) {
  return shift(f, axis, f.window());
}

HardyElement shift(const HardyElement& f, int axis, const DegreeWindow& target) {
  check_axis(axis);
  HardyElement out(target);
  const DegreeWindow& w = f.window();
  for (int m = 0; m <= w.d1; ++m) {
    for (int n = 0; n <= w.d2; ++n) {
      Complex c = f.coeff(m, n);
      if (c == Complex(0.0, 0.0)) continue;
      const int tm = axis == 1 ? m + 1 : m;
      const int tn = axis == 2 ? n + 1 : n;
      if (!target.contains(tm, tn)) {
        throw WindowOverflow("shift: nonzero coefficient would leave the window");
      }
      out.set_coeff(tm, tn, c);
    }
  }
  return out;
}

HardyElement adjoint_shift(const HardyElement& f, int axis) {
  check_axis(axis);
  const DegreeWindow& w = f.window();
  HardyElement out(w);
  for (int m = 0; m <= w.d1; ++m) {
    for (int n = 0; n <= w.d2; ++n) {
      const int sm = axis == 1 ? m + 1 : m;
      const int sn = axis == 2 ? n + 1 : n;
      if (w.contains(sm, sn)) {
        out.set_coeff(m, n, f.coeff(sm, sn));
      }
    }
  }
  return out;
}

ToeplitzProduct toeplitz_apply(const HardyElement& symbol, const HardyElement& f,
                               const DegreeWindow& target, bool strict) {
  HardyElement out(target);
  bool truncated = false;
  const DegreeWindow& ws = symbol.window();
  const DegreeWindow& wf = f.window();
  for (int i = 0; i <= ws.d1; ++i) {
    for (int j = 0; j <= ws.d2; ++j) {
      Complex s = symbol.coeff(i, j);
      if (s == Complex(0.0, 0.0)) continue;
      for (int m = 0; m <= wf.d1; ++m) {
        for (int n = 0; n <= wf.d2; ++n) {
          Complex c = f.coeff(m, n);
          if (c == Complex(0.0, 0.0)) continue;
          const int tm = i + m;
          const int tn = j + n;
          if (target.contains(tm, tn)) {
            out.set_coeff(tm, tn, out.coeff(tm, tn) + s * c);
          } else {
            if (strict) {
              throw WindowOverflow("toeplitz_apply: product exceeds target window");
            }
            truncated = true;
          }
        }
      }
    }
  }
  return {std::move(out), truncated};
}

HardyElement adjoint_toeplitz_apply(const HardyElement& symbol,
                                    const HardyElement& f) {
  const DegreeWindow& ws = symbol.window();
  HardyElement out(f.window());
  for (int i = 0; i <= ws.d1; ++i) {
    for (int j = 0; j <= ws.d2; ++j) {
      Complex s = symbol.coeff(i, j);
      if (s == Complex(0.0, 0.0)) continue;
      HardyElement term = f;
      for (int k = 0; k < i; ++k) term = adjoint_shift(term, 1);
      for (int k = 0; k < j; ++k) term = adjoint_shift(term, 2);
      term *= std::conj(s);
      out += term;
    }
  }
  return out;
}

LaurentSpectrum boundary_product_spectrum(const HardyElement& f,
                                          const HardyElement& g) {
  auto [a, b] = common_window(f, g);
  const DegreeWindow& w = a.window();
  LaurentSpectrum spec(w);
  for (int k = -w.d1; k <= w.d1; ++k) {
    for (int l = -w.d2; l <= w.d2; ++l) {
      Complex sum(0.0, 0.0);
      for (int m = 0; m <= w.d1; ++m) {
        const int gm = m - k;
        if (gm < 0 || gm > w.d1) continue;
        for (int n = 0; n <= w.d2; ++n) {
          const int gn = n - l;
          if (gn < 0 || gn > w.d2) continue;
          sum += a.coeff(m, n) * std::conj(b.coeff(gm, gn));
        }
      }
      spec.set_coeff(k, l, sum);
    }
  }
  return spec;
}

Complex evaluate(const HardyElement& f, const DiscPoint& p) {
  const DegreeWindow& w = f.window();
  std::vector<Complex> pow1(w.d1 + 1), pow2(w.d2 + 1);
  pow1[0] = Complex(1.0, 0.0);
  for (int m = 1; m <= w.d1; ++m) pow1[m] = pow1[m - 1] * p.lambda1;
  pow2[0] = Complex(1.0, 0.0);
  for (int n = 1; n <= w.d2; ++n) pow2[n] = pow2[n - 1] * p.lambda2;
  Complex sum(0.0, 0.0);
  for (int m = 0; m <= w.d1; ++m) {
    for (int n = 0; n <= w.d2; ++n) {
      sum += f.coeff(m, n) * pow1[m] * pow2[n];
    }
  }
  return sum;
}

HardyElement cauchy_kernel(const DiscPoint& p, const DegreeWindow& window) {
  HardyElement out(window);
  const Complex c1 = std::conj(p.lambda1);
  const Complex c2 = std::conj(p.lambda2);
  Complex pm(1.0, 0.0);
  for (int m = 0; m <= window.d1; ++m) {
    Complex pn(1.0, 0.0);
    for (int n = 0; n <= window.d2; ++n) {
      out.set_coeff(m, n, pm * pn);
      pn *= c2;
    }
    pm *= c1;
  }
  return out;
}

HardyElement derivative_representer(int j1, int j2, const DegreeWindow& window) {
  if (!window.contains(j1, j2)) {
    throw IndexOutsideWindow("derivative_representer: index outside window");
  }
  double factorial = 1.0;
  for (int k = 2; k <= j1; ++k) factorial *= k;
  for (int k = 2; k <= j2; ++k) factorial *= k;
  return HardyElement::monomial(window, j1, j2, Complex(factorial, 0.0));
}

}  // namespace bihardy
