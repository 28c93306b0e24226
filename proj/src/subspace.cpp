#include "bihardy/subspace.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <utility>

namespace bihardy {

namespace {

HardyElement from_flat(const DegreeWindow& window, const Eigen::VectorXcd& v) {
  HardyElement out(window);
  for (int m = 0; m <= window.d1; ++m) {
    for (int n = 0; n <= window.d2; ++n) {
      out.set_coeff(m, n, v(window.flat_index(m, n)));
    }
  }
  return out;
}

/// Translate g by (a, b); coefficients that would leave the window are
/// dropped (callers guarantee they are below tolerance).
HardyElement translate(const HardyElement& g, int a, int b,
                       const DegreeWindow& window) {
  HardyElement out(window);
  const DegreeWindow& wg = g.window();
  for (int m = 0; m <= wg.d1; ++m) {
    for (int n = 0; n <= wg.d2; ++n) {
      Complex c = g.coeff(m, n);
      if (c == Complex(0.0, 0.0)) continue;
      if (window.contains(m + a, n + b)) {
        out.set_coeff(m + a, n + b, c);
      }
    }
  }
  return out;
}

void subtract_projections(HardyElement& r, const std::vector<HardyElement>& onto) {
  for (const auto& v : onto) {
    r -= inner_product(r, v) * v;
  }
}

OrthonormalBasis to_common_window(const OrthonormalBasis& b, const DegreeWindow& w) {
  if (b.window() == w) return b;
  std::vector<HardyElement> vecs;
  vecs.reserve(b.dim());
  for (const auto& v : b.vectors()) vecs.push_back(v.embedded(w));
  return OrthonormalBasis(w, std::move(vecs), b.rank_tol());
}

}  // namespace

Eigen::MatrixXcd OrthonormalBasis::matrix() const {
  Eigen::MatrixXcd m(window_.count(), dim());
  for (int i = 0; i < dim(); ++i) {
    m.col(i) = vectors_[i].flattened();
  }
  return m;
}

GeneratorSet::GeneratorSet(std::vector<HardyElement> gens) {
  if (gens.empty()) {
    throw InvalidInput("GeneratorSet: at least one generator is required");
  }
  DegreeWindow u = gens.front().window();
  for (const auto& g : gens) u = u.union_with(g.window());
  elements.reserve(gens.size());
  for (auto& g : gens) elements.push_back(g.embedded(u));
}

std::vector<std::pair<int, int>> graded_monomials(const DegreeWindow& window) {
  std::vector<std::pair<int, int>> out;
  out.reserve(window.count());
  for (int a = 0; a <= window.d1; ++a) {
    for (int b = 0; b <= window.d2; ++b) {
      out.emplace_back(a, b);
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) {
                     const int gx = x.first + x.second;
                     const int gy = y.first + y.second;
                     if (gx != gy) return gx < gy;
                     return x.first < y.first;
                   });
  return out;
}

std::vector<HardyElement> orthonormalize(const std::vector<HardyElement>& candidates,
                                         double rank_tol) {
  std::vector<HardyElement> out;
  for (const auto& cand : candidates) {
    const double orig = cand.norm();
    if (orig == 0.0) continue;
    HardyElement r = cand;
    // Two MGS passes; the second removes the first pass's rounding.
    subtract_projections(r, out);
    subtract_projections(r, out);
    const double res = r.norm();
    if (res > rank_tol * orig) {
      out.push_back(Complex(1.0 / res, 0.0) * r);
    }
  }
  return out;
}

OrthonormalBasis span_invariant(const GeneratorSet& gens, const DegreeWindow& window,
                                double rank_tol) {
  std::vector<HardyElement> fitted;
  std::vector<std::pair<int, int>> supports;
  for (const auto& g : gens.elements) {
    // Generators at or below the rank tolerance are numerically zero.
    if (g.norm() <= rank_tol) continue;
    const double tol = rank_tol * g.norm();
    if (g.mass_outside(window) > tol) {
      throw WindowOverflow("span_invariant: generator does not fit the window");
    }
    HardyElement cropped = g.cropped(window);
    supports.push_back(cropped.support_degrees(tol));
    fitted.push_back(std::move(cropped));
  }

  std::vector<HardyElement> candidates;
  for (const auto& [a, b] : graded_monomials(window)) {
    for (std::size_t i = 0; i < fitted.size(); ++i) {
      const auto& [p1, p2] = supports[i];
      if (a + p1 <= window.d1 && b + p2 <= window.d2) {
        candidates.push_back(translate(fitted[i], a, b, window));
      }
    }
  }

  std::vector<HardyElement> basis = orthonormalize(candidates, rank_tol);
  if (basis.empty()) {
    throw EmptySpan("span_invariant: every candidate fell below the rank tolerance");
  }
  return OrthonormalBasis(window, std::move(basis), rank_tol);
}

HardyElement project(const OrthonormalBasis& basis, const HardyElement& f) {
  HardyElement g(basis.window());
  if (basis.window().contains(f.window())) {
    g = f.embedded(basis.window());
  } else {
    if (f.mass_outside(basis.window()) > basis.rank_tol() * f.norm()) {
      throw WindowOverflow("project: element does not fit the basis window");
    }
    g = f.cropped(basis.window());
  }
  HardyElement out(basis.window());
  for (const auto& v : basis.vectors()) {
    out += inner_product(g, v) * v;
  }
  return out;
}

HardyElement kernel_at(const OrthonormalBasis& basis, const DiscPoint& p) {
  HardyElement out(basis.window());
  for (const auto& v : basis.vectors()) {
    out += std::conj(evaluate(v, p)) * v;
  }
  return out;
}

ShiftImage shift_image(const OrthonormalBasis& basis, int axis) {
  if (axis != 1 && axis != 2) {
    throw InvalidInput("shift_image: axis must be 1 or 2");
  }
  const DegreeWindow& w = basis.window();
  const int d = basis.dim();
  const double rank_tol = basis.rank_tol();

  // Members whose shift fits the window are those with a vanishing top slab
  // along `axis`. Work in coordinates over the basis: the slab-touching
  // directions are spanned by t_s with t_s(i) = conj(v_i[slab position s]),
  // since the slab of sum c_i v_i vanishes iff c is orthogonal to every t_s.
  const int slab_len = axis == 1 ? w.d2 + 1 : w.d1 + 1;
  std::vector<Eigen::VectorXcd> touching;
  for (int s = 0; s < slab_len; ++s) {
    Eigen::VectorXcd t(d);
    for (int i = 0; i < d; ++i) {
      const HardyElement& v = basis.vector(i);
      t(i) = std::conj(axis == 1 ? v.coeff(w.d1, s) : v.coeff(s, w.d2));
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : touching) t -= q * q.dot(t);
    }
    if (t.norm() > rank_tol) touching.push_back(t.normalized());
  }

  // Slab-free coordinate directions, extracted in generation order; for a
  // graded monomial basis this reduces to keeping exactly the slab-free
  // basis vectors.
  std::vector<Eigen::VectorXcd> nulls;
  for (int i = 0; i < d; ++i) {
    Eigen::VectorXcd u = Eigen::VectorXcd::Unit(d, i);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : touching) u -= q * q.dot(u);
      for (const auto& q : nulls) u -= q * q.dot(u);
    }
    if (u.norm() > 1e-8) nulls.push_back(u.normalized());
  }

  std::vector<HardyElement> shifted;
  shifted.reserve(nulls.size());
  for (const auto& u : nulls) {
    HardyElement member(w);
    for (int j = 0; j < d; ++j) member += u(j) * basis.vector(j);
    // The slab is zero up to rounding; clear it so the shift is exact.
    if (axis == 1) {
      for (int n = 0; n <= w.d2; ++n) member.set_coeff(w.d1, n, Complex(0.0, 0.0));
    } else {
      for (int m = 0; m <= w.d1; ++m) member.set_coeff(m, w.d2, Complex(0.0, 0.0));
    }
    shifted.push_back(shift(member, axis));
  }
  return ShiftImage{OrthonormalBasis(w, orthonormalize(shifted, rank_tol), rank_tol),
                    d - static_cast<int>(nulls.size())};
}

OrthonormalBasis complement_in(const OrthonormalBasis& ambient,
                               const OrthonormalBasis& inner) {
  const DegreeWindow w = ambient.window().union_with(inner.window());
  OrthonormalBasis amb = to_common_window(ambient, w);
  OrthonormalBasis inn = to_common_window(inner, w);
  const double rank_tol = ambient.rank_tol();
  const double contain_tol = 100.0 * rank_tol;

  for (const auto& u : inn.vectors()) {
    HardyElement r = u - project(amb, u);
    if (r.norm() > contain_tol) {
      throw NotContained("complement_in: inner span is not contained in the ambient span");
    }
  }

  std::vector<HardyElement> residuals;
  for (const auto& a : amb.vectors()) {
    HardyElement r = a;
    subtract_projections(r, inn.vectors());
    subtract_projections(r, inn.vectors());
    if (r.norm() > rank_tol) {
      residuals.push_back(std::move(r));
    }
  }
  return OrthonormalBasis(w, orthonormalize(residuals, rank_tol), rank_tol);
}

OrthonormalBasis intersect(const OrthonormalBasis& a, const OrthonormalBasis& b,
                           double angle_tol) {
  const DegreeWindow w = a.window().union_with(b.window());
  OrthonormalBasis aa = to_common_window(a, w);
  OrthonormalBasis bb = to_common_window(b, w);
  const double rank_tol = std::max(a.rank_tol(), b.rank_tol());
  if (aa.dim() == 0 || bb.dim() == 0) {
    return OrthonormalBasis::empty(w, rank_tol);
  }

  const Eigen::MatrixXcd A = aa.matrix();
  const Eigen::MatrixXcd B = bb.matrix();
  const Eigen::MatrixXcd G = A.adjoint() * B;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(G, Eigen::ComputeThinU);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) >= 1.0 - angle_tol) ++rank;
  }
  if (rank == 0) {
    return OrthonormalBasis::empty(w, rank_tol);
  }

  // Directions with principal angle ~0, mapped into span(A).
  const Eigen::MatrixXcd W = A * svd.matrixU().leftCols(rank);

  // Canonical alignment: re-extract the basis from the projector along
  // graded coordinate directions, so degenerate angle-0 clusters come out
  // coordinate-aligned instead of arbitrarily mixed.
  std::vector<HardyElement> aligned;
  for (const auto& [m, n] : graded_monomials(w)) {
    if (static_cast<int>(aligned.size()) == rank) break;
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(w.count());
    e(w.flat_index(m, n)) = Complex(1.0, 0.0);
    Eigen::VectorXcd proj = W * (W.adjoint() * e);
    HardyElement r = from_flat(w, proj);
    subtract_projections(r, aligned);
    subtract_projections(r, aligned);
    const double res = r.norm();
    if (res > 1e-8) {
      aligned.push_back(Complex(1.0 / res, 0.0) * r);
    }
  }
  return OrthonormalBasis(w, std::move(aligned), rank_tol);
}

double subspace_distance(const OrthonormalBasis& a, const OrthonormalBasis& b) {
  const DegreeWindow w = a.window().union_with(b.window());
  OrthonormalBasis aa = to_common_window(a, w);
  OrthonormalBasis bb = to_common_window(b, w);
  if (aa.dim() == 0 && bb.dim() == 0) return 0.0;
  if (aa.dim() == 0 || bb.dim() == 0) return 1.0;

  const Eigen::MatrixXcd A = aa.matrix();
  const Eigen::MatrixXcd B = bb.matrix();
  const auto residual_norm = [](const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& onto) {
    const Eigen::MatrixXcd r = x - onto * (onto.adjoint() * x);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(r);
    return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
  };
  const double d = std::max(residual_norm(A, B), residual_norm(B, A));
  return std::clamp(d, 0.0, 1.0);
}

}  // namespace bihardy
