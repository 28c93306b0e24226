#include "bihardy/beurling.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "bihardy/sampling.hpp"

namespace bihardy {

namespace {

/// Shift with the overflowing slab discarded (finite-section convention).
HardyElement shift_truncated(const HardyElement& f, int axis) {
  const DegreeWindow& w = f.window();
  HardyElement out(w);
  for (int m = 0; m <= w.d1; ++m) {
    for (int n = 0; n <= w.d2; ++n) {
      const int tm = axis == 1 ? m + 1 : m;
      const int tn = axis == 2 ? n + 1 : n;
      if (w.contains(tm, tn)) {
        out.set_coeff(tm, tn, f.coeff(m, n));
      }
    }
  }
  return out;
}

double largest_singular_value(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

HardyElement element_from_coords(const OrthonormalBasis& basis,
                                 const Eigen::VectorXcd& coords) {
  HardyElement out(basis.window());
  for (int i = 0; i < basis.dim(); ++i) {
    out += coords(i) * basis.vector(i);
  }
  return out;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Beurling:
      return "Beurling";
    case Verdict::NotDoublyCommuting:
      return "NotDoublyCommuting";
    case Verdict::WanderingNotOneDim:
      return "WanderingNotOneDim";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

Eigen::MatrixXcd compressed_shift_matrix(const OrthonormalBasis& basis, int axis) {
  const int d = basis.dim();
  Eigen::MatrixXcd shifted(basis.window().count(), d);
  for (int i = 0; i < d; ++i) {
    shifted.col(i) = shift_truncated(basis.vector(i), axis).flattened();
  }
  return basis.matrix().adjoint() * shifted;
}

DcReport dc_defect(const OrthonormalBasis& basis, double tol) {
  if (basis.dim() == 0) {
    throw EmptySpan("dc_defect: basis is empty");
  }
  const Eigen::MatrixXcd m1 = compressed_shift_matrix(basis, 1);
  const Eigen::MatrixXcd m2 = compressed_shift_matrix(basis, 2);
  const Eigen::MatrixXcd commutator = m1 * m2.adjoint() - m2.adjoint() * m1;

  const DegreeWindow interior = basis.window().interior();
  const double interior_tol = 100.0 * basis.rank_tol();
  std::vector<int> inside;
  for (int i = 0; i < basis.dim(); ++i) {
    if (basis.vector(i).mass_outside(interior) <= interior_tol) {
      inside.push_back(i);
    }
  }
  if (inside.empty()) {
    throw EmptyInterior("dc_defect: margin leaves no interior basis vector");
  }

  Eigen::MatrixXcd restricted(inside.size(), inside.size());
  for (std::size_t r = 0; r < inside.size(); ++r) {
    for (std::size_t c = 0; c < inside.size(); ++c) {
      restricted(r, c) = commutator(inside[r], inside[c]);
    }
  }
  return DcReport{largest_singular_value(restricted),
                  static_cast<int>(inside.size()), tol};
}

HardyElement phase_normalize(const HardyElement& f, double tol) {
  for (const auto& [m, n] : graded_monomials(f.window())) {
    const Complex c = f.coeff(m, n);
    if (std::abs(c) > tol) {
      return (std::conj(c) / std::abs(c)) * f;
    }
  }
  return f;
}

InnerReport extract_inner_wandering(const OrthonormalBasis& basis,
                                    const Tolerances& tols) {
  const OrthonormalBasis o1 = complement_in(basis, shift_image(basis, 1).basis);
  const OrthonormalBasis o2 = complement_in(basis, shift_image(basis, 2).basis);
  const OrthonormalBasis wandering = intersect(o1, o2, tols.angle_tol);
  if (wandering.dim() == 0) {
    throw EmptyWandering("extract_inner_wandering: the wandering intersection is zero");
  }
  if (wandering.dim() != 1) {
    throw WanderingNotOneDim(wandering.dim(),
                             "extract_inner_wandering: intersection dimension is " +
                                 std::to_string(wandering.dim()));
  }
  HardyElement phi = phase_normalize(wandering.vector(0), tols.rank_tol);
  phi *= Complex(1.0 / phi.norm(), 0.0);
  return innerness_report(phi, tols.inner_tol);
}

InnerReport extract_inner_kernel(const OrthonormalBasis& basis,
                                 const Tolerances& tols) {
  const DegreeWindow& w = basis.window();
  int pick1 = -1;
  int pick2 = -1;
  for (int total = 0; total <= w.d1 + w.d2 && pick1 < 0; ++total) {
    for (int j1 = std::max(0, total - w.d2); j1 <= std::min(total, w.d1); ++j1) {
      const int j2 = total - j1;
      double best = 0.0;
      for (const auto& v : basis.vectors()) {
        best = std::max(best, std::abs(v.coeff(j1, j2)));
      }
      if (best > tols.rank_tol) {
        pick1 = j1;
        pick2 = j2;
        break;
      }
    }
  }
  if (pick1 < 0) {
    throw EmptySpan("extract_inner_kernel: all coefficients below tolerance");
  }
  HardyElement phi = project(basis, derivative_representer(pick1, pick2, w));
  phi = phase_normalize(phi, tols.rank_tol * phi.norm());
  phi *= Complex(1.0 / phi.norm(), 0.0);
  return innerness_report(phi, tols.inner_tol);
}

InnerReport innerness_report(const HardyElement& candidate, double tol) {
  if (std::abs(candidate.norm() - 1.0) > 1e-8) {
    throw NotNormalized("innerness_report: candidate must have unit norm");
  }
  const LaurentSpectrum spectrum = boundary_product_spectrum(candidate, candidate);
  const double origin = spectrum.coeff(0, 0).real();
  const double off = spectrum.max_off_origin();
  const bool inner = std::abs(origin - 1.0) <= tol && off <= tol;
  return InnerReport{candidate, origin, off, inner, tol};
}

namespace {

std::optional<double> beurling_distance_on_interior(const GeneratorSet& gens,
                                                    const DegreeWindow& window,
                                                    const HardyElement& phi,
                                                    double rank_tol) {
  try {
    const DegreeWindow interior = window.interior();
    const OrthonormalBasis model = span_invariant(gens, interior, rank_tol);
    if (phi.mass_outside(interior) > rank_tol * phi.norm()) {
      return std::nullopt;
    }
    const GeneratorSet phi_gen({phi.cropped(interior)});
    const OrthonormalBasis range = span_invariant(phi_gen, interior, rank_tol);
    return subspace_distance(model, range);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

BeurlingVerdict beurling_verdict(const GeneratorSet& gens, const DegreeWindow& window,
                                 const Tolerances& tols) {
  OrthonormalBasis basis = span_invariant(gens, window, tols.rank_tol);
  DcReport dc = dc_defect(basis, tols.dc_tol);

  int wandering_dim = 0;
  std::optional<InnerReport> wandering_phi;
  try {
    wandering_phi = extract_inner_wandering(basis, tols);
    wandering_dim = 1;
  } catch (const WanderingNotOneDim& e) {
    wandering_dim = e.dimension();
  } catch (const EmptyWandering&) {
    wandering_dim = 0;
  }

  std::optional<InnerReport> kernel_phi;
  try {
    kernel_phi = extract_inner_kernel(basis, tols);
  } catch (const EmptySpan&) {
  }

  std::optional<InnerReport> phi = wandering_phi ? wandering_phi : kernel_phi;
  std::optional<double> agreement;
  if (wandering_phi && kernel_phi) {
    agreement = (wandering_phi->candidate - kernel_phi->candidate).norm();
  }

  std::optional<double> distance;
  if (phi) {
    distance = beurling_distance_on_interior(gens, window, phi->candidate,
                                             tols.rank_tol);
  }

  Verdict verdict;
  if (dc.defect > tols.dc_tol) {
    verdict = Verdict::NotDoublyCommuting;
  } else if (wandering_dim != 1) {
    verdict = Verdict::WanderingNotOneDim;
  } else if (phi && phi->is_inner && distance && *distance <= tols.dist_tol) {
    verdict = Verdict::Beurling;
  } else {
    verdict = Verdict::Inconclusive;
  }

  return BeurlingVerdict{std::move(basis), dc,       wandering_dim, phi,
                         agreement,        distance, verdict};
}

double abs_evaluate(const HardyElement& f, double r1, double r2) {
  const DegreeWindow& w = f.window();
  double sum = 0.0;
  double p1 = 1.0;
  for (int m = 0; m <= w.d1; ++m) {
    double p2 = 1.0;
    for (int n = 0; n <= w.d2; ++n) {
      sum += std::abs(f.coeff(m, n)) * p1 * p2;
      p2 *= r2;
    }
    p1 *= r1;
  }
  return sum;
}

std::vector<IdentityRecord> identity_suite(const OrthonormalBasis& basis,
                                           const HardyElement& phi, std::uint64_t seed,
                                           int samples, const Tolerances& tols) {
  if (std::abs(phi.norm() - 1.0) > 1e-8) {
    throw NotNormalized("identity_suite: phi must have unit norm");
  }
  const DegreeWindow& w = basis.window();
  const DegreeWindow interior = w.interior();
  const auto [p1, p2] = phi.support_degrees(tols.rank_tol);
  const int gap1 = w.d1 - p1;
  const int gap2 = w.d2 - p2;

  const Eigen::MatrixXcd m1 = compressed_shift_matrix(basis, 1);
  const Eigen::MatrixXcd m2 = compressed_shift_matrix(basis, 2);

  // Sample-independent checks, computed once.
  const OrthonormalBasis o1 = complement_in(basis, shift_image(basis, 1).basis);
  const OrthonormalBasis o2 = complement_in(basis, shift_image(basis, 2).basis);

  double invariance_residual = 0.0;
  for (const auto& u : o1.vectors()) {
    double slab_sq = 0.0;
    for (int m = 0; m <= w.d1; ++m) slab_sq += std::norm(u.coeff(m, w.d2));
    if (std::sqrt(slab_sq) > tols.rank_tol) continue;  // shift would overflow
    HardyElement clean = u;
    for (int m = 0; m <= w.d1; ++m) clean.set_coeff(m, w.d2, Complex(0.0, 0.0));
    const HardyElement moved = shift(clean, 2);
    invariance_residual =
        std::max(invariance_residual, (moved - project(o1, moved)).norm());
  }

  const OrthonormalBasis wandering = intersect(o1, o2, tols.angle_tol);
  double cross_residual = 0.0;
  for (int i = 0; i < wandering.dim(); ++i) {
    for (int j = i; j < wandering.dim(); ++j) {
      LaurentSpectrum spec =
          boundary_product_spectrum(wandering.vector(i), wandering.vector(j));
      cross_residual = std::max(cross_residual, spec.max_off_origin());
    }
  }

  std::vector<IdentityRecord> records;
  records.reserve(static_cast<std::size_t>(samples) * 4);
  SampleStream stream(seed);
  for (int s = 0; s < samples; ++s) {
    const DiscPoint lambda = stream.polydisc(0.5);
    const DiscPoint zpt = stream.polydisc(0.5);
    const double abs_l1 = std::abs(lambda.lambda1);
    const double abs_l2 = std::abs(lambda.lambda2);
    const double abs_phi_l = abs_evaluate(phi, abs_l1, abs_l2);

    const HardyElement kernel = kernel_at(basis, lambda);

    // (a) pointwise kernel factorization.
    const Complex factor = (Complex(1.0, 0.0) - std::conj(lambda.lambda1) * zpt.lambda1) *
                           (Complex(1.0, 0.0) - std::conj(lambda.lambda2) * zpt.lambda2);
    const Complex lhs = factor * evaluate(kernel, zpt);
    const Complex rhs = evaluate(phi, zpt) * std::conj(evaluate(phi, lambda));
    const double t1 =
        std::pow(abs_l1 * std::abs(zpt.lambda1), static_cast<double>(gap1 + 1));
    const double t2 =
        std::pow(abs_l2 * std::abs(zpt.lambda2), static_cast<double>(gap2 + 1));
    const double bound_a = abs_evaluate(phi, std::abs(zpt.lambda1), std::abs(zpt.lambda2)) *
                           abs_phi_l * (t1 + t2 + t1 * t2);
    records.push_back(
        IdentityRecord{"kernel_factorization", lambda, zpt, std::abs(lhs - rhs), bound_a});

    // (b) S1 S2* k = z1 conj(l2) k with compressed operators; the residual is
    // trusted on the interior window only (margin discipline).
    Eigen::VectorXcd coords(basis.dim());
    for (int i = 0; i < basis.dim(); ++i) {
      coords(i) = std::conj(evaluate(basis.vector(i), lambda));
    }
    const Eigen::VectorXcd chain =
        m1 * (m2.adjoint() * coords) - std::conj(lambda.lambda2) * (m1 * coords);
    const double residual_b =
        element_from_coords(basis, chain).cropped(interior).norm();
    const double bound_b = abs_phi_l *
                           std::pow(abs_l2, static_cast<double>(gap2 + 1)) /
                           std::sqrt(1.0 - abs_l1 * abs_l1);
    records.push_back(
        IdentityRecord{"kernel_shift_chain", lambda, std::nullopt, residual_b, bound_b});

    records.push_back(IdentityRecord{"wandering_shift_invariance", lambda, std::nullopt,
                                     invariance_residual, 0.0});
    records.push_back(IdentityRecord{"wandering_cross_spectrum", lambda, std::nullopt,
                                     cross_residual, 0.0});
  }
  return records;
}

double toeplitz_kernel_identity_check(const HardyElement& phi, const DiscPoint& p,
                                      const DegreeWindow& window) {
  if (std::abs(p.lambda1) > 0.9 || std::abs(p.lambda2) > 0.9) {
    throw PointOutsideDisc("toeplitz_kernel_identity_check: point outside the 0.9-polydisc");
  }
  const HardyElement symbol =
      window.contains(phi.window()) ? phi.embedded(window) : phi.cropped(window);
  const HardyElement kernel = cauchy_kernel(p, window);
  const HardyElement lhs = adjoint_toeplitz_apply(symbol, kernel);
  const HardyElement rhs = std::conj(evaluate(symbol, p)) * kernel;
  return (lhs - rhs).cropped(window.interior()).norm();
}

double toeplitz_tail_bound(const HardyElement& phi, const DiscPoint& p,
                           const DegreeWindow& window) {
  const double r1 = std::abs(p.lambda1);
  const double r2 = std::abs(p.lambda2);
  const double denom = std::sqrt((1.0 - r1 * r1) * (1.0 - r2 * r2));
  const DegreeWindow& wp = phi.window();
  double sum = 0.0;
  for (int j = 0; j <= wp.d1; ++j) {
    for (int k = 0; k <= wp.d2; ++k) {
      const double a = std::abs(phi.coeff(j, k));
      if (a == 0.0) continue;
      sum += a * (std::pow(r1, window.d1 + 1) * std::pow(r2, k) +
                  std::pow(r2, window.d2 + 1) * std::pow(r1, j));
    }
  }
  return sum / denom;
}

}  // namespace bihardy
