#ifndef BIHARDY_BEURLING_HPP
#define BIHARDY_BEURLING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bihardy/subspace.hpp"

namespace bihardy {

/// The four decision tolerances, echoed into every report. Defaults keep a
/// decade of slack between orthogonalization noise and decision thresholds.
struct Tolerances {
  double rank_tol = 1e-10;
  double dc_tol = 1e-8;
  double inner_tol = 1e-6;
  double dist_tol = 1e-6;
  double angle_tol = 1e-8;
};

/// Doubly-commuting certificate: operator-norm estimate of the commutator
/// S1 S2* - S2* S1 compressed to the span and restricted to basis vectors
/// supported in the interior window.
struct DcReport {
  double defect = 0.0;
  int interior_dim = 0;
  double tol = 0.0;
};

/// Innerness certificate for a unit-norm candidate: the Laurent spectrum of
/// |phi|^2 must be 1 at the origin and ~0 off the origin.
struct InnerReport {
  HardyElement candidate;
  double origin_value = 0.0;
  double max_offorigin = 0.0;
  bool is_inner = false;
  double tol = 0.0;
};

enum class Verdict { Beurling, NotDoublyCommuting, WanderingNotOneDim, Inconclusive };

std::string to_string(Verdict v);

struct BeurlingVerdict {
  OrthonormalBasis basis;
  DcReport dc;
  int wandering_dim = 0;
  std::optional<InnerReport> phi;
  std::optional<double> route_agreement;
  std::optional<double> beurling_distance;
  Verdict verdict = Verdict::Inconclusive;
};

/// One named residual with the analytic truncation-tail bound for its sample.
struct IdentityRecord {
  std::string name;
  DiscPoint lambda;
  std::optional<DiscPoint> z;
  double residual = 0.0;
  double tail_bound = 0.0;
};

/// Matrix of the compression P_M S_axis |_M in the given orthonormal basis
/// (shift with top-slab truncation, then projection back).
Eigen::MatrixXcd compressed_shift_matrix(const OrthonormalBasis& basis, int axis);

/// Largest singular value of the compressed commutator S1 S2* - S2* S1
/// restricted to interior-supported basis vectors. Throws EmptyInterior when
/// the margin leaves no such vector.
DcReport dc_defect(const OrthonormalBasis& basis, double tol = 1e-8);

/// Fix the unimodular phase: the graded-lex-first significant coefficient is
/// made real and positive.
HardyElement phase_normalize(const HardyElement& f, double tol = 1e-12);

/// Inner-function candidate via the wandering route: the one-dimensional
/// intersection O1 (^) O2 of the wandering subspaces O_j = M (-) S_j M.
/// Throws WanderingNotOneDim / EmptyWandering when the dimension is not 1.
InnerReport extract_inner_wandering(const OrthonormalBasis& basis,
                                    const Tolerances& tols = {});

/// Inner-function candidate via the kernel route: project the representer of
/// the lowest-order nonvanishing derivative at the origin onto the span.
InnerReport extract_inner_kernel(const OrthonormalBasis& basis,
                                 const Tolerances& tols = {});

/// Innerness test for a unit-norm candidate (throws NotNormalized otherwise).
InnerReport innerness_report(const HardyElement& candidate, double tol);

/// Full pipeline: span, certify, extract by both routes, test innerness, and
/// measure the distance between M and phi*H^2 on the interior window.
BeurlingVerdict beurling_verdict(const GeneratorSet& gens, const DegreeWindow& window,
                                 const Tolerances& tols = {});

/// Residual sweep over the displayed kernel identities, at deterministic
/// sample points in the 0.5-polydisc:
///   kernel_factorization       (1-conj(l1)z1)(1-conj(l2)z2) k_l(z) = phi(z)conj(phi(l))
///   kernel_shift_chain         S1 S2* k_l = z1 conj(l2) k_l   (compressed, interior norm)
///   wandering_shift_invariance S2(O1) stays inside O1
///   wandering_cross_spectrum   off-origin spectrum of cross-products in O1 (^) O2
std::vector<IdentityRecord> identity_suite(const OrthonormalBasis& basis,
                                           const HardyElement& phi, std::uint64_t seed,
                                           int samples, const Tolerances& tols = {});

/// Interior-window norm of adjoint-Toeplitz(phi) C_p - conj(phi(p)) C_p.
/// Valid for p in the 0.9-polydisc.
double toeplitz_kernel_identity_check(const HardyElement& phi, const DiscPoint& p,
                                      const DegreeWindow& window);

/// Closed-form geometric tail bound matching toeplitz_kernel_identity_check.
double toeplitz_tail_bound(const HardyElement& phi, const DiscPoint& p,
                           const DegreeWindow& window);

/// Coefficient-absolute evaluation sum |a(m,n)| r1^m r2^n (used by bounds).
double abs_evaluate(const HardyElement& f, double r1, double r2);

}  // namespace bihardy

#endif  // BIHARDY_BEURLING_HPP
