#ifndef BIHARDY_SUBSPACE_HPP
#define BIHARDY_SUBSPACE_HPP

#include <vector>

#include "bihardy/element.hpp"

namespace bihardy {

inline constexpr double kDefaultRankTol = 1e-10;

/// Orthonormal spanning set for a finite-dimensional subspace of a degree
/// window. Vectors are kept in generation order (graded-lex), which keeps
/// low-index vectors low-degree; several operations rely on that grading.
class OrthonormalBasis {
 public:
  OrthonormalBasis(DegreeWindow window, std::vector<HardyElement> vectors,
                   double rank_tol)
      : window_(window), vectors_(std::move(vectors)), rank_tol_(rank_tol) {}

  static OrthonormalBasis empty(const DegreeWindow& window,
                                double rank_tol = kDefaultRankTol) {
    return OrthonormalBasis(window, {}, rank_tol);
  }

  int dim() const noexcept { return static_cast<int>(vectors_.size()); }
  const DegreeWindow& window() const noexcept { return window_; }
  double rank_tol() const noexcept { return rank_tol_; }
  const std::vector<HardyElement>& vectors() const noexcept { return vectors_; }
  const HardyElement& vector(int i) const { return vectors_.at(i); }

  /// Column matrix of flattened basis vectors (count x dim).
  Eigen::MatrixXcd matrix() const;

 private:
  DegreeWindow window_;
  std::vector<HardyElement> vectors_;
  double rank_tol_;
};

/// Input generators for an invariant subspace; a common window is enforced
/// by embedding into the union window.
struct GeneratorSet {
  std::vector<HardyElement> elements;

  explicit GeneratorSet(std::vector<HardyElement> gens);
};

struct ShiftImage {
  OrthonormalBasis basis;
  int overflow_count = 0;
};

/// Monomial exponents (a,b) of a window in graded-lex order on (a+b, a);
/// the deterministic generation order used throughout.
std::vector<std::pair<int, int>> graded_monomials(const DegreeWindow& window);

/// Rank-revealing orthonormalization of `candidates` (two-pass modified
/// Gram-Schmidt in the given order, relative cutoff rank_tol).
std::vector<HardyElement> orthonormalize(const std::vector<HardyElement>& candidates,
                                         double rank_tol);

/// Orthonormal basis of span{ z1^a z2^b g : g in gens, product fits window },
/// enumerated in graded-lex order. Throws EmptySpan when every candidate
/// falls below tolerance.
OrthonormalBasis span_invariant(const GeneratorSet& gens, const DegreeWindow& window,
                                double rank_tol = kDefaultRankTol);

/// Orthogonal projection of f onto the span.
HardyElement project(const OrthonormalBasis& basis, const HardyElement& f);

/// Reproducing kernel of the span at p: sum_i conj(v_i(p)) v_i.
HardyElement kernel_at(const OrthonormalBasis& basis, const DiscPoint& p);

/// Basis of { shift(v, axis) : v in basis, shift fits }, dropping (and
/// tallying) vectors whose shifted image would overflow.
ShiftImage shift_image(const OrthonormalBasis& basis, int axis);

/// Orthonormal basis of ambient (-) inner. Throws NotContained when some
/// inner vector has a significant residual against the ambient span.
OrthonormalBasis complement_in(const OrthonormalBasis& ambient,
                               const OrthonormalBasis& inner);

/// Numerical intersection via principal angles of the cross-Gram matrix:
/// directions with singular value >= 1 - angle_tol. The returned basis is
/// re-aligned to graded coordinate directions inside the detected span.
OrthonormalBasis intersect(const OrthonormalBasis& a, const OrthonormalBasis& b,
                           double angle_tol = 1e-8);

/// Gap metric between spans: largest projection residual in either
/// direction (operator norm); 0 iff equal spans, 1 for orthogonal ones.
double subspace_distance(const OrthonormalBasis& a, const OrthonormalBasis& b);

}  // namespace bihardy

#endif  // BIHARDY_SUBSPACE_HPP
