#ifndef PCM_PERTURBATION_HPP_
#define PCM_PERTURBATION_HPP_

#include <optional>
#include <vector>

#include "pcm/core.hpp"

namespace pcm {

namespace tol {
/// |delta - 1| at or below this is treated as no perturbation.
inline constexpr double kDelta = 1e-9;
}  // namespace tol

/// Generator data for a simple perturbed matrix: the consistent matrix with
/// first row (1, x_1, ..., x_{n-1}), whose entry at `position` is multiplied
/// by `delta` (and its mirror by 1/delta).
///
/// For position (0,1) this is the standard layout. Any other position (i,j)
/// is the standard matrix conjugated by the permutation sending 0 -> i,
/// 1 -> j and the remaining indices to the remaining slots in increasing
/// order; `x` is always expressed in the standard frame.
struct PerturbationSpec {
  std::vector<double> x;
  double delta = 1.0;
  IndexPair position{0, 1};

  std::size_t order() const { return x.size() + 1; }
};

struct DetectionResult {
  bool is_simple_perturbed = false;
  std::optional<PerturbationSpec> recovered;
  bool is_consistent = false;
};

/// perm[k] is the actual index of standard-frame index k for `position`.
std::vector<std::size_t> position_permutation(std::size_t n, IndexPair position);

/// Throws DeltaIsOne, ParameterDomain (non-positive x or delta, order < 3,
/// bad position).
void check_spec(const PerturbationSpec& spec);

PairwiseComparisonMatrix build_simple_perturbed(const PerturbationSpec& spec);

/// Finds the first (lexicographic) entry pair whose repair makes the matrix
/// consistent. The reported position is oriented so that delta > 1.
DetectionResult detect_simple_perturbed(const PairwiseComparisonMatrix& a);

/// Perturbation factor at `position`; throws NotPerturbedHere if repairing
/// that entry does not yield a consistent matrix or the factor is 1.
double recover_delta(const PairwiseComparisonMatrix& a, IndexPair position);

/// Parametric family whose principal eigenvector is known to be inefficient:
/// row 0 is (1, p, ..., p) and the trailing (n-1)x(n-1) block is all ones
/// except for a cycle of q's (1->2->...->n-1->1 in zero-based indices).
PairwiseComparisonMatrix parametric_inefficient(std::size_t n, double p, double q);

}  // namespace pcm

#endif  // PCM_PERTURBATION_HPP_
