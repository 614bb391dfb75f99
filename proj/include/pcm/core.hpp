#ifndef PCM_CORE_HPP_
#define PCM_CORE_HPP_

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "pcm/error.hpp"

namespace pcm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Index pair (row, column), zero-based.
using IndexPair = std::array<std::size_t, 2>;

namespace tol {
inline constexpr double kReciprocity = 1e-8;  // relative
inline constexpr double kConsistency = 1e-8;  // relative
inline constexpr double kNormalization = 1e-12;
}  // namespace tol

/// Positive reciprocal matrix with unit diagonal, order >= 3.
///
/// Only obtainable through validate_pcm (or the library's generators, which
/// route through it). After validation the strict lower triangle holds the
/// exact reciprocals of the upper triangle, so a(i,j) * a(j,i) == 1 holds to
/// the last bit in floating point rather than merely within tolerance.
class PairwiseComparisonMatrix {
 public:
  std::size_t order() const { return static_cast<std::size_t>(entries_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Matrix& entries() const { return entries_; }

  friend bool operator==(const PairwiseComparisonMatrix& a,
                         const PairwiseComparisonMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  explicit PairwiseComparisonMatrix(Matrix entries) : entries_(std::move(entries)) {}
  friend PairwiseComparisonMatrix validate_pcm(const Matrix& raw);

  Matrix entries_;
};

/// Strictly positive weights, stored normalized to unit sum.
class WeightVector {
 public:
  /// Normalizes `raw`; throws InvalidWeights on empty input or any
  /// non-positive / non-finite component.
  explicit WeightVector(const Vector& raw);
  explicit WeightVector(std::span<const double> raw);

  std::size_t size() const { return static_cast<std::size_t>(w_.size()); }
  double operator[](std::size_t i) const { return w_(static_cast<Eigen::Index>(i)); }
  const Vector& values() const { return w_; }
  std::vector<double> to_std() const { return {w_.data(), w_.data() + w_.size()}; }

  static WeightVector uniform(std::size_t n);

 private:
  Vector w_;
};

struct ConsistencyReport {
  bool consistent = true;
  std::array<std::size_t, 3> worst_triad{0, 0, 0};  // (i, k, j)
  double max_deviation = 0.0;  // max |a_ik a_kj - a_ij| / a_ij
};

/// Checks positivity, unit diagonal and reciprocity, then rebuilds the lower
/// triangle as exact reciprocals of the upper triangle.
PairwiseComparisonMatrix validate_pcm(const Matrix& raw);

/// Exhaustive scan over all n^3 triads.
ConsistencyReport is_consistent(const PairwiseComparisonMatrix& a);

/// Consistent matrix with entries w_i / w_j.
PairwiseComparisonMatrix from_weights(const WeightVector& w);

/// Raw ratio matrix [w_i / w_j].
Matrix ratio_matrix(const WeightVector& w);

}  // namespace pcm

#endif  // PCM_CORE_HPP_
