#ifndef PCM_SPECTRAL_HPP_
#define PCM_SPECTRAL_HPP_

#include <cstddef>
#include <optional>

#include "pcm/core.hpp"
#include "pcm/perturbation.hpp"

namespace pcm {

namespace tol {
/// Eigen residual bound, relative to lambda_max.
inline constexpr double kEigenResidual = 1e-10;
inline constexpr double kPowerStep = 1e-14;
inline constexpr std::size_t kPowerMaxIterations = 100000;
}  // namespace tol

struct PerronPair {
  double lambda_max = 0.0;
  WeightVector w_em;
  std::size_t iterations = 0;
  double residual = 0.0;  // max_i |(A w)_i - lambda w_i|
};

struct PerturbedSpectrum {
  std::size_t n = 0;
  double delta = 1.0;
  double lambda = 0.0;
  double c = 0.0;  // scalar relating the two closed-form eigenvectors
};

/// Power iteration from the uniform vector (or `start`, if given).
/// Throws NoConvergence when the iteration cap is reached with the residual
/// still above tolerance.
PerronPair perron_eigenpair(const PairwiseComparisonMatrix& a,
                            const std::optional<Vector>& start = std::nullopt);

/// Root above n of lambda^3 - n lambda^2 - (n-2)(delta + 1/delta - 2);
/// exactly n when delta == 1.
double lambda_from_cubic(std::size_t n, double delta);

/// Cardano radical form of the same root. Throws NumericalBreakdown if the
/// radicand comes out negative or the result is not finite.
double lambda_explicit(std::size_t n, double delta);

PerturbedSpectrum perturbed_spectrum(std::size_t n, double delta);

/// Closed-form principal eigenvector of build_simple_perturbed(spec), first
/// variant: (lambda-1+delta, (lambda-1+1/delta)/x_1, lambda(lambda-2)/((n-2) x_{k-1}) ...).
WeightVector eigvec_formula26(const PerturbationSpec& spec);

/// Second closed form, c * (lambda(lambda-n+1), [lambda - (1-1/delta)(lambda-n+2)]/x_1,
/// (lambda-1+1/delta)/x_{k-1} ...).
WeightVector eigvec_formula24(const PerturbationSpec& spec);

}  // namespace pcm

#endif  // PCM_SPECTRAL_HPP_
