#include "pcm/spectral.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace pcm {

PerronPair perron_eigenpair(const PairwiseComparisonMatrix& a, const std::optional<Vector>& start) {
  const Matrix& m = a.entries();
  const Eigen::Index n = m.rows();

  Vector x = start ? *start : Vector::Ones(n);
  if (x.size() != n) {
    throw PcmError(ErrorCode::DimensionMismatch, "starting vector length differs from matrix order");
  }
  if ((x.array() <= 0.0).any()) {
    throw PcmError(ErrorCode::InvalidWeights, "starting vector must be strictly positive");
  }
  x /= x.sum();

  std::size_t it = 0;
  Vector y(n);
  while (it < tol::kPowerMaxIterations) {
    y.noalias() = m * x;
    y /= y.sum();
    const double step = (y - x).cwiseAbs().maxCoeff();
    x.swap(y);
    ++it;
    if (step < tol::kPowerStep) break;
  }

  // x has unit sum, so summing A x = lambda x gives lambda directly.
  y.noalias() = m * x;
  const double lambda = y.sum();
  const double residual = (y - lambda * x).cwiseAbs().maxCoeff();
  if (!std::isfinite(lambda) || residual > tol::kEigenResidual * lambda) {
    std::ostringstream msg;
    msg << "power iteration stopped after " << it << " steps with residual " << residual;
    throw PcmError(ErrorCode::NoConvergence, msg.str());
  }
  return PerronPair{lambda, WeightVector(x), it, residual};
}

namespace {

// (delta + 1/delta - 2), written to stay accurate near delta = 1.
double delta_excess(double delta) {
  const double d = delta - 1.0;
  return d * d / delta;
}

void check_cubic_args(std::size_t n, double delta) {
  if (n < 3) throw PcmError(ErrorCode::ParameterDomain, "order must be at least 3");
  if (!std::isfinite(delta) || !(delta > 0.0)) {
    throw PcmError(ErrorCode::ParameterDomain, "perturbation factor must be positive");
  }
}

}  // namespace

double lambda_from_cubic(std::size_t n, double delta) {
  check_cubic_args(n, delta);
  const double nn = static_cast<double>(n);
  const double excess = delta_excess(delta);
  if (excess == 0.0) return nn;

  // Solve for the offset t = lambda - n: (n + t)^2 t = (n-2)(delta + 1/delta - 2).
  // The offset form keeps full relative precision when delta is close to 1.
  const double k = (nn - 2.0) * excess;
  auto g = [&](double t) { return (nn + t) * (nn + t) * t - k; };
  auto dg = [&](double t) { return (nn + t) * (nn + 3.0 * t); };

  double lo = 0.0;
  double hi = (nn - 2.0) * std::cbrt(excess) + 1.0;
  double t = k / (nn * nn);  // first-order guess
  if (!(t > lo && t < hi)) t = 0.5 * (lo + hi);

  for (int iter = 0; iter < 200; ++iter) {
    const double gt = g(t);
    if (gt == 0.0) break;
    if (gt < 0.0) lo = t; else hi = t;

    double next = t - gt / dg(t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) <= 2.0 * std::numeric_limits<double>::epsilon() * std::abs(next) ||
        hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * hi) {
      t = next;
      break;
    }
    t = next;
  }
  return nn + t;
}

double lambda_explicit(std::size_t n, double delta) {
  check_cubic_args(n, delta);
  const double N = static_cast<double>(n);
  const double d = delta;
  const double n2 = N * N, n3 = n2 * N, n4 = n3 * N;
  const double d2 = d * d, d3 = d2 * d, d4 = d3 * d;

  const double b = 8 * n3 * d + 108 * N * d2 - 216 * N * d + 108 * N - 216 * d2 + 432 * d - 216;
  const double c = 4 * n4 * d3 - 8 * n4 * d2 + 4 * n4 * d
                 - 8 * n3 * d3 + 16 * n3 * d2 - 8 * n3 * d
                 + 27 * n2 * d4 + 162 * n2 * d2 - 108 * n2 * d3 - 108 * n2 * d + 27 * n2
                 - 108 * N * d4 + 432 * N * d3 - 648 * N * d2 + 432 * N * d - 108 * N
                 + 108 * d4 - 432 * d3 + 648 * d2 - 432 * d + 108;
  if (c < 0.0) {
    std::ostringstream msg;
    msg << "negative radicand " << c << " for n = " << n << ", delta = " << delta;
    throw PcmError(ErrorCode::NumericalBreakdown, msg.str());
  }
  const double x = b + 12.0 * std::sqrt(3.0 * c);
  // The second Cardano term carries n^2 (its product with the first term
  // must equal n^2 / 9).
  const double lambda = std::cbrt(x / d) / 6.0 + (2.0 / 3.0) * n2 * std::cbrt(d / x) + N / 3.0;
  if (!std::isfinite(lambda)) {
    throw PcmError(ErrorCode::NumericalBreakdown, "explicit eigenvalue formula overflowed");
  }
  return lambda;
}

PerturbedSpectrum perturbed_spectrum(std::size_t n, double delta) {
  const double lambda = lambda_from_cubic(n, delta);
  const double c = (lambda - 1.0 + delta) / (lambda * (lambda - static_cast<double>(n) + 1.0));
  return PerturbedSpectrum{n, delta, lambda, c};
}

namespace {

// Places a standard-frame vector into the frame of spec.position.
WeightVector to_position_frame(const PerturbationSpec& spec, const Vector& standard) {
  const auto perm = position_permutation(spec.order(), spec.position);
  Vector w(standard.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    w(static_cast<Eigen::Index>(perm[k])) = standard(static_cast<Eigen::Index>(k));
  }
  return WeightVector(w);
}

}  // namespace

WeightVector eigvec_formula26(const PerturbationSpec& spec) {
  check_spec(spec);
  const std::size_t n = spec.order();
  const double nn = static_cast<double>(n);
  const double lambda = lambda_from_cubic(n, spec.delta);
  const double d = spec.delta;

  Vector v(static_cast<Eigen::Index>(n));
  v(0) = lambda - 1.0 + d;
  v(1) = (lambda - 1.0 + 1.0 / d) / spec.x[0];
  const double tail = lambda * (lambda - 2.0) / (nn - 2.0);
  for (std::size_t i = 2; i < n; ++i) v(static_cast<Eigen::Index>(i)) = tail / spec.x[i - 1];
  return to_position_frame(spec, v);
}

WeightVector eigvec_formula24(const PerturbationSpec& spec) {
  check_spec(spec);
  const std::size_t n = spec.order();
  const auto s = perturbed_spectrum(n, spec.delta);
  const double lambda = s.lambda;
  const double nn = static_cast<double>(n);
  const double d = spec.delta;

  Vector v(static_cast<Eigen::Index>(n));
  v(0) = lambda * (lambda - nn + 1.0);
  v(1) = (lambda - (1.0 - 1.0 / d) * (lambda - nn + 2.0)) / spec.x[0];
  const double tail = lambda - 1.0 + 1.0 / d;
  for (std::size_t i = 2; i < n; ++i) v(static_cast<Eigen::Index>(i)) = tail / spec.x[i - 1];
  v *= s.c;
  return to_position_frame(spec, v);
}

}  // namespace pcm
