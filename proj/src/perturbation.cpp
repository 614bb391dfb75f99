#include "pcm/perturbation.hpp"

#include <cmath>
#include <sstream>

namespace pcm {

namespace {

struct Repair {
  double value;  // consistent replacement for a(i,j)
};

// Replacement a_ik * a_kj for a(i,j), provided every k outside {i,j} agrees
// and the repaired matrix is consistent.
std::optional<Repair> try_repair(const PairwiseComparisonMatrix& a, std::size_t i, std::size_t j) {
  const std::size_t n = a.order();
  std::optional<double> value;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    const double v = a(i, k) * a(k, j);
    if (!value) {
      value = v;
    } else if (std::abs(v - *value) > tol::kConsistency * *value) {
      return std::nullopt;
    }
  }
  Matrix repaired = a.entries();
  repaired(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = *value;
  repaired(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1.0 / *value;
  if (!is_consistent(validate_pcm(repaired)).consistent) return std::nullopt;
  return Repair{*value};
}

void check_position(std::size_t n, IndexPair position) {
  if (position[0] >= n || position[1] >= n || position[0] == position[1]) {
    std::ostringstream msg;
    msg << "position (" << position[0] + 1 << "," << position[1] + 1
        << ") is not an off-diagonal entry of an order-" << n << " matrix";
    throw PcmError(ErrorCode::ParameterDomain, msg.str());
  }
}

}  // namespace

std::vector<std::size_t> position_permutation(std::size_t n, IndexPair position) {
  check_position(n, position);
  std::vector<std::size_t> perm{position[0], position[1]};
  perm.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k != position[0] && k != position[1]) perm.push_back(k);
  }
  return perm;
}

void check_spec(const PerturbationSpec& spec) {
  if (spec.order() < 3) {
    throw PcmError(ErrorCode::ParameterDomain, "a simple perturbed matrix needs at least 2 generator ratios");
  }
  for (std::size_t k = 0; k < spec.x.size(); ++k) {
    if (!std::isfinite(spec.x[k]) || !(spec.x[k] > 0.0)) {
      std::ostringstream msg;
      msg << "generator ratio x" << k + 1 << " = " << spec.x[k] << " is not positive";
      throw PcmError(ErrorCode::ParameterDomain, msg.str());
    }
  }
  if (!std::isfinite(spec.delta) || !(spec.delta > 0.0)) {
    throw PcmError(ErrorCode::ParameterDomain, "perturbation factor must be positive");
  }
  if (std::abs(spec.delta - 1.0) <= tol::kDelta) {
    throw PcmError(ErrorCode::DeltaIsOne, "perturbation factor 1 gives a consistent matrix");
  }
  check_position(spec.order(), spec.position);
}

PairwiseComparisonMatrix build_simple_perturbed(const PerturbationSpec& spec) {
  check_spec(spec);
  const std::size_t n = spec.order();
  const auto perm = position_permutation(n, spec.position);

  // Standard frame: a_ij = x_j / x_i with x_0 = 1.
  auto gen = [&](std::size_t k) { return k == 0 ? 1.0 : spec.x[k - 1]; };
  Matrix a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      double v = (r == c) ? 1.0 : gen(c) / gen(r);
      if (r == 0 && c == 1) v = spec.x[0] * spec.delta;
      if (r == 1 && c == 0) v = 1.0 / (spec.x[0] * spec.delta);
      a(static_cast<Eigen::Index>(perm[r]), static_cast<Eigen::Index>(perm[c])) = v;
    }
  }
  return validate_pcm(a);
}

DetectionResult detect_simple_perturbed(const PairwiseComparisonMatrix& a) {
  DetectionResult result;
  if (is_consistent(a).consistent) {
    result.is_consistent = true;
    return result;
  }
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto repair = try_repair(a, i, j);
      if (!repair) continue;
      double delta = a(i, j) / repair->value;
      IndexPair position{i, j};
      double consistent_ij = repair->value;
      if (delta < 1.0) {
        delta = 1.0 / delta;
        position = {j, i};
        consistent_ij = 1.0 / consistent_ij;
      }
      if (std::abs(delta - 1.0) <= tol::kDelta) continue;

      // Generator ratios from the repaired matrix, read in the standard frame.
      const auto perm = position_permutation(n, position);
      auto repaired = [&](std::size_t r, std::size_t c) {
        if (r == position[0] && c == position[1]) return consistent_ij;
        return a(r, c);
      };
      PerturbationSpec spec;
      spec.delta = delta;
      spec.position = position;
      spec.x.reserve(n - 1);
      for (std::size_t k = 1; k < n; ++k) spec.x.push_back(repaired(perm[0], perm[k]));
      result.is_simple_perturbed = true;
      result.recovered = std::move(spec);
      return result;
    }
  }
  return result;
}

double recover_delta(const PairwiseComparisonMatrix& a, IndexPair position) {
  check_position(a.order(), position);
  const auto repair = try_repair(a, position[0], position[1]);
  const double delta = repair ? a(position[0], position[1]) / repair->value : 1.0;
  if (!repair || std::abs(delta - 1.0) <= tol::kDelta) {
    std::ostringstream msg;
    msg << "matrix is not simple perturbed at (" << position[0] + 1 << "," << position[1] + 1 << ")";
    throw PcmError(ErrorCode::NotPerturbedHere, msg.str());
  }
  return delta;
}

PairwiseComparisonMatrix parametric_inefficient(std::size_t n, double p, double q) {
  if (n < 4) throw PcmError(ErrorCode::ParameterDomain, "parametric family requires n >= 4");
  if (!std::isfinite(p) || !(p > 0.0)) throw PcmError(ErrorCode::ParameterDomain, "p must be positive");
  if (!std::isfinite(q) || !(q > 0.0) || std::abs(q - 1.0) <= tol::kDelta) {
    throw PcmError(ErrorCode::ParameterDomain, "q must be positive and different from 1");
  }
  const auto m = static_cast<Eigen::Index>(n);
  Matrix a = Matrix::Ones(m, m);
  for (Eigen::Index j = 1; j < m; ++j) {
    a(0, j) = p;
    a(j, 0) = 1.0 / p;
  }
  for (Eigen::Index k = 1; k + 1 < m; ++k) {
    a(k, k + 1) = q;
    a(k + 1, k) = 1.0 / q;
  }
  a(m - 1, 1) = q;
  a(1, m - 1) = 1.0 / q;
  return validate_pcm(a);
}

}  // namespace pcm
