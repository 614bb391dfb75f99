#include "pcm/core.hpp"

#include <cmath>
#include <sstream>

namespace pcm {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::DeltaIsOne: return "DeltaIsOne";
    case ErrorCode::ParameterDomain: return "ParameterDomain";
    case ErrorCode::NotPerturbedHere: return "NotPerturbedHere";
    case ErrorCode::GraphIsStronglyConnected: return "GraphIsStronglyConnected";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

WeightVector::WeightVector(const Vector& raw) : w_(raw) {
  if (w_.size() == 0) {
    throw PcmError(ErrorCode::InvalidWeights, "weight vector is empty");
  }
  for (Eigen::Index i = 0; i < w_.size(); ++i) {
    if (!std::isfinite(w_(i)) || !(w_(i) > 0.0)) {
      std::ostringstream msg;
      msg << "weight " << i + 1 << " is not strictly positive: " << w_(i);
      throw PcmError(ErrorCode::InvalidWeights, msg.str());
    }
  }
  w_ /= w_.sum();
}

WeightVector::WeightVector(std::span<const double> raw)
    : WeightVector(Vector(Eigen::Map<const Vector>(raw.data(), static_cast<Eigen::Index>(raw.size())))) {}

WeightVector WeightVector::uniform(std::size_t n) {
  return WeightVector(Vector::Ones(static_cast<Eigen::Index>(n)));
}

PairwiseComparisonMatrix validate_pcm(const Matrix& raw) {
  if (raw.rows() != raw.cols()) {
    std::ostringstream msg;
    msg << "matrix is " << raw.rows() << "x" << raw.cols() << ", expected square";
    throw PcmError(ErrorCode::NonSquare, msg.str());
  }
  const Eigen::Index n = raw.rows();
  if (n < 3) {
    std::ostringstream msg;
    msg << "order " << n << " is below the minimum of 3";
    throw PcmError(ErrorCode::OrderTooSmall, msg.str());
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!std::isfinite(raw(i, j)) || !(raw(i, j) > 0.0)) {
        std::ostringstream msg;
        msg << "entry (" << i + 1 << "," << j + 1 << ") = " << raw(i, j) << " is not positive";
        throw PcmError(ErrorCode::NonPositiveEntry, msg.str());
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(raw(i, i) - 1.0) > tol::kReciprocity) {
      std::ostringstream msg;
      msg << "diagonal entry (" << i + 1 << "," << i + 1 << ") = " << raw(i, i) << " is not 1";
      throw PcmError(ErrorCode::ReciprocityViolation, msg.str());
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double dev = std::abs(raw(i, j) * raw(j, i) - 1.0);
      if (dev > tol::kReciprocity) {
        std::ostringstream msg;
        msg << "entries (" << i + 1 << "," << j + 1 << ") and (" << j + 1 << "," << i + 1
            << ") are not reciprocal: product deviates from 1 by " << dev;
        throw PcmError(ErrorCode::ReciprocityViolation, msg.str());
      }
    }
  }

  Matrix a = raw;
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) a(j, i) = 1.0 / a(i, j);
  }
  return PairwiseComparisonMatrix(std::move(a));
}

ConsistencyReport is_consistent(const PairwiseComparisonMatrix& a) {
  const std::size_t n = a.order();
  ConsistencyReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        const double dev = std::abs(a(i, k) * a(k, j) - a(i, j)) / a(i, j);
        if (dev > report.max_deviation) {
          report.max_deviation = dev;
          report.worst_triad = {i, k, j};
        }
      }
    }
  }
  report.consistent = report.max_deviation <= tol::kConsistency;
  return report;
}

Matrix ratio_matrix(const WeightVector& w) {
  const auto n = static_cast<Eigen::Index>(w.size());
  const Vector& v = w.values();
  Matrix r(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) r(i, j) = (i == j) ? 1.0 : v(i) / v(j);
  }
  return r;
}

PairwiseComparisonMatrix from_weights(const WeightVector& w) {
  return validate_pcm(ratio_matrix(w));
}

}  // namespace pcm
