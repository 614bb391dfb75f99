#ifndef PCM_ERROR_HPP_
#define PCM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pcm {

enum class ErrorCode {
  NonSquare,
  OrderTooSmall,
  NonPositiveEntry,
  ReciprocityViolation,
  DimensionMismatch,
  InvalidWeights,
  DeltaIsOne,
  ParameterDomain,
  NotPerturbedHere,
  GraphIsStronglyConnected,
  NoConvergence,
  NumericalBreakdown,
  Parse,
};

const char* to_string(ErrorCode code);

/// True for failures of the numerical machinery itself, as opposed to bad input.
inline bool is_numerical(ErrorCode code) {
  return code == ErrorCode::NoConvergence || code == ErrorCode::NumericalBreakdown;
}

class PcmError : public std::runtime_error {
 public:
  PcmError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pcm

#endif  // PCM_ERROR_HPP_
