#pragma once

#include <stdexcept>
#include <string>

namespace sqfree {

enum class Errc {
  DivisionByZero,
  MixedBackends,
  ZeroConjugator,
  InfiniteBackend,
  InvalidSpec,
  InvalidInput,
  SearchBoundExceeded,
  BlockNotMatrixUnits,
  NonCommutativeCoefficients,
  InvalidCocycle,
  MixedRings,
  WitnessRejected,
  NonCentralXi,
  NotAOneCocycle,
  NotInvertible,
  NormalizationFailed,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sqfree
