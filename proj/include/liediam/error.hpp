#pragma once

#include <stdexcept>
#include <string>

namespace liediam {

/// Error codes for the exact-arithmetic and Lie-algebra toolkit.
enum class Errc {
  NotPrime,
  NotIrreducible,
  NotInert,
  OrderMismatch,
  NotASymmetry,
  SignConflict,
  InvalidType,
  NotNilpotent,
  CharTooSmall,
  NotGenerating,
  CutoffExceeded,
  NotFullRank,
  PrimeTooSmall,
  SearchExhausted,
  ZeroElement,
  NotDecomposable,
  PipelineStall,
  LineNotFull,
  DegreeNotDividing,
  InsufficientPrimes,
  ConfigError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace liediam
