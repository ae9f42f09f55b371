#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace descartes {

enum class ErrorKind {
  DegreeUnderflow,
  NotSquarefree,
  VanishingCoefficient,
  ZeroConstantTerm,
  ZeroPolynomial,
  IterationBudgetExceeded,
  EpsilonExhausted,
  BadSeriesParams,
  UniquenessViolated,
  MultipleRootInChain,
  InvalidArgument,
  Parse,
  StoreCorruption,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace descartes
