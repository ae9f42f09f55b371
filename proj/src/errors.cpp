#include "descartes/errors.hpp"

namespace descartes {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeUnderflow: return "DegreeUnderflow";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::VanishingCoefficient: return "VanishingCoefficient";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::IterationBudgetExceeded: return "IterationBudgetExceeded";
    case ErrorKind::EpsilonExhausted: return "EpsilonExhausted";
    case ErrorKind::BadSeriesParams: return "BadSeriesParams";
    case ErrorKind::UniquenessViolated: return "UniquenessViolated";
    case ErrorKind::MultipleRootInChain: return "MultipleRootInChain";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::StoreCorruption: return "StoreCorruption";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace descartes
