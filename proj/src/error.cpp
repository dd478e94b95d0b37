#include "holo/error.hpp"

namespace holo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DuplicatePrime: return "DuplicatePrime";
    case ErrorKind::NoReconstruction: return "NoReconstruction";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::DivisionByZeroOperator: return "DivisionByZeroOperator";
    case ErrorKind::NotEnoughData: return "NotEnoughData";
    case ErrorKind::InconsistentTerms: return "InconsistentTerms";
    case ErrorKind::SingularSeed: return "SingularSeed";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::AlreadyHomogeneous: return "AlreadyHomogeneous";
    case ErrorKind::ZeroRatio: return "ZeroRatio";
    case ErrorKind::MissingInitialTerms: return "MissingInitialTerms";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorKind::UnluckyPrimeExhaustion: return "UnluckyPrimeExhaustion";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonContiguousIndices: return "NonContiguousIndices";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace holo
