#include "sseq/error.hpp"

namespace sseq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NotBlockShaped: return "NotBlockShaped";
    case ErrorKind::VectorLengthMismatch: return "VectorLengthMismatch";
    case ErrorKind::BoundaryEntriesDiffer: return "BoundaryEntriesDiffer";
    case ErrorKind::PatternMismatch: return "PatternMismatch";
    case ErrorKind::SizeUnderflow: return "SizeUnderflow";
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::NotAConwayPolynomial: return "NotAConwayPolynomial";
    case ErrorKind::ComponentCountMismatch: return "ComponentCountMismatch";
    case ErrorKind::NotBlockForm: return "NotBlockForm";
    case ErrorKind::SNotSymplectic: return "SNotSymplectic";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::RewriteFailed: return "RewriteFailed";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& what, std::size_t move_index)
    : std::runtime_error(what), kind_(kind), move_index_(move_index) {}

}  // namespace sseq
