#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sseq {

enum class ErrorKind {
  NonSquare,
  DimensionMismatch,
  NotSymmetric,
  NotUnimodular,
  NotBlockShaped,
  VectorLengthMismatch,
  BoundaryEntriesDiffer,
  PatternMismatch,
  SizeUnderflow,
  InvalidMatrix,
  NotAConwayPolynomial,
  ComponentCountMismatch,
  NotBlockForm,
  SNotSymplectic,
  NotNormalized,
  RewriteFailed,
  InvalidConfig,
  ParseError,
  ValidationError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library. `kind` is stable and is what
/// callers (and the CLI's structured error output) should branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  Error(ErrorKind kind, const std::string& what, std::size_t move_index);

  ErrorKind kind() const noexcept { return kind_; }

  /// Position of the failing move when raised while replaying a sequence.
  std::optional<std::size_t> move_index() const noexcept { return move_index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> move_index_;
};

}  // namespace sseq
