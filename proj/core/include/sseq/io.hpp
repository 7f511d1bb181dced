#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sseq/factorize.hpp"
#include "sseq/invariants.hpp"
#include "sseq/moves.hpp"
#include "sseq/normalize.hpp"
#include "sseq/seifert.hpp"

namespace sseq {

using Json = nlohmann::json;

// Integers are JSON numbers inside the signed 64-bit range and decimal
// strings outside it. `where` is a JSON pointer used in error messages.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j, const std::string& where);
Json vector_to_json(std::span<const Integer> v);
IntVector vector_from_json(const Json& j, const std::string& where);
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, const std::string& where);

/// {"components": m, "genus": g, "entries": [[...]], "label": "..."}
struct MatrixDocument {
  std::size_t components = 1;
  std::size_t genus = 0;
  IntMatrix entries;
  std::optional<std::string> label;

  OrderedSeifertMatrix seifert() const { return {components, genus, entries}; }
};

Json to_json(const MatrixDocument& doc);
/// In classical mode "components" defaults to 1 and "genus" to n / 2.
MatrixDocument matrix_document_from_json(const Json& j, ValidationMode mode = ValidationMode::Strict);

/// Parses JSON text into a ParseError carrying the line and column.
Json parse_json_text(std::string_view text);

/// Parses and validates. ParseError for malformed documents, ValidationError
/// naming the failing invariant.
MatrixDocument parse_matrix_document(std::string_view text, ValidationMode mode = ValidationMode::Strict);
OrderedSeifertMatrix parse_matrix(std::string_view text, ValidationMode mode = ValidationMode::Strict);
std::string serialize_matrix(const MatrixDocument& doc);
std::string serialize_matrix(const OrderedSeifertMatrix& s, std::optional<std::string> label = std::nullopt);

/// {"type": "strong_congruence", "A": ...} | {"type": "classical_congruence", "P": ...}
/// | {"type": "enlarge", "form": "A"|"B", "x": [...], "y": [...], "z": n} | {"type": "reduce"}
Json move_to_json(const Move& move);
Move move_from_json(const Json& j, const std::string& where);
Json moves_to_json(std::span<const Move> moves);
/// Accepts a bare array or an object holding "moves" or "witness".
std::vector<Move> moves_from_json(const Json& j);
std::vector<Move> parse_moves(std::string_view text);
std::string serialize_moves(std::span<const Move> moves);

Json linking_to_json(const LinkingTable& t);
Json fingerprint_to_json(const InvariantFingerprint& fp);
InvariantFingerprint fingerprint_from_json(const Json& j);
Json classical_fingerprint_to_json(const ClassicalFingerprint& fp);
Json validation_to_json(const ValidationReport& r);
Json annotated_to_json(const AnnotatedSequence& seq);
Json factorization_to_json(const ChangeOfBasis& cb);

/// Arrays of scalars stay on one line; objects list keys in sorted order.
std::string format_json(const Json& j);

/// Writes through a temporary file in the same directory and renames it
/// into place, so a failed write leaves nothing behind. IoError on failure.
void persist_report(const Json& report, const std::filesystem::path& path);
Json load_report(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// Catalog is {"matrices": [MatrixDocument...]} or a bare array. Produces
/// per-matrix fingerprints and the pairwise table of differing invariants.
Json run_batch(const Json& catalog);

}  // namespace sseq
