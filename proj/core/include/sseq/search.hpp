#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sseq/invariants.hpp"
#include "sseq/linalg.hpp"
#include "sseq/moves.hpp"
#include "sseq/seifert.hpp"

namespace sseq {

enum class SearchMode { Strong, Classical };

struct SearchConfig {
  std::size_t max_depth = 3;   // moves per side
  unsigned entry_bound = 1;    // |c| for transvections, |entry| for enlargement data
  std::size_t max_genus = 1;   // strong: genus cap; classical: cap on floor(n / 2)
  SearchMode mode = SearchMode::Strong;
  std::uint64_t seed = 0;      // recorded in reports; expansion order is fixed
  std::size_t max_nodes = 2'000'000;
};

/// Injective: 4-byte rows, 4-byte cols, then every entry via append_integer.
std::string canonical_key(const IntMatrix& m);
IntMatrix decode_key(std::string_view key);

struct Equivalent {
  /// Replays from the first matrix to the second under the mode's rules.
  std::vector<Move> witness;
  IntMatrix meeting;
  std::size_t forward_moves = 0;
  std::size_t backward_moves = 0;
  bool replay_verified = false;
};

struct Distinguished {
  std::vector<std::string> invariants;  // first entry is the headline
  std::optional<InvariantFingerprint> first, second;
  std::optional<ClassicalFingerprint> first_classical, second_classical;
};

struct Inconclusive {
  std::string bound_hit;  // "depth", "nodes" or "exhausted"
};

struct SearchStats {
  std::size_t nodes_expanded = 0;
  std::size_t nodes_generated = 0;
  std::size_t forward_frontier = 0;
  std::size_t backward_frontier = 0;
  std::size_t forward_depth = 0;
  std::size_t backward_depth = 0;
  int phase = 0;  // 1: congruences and reductions only, 2: with enlargements
};

struct SearchOutcome {
  SearchMode mode = SearchMode::Strong;
  std::size_t boundary = 0;
  IntMatrix first;
  IntMatrix second;
  SearchConfig config;
  std::variant<Equivalent, Distinguished, Inconclusive> result;
  SearchStats stats;

  bool equivalent() const { return std::holds_alternative<Equivalent>(result); }
  bool distinguished() const { return std::holds_alternative<Distinguished>(result); }
  bool inconclusive() const { return std::holds_alternative<Inconclusive>(result); }
  std::string_view verdict() const;
};

/// Fingerprint pre-filter, then bidirectional breadth-first search over
/// strong moves. Throws ComponentCountMismatch or InvalidMatrix.
SearchOutcome strong_equiv_bounded(const OrderedSeifertMatrix& a, const OrderedSeifertMatrix& b,
                                   SearchConfig cfg);

/// Same pipeline over unrestricted unimodular congruences and classical
/// enlargements; the pre-filter ignores linking numbers.
SearchOutcome classical_equiv_bounded(const IntMatrix& v, const IntMatrix& w, SearchConfig cfg);

struct SearchReport {
  std::string human;
  nlohmann::json machine;
};

/// Equivalent outcomes are replayed again here; the result is recorded.
SearchReport search_report(const SearchOutcome& outcome);

}  // namespace sseq
