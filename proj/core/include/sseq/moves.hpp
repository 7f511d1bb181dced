#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sseq/linalg.hpp"
#include "sseq/seifert.hpp"

namespace sseq {

/// A-form appends (x z 1; 0 0 0) below and (y^t 0)^t to the right, so the
/// new 1 sits at (n+1, n+2). B-form puts it at (n+2, n+1) instead.
enum class EnlargeForm { A, B };

struct StrongCongruence {
  IntMatrix a;
  friend bool operator==(const StrongCongruence&, const StrongCongruence&) = default;
};

struct ClassicalCongruence {
  IntMatrix p;
  friend bool operator==(const ClassicalCongruence&, const ClassicalCongruence&) = default;
};

struct Enlarge {
  EnlargeForm form = EnlargeForm::A;
  IntVector x;
  IntVector y;
  Integer z;
  friend bool operator==(const Enlarge&, const Enlarge&) = default;
};

struct Reduce {
  friend bool operator==(const Reduce&, const Reduce&) = default;
};

using Move = std::variant<StrongCongruence, ClassicalCongruence, Enlarge, Reduce>;

enum class MoveKind { Enlarge, Reduce, Congruence };

MoveKind kind_of(const Move& move);
/// "↗", "↘" or "≅".
std::string_view symbol(MoveKind kind);
std::string kind_string(std::span<const Move> moves);
std::string describe(const Move& move);

struct MoveSequence {
  OrderedSeifertMatrix start;
  std::vector<Move> moves;
};

/// A = (I *; 0 *) with I the boundary x boundary identity.
bool is_block_shaped(const IntMatrix& a, std::size_t boundary);

OrderedSeifertMatrix apply_strong_congruence(const OrderedSeifertMatrix& s, const IntMatrix& a);
IntMatrix apply_classical_congruence(const IntMatrix& v, const IntMatrix& p);

/// Enlargement of a bare matrix; the first `boundary` entries of x and y
/// must agree (pass 0 for the classical move).
IntMatrix enlarge_matrix(const IntMatrix& v, const Enlarge& e, std::size_t boundary);
OrderedSeifertMatrix enlarge(const OrderedSeifertMatrix& s, const Enlarge& e);

/// Enlargement data of the trailing two rows/columns, if they match the
/// A-form or B-form pattern exactly.
std::optional<Enlarge> trailing_enlargement(const IntMatrix& w);

/// Deletes the trailing enlargement block; result must stay >= floor.
IntMatrix reduce_matrix(const IntMatrix& w, std::size_t floor);
OrderedSeifertMatrix reduce(const OrderedSeifertMatrix& s);

OrderedSeifertMatrix apply_move(const OrderedSeifertMatrix& s, const Move& move);
IntMatrix apply_move_matrix(const IntMatrix& v, const Move& move, std::size_t boundary);

/// The move undoing `move` when applied to the result of `move` on `before`.
Move inverse_move(const IntMatrix& before, const Move& move);

struct Replay {
  OrderedSeifertMatrix final;
  std::vector<OrderedSeifertMatrix> trace;  // start, then after each move
};

/// Errors carry the index of the first failing move.
Replay apply_sequence(const MoveSequence& seq);
IntMatrix replay_matrix(const IntMatrix& start, std::span<const Move> moves, std::size_t boundary);

// Elementary congruence generators. Applying one to M means G^t M G.
struct CongruenceGenerator {
  enum class Kind : std::uint8_t { Transvection, SignFlip, Swap, PairRotation };
  Kind kind = Kind::Transvection;
  std::uint32_t i = 0;  // Transvection: G = I + c E_{i,j}; PairRotation: first index of the pair
  std::uint32_t j = 0;
  std::int32_t c = 0;   // PairRotation: +1 is (0 -1; 1 0), -1 its inverse

  friend bool operator==(const CongruenceGenerator&, const CongruenceGenerator&) = default;
};

IntMatrix generator_matrix(const CongruenceGenerator& gen, std::size_t n);
void apply_generator(IntMatrix& m, const CongruenceGenerator& gen);
CongruenceGenerator inverse(const CongruenceGenerator& gen);

/// Block-shaped transvections with |c| in 1..bound, and the quarter-turn
/// (0 -1; 1 0) on each genus pair and its inverse.
std::vector<CongruenceGenerator> strong_generators(std::size_t n, std::size_t boundary, unsigned bound);
/// All transvections with |c| in 1..bound, sign flips and swaps.
std::vector<CongruenceGenerator> classical_generators(std::size_t n, unsigned bound);

struct RandomSequenceOptions {
  std::optional<std::size_t> max_genus;
};

/// Deterministic for a fixed seed. Congruences are single strong
/// generators; enlargement data lies in [-entry_bound, entry_bound];
/// reductions are generated only where a trailing pattern exists.
MoveSequence random_sequence(const OrderedSeifertMatrix& s, std::size_t length, unsigned entry_bound,
                             std::uint64_t seed, const RandomSequenceOptions& options = {});

}  // namespace sseq
