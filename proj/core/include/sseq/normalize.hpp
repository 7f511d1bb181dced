#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sseq/moves.hpp"
#include "sseq/seifert.hpp"

namespace sseq {

/// A move sequence together with the matrix after every move.
class AnnotatedSequence {
 public:
  /// Replays `seq`; throws the first failing move's error.
  explicit AnnotatedSequence(MoveSequence seq);

  const MoveSequence& sequence() const noexcept { return seq_; }
  const std::vector<Move>& moves() const noexcept { return seq_.moves; }
  /// snapshots()[0] is the start; snapshots()[k + 1] follows move k.
  const std::vector<OrderedSeifertMatrix>& snapshots() const noexcept { return snapshots_; }
  const OrderedSeifertMatrix& start() const { return snapshots_.front(); }
  const OrderedSeifertMatrix& final() const { return snapshots_.back(); }
  std::string kinds() const { return kind_string(seq_.moves); }

 private:
  MoveSequence seq_;
  std::vector<OrderedSeifertMatrix> snapshots_;
};

struct ReduceEnlargeRewrite {
  Enlarge enlarge;
  StrongCongruence congruence;
  Reduce reduce;
};

/// M1 ↘ M2 ↗ M3 becomes M1 ↗ M4 ≅ M5 ↘ M3: the new enlargement stacks the
/// requested block under M1's trailing block, the congruence swaps the two
/// blocks, and the reduction strips what used to be M1's block.
ReduceEnlargeRewrite swap_reduce_enlarge(const OrderedSeifertMatrix& m1, const Reduce& r, const Enlarge& e);

struct CongruenceEnlargeRewrite {
  Enlarge enlarge;
  Move congruence;  // same variant as the input congruence
};

/// M1 ≅ M2 ↗ M3 with M2 = P^t M1 P becomes M1 ↗ M4 ≅ M3, where M4 carries
/// x P^-1 and (P^t)^-1 y^t and the congruence is diag(P, I_2).
CongruenceEnlargeRewrite swap_congruence_enlarge(const OrderedSeifertMatrix& m1, const Move& congruence,
                                                 const Enlarge& e);

struct Normalization {
  AnnotatedSequence sequence;
  /// Count of (reduction, later enlargement) pairs, before and after each step.
  std::vector<std::size_t> inversions;
};

/// Number of pairs (i < j) with move i a reduction and move j an enlargement.
std::size_t count_inversions(const std::vector<Move>& moves);

Normalization normalize_with_stats(const AnnotatedSequence& seq);

/// Rewrites so that every enlargement precedes every reduction, keeping both
/// endpoints and the number of enlargements and reductions.
AnnotatedSequence normalize_sequence(const AnnotatedSequence& seq);

/// Snapshot just before the first reduction (the final matrix when there is
/// none). Throws NotNormalized if a reduction precedes an enlargement.
OrderedSeifertMatrix common_matrix(const AnnotatedSequence& normalized);

}  // namespace sseq
