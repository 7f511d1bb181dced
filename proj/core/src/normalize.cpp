#include "sseq/normalize.hpp"

#include "sseq/error.hpp"

namespace sseq {

namespace {

const IntMatrix& congruence_matrix(const Move& m) {
  if (const auto* s = std::get_if<StrongCongruence>(&m)) return s->a;
  return std::get<ClassicalCongruence>(m).p;
}

Move fuse(const Move& first, const Move& second) {
  IntMatrix product = congruence_matrix(first) * congruence_matrix(second);
  if (std::holds_alternative<StrongCongruence>(first) && std::holds_alternative<StrongCongruence>(second)) {
    return StrongCongruence{std::move(product)};
  }
  return ClassicalCongruence{std::move(product)};
}

IntVector times_inverse(const IntVector& row, const IntMatrix& inv) {
  IntVector out(row.size());
  for (std::size_t k = 0; k < row.size(); ++k)
    for (std::size_t l = 0; l < row.size(); ++l) out[k] += row[l] * inv(l, k);
  return out;
}

}  // namespace

AnnotatedSequence::AnnotatedSequence(MoveSequence seq) : seq_(std::move(seq)) {
  snapshots_ = apply_sequence(seq_).trace;
}

ReduceEnlargeRewrite swap_reduce_enlarge(const OrderedSeifertMatrix& m1, const Reduce& r,
                                         const Enlarge& e) {
  const OrderedSeifertMatrix m2 = apply_move(m1, r);
  const OrderedSeifertMatrix m3 = enlarge(m2, e);

  Enlarge stacked = e;
  stacked.x.resize(e.x.size() + 2);
  stacked.y.resize(e.y.size() + 2);
  const OrderedSeifertMatrix m4 = enlarge(m1, stacked);

  // Exchange basis elements k <-> k-2 and k-1 <-> k-3 (1-based, k = dim M4).
  const std::size_t k = m4.dimension();
  IntMatrix perm = IntMatrix::identity(k);
  for (auto [a, b] : {std::pair{k - 1, k - 3}, std::pair{k - 2, k - 4}}) {
    perm(a, a) = 0;
    perm(b, b) = 0;
    perm(a, b) = 1;
    perm(b, a) = 1;
  }
  if (!is_block_shaped(perm, m1.boundary_size())) {
    throw Error(ErrorKind::RewriteFailed, "block swap touches boundary basis elements");
  }
  ReduceEnlargeRewrite out{std::move(stacked), StrongCongruence{std::move(perm)}, Reduce{}};

  const OrderedSeifertMatrix m5 = apply_strong_congruence(m4, out.congruence.a);
  if (reduce(m5) != m3) {
    throw Error(ErrorKind::RewriteFailed, "reduce/enlarge exchange does not replay to the original endpoint");
  }
  return out;
}

CongruenceEnlargeRewrite swap_congruence_enlarge(const OrderedSeifertMatrix& m1, const Move& congruence,
                                                 const Enlarge& e) {
  if (kind_of(congruence) != MoveKind::Congruence) {
    throw Error(ErrorKind::RewriteFailed, "expected a congruence before the enlargement");
  }
  const OrderedSeifertMatrix m2 = apply_move(m1, congruence);
  const OrderedSeifertMatrix m3 = enlarge(m2, e);

  const IntMatrix& p = congruence_matrix(congruence);
  const IntMatrix p_inv = inverse_unimodular(p);
  Enlarge moved{e.form, times_inverse(e.x, p_inv), times_inverse(e.y, p_inv), e.z};

  IntMatrix q = direct_sum(p, IntMatrix::identity(2));
  Move q_move = std::holds_alternative<StrongCongruence>(congruence) ? Move{StrongCongruence{std::move(q)}}
                                                                     : Move{ClassicalCongruence{std::move(q)}};
  CongruenceEnlargeRewrite out{std::move(moved), std::move(q_move)};

  const OrderedSeifertMatrix m4 = enlarge(m1, out.enlarge);
  if (apply_move(m4, out.congruence) != m3) {
    throw Error(ErrorKind::RewriteFailed, "congruence/enlarge exchange does not replay to the original endpoint");
  }
  return out;
}

std::size_t count_inversions(const std::vector<Move>& moves) {
  std::size_t reductions_seen = 0, inversions = 0;
  for (const auto& m : moves) {
    switch (kind_of(m)) {
      case MoveKind::Reduce: ++reductions_seen; break;
      case MoveKind::Enlarge: inversions += reductions_seen; break;
      case MoveKind::Congruence: break;
    }
  }
  return inversions;
}

Normalization normalize_with_stats(const AnnotatedSequence& seq) {
  std::vector<Move> moves = seq.moves();
  const OrderedSeifertMatrix& start = seq.start();
  std::vector<std::size_t> inversions{count_inversions(moves)};

  auto snapshots = [&] { return apply_sequence({start, moves}).trace; };

  while (inversions.back() > 0) {
    // First enlargement with a reduction somewhere before it.
    std::size_t pos = 0;
    bool seen_reduce = false;
    for (; pos < moves.size(); ++pos) {
      const MoveKind k = kind_of(moves[pos]);
      if (k == MoveKind::Reduce) seen_reduce = true;
      if (k == MoveKind::Enlarge && seen_reduce) break;
    }

    std::size_t fresh_congruences = 0;  // rewritten congruences sitting right after the enlargement
    while (pos > 0 && kind_of(moves[pos - 1]) != MoveKind::Enlarge) {
      const auto trace = snapshots();
      const Enlarge e = std::get<Enlarge>(moves[pos]);
      if (kind_of(moves[pos - 1]) == MoveKind::Congruence) {
        auto rw = swap_congruence_enlarge(trace[pos - 1], moves[pos - 1], e);
        moves[pos - 1] = std::move(rw.enlarge);
        moves[pos] = std::move(rw.congruence);
        ++fresh_congruences;
        if (fresh_congruences > 1) {
          moves[pos] = fuse(moves[pos], moves[pos + 1]);
          moves.erase(moves.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
        }
      } else {
        auto rw = swap_reduce_enlarge(trace[pos - 1], Reduce{}, e);
        moves[pos - 1] = std::move(rw.enlarge);
        moves[pos] = std::move(rw.congruence);
        moves.insert(moves.begin() + static_cast<std::ptrdiff_t>(pos) + 1, rw.reduce);
        fresh_congruences = 1;
      }
      --pos;
    }

    const std::size_t now = count_inversions(moves);
    if (now >= inversions.back()) {
      throw Error(ErrorKind::RewriteFailed, "normalization step did not reduce the inversion count");
    }
    inversions.push_back(now);
  }

  AnnotatedSequence out({start, std::move(moves)});
  if (out.final() != seq.final()) {
    throw Error(ErrorKind::RewriteFailed, "normalized sequence ends at a different matrix");
  }
  return {std::move(out), std::move(inversions)};
}

AnnotatedSequence normalize_sequence(const AnnotatedSequence& seq) {
  return normalize_with_stats(seq).sequence;
}

OrderedSeifertMatrix common_matrix(const AnnotatedSequence& normalized) {
  if (count_inversions(normalized.moves()) != 0) {
    throw Error(ErrorKind::NotNormalized, "a reduction precedes an enlargement");
  }
  const auto& moves = normalized.moves();
  for (std::size_t k = 0; k < moves.size(); ++k)
    if (kind_of(moves[k]) == MoveKind::Reduce) return normalized.snapshots()[k];
  return normalized.final();
}

}  // namespace sseq
