#include "sseq/moves.hpp"

#include <random>
#include <sstream>

#include "sseq/error.hpp"

namespace sseq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string vector_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

void require_unimodular_change(const IntMatrix& v, const IntMatrix& p) {
  if (!v.is_square()) throw Error(ErrorKind::NonSquare, "congruence on a non-square matrix");
  if (!p.is_square() || p.rows() != v.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "change of basis is " + std::to_string(p.rows()) + "x" + std::to_string(p.cols()) +
                    ", matrix is " + std::to_string(v.rows()) + "x" + std::to_string(v.cols()));
  }
  if (!is_unimodular(p)) {
    throw Error(ErrorKind::NotUnimodular, "change of basis has determinant " + det(p).str());
  }
}

}  // namespace

MoveKind kind_of(const Move& move) {
  return std::visit(overloaded{[](const StrongCongruence&) { return MoveKind::Congruence; },
                               [](const ClassicalCongruence&) { return MoveKind::Congruence; },
                               [](const Enlarge&) { return MoveKind::Enlarge; },
                               [](const Reduce&) { return MoveKind::Reduce; }},
                    move);
}

std::string_view symbol(MoveKind kind) {
  switch (kind) {
    case MoveKind::Enlarge: return "↗";
    case MoveKind::Reduce: return "↘";
    case MoveKind::Congruence: return "≅";
  }
  return "?";
}

std::string kind_string(std::span<const Move> moves) {
  std::string out;
  for (const auto& m : moves) out += symbol(kind_of(m));
  return out;
}

std::string describe(const Move& move) {
  return std::visit(
      overloaded{[](const StrongCongruence& c) { return "strong_congruence " + c.a.to_string(); },
                 [](const ClassicalCongruence& c) { return "classical_congruence " + c.p.to_string(); },
                 [](const Enlarge& e) {
                   return std::string("enlarge form=") + (e.form == EnlargeForm::A ? "A" : "B") +
                          " x=" + vector_string(e.x) + " y=" + vector_string(e.y) + " z=" + e.z.str();
                 },
                 [](const Reduce&) { return std::string("reduce"); }},
      move);
}

bool is_block_shaped(const IntMatrix& a, std::size_t boundary) {
  if (!a.is_square() || a.rows() < boundary) return false;
  for (std::size_t c = 0; c < boundary; ++c)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

OrderedSeifertMatrix apply_strong_congruence(const OrderedSeifertMatrix& s, const IntMatrix& a) {
  require_unimodular_change(s.matrix(), a);
  if (!is_block_shaped(a, s.boundary_size())) {
    throw Error(ErrorKind::NotBlockShaped,
                "congruence does not fix the upper-left " + std::to_string(s.boundary_size()) + "x" +
                    std::to_string(s.boundary_size()) + " block (classical-only change of basis)");
  }
  return {s.components(), s.genus(), congruence(s.matrix(), a)};
}

IntMatrix apply_classical_congruence(const IntMatrix& v, const IntMatrix& p) {
  require_unimodular_change(v, p);
  return congruence(v, p);
}

IntMatrix enlarge_matrix(const IntMatrix& v, const Enlarge& e, std::size_t boundary) {
  if (!v.is_square()) throw Error(ErrorKind::NonSquare, "enlargement of a non-square matrix");
  const std::size_t n = v.rows();
  if (e.x.size() != n || e.y.size() != n) {
    throw Error(ErrorKind::VectorLengthMismatch, "enlargement vectors have lengths " +
                                                     std::to_string(e.x.size()) + " and " +
                                                     std::to_string(e.y.size()) + ", expected " +
                                                     std::to_string(n));
  }
  for (std::size_t k = 0; k < boundary && k < n; ++k) {
    if (e.x[k] != e.y[k]) {
      throw Error(ErrorKind::BoundaryEntriesDiffer,
                  "x and y differ at boundary entry " + std::to_string(k + 1));
    }
  }
  IntMatrix w(n + 2, n + 2);
  w.set_block(0, 0, v);
  for (std::size_t k = 0; k < n; ++k) {
    w(n, k) = e.x[k];
    w(k, n) = e.y[k];
  }
  w(n, n) = e.z;
  if (e.form == EnlargeForm::A) {
    w(n, n + 1) = 1;
  } else {
    w(n + 1, n) = 1;
  }
  return w;
}

OrderedSeifertMatrix enlarge(const OrderedSeifertMatrix& s, const Enlarge& e) {
  return {s.components(), s.genus() + 1, enlarge_matrix(s.matrix(), e, s.boundary_size())};
}

std::optional<Enlarge> trailing_enlargement(const IntMatrix& w) {
  if (!w.is_square() || w.rows() < 2) return std::nullopt;
  const std::size_t n = w.rows() - 2;
  const std::size_t p = n, q = n + 1;

  std::optional<EnlargeForm> form;
  if (w(p, q) == 1 && w(q, p) == 0) {
    form = EnlargeForm::A;
  } else if (w(q, p) == 1 && w(p, q) == 0) {
    form = EnlargeForm::B;
  } else {
    return std::nullopt;
  }
  for (std::size_t k = 0; k < w.rows(); ++k) {
    const bool row_exempt = *form == EnlargeForm::B && k == p;
    const bool col_exempt = *form == EnlargeForm::A && k == p;
    if (!row_exempt && w(q, k) != 0) return std::nullopt;
    if (!col_exempt && w(k, q) != 0) return std::nullopt;
  }

  Enlarge e;
  e.form = *form;
  e.x.reserve(n);
  e.y.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    e.x.push_back(w(p, k));
    e.y.push_back(w(k, p));
  }
  e.z = w(p, p);
  return e;
}

IntMatrix reduce_matrix(const IntMatrix& w, std::size_t floor) {
  if (!w.is_square()) throw Error(ErrorKind::NonSquare, "reduction of a non-square matrix");
  if (w.rows() < 2 || w.rows() - 2 < floor) {
    throw Error(ErrorKind::SizeUnderflow, "reduction of a " + std::to_string(w.rows()) + "x" +
                                              std::to_string(w.rows()) +
                                              " matrix would drop below " + std::to_string(floor) +
                                              "x" + std::to_string(floor));
  }
  if (!trailing_enlargement(w)) {
    throw Error(ErrorKind::PatternMismatch, "trailing two rows/columns are not an enlargement block");
  }
  return w.block(0, 0, w.rows() - 2, w.rows() - 2);
}

OrderedSeifertMatrix reduce(const OrderedSeifertMatrix& s) {
  IntMatrix v = reduce_matrix(s.matrix(), s.boundary_size());
  return {s.components(), s.genus() > 0 ? s.genus() - 1 : 0, std::move(v)};
}

OrderedSeifertMatrix apply_move(const OrderedSeifertMatrix& s, const Move& move) {
  return std::visit(
      overloaded{
          [&](const StrongCongruence& c) { return apply_strong_congruence(s, c.a); },
          [&](const ClassicalCongruence& c) {
            return OrderedSeifertMatrix(s.components(), s.genus(),
                                        apply_classical_congruence(s.matrix(), c.p));
          },
          [&](const Enlarge& e) { return enlarge(s, e); },
          [&](const Reduce&) { return reduce(s); }},
      move);
}

IntMatrix apply_move_matrix(const IntMatrix& v, const Move& move, std::size_t boundary) {
  return std::visit(
      overloaded{[&](const StrongCongruence& c) {
                   require_unimodular_change(v, c.a);
                   if (!is_block_shaped(c.a, boundary)) {
                     throw Error(ErrorKind::NotBlockShaped, "congruence is not block-shaped");
                   }
                   return congruence(v, c.a);
                 },
                 [&](const ClassicalCongruence& c) { return apply_classical_congruence(v, c.p); },
                 [&](const Enlarge& e) { return enlarge_matrix(v, e, boundary); },
                 [&](const Reduce&) { return reduce_matrix(v, boundary); }},
      move);
}

Move inverse_move(const IntMatrix& before, const Move& move) {
  return std::visit(
      overloaded{[](const StrongCongruence& c) -> Move {
                   return StrongCongruence{inverse_unimodular(c.a)};
                 },
                 [](const ClassicalCongruence& c) -> Move {
                   return ClassicalCongruence{inverse_unimodular(c.p)};
                 },
                 [](const Enlarge&) -> Move { return Reduce{}; },
                 [&](const Reduce&) -> Move {
                   auto e = trailing_enlargement(before);
                   if (!e) throw Error(ErrorKind::PatternMismatch, "nothing to re-enlarge");
                   return *e;
                 }},
      move);
}

Replay apply_sequence(const MoveSequence& seq) {
  Replay out{seq.start, {seq.start}};
  out.trace.reserve(seq.moves.size() + 1);
  for (std::size_t k = 0; k < seq.moves.size(); ++k) {
    try {
      out.final = apply_move(out.final, seq.moves[k]);
    } catch (const Error& e) {
      throw Error(e.kind(), "move " + std::to_string(k) + ": " + e.what(), k);
    }
    out.trace.push_back(out.final);
  }
  return out;
}

IntMatrix replay_matrix(const IntMatrix& start, std::span<const Move> moves, std::size_t boundary) {
  IntMatrix cur = start;
  for (std::size_t k = 0; k < moves.size(); ++k) {
    try {
      cur = apply_move_matrix(cur, moves[k], boundary);
    } catch (const Error& e) {
      throw Error(e.kind(), "move " + std::to_string(k) + ": " + e.what(), k);
    }
  }
  return cur;
}

IntMatrix generator_matrix(const CongruenceGenerator& gen, std::size_t n) {
  IntMatrix g = IntMatrix::identity(n);
  using K = CongruenceGenerator::Kind;
  switch (gen.kind) {
    case K::Transvection: g(gen.i, gen.j) = gen.c; break;
    case K::SignFlip: g(gen.i, gen.i) = -1; break;
    case K::Swap:
      g(gen.i, gen.i) = 0;
      g(gen.j, gen.j) = 0;
      g(gen.i, gen.j) = 1;
      g(gen.j, gen.i) = 1;
      break;
    case K::PairRotation: {
      const std::size_t p = gen.i, q = gen.i + 1;
      g(p, p) = 0;
      g(q, q) = 0;
      g(p, q) = -gen.c;
      g(q, p) = gen.c;
      break;
    }
  }
  return g;
}

void apply_generator(IntMatrix& m, const CongruenceGenerator& gen) {
  using K = CongruenceGenerator::Kind;
  const std::size_t n = m.rows();
  switch (gen.kind) {
    case K::Transvection:
      m.add_column_multiple(gen.j, gen.i, gen.c);
      m.add_row_multiple(gen.j, gen.i, gen.c);
      break;
    case K::SignFlip:
      for (std::size_t k = 0; k < n; ++k) {
        m(k, gen.i) = -m(k, gen.i);
        m(gen.i, k) = -m(gen.i, k);
      }
      break;
    case K::Swap:
      for (std::size_t k = 0; k < n; ++k) std::swap(m(k, gen.i), m(k, gen.j));
      for (std::size_t k = 0; k < n; ++k) std::swap(m(gen.i, k), m(gen.j, k));
      break;
    case K::PairRotation: {
      // New basis: e_p' = c e_q, e_q' = -c e_p.
      const std::size_t p = gen.i, q = gen.i + 1;
      for (std::size_t k = 0; k < n; ++k) {
        Integer old_p = m(k, p);
        m(k, p) = gen.c * m(k, q);
        m(k, q) = -gen.c * old_p;
      }
      for (std::size_t k = 0; k < n; ++k) {
        Integer old_p = m(p, k);
        m(p, k) = gen.c * m(q, k);
        m(q, k) = -gen.c * old_p;
      }
      break;
    }
  }
}

CongruenceGenerator inverse(const CongruenceGenerator& gen) {
  using K = CongruenceGenerator::Kind;
  CongruenceGenerator inv = gen;
  if (gen.kind == K::Transvection || gen.kind == K::PairRotation) inv.c = -gen.c;
  return inv;
}

std::vector<CongruenceGenerator> strong_generators(std::size_t n, std::size_t boundary, unsigned bound) {
  using K = CongruenceGenerator::Kind;
  std::vector<CongruenceGenerator> out;
  for (std::size_t j = boundary; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      for (unsigned a = 1; a <= bound; ++a) {
        for (int sign : {1, -1}) {
          out.push_back({K::Transvection, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                         sign * static_cast<std::int32_t>(a)});
        }
      }
    }
  }
  for (std::size_t p = boundary; p + 1 < n; p += 2) {
    for (int sign : {1, -1}) {
      out.push_back({K::PairRotation, static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p + 1), sign});
    }
  }
  return out;
}

std::vector<CongruenceGenerator> classical_generators(std::size_t n, unsigned bound) {
  using K = CongruenceGenerator::Kind;
  std::vector<CongruenceGenerator> out;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      for (unsigned a = 1; a <= bound; ++a) {
        for (int sign : {1, -1}) {
          out.push_back({K::Transvection, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                         sign * static_cast<std::int32_t>(a)});
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) out.push_back({K::SignFlip, static_cast<std::uint32_t>(i), 0, 0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.push_back({K::Swap, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), 0});
  return out;
}

MoveSequence random_sequence(const OrderedSeifertMatrix& s, std::size_t length, unsigned entry_bound,
                             std::uint64_t seed, const RandomSequenceOptions& options) {
  std::mt19937_64 rng(seed);
  // Plain modular reduction keeps the stream identical across standard libraries.
  auto below = [&](std::uint64_t n) { return n == 0 ? 0 : rng() % n; };
  auto entry = [&]() {
    return Integer(static_cast<long long>(below(2ull * entry_bound + 1)) - static_cast<long long>(entry_bound));
  };

  MoveSequence seq{s, {}};
  OrderedSeifertMatrix cur = s;
  for (std::size_t step = 0; step < length; ++step) {
    const std::size_t n = cur.dimension();
    const std::size_t b = cur.boundary_size();
    const auto gens = strong_generators(n, b, entry_bound);
    const bool can_enlarge = !options.max_genus || cur.genus() < *options.max_genus;
    const bool can_reduce = n >= b + 2 && trailing_enlargement(cur.matrix()).has_value();

    std::vector<MoveKind> kinds;
    if (!gens.empty()) kinds.push_back(MoveKind::Congruence);
    if (can_enlarge) kinds.push_back(MoveKind::Enlarge);
    if (can_reduce) kinds.push_back(MoveKind::Reduce);

    Move move = StrongCongruence{IntMatrix::identity(n)};
    if (!kinds.empty()) {
      switch (kinds[below(kinds.size())]) {
        case MoveKind::Congruence:
          move = StrongCongruence{generator_matrix(gens[below(gens.size())], n)};
          break;
        case MoveKind::Enlarge: {
          Enlarge e;
          e.form = below(2) == 0 ? EnlargeForm::A : EnlargeForm::B;
          for (std::size_t k = 0; k < n; ++k) e.x.push_back(entry());
          for (std::size_t k = 0; k < n; ++k) e.y.push_back(k < b ? e.x[k] : entry());
          e.z = entry();
          move = std::move(e);
          break;
        }
        case MoveKind::Reduce: move = Reduce{}; break;
      }
    }
    cur = apply_move(cur, move);
    seq.moves.push_back(std::move(move));
  }
  return seq;
}

}  // namespace sseq
