#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>

#include "sseq/linalg.hpp"
#include "sseq/moves.hpp"
#include "sseq/seifert.hpp"

namespace sseq {

// gtest picks these up through argument-dependent lookup.
inline void PrintTo(const IntMatrix& m, std::ostream* os) { *os << m.to_string(); }
inline void PrintTo(const OrderedSeifertMatrix& s, std::ostream* os) {
  *os << "m=" << s.components() << " g=" << s.genus() << " " << s.matrix().to_string();
}

}  // namespace sseq

namespace sseq::testkit {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Product of `steps` random elementary transvections and sign flips.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps, long bound = 1) {
  IntMatrix p = IntMatrix::identity(n);
  if (n == 0) return p;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    if (i == j) {
      for (std::size_t r = 0; r < n; ++r) p(r, i) = -p(r, i);
    } else {
      long c = uniform(rng, -bound, bound);
      if (c == 0) c = 1;
      p.add_column_multiple(j, i, c);
    }
  }
  return p;
}

/// Word of length <= max_len in symplectic transvections and Sym itself.
inline IntMatrix random_symplectic(Rng& rng, std::size_t genus, std::size_t max_len = 12) {
  const std::size_t n = 2 * genus;
  IntMatrix s = IntMatrix::identity(n);
  if (genus == 0) return s;
  const auto len = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_len)));
  for (std::size_t k = 0; k < len; ++k) {
    if (uniform(rng, 0, 5) == 0) {
      s = s * standard_sym(genus);
      continue;
    }
    IntVector v(n, 0);
    const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    v[a] = 1;
    if (uniform(rng, 0, 1) == 1) {
      const auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
      v[b] += uniform(rng, 0, 1) ? 1 : -1;
    }
    const long c = uniform(rng, 0, 1) ? 1 : -1;
    s = s * symplectic_transvection(genus, v, c);
  }
  return s;
}

/// Strictly valid ordered Seifert matrix: symmetric part random in
/// [-bound, bound], genus part of M - M^t equal to P^t Sym P.
inline OrderedSeifertMatrix random_valid_osm(Rng& rng, std::size_t m, std::size_t g, long bound = 3) {
  const std::size_t b = m - 1;
  const std::size_t n = b + 2 * g;
  IntMatrix mat(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const long v = uniform(rng, -bound, bound);
      mat(i, j) = v;
      mat(j, i) = v;
    }
  const IntMatrix form = congruence(standard_sym(g), random_unimodular(rng, 2 * g, 3));
  for (std::size_t i = 0; i < 2 * g; ++i)
    for (std::size_t j = i + 1; j < 2 * g; ++j) mat(b + i, b + j) += form(i, j);
  return {m, g, mat};
}

inline Enlarge random_enlarge(Rng& rng, const OrderedSeifertMatrix& s, long bound) {
  const std::size_t n = s.dimension();
  Enlarge e;
  e.form = uniform(rng, 0, 1) ? EnlargeForm::A : EnlargeForm::B;
  for (std::size_t k = 0; k < n; ++k) e.x.push_back(uniform(rng, -bound, bound));
  for (std::size_t k = 0; k < n; ++k) e.y.push_back(k < s.boundary_size() ? e.x[k] : Integer(uniform(rng, -bound, bound)));
  e.z = uniform(rng, -bound, bound);
  return e;
}

/// Product of up to `max_len` block-shaped generators.
inline IntMatrix random_block_word(Rng& rng, std::size_t n, std::size_t boundary, std::size_t max_len,
                                   unsigned bound = 1) {
  IntMatrix a = IntMatrix::identity(n);
  const auto gens = strong_generators(n, boundary, bound);
  if (gens.empty()) return a;
  const auto len = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_len)));
  for (std::size_t k = 0; k < len; ++k) {
    const auto& gen = gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(gens.size()) - 1))];
    a = a * generator_matrix(gen, n);
  }
  return a;
}

}  // namespace sseq::testkit
