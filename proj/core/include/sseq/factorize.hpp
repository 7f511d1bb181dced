#pragma once

#include <cstddef>
#include <vector>

#include "sseq/linalg.hpp"

namespace sseq {

/// C = (I B; 0 S) with I the (m-1)-identity and S symplectic.
class ChangeOfBasis {
 public:
  std::size_t components() const noexcept { return m_; }
  std::size_t genus() const noexcept { return g_; }
  const IntMatrix& matrix() const noexcept { return c_; }
  /// (m-1) x 2g upper-right block.
  const IntMatrix& b() const noexcept { return b_; }
  /// 2g x 2g lower-right block.
  const IntMatrix& s() const noexcept { return s_; }

 private:
  friend ChangeOfBasis split_blocks(const IntMatrix& c, std::size_t components, std::size_t genus);
  ChangeOfBasis(IntMatrix c, std::size_t m, std::size_t g, IntMatrix b, IntMatrix s)
      : c_(std::move(c)), m_(m), g_(g), b_(std::move(b)), s_(std::move(s)) {}

  IntMatrix c_;
  std::size_t m_;
  std::size_t g_;
  IntMatrix b_;
  IntMatrix s_;
};

/// Throws DimensionMismatch, NotBlockForm (upper-left not I or lower-left
/// not 0) or SNotSymplectic.
ChangeOfBasis split_blocks(const IntMatrix& c, std::size_t components, std::size_t genus);

/// C^t X C == X with X = (0 0; 0 Sym).
bool stabilizes_X(const IntMatrix& c, std::size_t components, std::size_t genus);

struct DEFactors {
  IntMatrix d;  // (I 0; 0 S)
  IntMatrix e;  // (I B; 0 I)
};

DEFactors factor_DE(const ChangeOfBasis& cb);

/// (E_{i,j})^exponent: identity plus `exponent` at (i, j + m - 1), 1-based,
/// with 1 <= i <= m-1 and 1 <= j <= 2g.
struct ElementaryFactor {
  std::size_t i = 1;
  std::size_t j = 1;
  Integer exponent;
  friend bool operator==(const ElementaryFactor&, const ElementaryFactor&) = default;
};

IntMatrix elementary_matrix(const ElementaryFactor& f, std::size_t components, std::size_t genus);

/// Nonzero entries of B in row-major order; the factors commute, so any
/// ordering of their product gives E.
std::vector<ElementaryFactor> elementary_factorization(const ChangeOfBasis& cb);

/// Product of the factors in the given order.
IntMatrix assemble(const std::vector<ElementaryFactor>& factors, std::size_t components, std::size_t genus);

}  // namespace sseq
