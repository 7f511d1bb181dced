#include "sseq/factorize.hpp"

#include "sseq/error.hpp"
#include "sseq/seifert.hpp"

namespace sseq {

namespace {

void require_dimension(const IntMatrix& c, std::size_t components, std::size_t genus) {
  if (components == 0) throw Error(ErrorKind::DimensionMismatch, "components must be at least 1");
  const std::size_t n = components - 1 + 2 * genus;
  if (c.rows() != n || c.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(n) + "x" + std::to_string(n) + " change of basis, got " +
                    std::to_string(c.rows()) + "x" + std::to_string(c.cols()));
  }
}

}  // namespace

ChangeOfBasis split_blocks(const IntMatrix& c, std::size_t components, std::size_t genus) {
  require_dimension(c, components, genus);
  const std::size_t b = components - 1, n = c.rows();
  for (std::size_t col = 0; col < b; ++col) {
    for (std::size_t row = 0; row < n; ++row) {
      if (c(row, col) != (row == col ? 1 : 0)) {
        throw Error(ErrorKind::NotBlockForm, "entry (" + std::to_string(row + 1) + "," +
                                                 std::to_string(col + 1) +
                                                 ") breaks the (I B; 0 S) shape");
      }
    }
  }
  IntMatrix s = c.block(b, b, 2 * genus, 2 * genus);
  if (!is_symplectic(s, genus)) {
    throw Error(ErrorKind::SNotSymplectic, "lower-right block is not symplectic");
  }
  return ChangeOfBasis(c, components, genus, c.block(0, b, b, 2 * genus), std::move(s));
}

bool stabilizes_X(const IntMatrix& c, std::size_t components, std::size_t genus) {
  require_dimension(c, components, genus);
  const IntMatrix x = semi_symplectic_form(components, genus);
  return congruence(x, c) == x;
}

DEFactors factor_DE(const ChangeOfBasis& cb) {
  const std::size_t b = cb.components() - 1, n = cb.matrix().rows();
  DEFactors out{IntMatrix::identity(n), IntMatrix::identity(n)};
  out.d.set_block(b, b, cb.s());
  out.e.set_block(0, b, cb.b());
  return out;
}

IntMatrix elementary_matrix(const ElementaryFactor& f, std::size_t components, std::size_t genus) {
  if (f.i < 1 || f.i > components - 1 || f.j < 1 || f.j > 2 * genus) {
    throw Error(ErrorKind::DimensionMismatch, "elementary factor index out of range");
  }
  IntMatrix e = IntMatrix::identity(components - 1 + 2 * genus);
  e(f.i - 1, f.j + components - 2) = f.exponent;
  return e;
}

std::vector<ElementaryFactor> elementary_factorization(const ChangeOfBasis& cb) {
  std::vector<ElementaryFactor> out;
  const IntMatrix& b = cb.b();
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(i, j) != 0) out.push_back({i + 1, j + 1, b(i, j)});
  return out;
}

IntMatrix assemble(const std::vector<ElementaryFactor>& factors, std::size_t components, std::size_t genus) {
  IntMatrix product = IntMatrix::identity(components - 1 + 2 * genus);
  for (const auto& f : factors) product = product * elementary_matrix(f, components, genus);
  return product;
}

}  // namespace sseq
