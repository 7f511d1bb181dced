#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sseq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers. The 0x0 matrix
/// is a legal value and behaves as the identity of direct sums.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Integer> entries() const noexcept { return data_; }
  std::span<const Integer> row(std::size_t r) const {
    return std::span<const Integer>(data_).subspan(r * cols_, cols_);
  }
  IntVector column(std::size_t c) const;

  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);
  bool is_symmetric() const;
  bool is_zero() const;

  /// In-place elementary column operation: col(dst) += c * col(src).
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& c);
  /// In-place elementary row operation: row(dst) += c * row(src).
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& c);

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Integer& s, const IntMatrix& a);

/// Block-diagonal direct sum diag(a, b).
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// P^t * M * P.
IntMatrix congruence(const IntMatrix& m, const IntMatrix& p);

/// Exact determinant by fraction-free (Bareiss) elimination. det of 0x0 is 1.
Integer det(const IntMatrix& m);

bool is_unimodular(const IntMatrix& a);

/// Inverse of a unimodular matrix; throws NotUnimodular otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// Sym = g copies of (0 -1; 1 0) on the diagonal.
IntMatrix standard_sym(std::size_t genus);

/// S^t * Sym * S == Sym. Throws DimensionMismatch unless S is 2g x 2g.
bool is_symplectic(const IntMatrix& s, std::size_t genus);

/// Symplectic transvection x -> x + c * (v^t Sym x) * v, i.e. I + c v v^t Sym.
IntMatrix symplectic_transvection(std::size_t genus, std::span<const Integer> v, const Integer& c);

/// Signature of a symmetric matrix by exact symmetric diagonalization over
/// the rationals. Throws NotSymmetric.
long signature(const IntMatrix& m);

// Fixed-width big-integer byte encoding shared by canonical keys and
// fingerprint serialization: sign byte, 4-byte big-endian length, magnitude
// bytes big-endian.
void append_u32(std::string& out, std::uint32_t v);
void append_integer(std::string& out, const Integer& v);
std::uint32_t read_u32(std::string_view& in);
Integer read_integer(std::string_view& in);

/// Decimal rendering; fits_int64 tells callers whether a JSON number suffices.
std::string to_decimal(const Integer& v);
bool fits_int64(const Integer& v);

}  // namespace sseq
