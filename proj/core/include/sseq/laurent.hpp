#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sseq/linalg.hpp"

namespace sseq {

/// Integer Laurent polynomial in t, stored as exponent -> nonzero coefficient.
/// The zero polynomial is the empty map.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Integer& coefficient, long exponent);

  const std::map<long, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(long exponent) const;
  long min_exponent() const;  // precondition: nonzero
  long max_exponent() const;  // precondition: nonzero

  /// Evaluate t^shift * p at an integer point; requires shift >= -min_exponent.
  Integer evaluate_shifted(const Integer& point, long shift) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);

  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(long exponent, const Integer& coefficient);

  std::map<long, Integer> terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

/// Square-or-not dense matrix over Z[t, t^-1].
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Embed an integer matrix as constants.
  static LaurentMatrix constant(const IntMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> data_;
};

/// t*M - t^-1*M^t for a square integer matrix.
LaurentMatrix seifert_pencil(const IntMatrix& m);

/// Exact determinant over Z[t, t^-1]. Each row is shifted to a polynomial
/// row, the determinant is sampled at enough integer points with the
/// fraction-free integer determinant, and recovered by exact interpolation.
LaurentPoly laurent_det(const LaurentMatrix& m);

}  // namespace sseq
