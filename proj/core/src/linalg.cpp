#include "sseq/linalg.hpp"

#include <iterator>
#include <limits>
#include <sstream>
#include <utility>

#include "sseq/error.hpp"

namespace sseq {

namespace {

void require_same_shape(const IntMatrix& a, const IntMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

void require_square(const IntMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw Error(ErrorKind::NonSquare, std::string(op) + ": matrix is " + std::to_string(m.rows()) +
                                          "x" + std::to_string(m.cols()));
  }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw Error(ErrorKind::DimensionMismatch, "entry count " + std::to_string(data_.size()) +
                                                  " does not match " + std::to_string(rows) + "x" +
                                                  std::to_string(cols));
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.front().size();
  std::vector<Integer> data;
  data.reserve(nr * nc);
  for (const auto& r : rows) {
    if (r.size() != nc) throw Error(ErrorKind::DimensionMismatch, "ragged row list");
    data.insert(data.end(), r.begin(), r.end());
  }
  return IntMatrix(nr, nc, std::move(data));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "block out of range");
  }
  IntMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "block out of range");
  }
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src, const Integer& c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += c * (*this)(r, src);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& c) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(dst, k) += c * (*this)(src, k);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b, "add");
  IntMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b, "subtract");
  IntMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
  return out;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = -out(r, c);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "multiply: inner dimensions " + std::to_string(a.cols()) + " and " +
                    std::to_string(b.rows()));
  }
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& ark = a(r, k);
      if (ark == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) *= s;
  return out;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

IntMatrix congruence(const IntMatrix& m, const IntMatrix& p) {
  require_square(m, "congruence");
  if (p.rows() != m.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "congruence: matrix is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", change of basis has " +
                    std::to_string(p.rows()) + " rows");
  }
  return p.transpose() * m * p;
}

Integer det(const IntMatrix& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    const Integer pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * pivot - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = pivot;
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  if (!a.is_square()) return false;
  const Integer d = det(a);
  return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (!is_unimodular(a)) {
    throw Error(ErrorKind::NotUnimodular, "matrix is not square with determinant +-1");
  }
  const std::size_t n = a.rows();
  // Gauss-Jordan over the rationals on [A | I]; the result is integral.
  std::vector<Rational> w(n * 2 * n);
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return w[r * 2 * n + c]; };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) at(r, c) = Rational(a(r, c));
    at(r, n + r) = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (at(p, k) == 0) ++p;
    if (p != k)
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(at(k, c), at(p, c));
    const Rational pivot = at(k, k);
    for (std::size_t c = 0; c < 2 * n; ++c) at(k, c) /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || at(r, k) == 0) continue;
      const Rational f = at(r, k);
      for (std::size_t c = 0; c < 2 * n; ++c) at(r, c) -= f * at(k, c);
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = numerator(at(r, n + c));
  return inv;
}

IntMatrix standard_sym(std::size_t genus) {
  IntMatrix s(2 * genus, 2 * genus);
  for (std::size_t k = 0; k < genus; ++k) {
    s(2 * k, 2 * k + 1) = -1;
    s(2 * k + 1, 2 * k) = 1;
  }
  return s;
}

bool is_symplectic(const IntMatrix& s, std::size_t genus) {
  if (s.rows() != 2 * genus || s.cols() != 2 * genus) {
    throw Error(ErrorKind::DimensionMismatch, "is_symplectic: expected " +
                                                  std::to_string(2 * genus) + "x" +
                                                  std::to_string(2 * genus) + " matrix");
  }
  const IntMatrix sym = standard_sym(genus);
  return congruence(sym, s) == sym;
}

IntMatrix symplectic_transvection(std::size_t genus, std::span<const Integer> v, const Integer& c) {
  const std::size_t n = 2 * genus;
  if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "transvection vector length");
  const IntMatrix sym = standard_sym(genus);
  IntVector row(n);  // v^t Sym
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a) row[k] += v[a] * sym(a, k);
  IntMatrix t = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (v[r] == 0) continue;
    for (std::size_t k = 0; k < n; ++k) t(r, k) += c * v[r] * row[k];
  }
  return t;
}

long signature(const IntMatrix& m) {
  if (!m.is_symmetric()) {
    throw Error(ErrorKind::NotSymmetric, "signature requires a symmetric matrix");
  }
  const std::size_t n = m.rows();
  std::vector<Rational> a(n * n);
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return a[r * n + c]; };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) at(r, c) = Rational(m(r, c));

  std::vector<bool> active(n, true);
  long sig = 0;
  for (;;) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n && pivot == n; ++i)
      if (active[i] && at(i, i) != 0) pivot = i;

    if (pivot != n) {
      const Rational d = at(pivot, pivot);
      sig += d > 0 ? 1 : -1;
      active[pivot] = false;
      for (std::size_t r = 0; r < n; ++r) {
        if (!active[r] || at(r, pivot) == 0) continue;
        const Rational f = at(r, pivot) / d;
        for (std::size_t s = 0; s < n; ++s)
          if (active[s]) at(r, s) -= f * at(pivot, s);
      }
      continue;
    }

    // All remaining diagonal entries vanish: split off a hyperbolic plane
    // spanned by a pair with nonzero pairing. It contributes (+1, -1).
    std::size_t k = n, l = n;
    for (std::size_t i = 0; i < n && k == n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (active[j] && at(i, j) != 0) {
          k = i;
          l = j;
          break;
        }
      }
    }
    if (k == n) break;

    const Rational c = at(k, l);
    active[k] = active[l] = false;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (active[i]) rest.push_back(i);
    std::vector<Rational> updated(rest.size() * rest.size());
    for (std::size_t ri = 0; ri < rest.size(); ++ri) {
      for (std::size_t si = 0; si < rest.size(); ++si) {
        const std::size_t r = rest[ri], s = rest[si];
        updated[ri * rest.size() + si] = at(r, s) - (at(r, l) * at(s, k) + at(r, k) * at(s, l)) / c;
      }
    }
    for (std::size_t ri = 0; ri < rest.size(); ++ri)
      for (std::size_t si = 0; si < rest.size(); ++si)
        at(rest[ri], rest[si]) = updated[ri * rest.size() + si];
  }
  return sig;
}

void append_u32(std::string& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((v >> shift) & 0xff));
}

void append_integer(std::string& out, const Integer& v) {
  std::vector<unsigned char> bytes;
  if (v != 0) boost::multiprecision::export_bits(Integer(abs(v)), std::back_inserter(bytes), 8);
  out.push_back(v < 0 ? '\x01' : '\x00');
  append_u32(out, static_cast<std::uint32_t>(bytes.size()));
  out.append(bytes.begin(), bytes.end());
}

std::uint32_t read_u32(std::string_view& in) {
  if (in.size() < 4) throw Error(ErrorKind::ParseError, "truncated encoding");
  std::uint32_t v = 0;
  for (int k = 0; k < 4; ++k) v = (v << 8) | static_cast<unsigned char>(in[k]);
  in.remove_prefix(4);
  return v;
}

Integer read_integer(std::string_view& in) {
  if (in.empty()) throw Error(ErrorKind::ParseError, "truncated encoding");
  const bool negative = in[0] != '\0';
  in.remove_prefix(1);
  const std::uint32_t len = read_u32(in);
  if (in.size() < len) throw Error(ErrorKind::ParseError, "truncated encoding");
  Integer v = 0;
  if (len > 0) {
    const auto* p = reinterpret_cast<const unsigned char*>(in.data());
    boost::multiprecision::import_bits(v, p, p + len, 8);
  }
  in.remove_prefix(len);
  return negative ? Integer(-v) : v;
}

std::string to_decimal(const Integer& v) { return v.str(); }

bool fits_int64(const Integer& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace sseq
