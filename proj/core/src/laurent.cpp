#include "sseq/laurent.hpp"

#include <sstream>

#include "sseq/error.hpp"

namespace sseq {

LaurentPoly::LaurentPoly(const Integer& constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(const Integer& coefficient, long exponent) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

void LaurentPoly::add_term(long exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPoly::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

long LaurentPoly::min_exponent() const { return terms_.begin()->first; }
long LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

Integer LaurentPoly::evaluate_shifted(const Integer& point, long shift) const {
  Integer acc = 0;
  for (const auto& [e, c] : terms_) acc += c * pow(point, static_cast<unsigned>(e + shift));
  return acc;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0 || mag != 1) os << mag;
    if (e != 0) {
      os << 't';
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out += LaurentPoly::monomial(ca * cb, ea + eb);
  return out;
}

LaurentMatrix LaurentMatrix::constant(const IntMatrix& m) {
  LaurentMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = LaurentPoly(m(r, c));
  return out;
}

LaurentMatrix seifert_pencil(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "seifert_pencil: matrix is not square");
  LaurentMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(r, c) = LaurentPoly::monomial(m(r, c), 1) - LaurentPoly::monomial(m(c, r), -1);
  return out;
}

namespace {

// Sample points 0, 1, -1, 2, -2, ... keep magnitudes small.
Integer sample_point(std::size_t k) {
  const long half = static_cast<long>((k + 1) / 2);
  return (k % 2 == 1) ? Integer(half) : Integer(-half);
}

}  // namespace

LaurentPoly laurent_det(const LaurentMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NonSquare, "laurent_det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly(Integer(1));

  std::vector<long> shift(n, 0);
  long total_shift = 0;
  std::size_t degree_bound = 0;
  for (std::size_t r = 0; r < n; ++r) {
    bool any = false;
    long lo = 0, hi = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const LaurentPoly& p = m(r, c);
      if (p.is_zero()) continue;
      lo = any ? std::min(lo, p.min_exponent()) : p.min_exponent();
      hi = any ? std::max(hi, p.max_exponent()) : p.max_exponent();
      any = true;
    }
    if (!any) return LaurentPoly();
    shift[r] = -lo;
    total_shift += shift[r];
    degree_bound += static_cast<std::size_t>(hi - lo);
  }

  const std::size_t samples = degree_bound + 1;
  std::vector<Rational> xs(samples), dd(samples);
  IntMatrix at_point(n, n);
  for (std::size_t k = 0; k < samples; ++k) {
    const Integer x = sample_point(k);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) at_point(r, c) = m(r, c).evaluate_shifted(x, shift[r]);
    xs[k] = Rational(x);
    dd[k] = Rational(det(at_point));
  }

  // Newton divided differences, then expand the nested form.
  for (std::size_t level = 1; level < samples; ++level)
    for (std::size_t k = samples - 1; k >= level; --k)
      dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);

  std::vector<Rational> coeffs{dd[samples - 1]};
  for (std::size_t k = samples - 1; k-- > 0;) {
    std::vector<Rational> next(coeffs.size() + 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * xs[k];
    }
    next[0] += dd[k];
    coeffs = std::move(next);
  }

  LaurentPoly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (denominator(coeffs[i]) != 1) {
      throw Error(ErrorKind::InvalidMatrix, "laurent_det: non-integral interpolation result");
    }
    out += LaurentPoly::monomial(numerator(coeffs[i]), static_cast<long>(i) - total_shift);
  }
  return out;
}

}  // namespace sseq
