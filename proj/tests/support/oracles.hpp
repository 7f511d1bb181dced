#pragma once

// Slow reference computations used to check the library's fast paths.

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>
#include <vector>

#include "sseq/invariants.hpp"
#include "sseq/laurent.hpp"
#include "sseq/linalg.hpp"

namespace sseq::testkit {

template <class T, class Get>
T leibniz(std::size_t n, Get get) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total{0};
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    T term{1};
    for (std::size_t r = 0; r < n; ++r) term = term * get(r, perm[r]);
    if (inversions % 2) {
      total = total - term;
    } else {
      total = total + term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Integer leibniz_det(const IntMatrix& m) {
  return leibniz<Integer>(m.rows(), [&](std::size_t r, std::size_t c) { return m(r, c); });
}

inline LaurentPoly leibniz_laurent_det(const LaurentMatrix& m) {
  return leibniz<LaurentPoly>(m.rows(), [&](std::size_t r, std::size_t c) { return m(r, c); });
}

/// P^t M P by explicit index sums.
inline IntMatrix triple_product(const IntMatrix& m, const IntMatrix& p) {
  const std::size_t n = p.cols();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer s = 0;
      for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b) s += p(a, i) * m(a, b) * p(b, j);
      out(i, j) = s;
    }
  return out;
}

inline constexpr double kEigenTolerance = 1e-7;

/// Signature from floating-point eigenvalues; valid for small well-scaled inputs.
inline long eigen_signature(const IntMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.rows());
  if (n == 0) return 0;
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = m(i, j).convert_to<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(d);
  long sig = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double ev = solver.eigenvalues()(k);
    if (ev > kEigenTolerance) ++sig;
    if (ev < -kEigenTolerance) --sig;
  }
  return sig;
}

/// det(tM - t^-1 M^t) at a rational point, by Leibniz over the rationals.
inline Rational pencil_det_at(const IntMatrix& m, const Rational& t) {
  const Rational inv = 1 / t;
  return leibniz<Rational>(m.rows(), [&](std::size_t r, std::size_t c) {
    return Rational(t * Rational(m(r, c)) - inv * Rational(m(c, r)));
  });
}

inline Rational conway_at(const ConwayPolynomial& p, const Rational& t) {
  const Rational z = t - 1 / t;
  Rational acc = 0, power = 1;
  for (const auto& c : p.coefficients) {
    acc += Rational(c) * power;
    power *= z;
  }
  return acc;
}

}  // namespace sseq::testkit
