#pragma once

#include <string>
#include <vector>

#include "sseq/laurent.hpp"
#include "sseq/linalg.hpp"
#include "sseq/seifert.hpp"

namespace sseq {

/// Integer polynomial in z, coefficients low to high, no trailing zeros.
struct ConwayPolynomial {
  IntVector coefficients;

  bool is_zero() const noexcept { return coefficients.empty(); }
  std::string to_string() const;
  friend bool operator==(const ConwayPolynomial&, const ConwayPolynomial&) = default;
};

/// Rewrites a Laurent polynomial in t as a polynomial in z = t - t^-1,
/// peeling off the top-degree term each round. Throws NotAConwayPolynomial.
ConwayPolynomial to_conway(const LaurentPoly& p);

/// det(t M - t^-1 M^t) in z = t - t^-1.
ConwayPolynomial conway(const IntMatrix& m);
ConwayPolynomial conway(const OrderedSeifertMatrix& s);

/// signature(M + M^t).
long signature_invariant(const IntMatrix& m);
long signature_invariant(const OrderedSeifertMatrix& s);

/// |det(M + M^t)|.
Integer determinant_invariant(const IntMatrix& m);
Integer determinant_invariant(const OrderedSeifertMatrix& s);

struct InvariantFingerprint {
  LinkingTable linking;
  ConwayPolynomial conway;
  long signature = 0;
  Integer determinant;

  /// Byte layout: m, linking pairs in (i, j) order, Conway coefficients low
  /// to high, signature, determinant. Integers use append_integer.
  std::string serialize() const;
  static InvariantFingerprint deserialize(std::string_view bytes);

  friend bool operator==(const InvariantFingerprint&, const InvariantFingerprint&) = default;
};

/// Throws InvalidMatrix unless strictly valid.
InvariantFingerprint fingerprint(const OrderedSeifertMatrix& s);

/// The invariants that survive unrestricted unimodular congruence.
struct ClassicalFingerprint {
  ConwayPolynomial conway;
  long signature = 0;
  Integer determinant;
  friend bool operator==(const ClassicalFingerprint&, const ClassicalFingerprint&) = default;
};

ClassicalFingerprint classical_fingerprint(const IntMatrix& m);

/// Names of the fingerprint parts that differ: "linking", "conway",
/// "signature", "determinant". Empty means not distinguished, which is not a
/// proof of equivalence.
struct DistinguishReport {
  std::vector<std::string> differing;
  bool distinguished() const noexcept { return !differing.empty(); }
};

DistinguishReport distinguishes(const OrderedSeifertMatrix& a, const OrderedSeifertMatrix& b);
DistinguishReport distinguishes(const InvariantFingerprint& a, const InvariantFingerprint& b);
DistinguishReport distinguishes(const ClassicalFingerprint& a, const ClassicalFingerprint& b);

}  // namespace sseq
