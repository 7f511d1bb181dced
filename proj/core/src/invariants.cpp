#include "sseq/invariants.hpp"

#include <sstream>

#include "sseq/error.hpp"

namespace sseq {

namespace {

// (t - t^-1)^d expanded in t.
LaurentPoly z_power(long d) {
  LaurentPoly out;
  Integer binom = 1;
  for (long k = 0; k <= d; ++k) {
    out += LaurentPoly::monomial((k % 2 == 0) ? binom : Integer(-binom), d - 2 * k);
    binom = binom * (d - k) / (k + 1);
  }
  return out;
}

}  // namespace

std::string ConwayPolynomial::to_string() const {
  if (coefficients.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const Integer& c = coefficients[k];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k > 0) {
      os << 'z';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

ConwayPolynomial to_conway(const LaurentPoly& p) {
  ConwayPolynomial out;
  LaurentPoly rest = p;
  while (!rest.is_zero()) {
    const long d = rest.max_exponent();
    if (d < 0 || rest.min_exponent() < -d) {
      throw Error(ErrorKind::NotAConwayPolynomial, p.to_string() + " is not a polynomial in t - t^-1");
    }
    const Integer c = rest.coefficient(d);
    if (out.coefficients.size() <= static_cast<std::size_t>(d)) out.coefficients.resize(d + 1);
    out.coefficients[d] = c;
    rest -= LaurentPoly(c) * z_power(d);
  }
  while (!out.coefficients.empty() && out.coefficients.back() == 0) out.coefficients.pop_back();
  return out;
}

ConwayPolynomial conway(const IntMatrix& m) { return to_conway(laurent_det(seifert_pencil(m))); }
ConwayPolynomial conway(const OrderedSeifertMatrix& s) { return conway(s.matrix()); }

long signature_invariant(const IntMatrix& m) { return signature(m + m.transpose()); }
long signature_invariant(const OrderedSeifertMatrix& s) { return signature_invariant(s.matrix()); }

Integer determinant_invariant(const IntMatrix& m) { return abs(det(m + m.transpose())); }
Integer determinant_invariant(const OrderedSeifertMatrix& s) { return determinant_invariant(s.matrix()); }

std::string InvariantFingerprint::serialize() const {
  std::string out;
  append_u32(out, static_cast<std::uint32_t>(linking.components()));
  append_u32(out, static_cast<std::uint32_t>(linking.entries().size()));
  for (const auto& [ij, v] : linking.entries()) {
    append_u32(out, static_cast<std::uint32_t>(ij.first));
    append_u32(out, static_cast<std::uint32_t>(ij.second));
    append_integer(out, v);
  }
  append_u32(out, static_cast<std::uint32_t>(conway.coefficients.size()));
  for (const auto& c : conway.coefficients) append_integer(out, c);
  append_integer(out, Integer(signature));
  append_integer(out, determinant);
  return out;
}

InvariantFingerprint InvariantFingerprint::deserialize(std::string_view bytes) {
  InvariantFingerprint fp;
  const std::uint32_t m = read_u32(bytes);
  if (m == 0) throw Error(ErrorKind::ParseError, "fingerprint with zero components");
  fp.linking = LinkingTable(m);
  const std::uint32_t pairs = read_u32(bytes);
  for (std::uint32_t k = 0; k < pairs; ++k) {
    const std::uint32_t i = read_u32(bytes);
    const std::uint32_t j = read_u32(bytes);
    fp.linking.set(i, j, read_integer(bytes));
  }
  const std::uint32_t terms = read_u32(bytes);
  for (std::uint32_t k = 0; k < terms; ++k) fp.conway.coefficients.push_back(read_integer(bytes));
  fp.signature = static_cast<long>(read_integer(bytes));
  fp.determinant = read_integer(bytes);
  if (!bytes.empty()) throw Error(ErrorKind::ParseError, "trailing bytes after fingerprint");
  return fp;
}

InvariantFingerprint fingerprint(const OrderedSeifertMatrix& s) {
  require_strictly_valid(s);
  return {linking_numbers(s), conway(s), signature_invariant(s), determinant_invariant(s)};
}

ClassicalFingerprint classical_fingerprint(const IntMatrix& m) {
  return {conway(m), signature_invariant(m), determinant_invariant(m)};
}

DistinguishReport distinguishes(const InvariantFingerprint& a, const InvariantFingerprint& b) {
  if (a.linking.components() != b.linking.components()) {
    throw Error(ErrorKind::ComponentCountMismatch, "fingerprints have different component counts");
  }
  DistinguishReport r;
  if (a.linking != b.linking) r.differing.emplace_back("linking");
  if (a.conway != b.conway) r.differing.emplace_back("conway");
  if (a.signature != b.signature) r.differing.emplace_back("signature");
  if (a.determinant != b.determinant) r.differing.emplace_back("determinant");
  return r;
}

DistinguishReport distinguishes(const ClassicalFingerprint& a, const ClassicalFingerprint& b) {
  DistinguishReport r;
  if (a.conway != b.conway) r.differing.emplace_back("conway");
  if (a.signature != b.signature) r.differing.emplace_back("signature");
  if (a.determinant != b.determinant) r.differing.emplace_back("determinant");
  return r;
}

DistinguishReport distinguishes(const OrderedSeifertMatrix& a, const OrderedSeifertMatrix& b) {
  if (a.components() != b.components()) {
    throw Error(ErrorKind::ComponentCountMismatch,
                "matrices describe links with " + std::to_string(a.components()) + " and " +
                    std::to_string(b.components()) + " components");
  }
  return distinguishes(fingerprint(a), fingerprint(b));
}

}  // namespace sseq
