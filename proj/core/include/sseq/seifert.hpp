#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sseq/linalg.hpp"

namespace sseq {

/// Seifert matrix on an ordered basis: rows/cols 1..m-1 are the boundary
/// classes of the first m-1 link components, the remaining 2g rows are
/// genus classes. Construction does not validate; see validate().
class OrderedSeifertMatrix {
 public:
  OrderedSeifertMatrix() = default;
  OrderedSeifertMatrix(std::size_t components, std::size_t genus, IntMatrix matrix);

  std::size_t components() const noexcept { return m_; }
  std::size_t genus() const noexcept { return g_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  /// m - 1, the number of boundary basis elements.
  std::size_t boundary_size() const noexcept { return m_ - 1; }
  std::size_t dimension() const noexcept { return matrix_.rows(); }

  friend bool operator==(const OrderedSeifertMatrix&, const OrderedSeifertMatrix&) = default;

 private:
  std::size_t m_ = 1;
  std::size_t g_ = 0;
  IntMatrix matrix_;
};

enum class ValidationMode { Strict, Classical };

struct ValidationCheck {
  std::string name;
  bool passed = true;
  /// 1-based (row, column) positions that violate the check.
  std::vector<std::pair<std::size_t, std::size_t>> offending;
  std::string detail;
};

struct ValidationReport {
  ValidationMode mode = ValidationMode::Strict;
  std::vector<ValidationCheck> checks;

  bool ok() const;
  /// Name of the first failing check, or empty.
  std::string first_failure() const;
};

ValidationReport validate(const OrderedSeifertMatrix& s, ValidationMode mode = ValidationMode::Strict);

/// Throws InvalidMatrix naming the first failing check.
void require_strictly_valid(const OrderedSeifertMatrix& s);

/// Pairwise linking numbers lk(L_i, L_j), 1 <= i < j <= m.
class LinkingTable {
 public:
  explicit LinkingTable(std::size_t components = 1);

  std::size_t components() const noexcept { return m_; }
  const Integer& get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Integer value);
  const std::map<std::pair<std::size_t, std::size_t>, Integer>& entries() const noexcept {
    return lk_;
  }
  std::string to_string() const;

  friend bool operator==(const LinkingTable&, const LinkingTable&) = default;

 private:
  static std::pair<std::size_t, std::size_t> key(std::size_t i, std::size_t j);

  std::size_t m_;
  std::map<std::pair<std::size_t, std::size_t>, Integer> lk_;
};

/// Off-diagonal lambda entries are lk(L_i, L_j); lk(L_i, L_m) is minus the
/// i-th row sum of lambda. Throws InvalidMatrix unless strictly valid.
LinkingTable linking_numbers(const OrderedSeifertMatrix& s);

/// The unique (m-1)x(m-1) lambda block carrying the given linking numbers.
IntMatrix lambda_from_linking(const LinkingTable& table);

/// M - M^t.
IntMatrix intersection_form(const OrderedSeifertMatrix& s);

/// X = (0 0; 0 Sym) of size (m-1+2g).
IntMatrix semi_symplectic_form(std::size_t components, std::size_t genus);

bool is_semi_symplectic(const OrderedSeifertMatrix& s);

}  // namespace sseq
