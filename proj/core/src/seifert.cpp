#include "sseq/seifert.hpp"

#include <sstream>

#include "sseq/error.hpp"

namespace sseq {

OrderedSeifertMatrix::OrderedSeifertMatrix(std::size_t components, std::size_t genus, IntMatrix matrix)
    : m_(components), g_(genus), matrix_(std::move(matrix)) {
  if (components == 0) throw Error(ErrorKind::InvalidMatrix, "a link has at least one component");
}

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.name;
  return {};
}

ValidationReport validate(const OrderedSeifertMatrix& s, ValidationMode mode) {
  ValidationReport report;
  report.mode = mode;
  const IntMatrix& m = s.matrix();

  ValidationCheck square{"square"};
  if (!m.is_square()) {
    square.passed = false;
    square.detail = "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols());
  }
  report.checks.push_back(square);
  if (mode == ValidationMode::Classical) return report;

  const std::size_t b = s.boundary_size();
  const std::size_t expected = b + 2 * s.genus();
  ValidationCheck size{"size"};
  if (!square.passed || m.rows() != expected) {
    size.passed = false;
    size.detail = "expected dimension (m-1)+2g = " + std::to_string(expected) + ", got " +
                  std::to_string(m.rows()) + "x" + std::to_string(m.cols());
  }
  report.checks.push_back(size);
  if (!size.passed) {
    // The block checks are meaningless on a mis-sized matrix.
    for (const char* name : {"lambda_symmetry", "boundary_rows", "genus_block"}) {
      report.checks.push_back({name, false, {}, "skipped: size check failed"});
    }
    return report;
  }

  ValidationCheck lambda{"lambda_symmetry"};
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = i + 1; j < b; ++j)
      if (m(i, j) != m(j, i)) lambda.offending.emplace_back(i + 1, j + 1);
  lambda.passed = lambda.offending.empty();
  report.checks.push_back(lambda);

  const IntMatrix form = m - m.transpose();
  ValidationCheck boundary{"boundary_rows"};
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < expected; ++j)
      if (form(i, j) != 0) boundary.offending.emplace_back(i + 1, j + 1);
  boundary.passed = boundary.offending.empty();
  report.checks.push_back(boundary);

  ValidationCheck genus{"genus_block"};
  const Integer d = det(form.block(b, b, 2 * s.genus(), 2 * s.genus()));
  if (d != 1) {
    genus.passed = false;
    genus.detail = "det of genus block of M - M^t is " + d.str() + ", expected 1";
  }
  report.checks.push_back(genus);
  return report;
}

void require_strictly_valid(const OrderedSeifertMatrix& s) {
  const ValidationReport r = validate(s, ValidationMode::Strict);
  if (!r.ok()) {
    throw Error(ErrorKind::InvalidMatrix, "ordered Seifert matrix fails check: " + r.first_failure());
  }
}

LinkingTable::LinkingTable(std::size_t components) : m_(components) {
  for (std::size_t i = 1; i <= m_; ++i)
    for (std::size_t j = i + 1; j <= m_; ++j) lk_[{i, j}] = 0;
}

std::pair<std::size_t, std::size_t> LinkingTable::key(std::size_t i, std::size_t j) {
  return i < j ? std::pair{i, j} : std::pair{j, i};
}

const Integer& LinkingTable::get(std::size_t i, std::size_t j) const {
  auto it = lk_.find(key(i, j));
  if (it == lk_.end()) throw Error(ErrorKind::DimensionMismatch, "no such component pair");
  return it->second;
}

void LinkingTable::set(std::size_t i, std::size_t j, Integer value) {
  auto it = lk_.find(key(i, j));
  if (it == lk_.end()) throw Error(ErrorKind::DimensionMismatch, "no such component pair");
  it->second = std::move(value);
}

std::string LinkingTable::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [ij, v] : lk_) {
    if (!first) os << ", ";
    first = false;
    os << "lk(" << ij.first << ',' << ij.second << ")=" << v;
  }
  os << '}';
  return os.str();
}

LinkingTable linking_numbers(const OrderedSeifertMatrix& s) {
  require_strictly_valid(s);
  const std::size_t b = s.boundary_size();
  const IntMatrix& m = s.matrix();
  LinkingTable table(s.components());
  for (std::size_t i = 0; i < b; ++i) {
    Integer row_sum = 0;
    for (std::size_t j = 0; j < b; ++j) {
      row_sum += m(i, j);
      if (j > i) table.set(i + 1, j + 1, m(i, j));
    }
    table.set(i + 1, s.components(), -row_sum);
  }
  return table;
}

IntMatrix lambda_from_linking(const LinkingTable& table) {
  const std::size_t m = table.components();
  const std::size_t b = m - 1;
  IntMatrix lambda(b, b);
  for (std::size_t i = 0; i < b; ++i) {
    Integer off = 0;
    for (std::size_t j = 0; j < b; ++j) {
      if (j == i) continue;
      lambda(i, j) = table.get(i + 1, j + 1);
      off += lambda(i, j);
    }
    lambda(i, i) = -off - table.get(i + 1, m);
  }
  return lambda;
}

IntMatrix intersection_form(const OrderedSeifertMatrix& s) {
  return s.matrix() - s.matrix().transpose();
}

IntMatrix semi_symplectic_form(std::size_t components, std::size_t genus) {
  return direct_sum(IntMatrix(components - 1, components - 1), standard_sym(genus));
}

bool is_semi_symplectic(const OrderedSeifertMatrix& s) {
  const IntMatrix x = semi_symplectic_form(s.components(), s.genus());
  if (!s.matrix().is_square() || s.matrix().rows() != x.rows()) return false;
  return intersection_form(s) == x;
}

}  // namespace sseq
