#include "sseq/io.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#include "sseq/error.hpp"

namespace sseq {

namespace {

[[noreturn]] void field_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, "field " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& require_field(const Json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) field_error(where, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) field_error(where + "/" + name, "missing");
  return *it;
}

std::size_t count_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) field_error(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string form_name(EnlargeForm f) { return f == EnlargeForm::A ? "A" : "B"; }

void format_into(const Json& j, std::string& out, std::size_t indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Json(it.key()).dump() + ": ";
      format_into(it.value(), out, indent + 2);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array()) {
    bool scalar = true;
    for (const auto& e : j)
      if (e.is_structured()) scalar = false;
    if (scalar) {
      out += '[';
      for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + j[k].dump();
      out += ']';
      return;
    }
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += inner;
      format_into(j[k], out, indent + 2);
      out += (k + 1 < j.size()) ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (fits_int64(v)) return Json(static_cast<std::int64_t>(v));
  return Json(to_decimal(v));
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) field_error(where, "empty integer string");
    for (std::size_t k = start; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') field_error(where, "'" + s + "' is not a decimal integer");
    return Integer(s);
  }
  field_error(where, "expected an integer (number or decimal string)");
}

Json vector_to_json(std::span<const Integer> v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(integer_to_json(e));
  return out;
}

IntVector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) field_error(where, "expected an array of integers");
  IntVector out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(integer_from_json(j[k], where + "/" + std::to_string(k)));
  return out;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

IntMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) field_error(where, "expected an array of rows");
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    rows.push_back(vector_from_json(j[r], where + "/" + std::to_string(r)));
    if (rows.back().size() != rows.front().size()) {
      field_error(where + "/" + std::to_string(r), "row length differs from row 0");
    }
  }
  return IntMatrix::from_rows(rows);
}

Json to_json(const MatrixDocument& doc) {
  Json out = Json::object();
  out["components"] = doc.components;
  out["genus"] = doc.genus;
  out["entries"] = matrix_to_json(doc.entries);
  if (doc.label) out["label"] = *doc.label;
  return out;
}

MatrixDocument matrix_document_from_json(const Json& j, ValidationMode mode) {
  if (!j.is_object()) field_error("", "matrix document must be an object");
  MatrixDocument doc;
  doc.entries = matrix_from_json(require_field(j, "entries", ""), "/entries");
  if (mode == ValidationMode::Strict || j.contains("components")) {
    doc.components = count_from_json(require_field(j, "components", ""), "/components");
    if (doc.components == 0) field_error("/components", "must be at least 1");
  }
  if (mode == ValidationMode::Strict || j.contains("genus")) {
    doc.genus = count_from_json(require_field(j, "genus", ""), "/genus");
  } else {
    doc.genus = doc.entries.rows() / 2;
  }
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) field_error("/label", "expected a string");
    doc.label = it->get<std::string>();
  }

  const ValidationReport report = validate(doc.seifert(), mode);
  if (!report.ok()) {
    const std::string failed = report.first_failure();
    std::string detail;
    for (const auto& c : report.checks)
      if (c.name == failed) detail = c.detail;
    throw Error(ErrorKind::ValidationError, "invariant " + failed + " failed" + (detail.empty() ? "" : ": " + detail));
  }
  return doc;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                           ": malformed document");
  }
}

MatrixDocument parse_matrix_document(std::string_view text, ValidationMode mode) {
  return matrix_document_from_json(parse_json_text(text), mode);
}

OrderedSeifertMatrix parse_matrix(std::string_view text, ValidationMode mode) {
  return parse_matrix_document(text, mode).seifert();
}

std::string serialize_matrix(const MatrixDocument& doc) { return format_json(to_json(doc)) + "\n"; }

std::string serialize_matrix(const OrderedSeifertMatrix& s, std::optional<std::string> label) {
  return serialize_matrix(MatrixDocument{s.components(), s.genus(), s.matrix(), std::move(label)});
}

Json move_to_json(const Move& move) {
  Json out = Json::object();
  if (const auto* c = std::get_if<StrongCongruence>(&move)) {
    out["type"] = "strong_congruence";
    out["A"] = matrix_to_json(c->a);
  } else if (const auto* p = std::get_if<ClassicalCongruence>(&move)) {
    out["type"] = "classical_congruence";
    out["P"] = matrix_to_json(p->p);
  } else if (const auto* e = std::get_if<Enlarge>(&move)) {
    out["type"] = "enlarge";
    out["form"] = form_name(e->form);
    out["x"] = vector_to_json(e->x);
    out["y"] = vector_to_json(e->y);
    out["z"] = integer_to_json(e->z);
  } else {
    out["type"] = "reduce";
  }
  return out;
}

Move move_from_json(const Json& j, const std::string& where) {
  const Json& type = require_field(j, "type", where);
  if (!type.is_string()) field_error(where + "/type", "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "strong_congruence") return StrongCongruence{matrix_from_json(require_field(j, "A", where), where + "/A")};
  if (t == "classical_congruence") {
    return ClassicalCongruence{matrix_from_json(require_field(j, "P", where), where + "/P")};
  }
  if (t == "reduce") return Reduce{};
  if (t == "enlarge") {
    Enlarge e;
    const Json& form = require_field(j, "form", where);
    if (form == "A") {
      e.form = EnlargeForm::A;
    } else if (form == "B") {
      e.form = EnlargeForm::B;
    } else {
      field_error(where + "/form", "expected \"A\" or \"B\"");
    }
    e.x = vector_from_json(require_field(j, "x", where), where + "/x");
    e.y = vector_from_json(require_field(j, "y", where), where + "/y");
    e.z = integer_from_json(require_field(j, "z", where), where + "/z");
    return e;
  }
  field_error(where + "/type", "unknown move type '" + t + "'");
}

Json moves_to_json(std::span<const Move> moves) {
  Json out = Json::array();
  for (const auto& m : moves) out.push_back(move_to_json(m));
  return out;
}

std::vector<Move> moves_from_json(const Json& j) {
  const Json* list = &j;
  std::string base;
  if (j.is_object()) {
    for (const char* key : {"moves", "witness"}) {
      if (j.contains(key)) {
        list = &j.at(key);
        base = std::string("/") + key;
        break;
      }
    }
  }
  if (!list->is_array()) field_error(base, "expected an array of moves");
  std::vector<Move> out;
  for (std::size_t k = 0; k < list->size(); ++k) out.push_back(move_from_json((*list)[k], base + "/" + std::to_string(k)));
  return out;
}

std::vector<Move> parse_moves(std::string_view text) { return moves_from_json(parse_json_text(text)); }

std::string serialize_moves(std::span<const Move> moves) {
  Json doc = Json::object();
  doc["moves"] = moves_to_json(moves);
  return format_json(doc) + "\n";
}

Json linking_to_json(const LinkingTable& t) {
  Json out = Json::array();
  for (const auto& [ij, v] : t.entries()) {
    out.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"lk", integer_to_json(v)}});
  }
  return out;
}

Json fingerprint_to_json(const InvariantFingerprint& fp) {
  Json out = Json::object();
  out["components"] = fp.linking.components();
  out["linking"] = linking_to_json(fp.linking);
  out["conway"] = vector_to_json(fp.conway.coefficients);
  out["conway_text"] = fp.conway.to_string();
  out["signature"] = fp.signature;
  out["determinant"] = integer_to_json(fp.determinant);
  return out;
}

InvariantFingerprint fingerprint_from_json(const Json& j) {
  InvariantFingerprint fp;
  const std::size_t m = count_from_json(require_field(j, "components", ""), "/components");
  if (m == 0) field_error("/components", "must be at least 1");
  fp.linking = LinkingTable(m);
  const Json& lk = require_field(j, "linking", "");
  if (!lk.is_array()) field_error("/linking", "expected an array");
  for (std::size_t k = 0; k < lk.size(); ++k) {
    const std::string where = "/linking/" + std::to_string(k);
    fp.linking.set(count_from_json(require_field(lk[k], "i", where), where + "/i"),
                   count_from_json(require_field(lk[k], "j", where), where + "/j"),
                   integer_from_json(require_field(lk[k], "lk", where), where + "/lk"));
  }
  fp.conway.coefficients = vector_from_json(require_field(j, "conway", ""), "/conway");
  const Json& sig = require_field(j, "signature", "");
  if (!sig.is_number_integer()) field_error("/signature", "expected an integer");
  fp.signature = sig.get<long>();
  fp.determinant = integer_from_json(require_field(j, "determinant", ""), "/determinant");
  return fp;
}

Json classical_fingerprint_to_json(const ClassicalFingerprint& fp) {
  Json out = Json::object();
  out["conway"] = vector_to_json(fp.conway.coefficients);
  out["conway_text"] = fp.conway.to_string();
  out["signature"] = fp.signature;
  out["determinant"] = integer_to_json(fp.determinant);
  return out;
}

Json validation_to_json(const ValidationReport& r) {
  Json out = Json::object();
  out["mode"] = r.mode == ValidationMode::Strict ? "strict" : "classical";
  out["valid"] = r.ok();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj = Json::object();
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    if (!c.offending.empty()) {
      Json off = Json::array();
      for (auto [i, j] : c.offending) off.push_back(Json::array({i, j}));
      cj["offending"] = off;
    }
    checks.push_back(cj);
  }
  out["checks"] = checks;
  return out;
}

Json annotated_to_json(const AnnotatedSequence& seq) {
  Json out = Json::object();
  out["kinds"] = seq.kinds();
  out["moves"] = moves_to_json(seq.moves());
  Json snaps = Json::array();
  for (const auto& s : seq.snapshots()) snaps.push_back(to_json(MatrixDocument{s.components(), s.genus(), s.matrix(), {}}));
  out["snapshots"] = snaps;
  return out;
}

Json factorization_to_json(const ChangeOfBasis& cb) {
  const DEFactors de = factor_DE(cb);
  Json out = Json::object();
  out["components"] = cb.components();
  out["genus"] = cb.genus();
  out["B"] = matrix_to_json(cb.b());
  out["S"] = matrix_to_json(cb.s());
  out["D"] = matrix_to_json(de.d);
  out["E"] = matrix_to_json(de.e);
  out["stabilizes_X"] = stabilizes_X(cb.matrix(), cb.components(), cb.genus());
  Json factors = Json::array();
  for (const auto& f : elementary_factorization(cb)) {
    factors.push_back(Json{{"i", f.i}, {"j", f.j}, {"exponent", integer_to_json(f.exponent)}});
  }
  out["elementary_factors"] = factors;
  return out;
}

std::string format_json(const Json& j) {
  std::string out;
  format_into(j, out, 0);
  return out;
}

void persist_report(const Json& report, const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::random_device rd;
  const fs::path tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorKind::IoError, "cannot write " + path.string() + ": " + std::strerror(errno));
    }
    out << format_json(report) << '\n';
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorKind::IoError, "write to " + path.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw Error(ErrorKind::IoError, "cannot move report into " + path.string() + ": " + ec.message());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string() + ": " + std::strerror(errno));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_report(const std::filesystem::path& path) {
  try {
    return parse_json_text(read_text_file(path));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw Error(e.kind(), path.string() + ": " + e.what());
    throw;
  }
}

Json run_batch(const Json& catalog) {
  const Json* list = &catalog;
  if (catalog.is_object()) list = &require_field(catalog, "matrices", "");
  if (!list->is_array()) field_error("/matrices", "expected an array of matrix documents");

  struct Item {
    std::optional<MatrixDocument> doc;
    std::optional<InvariantFingerprint> fp;
  };
  std::vector<Item> items(list->size());
  Json entries = Json::array();
  for (std::size_t k = 0; k < list->size(); ++k) {
    Json entry = Json::object();
    entry["index"] = k;
    try {
      items[k].doc = matrix_document_from_json((*list)[k]);
      if (items[k].doc->label) entry["label"] = *items[k].doc->label;
      items[k].fp = fingerprint(items[k].doc->seifert());
      entry["fingerprint"] = fingerprint_to_json(*items[k].fp);
    } catch (const Error& e) {
      if (const auto& l = (*list)[k]; l.is_object() && l.contains("label") && l["label"].is_string()) {
        entry["label"] = l["label"];
      }
      entry["error"] = Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    }
    entries.push_back(entry);
  }

  Json table = Json::array();
  for (std::size_t a = 0; a < items.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < items.size(); ++b) {
      if (!items[a].fp || !items[b].fp) {
        row.push_back(nullptr);
      } else if (items[a].fp->linking.components() != items[b].fp->linking.components()) {
        row.push_back("component_count_mismatch");
      } else {
        Json diff = Json::array();
        for (const auto& name : distinguishes(*items[a].fp, *items[b].fp).differing) diff.push_back(name);
        row.push_back(diff);
      }
    }
    table.push_back(row);
  }

  Json out = Json::object();
  out["count"] = items.size();
  out["entries"] = entries;
  out["distinguishes"] = table;
  return out;
}

}  // namespace sseq
