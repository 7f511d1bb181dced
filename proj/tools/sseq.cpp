// sseq: command line front end for the strong S-equivalence library.
//
// Machine output (--json) goes to stdout as JSON; human output goes to stdout
// otherwise. Errors are reported on stderr as {"error": {...}}.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "sseq/error.hpp"
#include "sseq/factorize.hpp"
#include "sseq/invariants.hpp"
#include "sseq/io.hpp"
#include "sseq/moves.hpp"
#include "sseq/normalize.hpp"
#include "sseq/search.hpp"

using namespace sseq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitDistinguished = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitUsage = 64;

struct Options {
  bool json = false;
  bool classical = false;
  bool trace = false;
  bool common = false;
  std::string first;
  std::string second;
  std::size_t m = 1;
  std::size_t g = 0;
  std::size_t depth = 3;
  unsigned bound = 1;
  std::size_t max_genus = 1;
  std::uint64_t seed = 0;
  std::size_t max_nodes = SearchConfig{}.max_nodes;
  std::string out;
  std::string demo;
};

void emit(const Options& opt, const Json& machine, const std::string& human) {
  if (opt.json) {
    std::cout << format_json(machine) << '\n';
  } else {
    std::cout << human;
  }
}

ValidationMode mode_of(const Options& opt) { return opt.classical ? ValidationMode::Classical : ValidationMode::Strict; }

MatrixDocument load_matrix(const std::string& path, ValidationMode mode = ValidationMode::Strict) {
  try {
    return parse_matrix_document(read_text_file(path), mode);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::vector<Move> load_moves(const std::string& path) {
  try {
    return parse_moves(read_text_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string matrix_block(const IntMatrix& m, const std::string& indent = "  ") {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += indent;
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? " " : "") + to_decimal(m(r, c));
    out += '\n';
  }
  if (m.rows() == 0) out += indent + "(empty)\n";
  return out;
}

int cmd_validate(const Options& opt) {
  const std::string text = read_text_file(opt.first);
  const Json doc = parse_json_text(text);
  // parse without validating so the report itself can be shown
  MatrixDocument md;
  md.entries = matrix_from_json(doc.contains("entries") ? doc.at("entries") : Json(), "/entries");
  md.components = doc.value("components", std::size_t{1});
  md.genus = doc.value("genus", md.entries.rows() / 2);
  if (md.components == 0) throw Error(ErrorKind::ParseError, "field /components: must be at least 1");
  const ValidationReport report = validate(md.seifert(), mode_of(opt));

  std::string human;
  for (const auto& c : report.checks) {
    human += c.name + ": " + (c.passed ? "pass" : "FAIL");
    if (!c.detail.empty()) human += " (" + c.detail + ")";
    if (!c.offending.empty()) {
      human += " at";
      for (auto [i, j] : c.offending) human += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    human += '\n';
  }
  human += report.ok() ? "valid\n" : "invalid: " + report.first_failure() + "\n";
  emit(opt, validation_to_json(report), human);
  return report.ok() ? kExitOk : kExitFailure;
}

int cmd_invariants(const Options& opt) {
  const MatrixDocument doc = load_matrix(opt.first, mode_of(opt));
  if (opt.classical) {
    const ClassicalFingerprint fp = classical_fingerprint(doc.entries);
    emit(opt, classical_fingerprint_to_json(fp),
         "conway: " + fp.conway.to_string() + "\nsignature: " + std::to_string(fp.signature) +
             "\ndeterminant: " + to_decimal(fp.determinant) + "\n");
    return kExitOk;
  }
  const InvariantFingerprint fp = fingerprint(doc.seifert());
  emit(opt, fingerprint_to_json(fp),
       "components: " + std::to_string(doc.components) + "\nlinking numbers: " + fp.linking.to_string() +
           "\nconway: " + fp.conway.to_string() + "\nsignature: " + std::to_string(fp.signature) +
           "\ndeterminant: " + to_decimal(fp.determinant) + "\n");
  return kExitOk;
}

int cmd_apply(const Options& opt) {
  const MatrixDocument doc = load_matrix(opt.first, mode_of(opt));
  const std::vector<Move> moves = load_moves(opt.second);
  std::vector<OrderedSeifertMatrix> trace;
  if (opt.classical) {
    IntMatrix cur = doc.entries;
    trace.push_back({1, cur.rows() / 2, cur});
    for (std::size_t k = 0; k < moves.size(); ++k) {
      try {
        cur = apply_move_matrix(cur, moves[k], 0);
      } catch (const Error& e) {
        throw Error(e.kind(), "move " + std::to_string(k) + ": " + e.what(), k);
      }
      trace.push_back({1, cur.rows() / 2, cur});
    }
  } else {
    trace = apply_sequence({doc.seifert(), moves}).trace;
  }
  const OrderedSeifertMatrix& final = trace.back();

  Json machine = to_json(MatrixDocument{final.components(), final.genus(), final.matrix(), doc.label});
  std::string human = "final matrix (" + std::to_string(final.dimension()) + "x" + std::to_string(final.dimension()) +
                      ", m=" + std::to_string(final.components()) + ", g=" + std::to_string(final.genus()) + "):\n" +
                      matrix_block(final.matrix());
  if (opt.trace) {
    Json snaps = Json::array();
    std::string lines;
    for (std::size_t k = 0; k < trace.size(); ++k) {
      snaps.push_back(to_json(MatrixDocument{trace[k].components(), trace[k].genus(), trace[k].matrix(), {}}));
      lines += k == 0 ? "start:\n" : "after move " + std::to_string(k) + " (" + describe(moves[k - 1]) + "):\n";
      lines += matrix_block(trace[k].matrix());
    }
    machine = Json{{"final", machine}, {"trace", snaps}};
    human = lines + human;
  }
  emit(opt, machine, human);
  return kExitOk;
}

int cmd_normalize(const Options& opt) {
  const MatrixDocument doc = load_matrix(opt.first);
  const AnnotatedSequence seq({doc.seifert(), load_moves(opt.second)});
  const Normalization n = normalize_with_stats(seq);
  Json machine = annotated_to_json(n.sequence);
  machine["inversions"] = n.inversions;
  std::string human = "input kinds:      " + seq.kinds() + "\nnormalized kinds: " + n.sequence.kinds() + "\n";
  for (std::size_t k = 0; k < n.sequence.moves().size(); ++k) {
    human += "  " + std::to_string(k + 1) + ". " + describe(n.sequence.moves()[k]) + "\n";
  }
  if (opt.common) {
    const OrderedSeifertMatrix c = common_matrix(n.sequence);
    machine["common"] = to_json(MatrixDocument{c.components(), c.genus(), c.matrix(), {}});
    human += "common matrix (g=" + std::to_string(c.genus()) + "):\n" + matrix_block(c.matrix());
  }
  emit(opt, machine, human);
  return kExitOk;
}

int cmd_factor(const Options& opt) {
  const MatrixDocument doc = load_matrix(opt.first, ValidationMode::Classical);
  const ChangeOfBasis cb = split_blocks(doc.entries, opt.m, opt.g);
  const Json machine = factorization_to_json(cb);
  const DEFactors de = factor_DE(cb);
  std::string human = "B:\n" + matrix_block(cb.b()) + "S (symplectic):\n" + matrix_block(cb.s()) + "D:\n" +
                      matrix_block(de.d) + "E:\n" + matrix_block(de.e);
  human += std::string("stabilizes X: ") + (machine["stabilizes_X"].get<bool>() ? "yes" : "no") + "\n";
  human += "elementary factors:";
  const auto factors = elementary_factorization(cb);
  if (factors.empty()) human += " none";
  for (const auto& f : factors) {
    human += " (E_{" + std::to_string(f.i) + "," + std::to_string(f.j) + "})^" + to_decimal(f.exponent);
  }
  human += "\n";
  emit(opt, machine, human);
  return kExitOk;
}

int cmd_search(const Options& opt) {
  SearchConfig cfg;
  cfg.max_depth = opt.depth;
  cfg.entry_bound = opt.bound;
  cfg.max_genus = opt.max_genus;
  cfg.seed = opt.seed;
  cfg.max_nodes = opt.max_nodes;
  cfg.mode = opt.classical ? SearchMode::Classical : SearchMode::Strong;
  const MatrixDocument a = load_matrix(opt.first, mode_of(opt));
  const MatrixDocument b = load_matrix(opt.second, mode_of(opt));
  const SearchOutcome outcome = opt.classical ? classical_equiv_bounded(a.entries, b.entries, cfg)
                                              : strong_equiv_bounded(a.seifert(), b.seifert(), cfg);
  const SearchReport report = search_report(outcome);
  if (!opt.out.empty()) persist_report(report.machine, opt.out);
  emit(opt, report.machine, report.human);
  if (outcome.equivalent()) return kExitOk;
  return outcome.distinguished() ? kExitDistinguished : kExitInconclusive;
}

int cmd_demo(const Options& opt) {
  if (opt.demo != "counterexample") {
    throw Error(ErrorKind::InvalidConfig, "unknown demo '" + opt.demo + "' (available: counterexample)");
  }
  const IntMatrix m0{{-1, -1}, {-1, -1}};
  const IntMatrix m1{{-1, 0}, {0, 0}};

  SearchConfig ccfg;
  ccfg.mode = SearchMode::Classical;
  ccfg.max_depth = 2;
  ccfg.entry_bound = 1;
  const SearchOutcome classical = classical_equiv_bounded(m1, m0, ccfg);
  const SearchOutcome strong = strong_equiv_bounded({3, 0, m0}, {3, 0, m1}, SearchConfig{});

  const SearchReport cr = search_report(classical);
  const SearchReport sr = search_report(strong);
  const bool as_expected =
      classical.equivalent() && strong.distinguished() &&
      std::get<Distinguished>(strong.result).invariants.front() == "linking";

  const Json machine{{"matrices", Json{{"M0", matrix_to_json(m0)}, {"M1", matrix_to_json(m1)}, {"components", 3}}},
                     {"classical", cr.machine},
                     {"strong", sr.machine},
                     {"as_expected", as_expected}};
  const std::string human = "M0 =\n" + matrix_block(m0) + "M1 =\n" + matrix_block(m1) +
                            "\n== classical search (M1 to M0) ==\n" + cr.human +
                            "\n== strong search (M0 vs M1, 3 components) ==\n" + sr.human +
                            "\n" + (as_expected ? "classically S-equivalent, strongly distinguished by linking numbers\n"
                                                : "UNEXPECTED RESULT\n");
  emit(opt, machine, human);
  return as_expected ? kExitOk : kExitFailure;
}

int cmd_batch(const Options& opt) {
  const Json results = run_batch(load_report(opt.first));
  const std::string out = opt.out.empty() ? opt.first + ".results.json" : opt.out;
  persist_report(results, out);
  std::string human = "matrices: " + std::to_string(results["count"].get<std::size_t>()) + "\n";
  for (const auto& e : results["entries"]) {
    human += "  [" + std::to_string(e["index"].get<std::size_t>()) + "]";
    if (e.contains("label")) human += " " + e["label"].get<std::string>();
    if (e.contains("error")) {
      human += ": " + e["error"]["kind"].get<std::string>() + ": " + e["error"]["message"].get<std::string>();
    } else {
      human += ": conway " + e["fingerprint"]["conway_text"].get<std::string>() + ", signature " +
               std::to_string(e["fingerprint"]["signature"].get<long>());
    }
    human += "\n";
  }
  std::size_t distinguished = 0;
  const auto& table = results["distinguishes"];
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i + 1; j < table.size(); ++j)
      if (!table[i][j].is_null() && (!table[i][j].is_array() || !table[i][j].empty())) ++distinguished;
  human += "distinguished pairs: " + std::to_string(distinguished) + "\nresults written to " + out + "\n";
  emit(opt, results, human);
  return kExitOk;
}

void report_error(const Error& e) {
  Json err{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (e.move_index()) err["move_index"] = *e.move_index();
  std::cerr << Json{{"error", err}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong S-equivalence toolkit for ordered Seifert matrices"};
  app.require_subcommand(1);
  Options opt;

  auto common_flags = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "Machine-readable JSON on stdout"); };

  auto* validate_cmd = app.add_subcommand("validate", "Validate a matrix document (exit 0 iff valid)");
  validate_cmd->add_option("matrix", opt.first, "Matrix document")->required();
  validate_cmd->add_flag("--classical", opt.classical, "Only require a square matrix");
  common_flags(validate_cmd);

  auto* invariants_cmd = app.add_subcommand("invariants", "Linking numbers, Conway polynomial, signature, determinant");
  invariants_cmd->add_option("matrix", opt.first, "Matrix document")->required();
  invariants_cmd->add_flag("--classical", opt.classical, "Classical invariants of a square matrix");
  common_flags(invariants_cmd);

  auto* apply_cmd = app.add_subcommand("apply", "Replay a move list on a matrix");
  apply_cmd->add_option("matrix", opt.first, "Matrix document")->required();
  apply_cmd->add_option("moves", opt.second, "Move list document")->required();
  apply_cmd->add_flag("--trace", opt.trace, "Show the matrix after every move");
  apply_cmd->add_flag("--classical", opt.classical, "Classical rules (no boundary constraints)");
  common_flags(apply_cmd);

  auto* normalize_cmd = app.add_subcommand("normalize", "Move all enlargements before all reductions");
  normalize_cmd->add_option("matrix", opt.first, "Matrix document")->required();
  normalize_cmd->add_option("moves", opt.second, "Move list document")->required();
  normalize_cmd->add_flag("--common", opt.common, "Also print the common enlarged matrix");
  common_flags(normalize_cmd);

  auto* factor_cmd = app.add_subcommand("factor", "Split a change of basis into D, E and elementary factors");
  factor_cmd->add_option("matrix", opt.first, "Matrix document holding C")->required();
  factor_cmd->add_option("--m", opt.m, "Number of link components")->required()->check(CLI::PositiveNumber);
  factor_cmd->add_option("--g", opt.g, "Genus")->required();
  common_flags(factor_cmd);

  auto* search_cmd = app.add_subcommand("search", "Bounded equivalence search (exit 0 / 2 / 3)");
  search_cmd->add_option("first", opt.first, "Matrix document")->required();
  search_cmd->add_option("second", opt.second, "Matrix document")->required();
  search_cmd->add_option("--depth", opt.depth, "Moves per search direction")->capture_default_str();
  search_cmd->add_option("--bound", opt.bound, "Entry bound for generated moves")->capture_default_str();
  search_cmd->add_option("--max-genus", opt.max_genus, "Genus cap for enlargements")->capture_default_str();
  search_cmd->add_option("--max-nodes", opt.max_nodes, "Node budget")->capture_default_str();
  search_cmd->add_option("--seed", opt.seed, "Seed recorded in the report")->capture_default_str();
  search_cmd->add_option("--out", opt.out, "Also persist the machine report here");
  search_cmd->add_flag("--classical", opt.classical, "Classical S-equivalence instead of strong");
  common_flags(search_cmd);

  auto* demo_cmd = app.add_subcommand("demo", "Built-in demonstrations");
  demo_cmd->add_option("name", opt.demo, "Demo to run: counterexample")->required();
  common_flags(demo_cmd);

  auto* batch_cmd = app.add_subcommand("batch", "Fingerprint a catalog and tabulate pairwise differences");
  batch_cmd->add_option("catalog", opt.first, "Catalog document")->required();
  batch_cmd->add_option("--out", opt.out, "Results file (default <catalog>.results.json)");
  common_flags(batch_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(opt);
    if (*invariants_cmd) return cmd_invariants(opt);
    if (*apply_cmd) return cmd_apply(opt);
    if (*normalize_cmd) return cmd_normalize(opt);
    if (*factor_cmd) return cmd_factor(opt);
    if (*search_cmd) return cmd_search(opt);
    if (*demo_cmd) return cmd_demo(opt);
    if (*batch_cmd) return cmd_batch(opt);
  } catch (const Error& e) {
    report_error(e);
    return kExitFailure;
  }
  return kExitUsage;
}
