#include "sseq/search.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>

#include "sseq/error.hpp"

namespace sseq {

std::string canonical_key(const IntMatrix& m) {
  std::string key;
  key.reserve(8 + m.rows() * m.cols() * 6);
  append_u32(key, static_cast<std::uint32_t>(m.rows()));
  append_u32(key, static_cast<std::uint32_t>(m.cols()));
  for (const auto& v : m.entries()) append_integer(key, v);
  return key;
}

IntMatrix decode_key(std::string_view key) {
  const std::uint32_t rows = read_u32(key);
  const std::uint32_t cols = read_u32(key);
  std::vector<Integer> entries;
  entries.reserve(static_cast<std::size_t>(rows) * cols);
  for (std::size_t k = 0; k < static_cast<std::size_t>(rows) * cols; ++k) entries.push_back(read_integer(key));
  if (!key.empty()) throw Error(ErrorKind::ParseError, "trailing bytes after matrix key");
  return IntMatrix(rows, cols, std::move(entries));
}

std::string_view SearchOutcome::verdict() const {
  if (equivalent()) return "Equivalent";
  if (distinguished()) return "Distinguished";
  return "Inconclusive";
}

namespace {

std::size_t key_rows(std::string_view key) { return read_u32(key); }

struct Rules {
  SearchMode mode;
  std::size_t boundary;  // 0 in classical mode
  std::size_t genus_cap;
  unsigned bound;

  std::size_t genus_of(std::size_t n) const {
    return mode == SearchMode::Strong ? (n - boundary) / 2 : n / 2;
  }
};

struct Edge {
  enum class Kind : std::uint8_t { Root, Generator, Enlarge, Reduce };
  Kind kind = Kind::Root;
  CongruenceGenerator gen;
  // Enlarge: the data appended. Reduce: the data of the deleted block.
  std::unique_ptr<const Enlarge> data;
};

struct Node {
  const std::string* key = nullptr;
  std::uint32_t parent = 0;
  Edge edge;
};

struct Side {
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<Node> nodes;
  std::vector<std::uint32_t> frontier;
  std::size_t depth = 0;

  void reset(const std::string& root) {
    index.clear();
    nodes.clear();
    frontier.clear();
    depth = 0;
    auto [it, _] = index.emplace(root, 0);
    nodes.push_back({&it->first, 0, {}});
    frontier.push_back(0);
  }

  // Returns the new node index, or nullopt if the key was already visited.
  std::optional<std::uint32_t> insert(std::string key, std::uint32_t parent, Edge edge) {
    auto [it, inserted] = index.try_emplace(std::move(key), static_cast<std::uint32_t>(nodes.size()));
    if (!inserted) return std::nullopt;
    nodes.push_back({&it->first, parent, std::move(edge)});
    return it->second;
  }
};

class Engine {
 public:
  Engine(Rules rules, const SearchConfig& cfg) : rules_(rules), cfg_(cfg) {}

  SearchOutcome run(const IntMatrix& start, const IntMatrix& target, SearchOutcome outcome) {
    const std::string start_key = canonical_key(start);
    const std::string target_key = canonical_key(target);
    if (start_key == target_key) {
      outcome.result = Equivalent{{}, start, 0, 0, true};
      return outcome;
    }

    std::string bound_hit;
    for (int phase = 1; phase <= 2; ++phase) {
      outcome.stats.phase = phase;
      enlarge_possible_ = false;
      fwd_.reset(start_key);
      bwd_.reset(target_key);
      auto met = run_phase(phase == 2, outcome.stats, bound_hit);
      if (met) {
        outcome.result = assemble(*met);
        verify(outcome);
        return outcome;
      }
      if (bound_hit == "nodes" || !enlarge_possible_) break;
    }
    outcome.result = Inconclusive{bound_hit};
    return outcome;
  }

 private:
  const std::vector<CongruenceGenerator>& generators(std::size_t n) {
    auto it = gen_cache_.find(n);
    if (it == gen_cache_.end()) {
      auto gens = rules_.mode == SearchMode::Strong ? strong_generators(n, rules_.boundary, rules_.bound)
                                                    : classical_generators(n, rules_.bound);
      it = gen_cache_.emplace(n, std::move(gens)).first;
    }
    return it->second;
  }

  // Calls visit(edge, child) for every successor in fixed order; stops early
  // when visit returns true.
  template <class Visit>
  bool for_each_successor(const IntMatrix& m, bool allow_enlarge, Visit&& visit) {
    const std::size_t n = m.rows();
    for (const auto& gen : generators(n)) {
      IntMatrix child = m;
      apply_generator(child, gen);
      Edge e;
      e.kind = Edge::Kind::Generator;
      e.gen = gen;
      if (visit(std::move(e), std::move(child))) return true;
    }
    if (n >= rules_.boundary + 2) {
      if (auto data = trailing_enlargement(m)) {
        Edge e;
        e.kind = Edge::Kind::Reduce;
        e.data = std::make_unique<const Enlarge>(std::move(*data));
        if (visit(std::move(e), m.block(0, 0, n - 2, n - 2))) return true;
      }
    }
    if (rules_.genus_of(n) >= rules_.genus_cap) return false;
    enlarge_possible_ = true;
    if (!allow_enlarge) return false;

    const std::size_t shared = std::min(rules_.boundary, n);
    const std::size_t free_count = n + (n - shared) + 1;
    const long lo = -static_cast<long>(rules_.bound);
    const long hi = static_cast<long>(rules_.bound);
    for (EnlargeForm form : {EnlargeForm::A, EnlargeForm::B}) {
      std::vector<long> digits(free_count, lo);
      for (;;) {
        Enlarge data;
        data.form = form;
        data.x.reserve(n);
        data.y.reserve(n);
        for (std::size_t k = 0; k < n; ++k) data.x.emplace_back(digits[k]);
        for (std::size_t k = 0; k < n; ++k) data.y.emplace_back(k < shared ? digits[k] : digits[n + k - shared]);
        data.z = digits.back();
        IntMatrix child = enlarge_matrix(m, data, rules_.boundary);
        Edge e;
        e.kind = Edge::Kind::Enlarge;
        e.data = std::make_unique<const Enlarge>(std::move(data));
        if (visit(std::move(e), std::move(child))) return true;

        std::size_t pos = 0;
        while (pos < free_count && digits[pos] == hi) digits[pos++] = lo;
        if (pos == free_count) break;
        ++digits[pos];
      }
    }
    return false;
  }

  struct Meeting {
    std::uint32_t forward_node;
    std::uint32_t backward_node;
  };

  std::optional<Meeting> run_phase(bool allow_enlarge, SearchStats& stats, std::string& bound_hit) {
    for (;;) {
      const bool can_f = fwd_.depth < cfg_.max_depth && !fwd_.frontier.empty();
      const bool can_b = bwd_.depth < cfg_.max_depth && !bwd_.frontier.empty();
      stats.forward_frontier = fwd_.frontier.size();
      stats.backward_frontier = bwd_.frontier.size();
      stats.forward_depth = fwd_.depth;
      stats.backward_depth = bwd_.depth;
      if (!can_f && !can_b) {
        bound_hit = (fwd_.frontier.empty() || bwd_.frontier.empty()) ? "exhausted" : "depth";
        return std::nullopt;
      }
      const bool forward = can_f && (!can_b || fwd_.frontier.size() <= bwd_.frontier.size());
      Side& side = forward ? fwd_ : bwd_;
      Side& other = forward ? bwd_ : fwd_;

      std::vector<std::uint32_t> next;
      std::optional<Meeting> met;
      bool over_budget = false;
      for (std::uint32_t idx : side.frontier) {
        const IntMatrix m = decode_key(*side.nodes[idx].key);
        ++stats.nodes_expanded;
        for_each_successor(m, allow_enlarge, [&](Edge edge, IntMatrix child) {
          std::string key = canonical_key(child);
          auto other_it = other.index.find(key);
          auto inserted = side.insert(std::move(key), idx, std::move(edge));
          if (!inserted) return false;
          ++stats.nodes_generated;
          next.push_back(*inserted);
          if (other_it != other.index.end()) {
            met = forward ? Meeting{*inserted, other_it->second} : Meeting{other_it->second, *inserted};
            return true;
          }
          if (stats.nodes_generated >= cfg_.max_nodes) {
            over_budget = true;
            return true;
          }
          return false;
        });
        if (met || over_budget) break;
      }
      side.frontier = std::move(next);
      ++side.depth;
      stats.forward_frontier = fwd_.frontier.size();
      stats.backward_frontier = bwd_.frontier.size();
      stats.forward_depth = fwd_.depth;
      stats.backward_depth = bwd_.depth;
      if (met) return met;
      if (over_budget) {
        bound_hit = "nodes";
        return std::nullopt;
      }
    }
  }

  Move congruence_move(const CongruenceGenerator& gen, std::size_t n) const {
    IntMatrix g = generator_matrix(gen, n);
    if (rules_.mode == SearchMode::Strong) return StrongCongruence{std::move(g)};
    return ClassicalCongruence{std::move(g)};
  }

  Equivalent assemble(const Meeting& met) const {
    Equivalent eq;
    // Forward half: edges from the root to the meeting node, in order.
    std::vector<Move> forward;
    for (std::uint32_t idx = met.forward_node; idx != 0; idx = fwd_.nodes[idx].parent) {
      const Node& node = fwd_.nodes[idx];
      const std::size_t n = key_rows(*fwd_.nodes[node.parent].key);
      switch (node.edge.kind) {
        case Edge::Kind::Generator: forward.push_back(congruence_move(node.edge.gen, n)); break;
        case Edge::Kind::Enlarge: forward.emplace_back(*node.edge.data); break;
        case Edge::Kind::Reduce: forward.emplace_back(Reduce{}); break;
        case Edge::Kind::Root: break;
      }
    }
    eq.witness.assign(forward.rbegin(), forward.rend());
    eq.forward_moves = eq.witness.size();

    // Backward half: each edge went parent -> node; undo it node -> parent.
    for (std::uint32_t idx = met.backward_node; idx != 0; idx = bwd_.nodes[idx].parent) {
      const Node& node = bwd_.nodes[idx];
      const std::size_t n = key_rows(*node.key);
      switch (node.edge.kind) {
        case Edge::Kind::Generator: eq.witness.push_back(congruence_move(inverse(node.edge.gen), n)); break;
        case Edge::Kind::Enlarge: eq.witness.emplace_back(Reduce{}); break;
        case Edge::Kind::Reduce: eq.witness.emplace_back(*node.edge.data); break;
        case Edge::Kind::Root: break;
      }
    }
    eq.backward_moves = eq.witness.size() - eq.forward_moves;
    eq.meeting = decode_key(*fwd_.nodes[met.forward_node].key);
    return eq;
  }

  void verify(SearchOutcome& outcome) const {
    auto& eq = std::get<Equivalent>(outcome.result);
    const IntMatrix end = replay_matrix(outcome.first, eq.witness, rules_.boundary);
    if (end != outcome.second) {
      throw std::logic_error("search produced a witness that does not replay to the target");
    }
    eq.replay_verified = true;
  }

  Rules rules_;
  SearchConfig cfg_;
  Side fwd_;
  Side bwd_;
  bool enlarge_possible_ = false;
  std::map<std::size_t, std::vector<CongruenceGenerator>> gen_cache_;
};

}  // namespace

SearchOutcome strong_equiv_bounded(const OrderedSeifertMatrix& a, const OrderedSeifertMatrix& b,
                                   SearchConfig cfg) {
  cfg.mode = SearchMode::Strong;
  if (a.components() != b.components()) {
    throw Error(ErrorKind::ComponentCountMismatch,
                "cannot compare links with " + std::to_string(a.components()) + " and " +
                    std::to_string(b.components()) + " components");
  }
  require_strictly_valid(a);
  require_strictly_valid(b);
  if (cfg.max_genus < std::max(a.genus(), b.genus())) {
    throw Error(ErrorKind::InvalidConfig, "max_genus is below the genus of an input matrix");
  }

  SearchOutcome outcome;
  outcome.mode = SearchMode::Strong;
  outcome.boundary = a.boundary_size();
  outcome.first = a.matrix();
  outcome.second = b.matrix();
  outcome.config = cfg;

  InvariantFingerprint fa = fingerprint(a);
  InvariantFingerprint fb = fingerprint(b);
  if (auto diff = distinguishes(fa, fb); diff.distinguished()) {
    outcome.result = Distinguished{std::move(diff.differing), std::move(fa), std::move(fb), {}, {}};
    return outcome;
  }

  Engine engine({SearchMode::Strong, a.boundary_size(), cfg.max_genus, cfg.entry_bound}, cfg);
  return engine.run(a.matrix(), b.matrix(), std::move(outcome));
}

SearchOutcome classical_equiv_bounded(const IntMatrix& v, const IntMatrix& w, SearchConfig cfg) {
  cfg.mode = SearchMode::Classical;
  if (!v.is_square() || !w.is_square()) {
    throw Error(ErrorKind::NonSquare, "classical search needs square matrices");
  }
  if (cfg.max_genus < std::max(v.rows(), w.rows()) / 2) {
    throw Error(ErrorKind::InvalidConfig, "max_genus is below half the size of an input matrix");
  }

  SearchOutcome outcome;
  outcome.mode = SearchMode::Classical;
  outcome.boundary = 0;
  outcome.first = v;
  outcome.second = w;
  outcome.config = cfg;

  ClassicalFingerprint fv = classical_fingerprint(v);
  ClassicalFingerprint fw = classical_fingerprint(w);
  if (auto diff = distinguishes(fv, fw); diff.distinguished()) {
    outcome.result = Distinguished{std::move(diff.differing), {}, {}, std::move(fv), std::move(fw)};
    return outcome;
  }

  Engine engine({SearchMode::Classical, 0, cfg.max_genus, cfg.entry_bound}, cfg);
  return engine.run(v, w, std::move(outcome));
}

}  // namespace sseq
