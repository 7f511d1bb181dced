#include <sstream>

#include "sseq/error.hpp"
#include "sseq/io.hpp"
#include "sseq/search.hpp"

namespace sseq {

namespace {

Json config_to_json(const SearchConfig& cfg) {
  return Json{{"max_depth", cfg.max_depth},
              {"entry_bound", cfg.entry_bound},
              {"max_genus", cfg.max_genus},
              {"seed", cfg.seed},
              {"max_nodes", cfg.max_nodes}};
}

Json stats_to_json(const SearchStats& s) {
  return Json{{"nodes_expanded", s.nodes_expanded},     {"nodes_generated", s.nodes_generated},
              {"forward_frontier", s.forward_frontier}, {"backward_frontier", s.backward_frontier},
              {"forward_depth", s.forward_depth},       {"backward_depth", s.backward_depth},
              {"phase", s.phase}};
}

}  // namespace

SearchReport search_report(const SearchOutcome& outcome) {
  SearchReport report;
  Json& j = report.machine;
  j = Json::object();
  j["verdict"] = std::string(outcome.verdict());
  j["mode"] = outcome.mode == SearchMode::Strong ? "strong" : "classical";
  j["config"] = config_to_json(outcome.config);
  j["stats"] = stats_to_json(outcome.stats);

  std::ostringstream h;
  h << "verdict: " << outcome.verdict() << " (" << j["mode"].get<std::string>() << ")\n";

  if (const auto* eq = std::get_if<Equivalent>(&outcome.result)) {
    bool replay_ok = false;
    try {
      replay_ok = replay_matrix(outcome.first, eq->witness, outcome.boundary) == outcome.second;
    } catch (const Error&) {
      replay_ok = false;
    }
    j["witness"] = moves_to_json(eq->witness);
    j["replay_check"] = replay_ok ? "pass" : "fail";
    j["meeting"] = matrix_to_json(eq->meeting);
    j["forward_moves"] = eq->forward_moves;
    j["backward_moves"] = eq->backward_moves;
    h << "witness: " << eq->witness.size() << " moves (" << eq->forward_moves << " forward, "
      << eq->backward_moves << " backward)\n";
    for (std::size_t k = 0; k < eq->witness.size(); ++k) h << "  " << (k + 1) << ". " << describe(eq->witness[k]) << "\n";
    h << "replay check: " << (replay_ok ? "pass" : "fail") << "\n";
  } else if (const auto* d = std::get_if<Distinguished>(&outcome.result)) {
    j["invariants"] = d->invariants;
    h << "distinguished by: ";
    for (std::size_t k = 0; k < d->invariants.size(); ++k) h << (k ? ", " : "") << d->invariants[k];
    h << "\n";
    if (d->first && d->second) {
      j["fingerprints"] = Json::array({fingerprint_to_json(*d->first), fingerprint_to_json(*d->second)});
      h << "first linking numbers:  " << d->first->linking.to_string() << "\n";
      h << "second linking numbers: " << d->second->linking.to_string() << "\n";
      h << "first Conway:  " << d->first->conway.to_string() << "\n";
      h << "second Conway: " << d->second->conway.to_string() << "\n";
    } else if (d->first_classical && d->second_classical) {
      j["fingerprints"] = Json::array(
          {classical_fingerprint_to_json(*d->first_classical), classical_fingerprint_to_json(*d->second_classical)});
      h << "first Conway:  " << d->first_classical->conway.to_string() << "\n";
      h << "second Conway: " << d->second_classical->conway.to_string() << "\n";
    }
  } else {
    const auto& inc = std::get<Inconclusive>(outcome.result);
    j["bound_hit"] = inc.bound_hit;
    h << "bound hit: " << inc.bound_hit << "\n";
  }

  const SearchStats& s = outcome.stats;
  h << "nodes expanded: " << s.nodes_expanded << ", generated: " << s.nodes_generated << "\n";
  h << "frontiers: forward " << s.forward_frontier << " (depth " << s.forward_depth << "), backward "
    << s.backward_frontier << " (depth " << s.backward_depth << ")\n";
  report.human = h.str();
  return report;
}

}  // namespace sseq
