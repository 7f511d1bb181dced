// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "sseq/factorize.hpp"
#include "sseq/invariants.hpp"
#include "sseq/moves.hpp"
#include "sseq/normalize.hpp"
#include "sseq/search.hpp"

using namespace sseq;
using testkit::Rng;
using Clock = std::chrono::steady_clock;

namespace {

// Runtime limits in seconds.
constexpr double kCounterexampleLimit = 1.0;
constexpr double kSwapCongruenceLimit = 10.0;
constexpr double kSwapReduceLimit = 10.0;
constexpr double kNormalizePerSequenceLimit = 1.0;
constexpr double kStabilityLimit = 60.0;
constexpr double kPlantPerTrialLimit = 30.0;

// Sample counts.
constexpr int kSwapCongruenceInstances = 1000;
constexpr int kSwapReducePairs = 500;
constexpr int kNormalizeSequences = 200;
constexpr int kStabilityPairs = 1000;
constexpr int kFactorBlocks = 500;
constexpr int kStabilizeValid = 500;
constexpr int kStabilizeCorrupted = 100;
constexpr int kPlantTrials = 100;
constexpr int kLambdaCases = 500;

const IntMatrix kM0{{-1, -1}, {-1, -1}};
const IntMatrix kM1{{-1, 0}, {0, 0}};

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(testkit::uniform(rng, static_cast<long>(lo), static_cast<long>(hi)));
}

Verdict counterexample() {
  const auto start = Clock::now();
  Verdict v;
  std::ostringstream d;

  SearchConfig ccfg;
  ccfg.mode = SearchMode::Classical;
  ccfg.max_depth = 2;
  ccfg.entry_bound = 1;
  const auto classical = classical_equiv_bounded(kM1, kM0, ccfg);
  if (!classical.equivalent()) {
    v.pass = false;
    d << "classical verdict " << classical.verdict() << "; ";
  } else {
    const auto& eq = std::get<Equivalent>(classical.result);
    const bool replays = replay_matrix(kM1, eq.witness, 0) == kM0;
    v.pass &= eq.witness.size() <= 2 && replays;
    d << "classical witness " << eq.witness.size() << " move(s), replay " << (replays ? "ok" : "MISMATCH") << "; ";
  }

  const auto strong = strong_equiv_bounded({3, 0, kM0}, {3, 0, kM1}, SearchConfig{});
  if (!strong.distinguished()) {
    v.pass = false;
    d << "strong verdict " << strong.verdict();
  } else {
    const auto& dist = std::get<Distinguished>(strong.result);
    const bool headline = !dist.invariants.empty() && dist.invariants.front() == "linking";
    const auto& a = dist.first->linking;
    const auto& b = dist.second->linking;
    const bool tables = a.get(1, 2) == -1 && a.get(1, 3) == 2 && a.get(2, 3) == 2 && b.get(1, 2) == 0 &&
                        b.get(1, 3) == 1 && b.get(2, 3) == 0;
    v.pass &= headline && tables;
    d << "strong Distinguished(" << (dist.invariants.empty() ? "" : dist.invariants.front()) << ") tables "
      << a.to_string() << " vs " << b.to_string();
  }
  const double t = seconds_since(start);
  v.pass &= t < kCounterexampleLimit;
  d << "; " << t << " s";
  v.detail = d.str();
  return v;
}

Verdict swap_congruence() {
  Rng rng(1002);
  const auto start = Clock::now();
  int identity_ok = 0, prefix_ok = 0;
  for (int trial = 0; trial < kSwapCongruenceInstances; ++trial) {
    const std::size_t m = pick(rng, 1, 4), g = pick(rng, 0, 3);
    const auto m1 = testkit::random_valid_osm(rng, m, g, 5);
    const IntMatrix p = testkit::random_block_word(rng, m1.dimension(), m1.boundary_size(), 4);
    const auto m2 = apply_strong_congruence(m1, p);
    const Enlarge e = testkit::random_enlarge(rng, m2, 5);
    const auto m3 = enlarge(m2, e);
    const auto rw = swap_congruence_enlarge(m1, StrongCongruence{p}, e);
    const IntMatrix m4 = enlarge_matrix(m1.matrix(), rw.enlarge, 0);
    const IntMatrix& q = std::get<StrongCongruence>(rw.congruence).a;
    identity_ok += testkit::triple_product(m4, q) == m3.matrix();
    bool prefix = rw.enlarge.x.size() == m1.dimension() && rw.enlarge.y.size() == m1.dimension();
    for (std::size_t k = 0; prefix && k < m1.boundary_size(); ++k) prefix = rw.enlarge.x[k] == rw.enlarge.y[k];
    prefix_ok += prefix;
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << "Q^t M4 Q = M3 in " << identity_ok << "/" << kSwapCongruenceInstances << ", boundary prefix in " << prefix_ok
    << "/" << kSwapCongruenceInstances << "; " << t << " s";
  return {identity_ok == kSwapCongruenceInstances && prefix_ok == kSwapCongruenceInstances && t < kSwapCongruenceLimit,
          d.str()};
}

Verdict swap_reduce() {
  Rng rng(1003);
  const auto start = Clock::now();
  int ok = 0;
  int per_combo[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < kSwapReducePairs; ++trial) {
    const int combo = trial % 4;
    const auto base = testkit::random_valid_osm(rng, pick(rng, 1, 4), pick(rng, 0, 2), 4);
    Enlarge first = testkit::random_enlarge(rng, base, 3);
    first.form = (combo & 1) ? EnlargeForm::B : EnlargeForm::A;
    const auto m1 = enlarge(base, first);
    const auto m2 = reduce(m1);
    Enlarge e = testkit::random_enlarge(rng, m2, 3);
    e.form = (combo & 2) ? EnlargeForm::B : EnlargeForm::A;
    const auto m3 = enlarge(m2, e);
    const auto rw = swap_reduce_enlarge(m1, Reduce{}, e);
    const bool good = apply_sequence({m1, {rw.enlarge, rw.congruence, rw.reduce}}).final == m3;
    ok += good;
    per_combo[combo] += good;
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << ok << "/" << kSwapReducePairs << " replay exactly (AA " << per_combo[0] << ", BA " << per_combo[1] << ", AB "
    << per_combo[2] << ", BB " << per_combo[3] << "); " << t << " s";
  return {ok == kSwapReducePairs && t < kSwapReduceLimit, d.str()};
}

Verdict normalization() {
  Rng rng(1004);
  int ok = 0, with_inversions = 0;
  double worst = 0;
  for (int trial = 0; trial < kNormalizeSequences; ++trial) {
    const auto s = testkit::random_valid_osm(rng, pick(rng, 1, 3), pick(rng, 0, 2), 3);
    const AnnotatedSequence seq(random_sequence(s, pick(rng, 0, 8), 2, rng()));
    with_inversions += count_inversions(seq.moves()) > 0;
    const auto start = Clock::now();
    const AnnotatedSequence out = normalize_sequence(seq);
    worst = std::max(worst, seconds_since(start));

    auto count = [](const std::vector<Move>& moves, MoveKind k) {
      std::size_t n = 0;
      for (const auto& mv : moves) n += kind_of(mv) == k;
      return n;
    };
    const std::string kinds = out.kinds();
    const bool ordered = kinds.find("↘") == std::string::npos || kinds.rfind("↗") == std::string::npos ||
                         kinds.rfind("↗") < kinds.find("↘");
    ok += ordered && out.start() == seq.start() && out.final() == seq.final() &&
          count(out.moves(), MoveKind::Enlarge) == count(seq.moves(), MoveKind::Enlarge) &&
          count(out.moves(), MoveKind::Reduce) == count(seq.moves(), MoveKind::Reduce);
  }
  std::ostringstream d;
  d << ok << "/" << kNormalizeSequences << " ordered with endpoints and counts kept (" << with_inversions
    << " needed rewriting); slowest " << worst << " s";
  return {ok == kNormalizeSequences && worst < kNormalizePerSequenceLimit, d.str()};
}

Verdict stability() {
  Rng rng(1005);
  const auto start = Clock::now();
  int ok = 0;
  for (int trial = 0; trial < kStabilityPairs; ++trial) {
    const auto s = testkit::random_valid_osm(rng, pick(rng, 1, 4), pick(rng, 0, 3), 4);
    const auto end = apply_sequence(random_sequence(s, pick(rng, 0, 6), 3, rng())).final;
    ok += fingerprint(end) == fingerprint(s);
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << ok << "/" << kStabilityPairs << " fingerprints unchanged; " << t << " s";
  return {ok == kStabilityPairs && t < kStabilityLimit, d.str()};
}

Verdict elementary() {
  // m = 4, g = 2: identity with a lone 1 in row 1, column 5.
  const IntMatrix displayed{{1, 0, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0},
                            {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 1}};
  const bool display_ok = elementary_matrix({1, 2, 1}, 4, 2) == displayed;

  Rng rng(1006);
  int ok = 0;
  for (int trial = 0; trial < kFactorBlocks; ++trial) {
    const std::size_t m = pick(rng, 1, 4), g = pick(rng, 1, 3), b = m - 1;
    IntMatrix c = IntMatrix::identity(b + 2 * g);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < 2 * g; ++j) c(i, b + j) = testkit::uniform(rng, -6, 6);
    c.set_block(b, b, testkit::random_symplectic(rng, g));
    const auto cb = split_blocks(c, m, g);
    const auto de = factor_DE(cb);
    ok += assemble(elementary_factorization(cb), m, g) == de.e && de.d * de.e == c;
  }
  std::ostringstream d;
  d << "E_{1,2} display " << (display_ok ? "matches" : "DIFFERS") << "; " << ok << "/" << kFactorBlocks
    << " random B blocks reassemble to E";
  return {display_ok && ok == kFactorBlocks, d.str()};
}

Verdict stabilization() {
  Rng rng(1007);
  int valid_ok = 0, corrupted_ok = 0;
  auto build = [&](std::size_t m, std::size_t g, const IntMatrix& s) {
    const std::size_t b = m - 1;
    IntMatrix c = IntMatrix::identity(b + 2 * g);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < 2 * g; ++j) c(i, b + j) = testkit::uniform(rng, -5, 5);
    c.set_block(b, b, s);
    return c;
  };
  for (int trial = 0; trial < kStabilizeValid; ++trial) {
    const std::size_t m = pick(rng, 1, 4), g = pick(rng, 1, 3);
    valid_ok += stabilizes_X(build(m, g, testkit::random_symplectic(rng, g)), m, g);
  }
  const long factors[] = {2, 3, 0, -1};
  for (int trial = 0; trial < kStabilizeCorrupted; ++trial) {
    const std::size_t m = pick(rng, 1, 4), g = pick(rng, 1, 3);
    IntMatrix s = testkit::random_symplectic(rng, g);
    // scaling one column by k makes det(S) = k, and symplectic matrices have det 1
    const std::size_t col = pick(rng, 0, 2 * g - 1);
    const long k = factors[trial % 4];
    for (std::size_t r = 0; r < 2 * g; ++r) s(r, col) *= k;
    corrupted_ok += !stabilizes_X(build(m, g, s), m, g);
  }
  std::ostringstream d;
  d << "valid " << valid_ok << "/" << kStabilizeValid << " stabilize X; corrupted " << corrupted_ok << "/"
    << kStabilizeCorrupted << " rejected";
  return {valid_ok == kStabilizeValid && corrupted_ok == kStabilizeCorrupted, d.str()};
}

Verdict conway_sanity() {
  const auto empty = conway(OrderedSeifertMatrix{1, 0, IntMatrix()});
  const auto unknot = conway(OrderedSeifertMatrix{1, 1, IntMatrix{{0, 1}, {0, 0}}});
  const auto trefoil = conway(OrderedSeifertMatrix{1, 1, IntMatrix{{-1, 1}, {0, -1}}});
  const bool ok = empty.coefficients == IntVector{1} && unknot.coefficients == IntVector{1} &&
                  trefoil.coefficients == IntVector{1, 0, 1};
  return {ok, empty.to_string() + ", " + unknot.to_string() + ", " + trefoil.to_string()};
}

Verdict plant_and_recover() {
  Rng rng(1009);
  int ok = 0;
  double worst = 0;
  std::string first_failure;
  for (int trial = 0; trial < kPlantTrials; ++trial) {
    const std::size_t m = pick(rng, 1, 3);
    const std::size_t g = m == 3 ? 0 : pick(rng, 0, 1);
    const auto s = testkit::random_valid_osm(rng, m, g, 2);
    SearchConfig cfg;
    cfg.max_depth = 3;
    cfg.entry_bound = 2;
    cfg.max_genus = g + 2;
    cfg.seed = static_cast<std::uint64_t>(trial);
    const auto planted = random_sequence(s, pick(rng, 1, 3), cfg.entry_bound, rng(), {cfg.max_genus});
    const auto target = apply_sequence(planted).final;
    const auto start = Clock::now();
    const auto out = strong_equiv_bounded(s, target, cfg);
    const double t = seconds_since(start);
    worst = std::max(worst, t);
    bool good = false;
    if (out.equivalent()) {
      const auto& eq = std::get<Equivalent>(out.result);
      good = eq.replay_verified && replay_matrix(s.matrix(), eq.witness, s.boundary_size()) == target.matrix();
    }
    good = good && t < kPlantPerTrialLimit;
    ok += good;
    if (!good && first_failure.empty()) {
      first_failure = "trial " + std::to_string(trial) + " " + std::string(out.verdict()) + " (" +
                      kind_string(planted.moves) + ")";
    }
  }
  std::ostringstream d;
  d << ok << "/" << kPlantTrials << " recovered with replaying witness; slowest " << worst << " s";
  if (!first_failure.empty()) d << "; first failure " << first_failure;
  return {ok == kPlantTrials, d.str()};
}

Verdict lambda_block() {
  Rng rng(1010);
  int ok = 0;
  for (int trial = 0; trial < kLambdaCases; ++trial) {
    const std::size_t m = pick(rng, 1, 5);
    const auto s = testkit::random_valid_osm(rng, m, pick(rng, 0, 2), 6);
    const LinkingTable lk = linking_numbers(s);
    const IntMatrix lambda = s.matrix().block(0, 0, m - 1, m - 1);
    bool good = lambda_from_linking(lk) == lambda;
    for (std::size_t i = 1; i < m; ++i) {
      Integer off = 0;
      for (std::size_t j = 1; j < m; ++j) {
        if (j == i) continue;
        off += lambda(i - 1, j - 1);
        good = good && lk.get(i, j) == lambda(i - 1, j - 1);
      }
      good = good && lambda(i - 1, i - 1) == -off - lk.get(i, m);
    }
    ok += good;
  }
  std::ostringstream d;
  d << ok << "/" << kLambdaCases << " satisfy the diagonal identity and round-trip";
  return {ok == kLambdaCases, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 counterexample reproduction", counterexample},
      {"2 congruence/enlargement swap identity", swap_congruence},
      {"3 reduction/enlargement rewriting", swap_reduce},
      {"4 sequence normalization", normalization},
      {"5 invariant stability", stability},
      {"6 elementary factorization", elementary},
      {"7 X-stabilization", stabilization},
      {"8 Conway sanity", conway_sanity},
      {"9 plant-and-recover search", plant_and_recover},
      {"10 lambda-block consistency", lambda_block},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("[%s] %s: %s\n", v.pass ? "PASS" : "FAIL", name.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
