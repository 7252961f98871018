#include "howson/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <type_traits>

#include "json.hpp"

#include "howson/affine_action.hpp"
#include "howson/linear.hpp"
#include "howson/rank_lab.hpp"
#include "howson/schreier_graph.hpp"
#include "howson/word.hpp"

namespace howson {

namespace {

constexpr std::uint64_t kSeed = 20261017;
constexpr int kSchreierQLimit = 50;
constexpr int kPowerRange = 30;
constexpr int kRandomSamples = 1000;
constexpr std::size_t kRandomWordLength = 20;
constexpr std::int64_t kMembershipModuli[] = {2, 3, 4, 5, 10};

struct CheckInfo {
  const char* id;
  const char* claim;
  const char* anchor;
};

// Order is the execution order and the report order.
constexpr CheckInfo kChecks[] = {
    {"freeness.sweep", "no nonempty reduced word up to the sweep length evaluates to the identity",
     "U and V freely generate a free subgroup of SL(2,Z)"},
    {"powers.closed_form", "closed forms for alpha^m and beta^m agree with iterated application",
     "closed-form powers of the affine generators"},
    {"orbit.witness_words", "the witness word for n sends (0,0) to P_n = (n, 1-n)",
     "every P_n lies in the orbit of the origin"},
    {"loop.reflection", "U^-1 V sends P_n to P_{1-n}",
     "alpha^-1 beta reflects the marked line"},
    {"loop.r_fixes_marked_points", "r = (U^-1 V)^2 fixes every P_n",
     "every P_n lies on a nontrivial reduced closed path"},
    {"core.certified_growth",
     "certified core counts are non-decreasing in ball depth, positive from depth 4, and "
     "contain P_0 and P_1 from depth 5",
     "stabilizer of the origin is not finitely generated (finite evidence)"},
    {"rank.abelianization", "(H_q)_ab = Z^2 + (Z/2)^2, needing four generators",
     "rank(H_q) = rank(K_q) = 4 via abelianization"},
    {"rank.index_bound", "[F : N_q] >= q", "orbit-stabilizer bound on the index of N_q"},
    {"rank.intersection_bound", "rank(N_q) = [F : N_q] + 1 >= q + 1",
     "Nielsen-Schreier rank bound for the intersection of H_q and K_q"},
    {"schreier.generator_count",
     "spanning-tree Schreier generators number [F : N_q] + 1 and all lie in N_q",
     "Nielsen-Schreier formula for finite-index subgroups of F_2"},
    {"membership.graph_vs_cocycle", "a word loops at the base of the mod-q graph iff c(w) = 0 mod q",
     "N_q is the stabilizer of the origin in (Z/qZ)^2"},
    {"stabilizer.explicit_element",
     "some nonempty word up to the sweep length has zero cocycle and nontrivial linear part",
     "H and K intersect in the stabilizer N of the origin"},
};

std::string join_failures(const std::vector<std::string>& failures) {
  std::ostringstream os;
  const std::size_t shown = std::min<std::size_t>(failures.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) os << (i ? "; " : "") << failures[i];
  if (failures.size() > shown) os << "; ... (" << failures.size() << " failures)";
  return os.str();
}

struct Outcome {
  bool passed;
  std::string details;
};

Outcome check_freeness(const VerifyParams& p) {
  const FreenessVerdict v = freeness_sweep(p.sweep_len);
  if (!v.passed)
    return {false, "identity reached by " + v.counterexample->to_string()};
  return {true, std::to_string(v.words_checked) + " words checked"};
}

Outcome check_powers() {
  std::mt19937_64 rng(kSeed);
  std::vector<std::string> failures;
  for (int sample = 0; sample < kRandomSamples; ++sample) {
    const long x = static_cast<long>(rng() % 2000001) - 1000000;
    const long y = static_cast<long>(rng() % 2000001) - 1000000;
    const Vec2 p(x, y);
    for (Generator g : kGenerators) {
      Vec2 forward = p, backward = p;
      for (int m = 1; m <= kPowerRange; ++m) {
        forward = act_letter(Letter(g), forward);
        backward = act_letter(Letter(g, true), backward);
        if (generator_power(g, m, p) != forward || generator_power(g, -m, p) != backward)
          failures.push_back(std::string(1, Letter(g).symbol()) + "^" + std::to_string(m) +
                             " at " + p.to_string());
      }
    }
  }
  if (!failures.empty()) return {false, join_failures(failures)};
  return {true, std::to_string(kRandomSamples) + " points, |m| <= " + std::to_string(kPowerRange)};
}

Outcome check_witnesses(const VerifyParams& p) {
  std::vector<std::string> failures;
  std::size_t longest = 0;
  for (std::int64_t n = -p.n_max; n <= p.n_max; ++n) {
    try {
      const WitnessSchedule s = witness_word(n);
      longest = std::max(longest, s.word.size());
      if (act(s.word, Vec2(0, 0)) != point_P(n).point) failures.push_back("n=" + std::to_string(n));
    } catch (const std::exception& ex) {
      failures.push_back(ex.what());
    }
  }
  if (!failures.empty()) return {false, join_failures(failures)};
  return {true, std::to_string(2 * p.n_max + 1) + " marked points reached; longest witness " +
                    std::to_string(longest) + " letters"};
}

Outcome check_marked_points(const VerifyParams& p,
                            const std::function<bool(std::int64_t)>& holds) {
  std::vector<std::string> failures;
  for (std::int64_t n = -p.n_max; n <= p.n_max; ++n)
    if (!holds(n)) failures.push_back("n=" + std::to_string(n));
  if (!failures.empty()) return {false, join_failures(failures)};
  return {true, "|n| <= " + std::to_string(p.n_max)};
}

Outcome check_core_growth(const VerifyParams& p) {
  std::vector<std::string> failures;
  std::ostringstream counts;
  std::size_t previous = 0;
  for (int d = 1; d <= p.depth; ++d) {
    const OrbitalGraph ball = build_ball(d);
    const CoreReport core = certified_core(ball, loop_word_r());
    const std::size_t count = core.core_vertices.size();
    counts << (d > 1 ? " " : "") << d << ":" << count;
    if (count < previous) failures.push_back("count drops at depth " + std::to_string(d));
    if (d >= 4 && count == 0) failures.push_back("no certified vertex at depth " + std::to_string(d));
    if (d >= 5) {
      for (std::int64_t n : {0, 1}) {
        auto v = ball.find(point_P(n).point);
        if (!v || !std::binary_search(core.core_vertices.begin(), core.core_vertices.end(), *v))
          failures.push_back("P_" + std::to_string(n) + " missing at depth " + std::to_string(d));
      }
    }
    previous = count;
  }
  if (!failures.empty()) return {false, join_failures(failures) + " [" + counts.str() + "]"};
  return {true, "depth:count " + counts.str()};
}

Outcome check_abelianization(const VerifyParams& p) {
  const AbelianGroupDescriptor expected{2, {BigInt(2), BigInt(2)}};
  const int q_top = std::min(p.q_max, kSchreierQLimit);
  std::vector<std::string> failures;
  for (int q = 2; q <= q_top; ++q) {
    const AbelianGroupDescriptor d = abelianization_Hq(q);
    if (d != expected || d.min_generators() != 4)
      failures.push_back("q=" + std::to_string(q) + " gives " + d.to_string());
  }
  if (!failures.empty()) return {false, join_failures(failures)};
  if (q_top < 2) return {true, "no q in range"};
  return {true, "q in [2, " + std::to_string(q_top) + "]: " + expected.to_string()};
}

Outcome check_generator_count(const VerifyParams& p) {
  const int q_top = std::min(p.q_max, kSchreierQLimit);
  std::vector<std::string> failures;
  std::size_t total = 0;
  for (int q = 2; q <= q_top; ++q) {
    const OrbitalGraph g = build_mod_q(q);
    const std::vector<Word> gens = spanning_tree_generators(g);
    total += gens.size();
    const auto index = static_cast<std::int64_t>(g.vertex_count());
    if (static_cast<std::int64_t>(gens.size()) != nielsen_schreier_rank(index, 2))
      failures.push_back("q=" + std::to_string(q) + ": " + std::to_string(gens.size()) +
                         " generators for index " + std::to_string(index));
    for (const Word& w : gens)
      if (!membership(w, q)) failures.push_back("q=" + std::to_string(q) + ": " + w.to_string());
  }
  if (!failures.empty()) return {false, join_failures(failures)};
  return {true, std::to_string(total) + " generators over q in [2, " + std::to_string(q_top) + "]"};
}

Outcome check_membership() {
  std::mt19937_64 rng(kSeed + 1);
  std::vector<std::string> failures;
  std::size_t members = 0;
  for (std::int64_t q : kMembershipModuli) {
    const OrbitalGraph g = build_mod_q(q);
    for (int i = 0; i < kRandomSamples; ++i) {
      const Word w = random_reduced_word(rng, kRandomWordLength);
      const bool by_graph = is_loop_at_base(g, w);
      members += by_graph;
      if (by_graph != membership(w, q))
        failures.push_back("q=" + std::to_string(q) + ": " + w.to_string());
    }
  }
  if (!failures.empty()) return {false, join_failures(failures)};
  return {true, std::to_string(kRandomSamples) + " words x 5 moduli, " + std::to_string(members) +
                    " members"};
}

Outcome check_explicit_element(const VerifyParams& p) {
  const auto w = shortest_stabilizer_element(p.sweep_len);
  if (!w) return {false, "none up to length " + std::to_string(p.sweep_len)};
  const AffineElement g = eval_affine(*w);
  if (!g.translation.is_zero() || g.linear.is_identity() || !membership(*w, std::nullopt))
    return {false, w->to_string() + " fails re-evaluation"};
  return {true, w->to_string() + " with linear part " + g.linear.to_string()};
}

}  // namespace

const std::vector<std::string>& verification_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const CheckInfo& c : kChecks) out.emplace_back(c.id);
    return out;
  }();
  return ids;
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t VerificationReport::passed_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; }));
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["parameters"] = {{"n_max", params.n_max},
                       {"q_max", params.q_max},
                       {"depth", params.depth},
                       {"sweep_len", params.sweep_len}};
  auto checks_json = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    nlohmann::ordered_json rec;
    rec["id"] = c.id;
    rec["claim"] = c.claim;
    rec["paper_anchor"] = c.paper_anchor;
    rec["status"] = c.passed ? "pass" : "fail";
    rec["details"] = c.details;
    checks_json.push_back(std::move(rec));
  }
  doc["checks"] = std::move(checks_json);
  auto bounds = nlohmann::ordered_json::array();
  for (const RankBoundEntry& e : rank_bounds)
    bounds.push_back({{"q", e.q}, {"index", e.index}, {"rank_bound", e.rank_bound}});
  doc["rank_bounds"] = std::move(bounds);
  doc["summary"] = {{"total", checks.size()},
                    {"passed", passed_count()},
                    {"failed", checks.size() - passed_count()}};
  return doc.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "verify-paper: n_max=" << params.n_max << " q_max=" << params.q_max
     << " depth=" << params.depth << " sweep_len=" << params.sweep_len << "\n";
  for (const CheckResult& c : checks)
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ": " << c.claim << "\n       "
       << c.details << "\n";
  os << passed_count() << "/" << checks.size() << " checks passed\n";
  return os.str();
}

VerificationReport run_verification(const VerifyParams& params) {
  if (params.n_max < 1 || params.q_max < 1 || params.depth < 1 || params.sweep_len < 1)
    throw ParameterError("verify-paper: all parameters must be >= 1");
  if (params.depth > kMaxBallDepth)
    throw ParameterError("verify-paper: depth " + std::to_string(params.depth) +
                         " exceeds the limit of " + std::to_string(kMaxBallDepth));

  VerificationReport report;
  report.params = params;

  // Index and rank bound share one pass over q; the bound check reads the
  // outcome recorded by the index check.
  Outcome bound_outcome{false, "not run"};
  auto run_rank_bounds = [&]() -> Outcome {
    std::vector<std::string> index_failures, bound_failures;
    for (std::int64_t q = 2; q <= params.q_max; ++q) {
      const std::int64_t index = stabilizer_index(q);
      const std::int64_t bound = intersection_rank_lower_bound(q);
      report.rank_bounds.push_back({q, index, bound});
      if (index < q) index_failures.push_back("q=" + std::to_string(q));
      if (bound != index + 1 || bound < q + 1) bound_failures.push_back("q=" + std::to_string(q));
    }
    const std::string range = params.q_max >= 2
                                  ? "q in [2, " + std::to_string(params.q_max) + "]"
                                  : std::string("no q in range");
    bound_outcome = {bound_failures.empty(),
                     bound_failures.empty() ? range : join_failures(bound_failures)};
    return {index_failures.empty(), index_failures.empty() ? range : join_failures(index_failures)};
  };

  const std::function<Outcome()> runners[] = {
      [&] { return check_freeness(params); },
      [&] { return check_powers(); },
      [&] { return check_witnesses(params); },
      [&] {
        return check_marked_points(params, [](std::int64_t n) {
          return act(reflection_word(), point_P(n).point) == point_P(1 - n).point;
        });
      },
      [&] {
        return check_marked_points(
            params, [](std::int64_t n) { return loop_check(loop_word_r(), point_P(n).point); });
      },
      [&] { return check_core_growth(params); },
      [&] { return check_abelianization(params); },
      run_rank_bounds,
      [&] { return bound_outcome; },
      [&] { return check_generator_count(params); },
      [&] { return check_membership(); },
      [&] { return check_explicit_element(params); },
  };
  static_assert(std::extent_v<decltype(runners)> == std::extent_v<decltype(kChecks)>);

  for (std::size_t i = 0; i < std::size(kChecks); ++i) {
    Outcome outcome{false, ""};
    try {
      outcome = runners[i]();
    } catch (const std::exception& ex) {
      outcome = {false, std::string("exception: ") + ex.what()};
    }
    report.checks.push_back(
        {kChecks[i].id, kChecks[i].claim, kChecks[i].anchor, outcome.passed, outcome.details});
  }
  return report;
}

}  // namespace howson
