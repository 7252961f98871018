// howson: command-line front end for the orbit, Schreier graph and rank
// computations, plus the `verify-paper` scenario runner.
//
// Exit status: 0 on success, 1 when a verification check fails, 2 on usage
// or parameter errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "howson/affine_action.hpp"
#include "howson/linear.hpp"
#include "howson/rank_lab.hpp"
#include "howson/schreier_graph.hpp"
#include "howson/verify.hpp"
#include "howson/word.hpp"

namespace {

using howson::BigInt;
using json = nlohmann::ordered_json;

constexpr const char* kOutputDirEnv = "HOWSON_OUTPUT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json big_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

json vec_to_json(const howson::Vec2& v) { return json::array({big_to_json(v.x()), big_to_json(v.y())}); }

std::filesystem::path resolve_output(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) p = std::filesystem::path(dir) / p;
  }
  return p;
}

// Writes to `out` when given, stdout otherwise.
void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  const auto path = resolve_output(out);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  file << text;
  if (!file.flush()) throw std::runtime_error("write failed for " + path.string());
}

howson::Word parse_word(const std::string& text) {
  try {
    return howson::Word::parse(text);
  } catch (const howson::ParseError& e) {
    throw UsageError(std::string("bad word: ") + e.what());
  }
}

std::string show_word(const howson::Word& w) { return w.empty() ? "<identity>" : w.to_string(); }

std::string core_kind(howson::CoreReport::Kind k) {
  return k == howson::CoreReport::Kind::exact ? "exact" : "certified-lower-bound";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schreier graphs, orbits and ranks for the affine action of F_2 on Z^2"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out;

  // verify-paper
  howson::VerifyParams vparams;
  auto* verify = app.add_subcommand("verify-paper", "re-derive every checkable claim");
  verify->add_option("--n-max", vparams.n_max, "marked points P_n with |n| <= n-max")->capture_default_str();
  verify->add_option("--q-max", vparams.q_max, "moduli q in [2, q-max]")->capture_default_str();
  verify->add_option("--depth", vparams.depth, "largest ball depth for core evidence")->capture_default_str();
  verify->add_option("--sweep-len", vparams.sweep_len, "word length for the freeness sweep")->capture_default_str();

  // orbit
  std::int64_t orbit_n = 0;
  auto* orbit = app.add_subcommand("orbit", "witness word sending (0,0) to P_n");
  orbit->add_option("--n", orbit_n, "index of the marked point")->required();

  // graph
  std::optional<std::int64_t> graph_q;
  std::optional<int> graph_depth;
  auto* graph = app.add_subcommand("graph", "export an orbital Schreier graph");
  auto* gq = graph->add_option("--q", graph_q, "complete graph over (Z/qZ)^2");
  auto* gd = graph->add_option("--depth", graph_depth, "ball of the given depth in Z^2");
  gq->excludes(gd);

  // core
  std::optional<std::int64_t> core_q;
  std::optional<int> core_depth;
  std::string core_witness = "uVuV";
  auto* core = app.add_subcommand("core", "exact core (mod q) or certified core vertices (ball)");
  auto* cq = core->add_option("--q", core_q, "modulus");
  auto* cd = core->add_option("--depth", core_depth, "ball depth");
  core->add_option("--witness", core_witness, "loop word certifying core vertices")->capture_default_str();
  cq->excludes(cd);

  // rank / abelianization
  std::int64_t rank_q = 0;
  auto* rank = app.add_subcommand("rank", "index of N_q, its rank and the intersection bound");
  rank->add_option("--q", rank_q, "modulus")->required();
  std::int64_t ab_q = 0;
  auto* abel = app.add_subcommand("abelianization", "abelianization of H_q");
  abel->add_option("--q", ab_q, "modulus")->required();

  // member
  std::string member_word;
  std::optional<std::int64_t> member_q;
  auto* member = app.add_subcommand("member", "cocycle membership in N (or N_q)");
  member->add_option("--word", member_word, "word over U, V, u, v")->required();
  member->add_option("--q", member_q, "modulus; omit for N itself");

  // snf
  std::string snf_matrix;
  auto* snf = app.add_subcommand("snf", "Smith normal form invariant factors");
  snf->add_option("--matrix", snf_matrix, "rows separated by ';', entries by spaces or commas")->required();

  for (auto* sub : {verify, orbit, core, rank, abel, member, snf}) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--out", out, "output file (relative paths resolve against $HOWSON_OUTPUT_DIR)");
  }
  graph->add_option("--format", format, "output format")->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--out", out, "output file (relative paths resolve against $HOWSON_OUTPUT_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "howson: error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*verify) {
      const howson::VerificationReport report = howson::run_verification(vparams);
      emit(format == "json" ? report.to_json() : report.to_text(), out);
      return report.all_passed() ? 0 : 1;
    }

    if (*orbit) {
      const howson::WitnessSchedule s = howson::witness_word(orbit_n);
      const howson::Vec2 target = howson::point_P(orbit_n).point;
      const bool ok = howson::act(s.word, howson::Vec2(0, 0)) == target;
      if (format == "json") {
        json doc{{"n", orbit_n},
                 {"point", vec_to_json(target)},
                 {"word", s.word.to_string()},
                 {"length", s.word.size()},
                 {"verified", ok}};
        emit(doc.dump(2) + "\n", out);
      } else {
        emit("P_" + std::to_string(orbit_n) + " = " + target.to_string() + "\nword: " +
                 show_word(s.word) + "\nlength: " + std::to_string(s.word.size()) +
                 "\nverified: " + (ok ? "true" : "false") + "\n",
             out);
      }
      return ok ? 0 : 1;
    }

    if (*graph) {
      if (!graph_q && !graph_depth) throw UsageError("graph: one of --q or --depth is required");
      const howson::OrbitalGraph g =
          graph_q ? howson::build_mod_q(*graph_q) : howson::build_ball(*graph_depth);
      emit(format == "dot" ? howson::export_dot(g) : howson::export_json(g), out);
      return 0;
    }

    if (*core) {
      if (!core_q && !core_depth) throw UsageError("core: one of --q or --depth is required");
      const howson::Word witness = parse_word(core_witness);
      const howson::OrbitalGraph g =
          core_q ? howson::build_mod_q(*core_q) : howson::build_ball(*core_depth);
      const howson::CoreReport report =
          core_q ? howson::core_exact(g) : howson::certified_core(g, witness);
      if (format == "json") {
        json verts = json::array();
        for (auto v : report.core_vertices)
          verts.push_back({{"id", v}, {"point", vec_to_json(g.point(v))}});
        json doc{{"kind", core_kind(report.kind)},
                 {"graph_vertices", g.vertex_count()},
                 {"core_size", report.core_vertices.size()},
                 {"witness", report.witness ? json(report.witness->to_string()) : json(nullptr)},
                 {"core_vertices", std::move(verts)}};
        emit(doc.dump(2) + "\n", out);
      } else {
        std::string text = "kind: " + core_kind(report.kind) + "\ngraph vertices: " +
                           std::to_string(g.vertex_count()) + "\ncore vertices: " +
                           std::to_string(report.core_vertices.size()) + "\n";
        if (report.witness) text += "witness: " + report.witness->to_string() + "\n";
        emit(text, out);
      }
      return 0;
    }

    if (*rank) {
      const std::int64_t index = howson::stabilizer_index(rank_q);
      const std::int64_t ns_rank = howson::nielsen_schreier_rank(index, 2);
      const std::int64_t bound = howson::intersection_rank_lower_bound(rank_q);
      if (format == "json") {
        json doc{{"q", rank_q}, {"index", index}, {"rank_N_q", ns_rank},
                 {"intersection_rank_lower_bound", bound}, {"at_least_q_plus_1", bound >= rank_q + 1}};
        emit(doc.dump(2) + "\n", out);
      } else {
        emit("q: " + std::to_string(rank_q) + "\nindex [F:N_q]: " + std::to_string(index) +
                 "\nrank(N_q) = index + 1: " + std::to_string(ns_rank) +
                 "\nrank(H_q and K_q intersection) >= " + std::to_string(bound) + " >= " +
                 std::to_string(rank_q + 1) + "\n",
             out);
      }
      return 0;
    }

    if (*abel) {
      const howson::AbelianGroupDescriptor d = howson::abelianization_Hq(ab_q);
      if (format == "json") {
        json torsion = json::array();
        for (const auto& t : d.torsion) torsion.push_back(big_to_json(t));
        json doc{{"q", ab_q}, {"free_rank", d.free_rank}, {"torsion", std::move(torsion)},
                 {"min_generators", d.min_generators()}};
        emit(doc.dump(2) + "\n", out);
      } else {
        emit("(H_" + std::to_string(ab_q) + ")_ab = " + d.to_string() +
                 "\nminimum generators: " + std::to_string(d.min_generators()) + "\n",
             out);
      }
      return 0;
    }

    if (*member) {
      const howson::Word w = parse_word(member_word);
      const bool in = howson::membership(w, member_q);
      const howson::Vec2 c = howson::cocycle(w);
      if (format == "json") {
        json doc{{"word", w.to_string()},
                 {"q", member_q ? json(*member_q) : json(nullptr)},
                 {"cocycle", vec_to_json(c)},
                 {"member", in}};
        emit(doc.dump(2) + "\n", out);
      } else {
        emit(std::string(in ? "true" : "false") + "\n", out);
      }
      return 0;
    }

    if (*snf) {
      howson::IntegerMatrix m(1, 1);
      try {
        m = howson::IntegerMatrix::parse(snf_matrix);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto factors = howson::smith_normal_form(m);
      if (format == "json") {
        json arr = json::array();
        for (const auto& f : factors) arr.push_back(big_to_json(f));
        emit(json{{"invariant_factors", std::move(arr)}}.dump(2) + "\n", out);
      } else {
        std::string text;
        for (std::size_t i = 0; i < factors.size(); ++i) text += (i ? " " : "") + factors[i].get_str();
        emit(text + "\n", out);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "howson: error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
