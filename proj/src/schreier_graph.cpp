#include "howson/schreier_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "howson/affine_action.hpp"

namespace howson {

using ordered_json = nlohmann::ordered_json;

namespace {

std::size_t gen_index(Generator g) { return static_cast<std::size_t>(g); }

void require_complete(const OrbitalGraph& g, const char* who) {
  if (!g.fully_complete())
    throw GraphError(std::string(who) + ": graph is only partially explored");
}

// Breadth-first discovery of the ball around the origin in Z^2; vertices at
// distance `max_depth` are recorded but not expanded. Edges are added
// afterwards between every pair of explored points related by a generator.
OrbitalGraph explore_ball(int max_depth) {
  OrbitalGraph g;
  g.set_base(g.add_vertex(Vec2(0, 0)));
  std::vector<int> distance{0};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (distance[v] >= max_depth) continue;
    const Vec2 p = g.point(v);
    for (Letter l : kLetters) {
      const std::size_t before = g.vertex_count();
      g.add_vertex(act_letter(l, p));
      if (g.vertex_count() > before) distance.push_back(distance[v] + 1);
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (Generator gen : kGenerators) {
      if (auto target = g.find(act_letter(Letter(gen), g.point(v))))
        g.add_edge(v, gen, *target);
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    bool complete = true;
    for (Generator gen : kGenerators)
      complete = complete && g.out_edge(v, gen) && g.in_edge(v, gen);
    g.set_complete(v, complete);
  }
  return g;
}

ordered_json int_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return ordered_json(z.get_si());
  return ordered_json(z.get_str());
}

BigInt int_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw GraphError("import_json: coordinate is neither an integer nor a string");
}

}  // namespace

OrbitalGraph::OrbitalGraph(std::optional<std::int64_t> modulus) : modulus_(modulus) {
  if (modulus_ && *modulus_ < 2) throw GraphError("OrbitalGraph: modulus must be >= 2");
  if (modulus_ && *modulus_ <= kDenseModulusLimit)
    dense_index_.assign(static_cast<std::size_t>(*modulus_ * *modulus_), kNone);
}

std::size_t OrbitalGraph::dense_slot(const Vec2& p) const {
  return static_cast<std::size_t>(p.x().get_ui() * static_cast<unsigned long>(*modulus_) +
                                  p.y().get_ui());
}

VertexId OrbitalGraph::add_vertex(const Vec2& p) {
  if (p.modulus() != modulus_) throw GraphError("add_vertex: point modulus does not match graph");
  const auto next = static_cast<VertexId>(points_.size());
  if (!dense_index_.empty()) {
    VertexId& slot = dense_index_[dense_slot(p)];
    if (slot != kNone) return slot;
    slot = next;
  } else {
    auto [it, inserted] = index_.try_emplace(p, next);
    if (!inserted) return it->second;
  }
  points_.push_back(p);
  out_.push_back({kNone, kNone});
  in_.push_back({kNone, kNone});
  complete_.push_back(0);
  return next;
}

void OrbitalGraph::check_vertex(VertexId v) const {
  if (v >= points_.size()) throw GraphError("vertex id out of range");
}

void OrbitalGraph::add_edge(VertexId from, Generator g, VertexId to) {
  check_vertex(from);
  check_vertex(to);
  VertexId& out = out_[from][gen_index(g)];
  VertexId& in = in_[to][gen_index(g)];
  if ((out != kNone && out != to) || (in != kNone && in != from))
    throw GraphError("add_edge: conflicting edge for generator");
  out = to;
  in = from;
}

void OrbitalGraph::set_base(VertexId v) {
  check_vertex(v);
  base_ = v;
}

void OrbitalGraph::set_complete(VertexId v, bool complete) {
  check_vertex(v);
  complete_[v] = complete ? 1 : 0;
}

std::size_t OrbitalGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& e : out_) n += (e[0] != kNone) + (e[1] != kNone);
  return n;
}

std::optional<VertexId> OrbitalGraph::find(const Vec2& p) const {
  if (p.modulus() != modulus_) return std::nullopt;
  if (!dense_index_.empty()) {
    const VertexId v = dense_index_[dense_slot(p)];
    if (v == kNone) return std::nullopt;
    return v;
  }
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> OrbitalGraph::out_edge(VertexId v, Generator g) const {
  const VertexId t = out_.at(v)[gen_index(g)];
  if (t == kNone) return std::nullopt;
  return t;
}

std::optional<VertexId> OrbitalGraph::in_edge(VertexId v, Generator g) const {
  const VertexId t = in_.at(v)[gen_index(g)];
  if (t == kNone) return std::nullopt;
  return t;
}

std::optional<VertexId> OrbitalGraph::step(VertexId v, Letter l) const {
  return l.inverted() ? in_edge(v, l.generator()) : out_edge(v, l.generator());
}

bool OrbitalGraph::fully_complete() const {
  return std::all_of(complete_.begin(), complete_.end(), [](auto c) { return c != 0; });
}

bool operator==(const OrbitalGraph& a, const OrbitalGraph& b) {
  return a.modulus_ == b.modulus_ && a.base_ == b.base_ && a.points_ == b.points_ &&
         a.out_ == b.out_ && a.in_ == b.in_ && a.complete_ == b.complete_;
}

OrbitalGraph build_mod_q(std::int64_t q) {
  if (q < 2) throw std::invalid_argument("build_mod_q: q must be >= 2");
  if (q > kMaxModulus)
    throw std::invalid_argument("build_mod_q: q = " + std::to_string(q) + " exceeds the limit of " +
                                std::to_string(kMaxModulus));
  // Residues are below q, so every step is exact in 64-bit arithmetic.
  using Residue = std::pair<std::int64_t, std::int64_t>;
  auto step = [q](Letter l, Residue p) -> Residue {
    auto [x, y] = p;
    switch (l.rank()) {
      case 0: return {(x + 2 * y) % q, (y + 1) % q};
      case 1: return {(x + 1) % q, (2 * x + y) % q};
      case 2: return {((x - 2 * y + 2) % q + q) % q, (y - 1 + q) % q};
      default: return {(x - 1 + q) % q, ((y - 2 * x + 2) % q + q) % q};
    }
  };
  std::unordered_map<std::uint64_t, VertexId> index;
  auto key = [q](Residue p) { return static_cast<std::uint64_t>(p.first * q + p.second); };

  std::vector<Residue> order{{0, 0}};
  index.emplace(key(order[0]), 0);
  std::vector<std::array<VertexId, 2>> out;
  for (std::size_t v = 0; v < order.size(); ++v) {
    std::array<VertexId, 2> targets{};
    for (Letter l : kLetters) {
      const Residue next = step(l, order[v]);
      auto [it, inserted] = index.try_emplace(key(next), static_cast<VertexId>(order.size()));
      if (inserted) order.push_back(next);
      if (!l.inverted()) targets[static_cast<std::size_t>(l.generator())] = it->second;
    }
    out.push_back(targets);
  }

  OrbitalGraph g(q);
  for (const auto& [x, y] : order) g.add_vertex(Vec2::residue(BigInt(x), BigInt(y), q));
  for (VertexId v = 0; v < order.size(); ++v) {
    for (Generator gen : kGenerators) g.add_edge(v, gen, out[v][static_cast<std::size_t>(gen)]);
    g.set_complete(v, true);
  }
  g.set_base(0);
  return g;
}

OrbitalGraph build_ball(int depth) {
  if (depth < 0) throw std::invalid_argument("build_ball: depth must be >= 0");
  if (depth > kMaxBallDepth)
    throw std::invalid_argument("build_ball: depth " + std::to_string(depth) +
                                " exceeds the limit of " + std::to_string(kMaxBallDepth));
  return explore_ball(depth);
}

std::optional<VertexId> trace(const OrbitalGraph& g, const Word& w, VertexId start) {
  if (start >= g.vertex_count()) throw GraphError("trace: start vertex out of range");
  const auto ls = w.letters();
  VertexId v = start;
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    auto next = g.step(v, *it);
    if (!next) return std::nullopt;
    v = *next;
  }
  return v;
}

bool is_loop_at_base(const OrbitalGraph& g, const Word& w) {
  require_complete(g, "is_loop_at_base");
  return trace(g, w, g.base()) == g.base();
}

CoreReport core_exact(const OrbitalGraph& g) {
  require_complete(g, "core_exact");
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> degree(n, 0);
  for (VertexId v = 0; v < n; ++v)
    for (Generator gen : kGenerators)
      if (auto t = g.out_edge(v, gen)) {
        ++degree[v];
        ++degree[*t];
      }
  std::vector<std::uint8_t> removed(n, 0);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v)
    if (degree[v] <= 1) queue.push_back(v);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (removed[v]) continue;
    removed[v] = 1;
    for (Letter l : kLetters) {
      auto t = g.step(v, l);
      if (!t || removed[*t] || *t == v) continue;
      if (--degree[*t] <= 1) queue.push_back(*t);
    }
  }
  CoreReport report{CoreReport::Kind::exact, {}, std::nullopt};
  for (VertexId v = 0; v < n; ++v)
    if (!removed[v]) report.core_vertices.push_back(v);
  return report;
}

CoreReport certified_core(const OrbitalGraph& g, const Word& witness) {
  if (witness.empty()) throw std::invalid_argument("certified_core: witness must be nonempty");
  CoreReport report{CoreReport::Kind::certified_lower_bound, {}, witness};
  const auto ls = witness.letters();
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    VertexId v = start;
    bool inside = g.is_complete(v);
    for (auto it = ls.rbegin(); inside && it != ls.rend(); ++it) {
      auto next = g.step(v, *it);
      inside = next && g.is_complete(*next);
      if (inside) v = *next;
    }
    if (inside && v == start) report.core_vertices.push_back(start);
  }
  return report;
}

std::vector<Word> spanning_tree_generators(const OrbitalGraph& g) {
  require_complete(g, "spanning_tree_generators");
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<Word>> tree_word(n);
  std::vector<std::array<bool, 2>> tree_edge(n, {false, false});
  std::deque<VertexId> queue{g.base()};
  tree_word[g.base()] = Word{};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (Letter l : kLetters) {
      const VertexId t = *g.step(v, l);
      if (tree_word[t]) continue;
      tree_word[t] = Word{l} * *tree_word[v];
      // The positive edge is v -g-> t for a generator, t -g-> v for an inverse.
      tree_edge[l.inverted() ? t : v][gen_index(l.generator())] = true;
      queue.push_back(t);
    }
  }
  std::vector<Word> generators;
  for (VertexId v = 0; v < n; ++v) {
    if (!tree_word[v]) throw GraphError("spanning_tree_generators: graph is disconnected");
    for (Generator gen : kGenerators) {
      if (tree_edge[v][gen_index(gen)]) continue;
      const VertexId t = *g.out_edge(v, gen);
      if (!tree_word[t]) throw GraphError("spanning_tree_generators: graph is disconnected");
      generators.push_back(tree_word[t]->inverse() * Word{Letter(gen)} * *tree_word[v]);
    }
  }
  return generators;
}

std::string export_json(const OrbitalGraph& g) {
  ordered_json doc;
  doc["modulus"] = g.modulus() ? ordered_json(*g.modulus()) : ordered_json(nullptr);
  doc["base"] = g.base();
  ordered_json vertices = ordered_json::array();
  ordered_json edges = ordered_json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    ordered_json rec;
    rec["id"] = v;
    rec["x"] = int_to_json(g.point(v).x());
    rec["y"] = int_to_json(g.point(v).y());
    rec["complete"] = g.is_complete(v);
    vertices.push_back(std::move(rec));
    for (Generator gen : kGenerators) {
      if (auto t = g.out_edge(v, gen)) {
        ordered_json e;
        e["from"] = v;
        e["to"] = *t;
        e["gen"] = std::string(1, Letter(gen).symbol());
        edges.push_back(std::move(e));
      }
    }
  }
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string export_dot(const OrbitalGraph& g) {
  std::ostringstream os;
  os << "digraph orbital {\n";
  os << "  node [shape=circle];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Vec2& p = g.point(v);
    os << "  v" << v << " [label=\"(" << p.x() << "," << p.y() << ")\"";
    if (v == g.base()) os << ", shape=doublecircle";
    if (!g.is_complete(v)) os << ", style=dashed";
    os << "];\n";
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (Generator gen : kGenerators) {
      if (auto t = g.out_edge(v, gen)) {
        os << "  v" << v << " -> v" << *t << " [label=\""
           << Letter(gen).symbol() << "\", color="
           << (gen == Generator::U ? "blue" : "red") << "];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

OrbitalGraph import_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
    std::optional<std::int64_t> modulus;
    if (!doc.at("modulus").is_null()) modulus = doc.at("modulus").get<std::int64_t>();
    OrbitalGraph g(modulus);
    for (const auto& rec : doc.at("vertices")) {
      BigInt x = int_from_json(rec.at("x"));
      BigInt y = int_from_json(rec.at("y"));
      const Vec2 p = modulus ? Vec2::residue(x, y, *modulus) : Vec2(x, y);
      const VertexId id = g.add_vertex(p);
      if (id != rec.at("id").get<VertexId>() || g.vertex_count() != id + 1u)
        throw GraphError("import_json: vertex ids must be 0, 1, 2, ... in order");
      g.set_complete(id, rec.at("complete").get<bool>());
    }
    for (const auto& e : doc.at("edges")) {
      const std::string gen = e.at("gen").get<std::string>();
      if (gen != "U" && gen != "V") throw GraphError("import_json: unknown generator " + gen);
      g.add_edge(e.at("from").get<VertexId>(), gen == "U" ? Generator::U : Generator::V,
                 e.at("to").get<VertexId>());
    }
    g.set_base(doc.at("base").get<VertexId>());
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw GraphError(std::string("import_json: ") + ex.what());
  }
}

}  // namespace howson
