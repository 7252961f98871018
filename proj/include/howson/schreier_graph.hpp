#pragma once

// Orbital Schreier graphs of the affine action: complete graphs over
// (Z/qZ)^2 and partial balls over Z^2.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "howson/linear.hpp"
#include "howson/word.hpp"

namespace howson {

using VertexId = std::uint32_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vertices are orbit points in discovery order; only positive-generator
/// edges p -> g.p are stored, inverse letters walk them backwards.
/// The action is a permutation, so every vertex has at most one outgoing
/// and one incoming edge per generator.
class OrbitalGraph {
 public:
  explicit OrbitalGraph(std::optional<std::int64_t> modulus = std::nullopt);

  /// Adds `p`, or returns the existing vertex for it.
  VertexId add_vertex(const Vec2& p);
  /// Idempotent; throws GraphError if (from, g) or (to, g^-1) is already
  /// bound to a different vertex.
  void add_edge(VertexId from, Generator g, VertexId to);
  void set_base(VertexId v);
  void set_complete(VertexId v, bool complete);

  std::size_t vertex_count() const { return points_.size(); }
  std::size_t edge_count() const;
  std::optional<std::int64_t> modulus() const { return modulus_; }
  VertexId base() const { return base_; }
  const Vec2& point(VertexId v) const { return points_.at(v); }
  std::optional<VertexId> find(const Vec2& p) const;

  std::optional<VertexId> out_edge(VertexId v, Generator g) const;
  std::optional<VertexId> in_edge(VertexId v, Generator g) const;
  /// Follows `l` from v: forward along g for a generator, backward for g^-1.
  std::optional<VertexId> step(VertexId v, Letter l) const;

  bool is_complete(VertexId v) const { return complete_.at(v) != 0; }
  bool fully_complete() const;

  friend bool operator==(const OrbitalGraph& a, const OrbitalGraph& b);

 private:
  static constexpr VertexId kNone = UINT32_MAX;
  static constexpr std::int64_t kDenseModulusLimit = 4096;
  void check_vertex(VertexId v) const;
  std::size_t dense_slot(const Vec2& p) const;

  std::optional<std::int64_t> modulus_;
  VertexId base_ = 0;
  std::vector<Vec2> points_;
  std::vector<std::array<VertexId, 2>> out_;
  std::vector<std::array<VertexId, 2>> in_;
  std::vector<std::uint8_t> complete_;
  // Residue pairs index a flat table for small moduli; everything else
  // goes through the hash map.
  std::vector<VertexId> dense_index_;
  std::unordered_map<Vec2, VertexId, Vec2Hash> index_;
};

/// Largest depth accepted by build_ball; vertex counts grow like 3^depth.
inline constexpr int kMaxBallDepth = 16;

/// Largest modulus accepted by build_mod_q.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 20;

/// Orbit of the origin in (Z/qZ)^2, breadth first with letter order
/// U, V, U^-1, V^-1. Every vertex is complete. Requires 2 <= q <= 2^20.
OrbitalGraph build_mod_q(std::int64_t q);

/// Points of Z^2 reached from the origin by words of length <= depth, with
/// every edge between explored points. A vertex is complete when all four
/// of its incident generator edges are present. Requires 0 <= depth <= 16.
OrbitalGraph build_ball(int depth);

/// Endpoint of the path labelled w starting at `start` (rightmost letter
/// first), or nullopt when the path leaves the explored region.
std::optional<VertexId> trace(const OrbitalGraph& g, const Word& w, VertexId start);

/// Membership of w in the stabilizer of the base point. Requires a fully
/// complete graph.
bool is_loop_at_base(const OrbitalGraph& g, const Word& w);

struct CoreReport {
  enum class Kind { exact, certified_lower_bound };
  Kind kind = Kind::exact;
  std::vector<VertexId> core_vertices;  // ascending
  std::optional<Word> witness;
};

/// Prunes vertices of undirected degree <= 1 until none remain. Each stored
/// edge contributes one to each endpoint; a self-loop contributes two.
/// Requires a fully complete graph.
CoreReport core_exact(const OrbitalGraph& g);

/// Vertices v whose witness path stays on complete vertices and closes up
/// at v. Each such vertex lies on a nontrivial reduced closed path, hence in
/// the core of the full graph. Requires a nonempty witness.
CoreReport certified_core(const OrbitalGraph& g, const Word& witness);

/// Schreier generators of the base-point stabilizer from a breadth-first
/// spanning tree: t_{p'}^-1 g t_p for every non-tree edge p -g-> p'.
/// Requires a fully complete graph.
std::vector<Word> spanning_tree_generators(const OrbitalGraph& g);

std::string export_json(const OrbitalGraph& g);
std::string export_dot(const OrbitalGraph& g);
/// Inverse of export_json. Throws GraphError on malformed documents.
OrbitalGraph import_json(const std::string& text);

}  // namespace howson
