#ifndef LPA_STRUCTURE_HPP
#define LPA_STRUCTURE_HPP

#include "lpa/graph.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace lpa {

using VertexSet = std::set<VertexId>;

struct VertexKinds {
  std::vector<VertexId> sinks;
  std::vector<VertexId> regular;
  std::vector<VertexId> inf_emitters;
};

VertexKinds vertex_kinds(const Graph &g);

/// u >= v: reflexive-transitive closure of the declared edge relation.
bool reaches(const Graph &g, VertexId u, VertexId v);
/// T(X): everything reachable from X.
VertexSet tree(const Graph &g, const VertexSet &xs);
VertexSet tree(const Graph &g, VertexId u);

struct Closure {
  VertexSet vertices;
  /// level[v] = n for the first n with v in Lambda^n(X); absent for vertices
  /// outside the closure.
  std::vector<std::optional<std::size_t>> level;
  std::size_t num_levels = 0;
};

/// Hereditary saturated closure of X via the Lambda^n iteration.
Closure hs_closure(const Graph &g, const VertexSet &xs);

bool is_hereditary(const Graph &g, const VertexSet &h);
bool is_saturated(const Graph &g, const VertexSet &h);

/// A simple cycle, rotated to start at its smallest vertex.
struct Cycle {
  Path rep;
  VertexSet vertex_set;

  VertexId base() const { return rep.base; }
  std::size_t length() const { return rep.length(); }
  bool operator==(const Cycle &o) const { return rep == o.rep; }
};

/// Canonicalizes a closed simple edge sequence by rotation.
Cycle make_cycle(const Graph &g, std::vector<EdgeId> closed_edges);

/// All simple cycles up to rotation, ordered by (length, edge sequence).
std::vector<Cycle> cycles(const Graph &g);

struct Exit {
  VertexId vertex;
  /// Declared exit edge; empty when the exit is an undeclared edge of an
  /// infinite emitter lying on the cycle.
  std::optional<EdgeId> edge;
  bool operator==(const Exit &) const = default;
};

std::vector<Exit> cycle_exits(const Graph &g, const Cycle &c);

bool condition_L(const Graph &g);

struct Mt3Result {
  bool holds = true;
  /// First pair (in vertex order) with no common descendant.
  std::optional<std::pair<VertexId, VertexId>> witness;
};

Mt3Result mt3(const Graph &g);

struct CometResult {
  bool is_comet = false;
  std::optional<Cycle> cycle;
  std::string reason;
};

/// Row-finite only. On a finite graph a unique cycle that every vertex
/// reaches already forces every infinite path to end in it.
CometResult is_comet(const Graph &g);

bool is_graded_simple(const Graph &g);
bool is_simple(const Graph &g);

/// Brute-force enumeration of hereditary saturated subsets (<= 20 vertices).
std::vector<VertexSet> hs_subsets(const Graph &g);

/// Pi_{v,H}: paths from v into H whose last edge starts outside H.
std::vector<Path> paths_to_H(const Graph &g, VertexId v, const VertexSet &h);

struct GammaSets {
  std::vector<EdgeId> outside; ///< edges from v with range outside H
  std::vector<EdgeId> inside;  ///< edges from v with range in H
};

GammaSets gamma_sets(const Graph &g, VertexId v, const VertexSet &h);

/// Longest path from v that meets cycle vertices at most at its end.
/// Zero for vertices on cycles.
std::vector<std::size_t> approach_depth(const Graph &g);

std::string vertex_set_to_string(const Graph &g, const VertexSet &s);

} // namespace lpa

#endif // LPA_STRUCTURE_HPP
