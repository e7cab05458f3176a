#ifndef LPA_GRAPH_HPP
#define LPA_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lpa {

enum class VertexId : std::uint32_t {};
enum class EdgeId : std::uint32_t {};

constexpr std::uint32_t index(VertexId v) { return static_cast<std::uint32_t>(v); }
constexpr std::uint32_t index(EdgeId e) { return static_cast<std::uint32_t>(e); }

/// Raised for malformed graph documents. Carries the 1-based line number
/// (0 when the problem is not tied to a line).
class GraphError : public std::runtime_error {
public:
  GraphError(const std::string &what, std::size_t line = 0)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Finite directed multigraph with optional infinite-emitter flags.
///
/// Vertices and edges are numbered in declaration order. A flagged vertex
/// stands for a vertex with infinitely many outgoing edges whose ranges all
/// occur among the ranges of its declared edges; algorithms only ever walk
/// the declared edges. Graph values are immutable once built.
class Graph {
public:
  struct Vertex {
    std::string name;
    bool inf_emitter = false;
  };
  struct Edge {
    std::string name;
    VertexId source;
    VertexId range;
  };

  class Builder {
  public:
    VertexId add_vertex(std::string name, bool inf_emitter = false);
    EdgeId add_edge(std::string name, std::string_view source, std::string_view range);
    /// Validates the flag invariant and freezes the graph.
    Graph build() &&;

  private:
    friend class Graph;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, VertexId> vertex_ids_;
    std::unordered_map<std::string, EdgeId> edge_ids_;
  };

  Graph() = default;

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const Vertex &vertex(VertexId v) const { return vertices_[index(v)]; }
  const Edge &edge(EdgeId e) const { return edges_[index(e)]; }
  const std::string &name(VertexId v) const { return vertex(v).name; }
  const std::string &name(EdgeId e) const { return edge(e).name; }
  VertexId source(EdgeId e) const { return edge(e).source; }
  VertexId range(EdgeId e) const { return edge(e).range; }
  bool inf_emitter(VertexId v) const { return vertex(v).inf_emitter; }

  /// Declared outgoing edges, in declaration order.
  const std::vector<EdgeId> &out_edges(VertexId v) const { return out_[index(v)]; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  bool row_finite() const { return !has_inf_emitters_; }
  bool is_sink(VertexId v) const { return out_edges(v).empty() && !inf_emitter(v); }
  bool is_regular(VertexId v) const { return !out_edges(v).empty() && !inf_emitter(v); }

  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;

private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::unordered_map<std::string, VertexId> vertex_ids_;
  std::unordered_map<std::string, EdgeId> edge_ids_;
  bool has_inf_emitters_ = false;
};

/// Parses the line-oriented graph DSL:
///   vertex <id> [!inf]
///   edge <id> <src> <dst>
///   # comment
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string &path);

/// Canonical text form: declarations in stored order.
std::string serialize_graph(const Graph &g);

/// A finite path. Trivial paths carry only their base vertex; for nontrivial
/// paths `base` equals the source of the first edge.
struct Path {
  VertexId base{};
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool trivial() const { return edges.empty(); }

  static Path vertex(VertexId v) { return Path{v, {}}; }

  bool operator==(const Path &) const = default;
};

/// Total order: shorter first, then lexicographic on edge ids, then base.
std::strong_ordering operator<=>(const Path &a, const Path &b);

VertexId path_source(const Graph &g, const Path &p);
VertexId path_range(const Graph &g, const Path &p);
/// Builds a path from edges, checking consecutiveness.
Path make_path(const Graph &g, std::vector<EdgeId> edges);
/// Concatenation; requires r(a) == s(b).
Path concat(const Graph &g, const Path &a, const Path &b);
bool is_prefix(const Path &prefix, const Path &p);
std::string path_to_string(const Graph &g, const Path &p);

} // namespace lpa

#endif // LPA_GRAPH_HPP
