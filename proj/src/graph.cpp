#include "lpa/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lpa {

VertexId Graph::Builder::add_vertex(std::string name, bool inf_emitter) {
  if (vertex_ids_.count(name) || edge_ids_.count(name))
    throw GraphError("duplicate identifier '" + name + "'");
  VertexId id{static_cast<std::uint32_t>(vertices_.size())};
  vertex_ids_.emplace(name, id);
  vertices_.push_back(Vertex{std::move(name), inf_emitter});
  return id;
}

EdgeId Graph::Builder::add_edge(std::string name, std::string_view source,
                                std::string_view range) {
  if (vertex_ids_.count(name) || edge_ids_.count(name))
    throw GraphError("duplicate identifier '" + name + "'");
  auto s = vertex_ids_.find(std::string(source));
  if (s == vertex_ids_.end())
    throw GraphError("edge '" + name + "': undeclared source vertex '" + std::string(source) + "'");
  auto r = vertex_ids_.find(std::string(range));
  if (r == vertex_ids_.end())
    throw GraphError("edge '" + name + "': undeclared range vertex '" + std::string(range) + "'");
  EdgeId id{static_cast<std::uint32_t>(edges_.size())};
  edge_ids_.emplace(name, id);
  edges_.push_back(Edge{std::move(name), s->second, r->second});
  return id;
}

Graph Graph::Builder::build() && {
  Graph g;
  g.out_.resize(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i)
    g.out_[index(edges_[i].source)].push_back(EdgeId{static_cast<std::uint32_t>(i)});
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].inf_emitter) {
      if (g.out_[i].empty())
        throw GraphError("vertex '" + vertices_[i].name +
                         "' is flagged !inf but declares no outgoing edge");
      g.has_inf_emitters_ = true;
    }
  }
  g.vertices_ = std::move(vertices_);
  g.edges_ = std::move(edges_);
  g.vertex_ids_ = std::move(vertex_ids_);
  g.edge_ids_ = std::move(edge_ids_);
  return g;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_ids_.find(std::string(name));
  if (it == vertex_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = edge_ids_.find(std::string(name));
  if (it == edge_ids_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size());
  for (std::uint32_t i = 0; i < vertices_.size(); ++i) out.push_back(VertexId{i});
  return out;
}

std::vector<EdgeId> Graph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(edges_.size());
  for (std::uint32_t i = 0; i < edges_.size(); ++i) out.push_back(EdgeId{i});
  return out;
}

Graph parse_graph(std::string_view text) {
  Graph::Builder b;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "vertex") {
        if (tok.size() == 2) {
          b.add_vertex(tok[1]);
        } else if (tok.size() == 3 && tok[2] == "!inf") {
          b.add_vertex(tok[1], true);
        } else {
          throw GraphError("expected 'vertex <id> [!inf]'");
        }
      } else if (tok[0] == "edge") {
        if (tok.size() != 4) throw GraphError("expected 'edge <id> <src> <dst>'");
        b.add_edge(tok[1], tok[2], tok[3]);
      } else {
        throw GraphError("unknown declaration '" + tok[0] + "'");
      }
    } catch (const GraphError &e) {
      throw GraphError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
    }
  }
  return std::move(b).build();
}

Graph load_graph(const std::string &path) {
  std::ifstream f(path);
  if (!f) throw GraphError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

std::string serialize_graph(const Graph &g) {
  std::string out;
  for (VertexId v : g.vertices()) {
    out += "vertex " + g.name(v);
    if (g.inf_emitter(v)) out += " !inf";
    out += '\n';
  }
  for (EdgeId e : g.edges())
    out += "edge " + g.name(e) + ' ' + g.name(g.source(e)) + ' ' + g.name(g.range(e)) + '\n';
  return out;
}

std::strong_ordering operator<=>(const Path &a, const Path &b) {
  if (auto c = a.edges.size() <=> b.edges.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.edges.size(); ++i)
    if (auto c = index(a.edges[i]) <=> index(b.edges[i]); c != 0) return c;
  return index(a.base) <=> index(b.base);
}

VertexId path_source(const Graph &g, const Path &p) {
  return p.trivial() ? p.base : g.source(p.edges.front());
}

VertexId path_range(const Graph &g, const Path &p) {
  return p.trivial() ? p.base : g.range(p.edges.back());
}

Path make_path(const Graph &g, std::vector<EdgeId> edges) {
  if (edges.empty()) throw std::invalid_argument("make_path: empty edge list needs a base vertex");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (g.range(edges[i]) != g.source(edges[i + 1]))
      throw std::invalid_argument("make_path: edges '" + g.name(edges[i]) + "' and '" +
                                  g.name(edges[i + 1]) + "' do not compose");
  VertexId base = g.source(edges.front());
  return Path{base, std::move(edges)};
}

Path concat(const Graph &g, const Path &a, const Path &b) {
  if (path_range(g, a) != path_source(g, b))
    throw std::invalid_argument("concat: range/source mismatch");
  Path out = a;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

bool is_prefix(const Path &prefix, const Path &p) {
  if (prefix.base != p.base || prefix.edges.size() > p.edges.size()) return false;
  return std::equal(prefix.edges.begin(), prefix.edges.end(), p.edges.begin());
}

std::string path_to_string(const Graph &g, const Path &p) {
  if (p.trivial()) return g.name(p.base);
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += '.';
    out += g.name(p.edges[i]);
  }
  return out;
}

} // namespace lpa
