#include "lpa/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace lpa {

VertexKinds vertex_kinds(const Graph &g) {
  VertexKinds k;
  for (VertexId v : g.vertices()) {
    if (g.inf_emitter(v))
      k.inf_emitters.push_back(v);
    else if (g.out_edges(v).empty())
      k.sinks.push_back(v);
    else
      k.regular.push_back(v);
  }
  return k;
}

VertexSet tree(const Graph &g, const VertexSet &xs) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::deque<VertexId> queue;
  for (VertexId x : xs) {
    if (!seen[index(x)]) {
      seen[index(x)] = 1;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.out_edges(v)) {
      VertexId w = g.range(e);
      if (!seen[index(w)]) {
        seen[index(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  VertexSet out;
  for (VertexId v : g.vertices())
    if (seen[index(v)]) out.insert(v);
  return out;
}

VertexSet tree(const Graph &g, VertexId u) { return tree(g, VertexSet{u}); }

bool reaches(const Graph &g, VertexId u, VertexId v) { return tree(g, u).count(v) > 0; }

Closure hs_closure(const Graph &g, const VertexSet &xs) {
  Closure c;
  c.level.assign(g.num_vertices(), std::nullopt);
  c.vertices = tree(g, xs);
  if (c.vertices.empty()) return c;
  for (VertexId v : c.vertices) c.level[index(v)] = 0;
  c.num_levels = 1;
  for (std::size_t n = 1;; ++n) {
    std::vector<VertexId> added;
    for (VertexId v : g.vertices()) {
      if (c.vertices.count(v) || !g.is_regular(v)) continue;
      const auto &out = g.out_edges(v);
      bool feeds_only = std::all_of(out.begin(), out.end(),
                                    [&](EdgeId e) { return c.vertices.count(g.range(e)) > 0; });
      if (feeds_only) added.push_back(v);
    }
    if (added.empty()) break;
    for (VertexId v : added) {
      c.vertices.insert(v);
      c.level[index(v)] = n;
    }
    c.num_levels = n + 1;
  }
  return c;
}

bool is_hereditary(const Graph &g, const VertexSet &h) {
  for (VertexId v : h)
    for (EdgeId e : g.out_edges(v))
      if (!h.count(g.range(e))) return false;
  return true;
}

bool is_saturated(const Graph &g, const VertexSet &h) {
  for (VertexId v : g.vertices()) {
    if (h.count(v) || !g.is_regular(v)) continue;
    const auto &out = g.out_edges(v);
    if (std::all_of(out.begin(), out.end(), [&](EdgeId e) { return h.count(g.range(e)) > 0; }))
      return false;
  }
  return true;
}

Cycle make_cycle(const Graph &g, std::vector<EdgeId> closed) {
  if (closed.empty()) throw std::invalid_argument("cycle must be nonempty");
  Path p = make_path(g, closed);
  if (path_source(g, p) != path_range(g, p)) throw std::invalid_argument("edge sequence is not closed");
  VertexSet sources;
  for (EdgeId e : closed)
    if (!sources.insert(g.source(e)).second)
      throw std::invalid_argument("edge sequence repeats a source vertex");
  auto pos = std::min_element(closed.begin(), closed.end(), [&](EdgeId a, EdgeId b) {
    return index(g.source(a)) < index(g.source(b));
  });
  std::rotate(closed.begin(), pos, closed.end());
  return Cycle{make_path(g, std::move(closed)), std::move(sources)};
}

std::vector<Cycle> cycles(const Graph &g) {
  std::vector<Cycle> out;
  std::vector<char> on_path(g.num_vertices(), 0);
  std::vector<EdgeId> stack;
  for (VertexId start : g.vertices()) {
    std::function<void(VertexId)> dfs = [&](VertexId v) {
      for (EdgeId e : g.out_edges(v)) {
        VertexId w = g.range(e);
        if (w == start) {
          stack.push_back(e);
          out.push_back(Cycle{make_path(g, stack), {}});
          stack.pop_back();
        } else if (index(w) > index(start) && !on_path[index(w)]) {
          on_path[index(w)] = 1;
          stack.push_back(e);
          dfs(w);
          stack.pop_back();
          on_path[index(w)] = 0;
        }
      }
    };
    on_path[index(start)] = 1;
    dfs(start);
    on_path[index(start)] = 0;
  }
  for (Cycle &c : out)
    for (EdgeId e : c.rep.edges) c.vertex_set.insert(g.source(e));
  std::sort(out.begin(), out.end(), [](const Cycle &a, const Cycle &b) { return a.rep < b.rep; });
  return out;
}

std::vector<Exit> cycle_exits(const Graph &g, const Cycle &c) {
  std::vector<Exit> out;
  for (EdgeId ce : c.rep.edges) {
    VertexId v = g.source(ce);
    bool declared = false;
    for (EdgeId f : g.out_edges(v)) {
      if (f != ce) {
        out.push_back(Exit{v, f});
        declared = true;
      }
    }
    if (!declared && g.inf_emitter(v)) out.push_back(Exit{v, std::nullopt});
  }
  return out;
}

bool condition_L(const Graph &g) {
  for (const Cycle &c : cycles(g))
    if (cycle_exits(g, c).empty()) return false;
  return true;
}

Mt3Result mt3(const Graph &g) {
  std::vector<VertexSet> trees;
  trees.reserve(g.num_vertices());
  for (VertexId v : g.vertices()) trees.push_back(tree(g, v));
  for (VertexId v : g.vertices()) {
    for (VertexId w : g.vertices()) {
      if (index(w) <= index(v)) continue;
      const auto &a = trees[index(v)];
      const auto &b = trees[index(w)];
      bool common = std::any_of(a.begin(), a.end(), [&](VertexId x) { return b.count(x) > 0; });
      if (!common) return Mt3Result{false, std::make_pair(v, w)};
    }
  }
  return Mt3Result{};
}

CometResult is_comet(const Graph &g) {
  if (!g.row_finite()) throw std::invalid_argument("comet test requires row-finite graph");
  auto cs = cycles(g);
  if (cs.size() != 1)
    return CometResult{false, std::nullopt,
                       cs.empty() ? "graph is acyclic"
                                  : "graph has " + std::to_string(cs.size()) + " cycles"};
  const Cycle &c = cs.front();
  for (VertexId v : g.vertices()) {
    VertexSet t = tree(g, v);
    bool hits = std::any_of(c.vertex_set.begin(), c.vertex_set.end(),
                            [&](VertexId x) { return t.count(x) > 0; });
    if (!hits)
      return CometResult{false, c, "vertex '" + g.name(v) + "' does not reach the cycle"};
  }
  return CometResult{true, c, ""};
}

bool is_graded_simple(const Graph &g) {
  if (!g.row_finite())
    throw std::invalid_argument("simplicity test implemented only for row-finite graphs");
  // Any nonempty hereditary saturated set contains the closure of each of its
  // vertices, so it suffices that every singleton closes to everything.
  for (VertexId v : g.vertices())
    if (hs_closure(g, {v}).vertices.size() != g.num_vertices()) return false;
  return g.num_vertices() > 0;
}

bool is_simple(const Graph &g) { return is_graded_simple(g) && condition_L(g); }

std::vector<VertexSet> hs_subsets(const Graph &g) {
  std::size_t n = g.num_vertices();
  if (n > 20) throw std::invalid_argument("hs_subsets: graph too large for enumeration");
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet h;
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask >> i & 1) h.insert(VertexId{i});
    if (is_hereditary(g, h) && is_saturated(g, h)) out.push_back(std::move(h));
  }
  return out;
}

std::vector<Path> paths_to_H(const Graph &g, VertexId v, const VertexSet &h) {
  if (!is_hereditary(g, h)) throw std::invalid_argument("paths_to_H: H is not hereditary");
  if (h.count(v)) throw std::invalid_argument("paths_to_H: vertex lies in H");
  if (!hs_closure(g, h).vertices.count(v))
    throw std::invalid_argument("paths_to_H: vertex is outside the closure of H");
  std::vector<Path> out;
  std::vector<EdgeId> stack;
  std::function<void(VertexId)> dfs = [&](VertexId x) {
    for (EdgeId e : g.out_edges(x)) {
      stack.push_back(e);
      if (h.count(g.range(e)))
        out.push_back(make_path(g, stack));
      else
        dfs(g.range(e));
      stack.pop_back();
    }
  };
  dfs(v);
  std::sort(out.begin(), out.end());
  return out;
}

GammaSets gamma_sets(const Graph &g, VertexId v, const VertexSet &h) {
  GammaSets out;
  for (EdgeId e : g.out_edges(v)) (h.count(g.range(e)) ? out.inside : out.outside).push_back(e);
  return out;
}

std::vector<std::size_t> approach_depth(const Graph &g) {
  std::size_t n = g.num_vertices();
  std::vector<char> on_cycle(n, 0);
  for (VertexId v : g.vertices())
    for (EdgeId e : g.out_edges(v))
      if (reaches(g, g.range(e), v)) on_cycle[index(v)] = 1;
  std::vector<std::optional<std::size_t>> memo(n);
  std::function<std::size_t(VertexId)> depth = [&](VertexId v) -> std::size_t {
    if (on_cycle[index(v)]) return 0;
    if (memo[index(v)]) return *memo[index(v)];
    std::size_t best = 0;
    for (EdgeId e : g.out_edges(v)) {
      VertexId w = g.range(e);
      best = std::max(best, 1 + (on_cycle[index(w)] ? 0 : depth(w)));
    }
    memo[index(v)] = best;
    return best;
  };
  std::vector<std::size_t> out(n);
  for (VertexId v : g.vertices()) out[index(v)] = depth(v);
  return out;
}

std::string vertex_set_to_string(const Graph &g, const VertexSet &s) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s) {
    if (!first) out += ", ";
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

} // namespace lpa
