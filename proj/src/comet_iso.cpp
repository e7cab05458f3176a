#include "lpa/comet_iso.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpa {

CometIso::CometIso(const Algebra &alg) : alg_(&alg) {
  const Graph &g = alg.graph();
  if (!g.row_finite()) throw std::invalid_argument("comet isomorphism requires a row-finite graph");
  CometResult cr = is_comet(g);
  if (!cr.is_comet) throw std::invalid_argument("not a comet: " + cr.reason);
  cycle_ = *cr.cycle;
  VertexId v0 = cycle_.base();

  // Backwards from v0; the part of the graph avoiding v0 is acyclic.
  lambda_.push_back(Path::vertex(v0));
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    VertexId s = path_source(g, lambda_[i]);
    for (EdgeId f : g.edges()) {
      if (g.range(f) != s || g.source(f) == v0) continue;
      Path p{g.source(f), {f}};
      p.edges.insert(p.edges.end(), lambda_[i].edges.begin(), lambda_[i].edges.end());
      lambda_.push_back(std::move(p));
    }
  }
  std::sort(lambda_.begin(), lambda_.end());

  completions_.resize(g.num_vertices());
  for (const Path &p : lambda_) completions_[index(path_source(g, p))].push_back(p);
  for (VertexId v : g.vertices())
    if (completions_[index(v)].empty())
      throw std::logic_error("comet vertex '" + g.name(v) + "' does not reach the cycle base");
}

std::size_t CometIso::index_of(const Path &p) const {
  auto it = std::lower_bound(lambda_.begin(), lambda_.end(), p);
  if (it == lambda_.end() || !(*it == p)) throw std::out_of_range("path is not in the index set");
  return static_cast<std::size_t>(it - lambda_.begin());
}

std::pair<std::size_t, long> CometIso::split(const Path &p) const {
  const Graph &g = alg_->graph();
  VertexId v0 = base();
  std::size_t cut = 0;
  while (cut < p.length() && g.source(p.edges[cut]) != v0) ++cut;
  Path gamma{p.base, {p.edges.begin(), p.edges.begin() + static_cast<std::ptrdiff_t>(cut)}};
  std::size_t rest = p.length() - cut;
  std::size_t len = cycle_.length();
  if (rest % len != 0) throw std::logic_error("comet split: tail is not a cycle power");
  for (std::size_t i = 0; i < rest; ++i)
    if (p.edges[cut + i] != cycle_.rep.edges[i % len])
      throw std::logic_error("comet split: tail is not a cycle power");
  return {index_of(gamma), static_cast<long>(rest / len)};
}

LaurentMatrix CometIso::apply(const Walk &w) const {
  const Graph &g = alg_->graph();
  if (!alg_->is_valid_walk(w)) throw std::invalid_argument("comet isomorphism: malformed walk");
  LaurentMatrix out(size());
  // alpha beta^* = sum over completions mu of (alpha mu)(beta mu)^*
  for (const Path &mu : completions(path_range(g, w.alpha))) {
    Path a = w.alpha, b = w.beta;
    a.edges.insert(a.edges.end(), mu.edges.begin(), mu.edges.end());
    b.edges.insert(b.edges.end(), mu.edges.begin(), mu.edges.end());
    auto [i, k] = split(a);
    auto [j, l] = split(b);
    out.at(i, j) += LaurentPoly::monomial(k - l);
  }
  return out;
}

LaurentMatrix CometIso::apply(const Element &x) const {
  LaurentMatrix out(size());
  for (const auto &[w, c] : x.terms()) out += LaurentPoly(c) * apply(w);
  return out;
}

} // namespace lpa
