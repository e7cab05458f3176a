#include "lpa/centroid.hpp"
#include "lpa/linalg.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace lpa {

namespace {

bool in_corner(const Graph &g, const Element &x, VertexId v) {
  for (const auto &[w, c] : x.terms())
    if (path_source(g, w.alpha) != v || path_source(g, w.beta) != v) return false;
  return true;
}

Element single(const Algebra &alg, const Walk &w, const Rational &c = 1) {
  return alg.walk(w.alpha, w.beta, c);
}

std::vector<std::vector<EdgeId>> in_edges(const Graph &g) {
  std::vector<std::vector<EdgeId>> out(g.num_vertices());
  for (EdgeId e : g.edges()) out[index(g.range(e))].push_back(e);
  return out;
}

Path prefix_of(const Path &p, std::size_t len) {
  Path out{p.base, {}};
  out.edges.assign(p.edges.begin(), p.edges.begin() + static_cast<std::ptrdiff_t>(len));
  return out;
}

} // namespace

CentralizerSeed scalar_seed(const Algebra &alg, const Rational &k) {
  CentralizerSeed s;
  for (VertexId v : alg.graph().vertices()) s.values.push_back(k * alg.vertex(v));
  return s;
}

SeedCheck validate_seed(const Algebra &alg, const CentralizerSeed &seed) {
  const Graph &g = alg.graph();
  if (seed.values.size() != g.num_vertices())
    throw std::invalid_argument("seed must assign a value to every vertex");
  for (VertexId v : g.vertices())
    if (!in_corner(g, seed.at(v), v))
      throw std::invalid_argument("seed value at '" + g.name(v) + "' is not in its corner");
  for (EdgeId f : g.edges()) {
    Element e = alg.edge(f), es = alg.ghost(f);
    const Element &ts = seed.at(g.source(f));
    const Element &tr = seed.at(g.range(f));
    if (!(ts * e == e * tr))
      return SeedCheck{false, f, "tau(s(f)) f != f tau(r(f)) at edge '" + g.name(f) + "'"};
    if (!(tr * es == es * ts))
      return SeedCheck{false, f, "tau(r(f)) f* != f* tau(s(f)) at edge '" + g.name(f) + "'"};
  }
  return SeedCheck{};
}

Element evaluate_unchecked(const Algebra &alg, const CentralizerSeed &seed, const Element &x) {
  const Graph &g = alg.graph();
  std::vector<std::vector<std::pair<Walk, Rational>>> by_source(g.num_vertices());
  for (const auto &[w, c] : x.terms()) by_source[index(path_source(g, w.alpha))].emplace_back(w, c);
  Element out = alg.zero();
  for (VertexId v : g.vertices()) {
    if (by_source[index(v)].empty()) continue;
    out += seed.at(v) * alg.normal_form(by_source[index(v)]);
  }
  return out;
}

Element evaluate(const Algebra &alg, const CentralizerSeed &seed, const Element &x) {
  SeedCheck chk = validate_seed(alg, seed);
  if (!chk.valid) throw std::invalid_argument("evaluate: invalid seed: " + chk.detail);
  return evaluate_unchecked(alg, seed, x);
}

std::size_t seed_space_unknowns(const Algebra &alg, std::size_t d) {
  auto bounds = seed_bounds(alg.graph(), d);
  std::size_t total = 0;
  for (VertexId v : alg.graph().vertices()) {
    std::size_t p = alg.paths_from(v, bounds[index(v)]).size();
    total += p * p;
  }
  return total;
}

std::vector<std::size_t> seed_bounds(const Graph &g, std::size_t d) {
  auto cs = cycles(g);
  std::size_t scale = cs.size() == 1 ? cs.front().length() : 1;
  auto depth = approach_depth(g);
  std::vector<std::size_t> out(g.num_vertices());
  for (VertexId v : g.vertices()) out[index(v)] = d * scale + depth[index(v)];
  return out;
}

SeedSpace seed_space(const Algebra &alg, std::size_t d) {
  const Graph &g = alg.graph();
  SeedSpace space;
  space.degree = d;
  space.bounds = seed_bounds(g, d);

  std::vector<std::vector<Walk>> basis(g.num_vertices());
  std::vector<std::size_t> offset(g.num_vertices() + 1, 0);
  for (VertexId v : g.vertices()) {
    basis[index(v)] = alg.corner_basis(v, space.bounds[index(v)]);
    offset[index(v) + 1] = offset[index(v)] + basis[index(v)].size();
  }
  space.num_unknowns = offset.back();

  // Equation 2f:   tau(s(f)) f   - f tau(r(f))    = 0
  // Equation 2f+1: tau(r(f)) f^* - f^* tau(s(f)) = 0
  std::map<std::pair<std::size_t, Walk>, SparseVector> rows;
  auto add = [&](std::size_t eq, std::size_t col, const Element &x, int sign) {
    for (const auto &[w, c] : x.terms()) {
      Rational &slot = rows[{eq, w}][col];
      slot += sign > 0 ? c : Rational(-c);
    }
  };
  auto incoming = in_edges(g);
  for (VertexId v : g.vertices()) {
    for (std::size_t i = 0; i < basis[index(v)].size(); ++i) {
      std::size_t col = offset[index(v)] + i;
      Element b = single(alg, basis[index(v)][i]);
      for (EdgeId f : g.out_edges(v)) {
        add(2 * index(f), col, b * alg.edge(f), +1);
        add(2 * index(f) + 1, col, alg.ghost(f) * b, -1);
      }
      for (EdgeId f : incoming[index(v)]) {
        add(2 * index(f), col, alg.edge(f) * b, -1);
        add(2 * index(f) + 1, col, b * alg.ghost(f), +1);
      }
    }
  }
  space.num_equations = rows.size();
  EchelonSolver solver(space.num_unknowns);
  for (auto &[key, row] : rows) solver.add_row(std::move(row));

  for (const SparseVector &sol : solver.nullspace()) {
    CentralizerSeed seed;
    seed.values.assign(g.num_vertices(), alg.zero());
    for (VertexId v : g.vertices()) {
      std::vector<std::pair<Walk, Rational>> raw;
      for (auto it = sol.lower_bound(offset[index(v)]);
           it != sol.end() && it->first < offset[index(v) + 1]; ++it)
        raw.emplace_back(basis[index(v)][it->first - offset[index(v)]], it->second);
      seed.values[index(v)] = alg.normal_form(raw);
    }
    space.basis.push_back(std::move(seed));
  }
  return space;
}

CornerDecomposition corner_center_decompose(const Algebra &alg, const Element &z, VertexId u,
                                            std::size_t d) {
  const Graph &g = alg.graph();
  for (const Cycle &c : cycles(g))
    if (c.vertex_set.count(u))
      throw std::invalid_argument("corner_center_decompose: '" + g.name(u) + "' lies on a cycle");
  if (!in_corner(g, z, u)) throw std::invalid_argument("corner_center_decompose: z is not in uAu");
  for (const Walk &w : alg.corner_basis(u, d)) {
    Element b = single(alg, w);
    if (!(z * b == b * z))
      throw std::invalid_argument("corner_center_decompose: z does not commute with " +
                                  alg.walk_to_string(w));
  }
  CornerDecomposition out;
  out.k = z.coeff(Walk{Path::vertex(u), Path::vertex(u)});
  Element rest = z - out.k * alg.vertex(u);
  Element rebuilt = out.k * alg.vertex(u);
  for (EdgeId f : g.out_edges(u)) {
    Element xi = alg.ghost(f) * rest * alg.edge(f);
    rebuilt += alg.edge(f) * xi * alg.ghost(f);
    bool central = true;
    std::size_t dd = d == 0 ? 0 : d - 1;
    for (const Walk &w : alg.corner_basis(g.range(f), dd)) {
      Element b = single(alg, w);
      if (!(xi * b == b * xi)) {
        central = false;
        break;
      }
    }
    out.xi.emplace_back(f, std::move(xi));
    out.xi_central.push_back(central);
  }
  if (!(rebuilt == z))
    throw std::logic_error("corner_center_decompose: reconstruction mismatch for " + z.to_string());
  return out;
}

std::vector<Element> acyclic_corner_center(const Algebra &alg, VertexId u) {
  const Graph &g = alg.graph();
  if (!cycles(g).empty()) throw std::invalid_argument("acyclic_corner_center: graph has a cycle");
  std::size_t depth = approach_depth(g)[index(u)];
  std::vector<Walk> basis = alg.corner_basis(u, depth);
  std::vector<Element> elems;
  elems.reserve(basis.size());
  for (const Walk &w : basis) elems.push_back(single(alg, w));

  std::map<std::pair<std::size_t, Walk>, SparseVector> rows;
  for (std::size_t j = 0; j < elems.size(); ++j)
    for (std::size_t i = 0; i < elems.size(); ++i) {
      Element comm = elems[i] * elems[j] - elems[j] * elems[i];
      for (const auto &[w, c] : comm.terms()) rows[{j, w}][i] += c;
    }
  EchelonSolver solver(basis.size());
  for (auto &[key, row] : rows) solver.add_row(std::move(row));
  std::vector<Element> out;
  for (const SparseVector &sol : solver.nullspace()) {
    std::vector<std::pair<Walk, Rational>> raw;
    for (const auto &[col, c] : sol) raw.emplace_back(basis[col], c);
    out.push_back(alg.normal_form(raw));
  }
  return out;
}

// ------------------------------------------------------------------- SMap

SMap::SMap(const Algebra &alg, Cycle c)
    : alg_(&alg), cycle_(std::move(c)), c_(alg.path(cycle_.rep)), c_star_(alg.ghost(cycle_.rep)) {}

Element SMap::apply(const Element &x) const { return c_star_ * x * c_; }

Element SMap::power(long k) const {
  Path p{cycle_.base(), {}};
  for (long i = 0; i < (k < 0 ? -k : k); ++i)
    p.edges.insert(p.edges.end(), cycle_.rep.edges.begin(), cycle_.rep.edges.end());
  return k >= 0 ? alg_->path(p) : alg_->ghost(p);
}

std::optional<Walk> SMap::apply(const Walk &w) const {
  Walk cs{Path::vertex(base()), cycle_.rep};
  Walk c{cycle_.rep, Path::vertex(base())};
  auto left = alg_->walk_product(cs, w);
  if (!left) return std::nullopt;
  return alg_->walk_product(*left, c);
}

std::optional<long> SMap::cycle_power(const Walk &w) const {
  auto power_of = [&](const Path &p) -> std::optional<long> {
    if (p.base != cycle_.base()) return std::nullopt;
    std::size_t len = cycle_.length();
    if (p.length() % len != 0) return std::nullopt;
    for (std::size_t i = 0; i < p.length(); ++i)
      if (p.edges[i] != cycle_.rep.edges[i % len]) return std::nullopt;
    return static_cast<long>(p.length() / len);
  };
  if (w.beta.trivial()) return power_of(w.alpha);
  if (w.alpha.trivial()) {
    if (auto k = power_of(w.beta)) return -*k;
  }
  return std::nullopt;
}

std::optional<long> SMap::cycle_power(const Element &x) const {
  if (x.size() != 1 || x.terms().begin()->second != 1) return std::nullopt;
  return cycle_power(x.terms().begin()->first);
}

Collapse s_collapse(const SMap &s, const Walk &w, std::size_t max_steps) {
  const Algebra &alg = s.algebra();
  const Graph &g = alg.graph();
  if (!alg.is_valid_walk(w) || path_source(g, w.alpha) != s.base() ||
      path_source(g, w.beta) != s.base())
    throw std::invalid_argument("s_collapse: walk is not in the corner of the cycle base");
  std::optional<Walk> x = w;
  for (std::size_t n = 0;; ++n) {
    if (!x) return Collapse{Collapse::Kind::Dies, n, 0};
    if (auto k = s.cycle_power(*x)) return Collapse{Collapse::Kind::Collapses, n, *k};
    if (n == max_steps) return Collapse{Collapse::Kind::Survives, n, 0};
    x = s.apply(*x);
  }
}

std::string to_string(const Collapse &c) {
  switch (c.kind) {
  case Collapse::Kind::Dies:
    return "Dies(" + std::to_string(c.steps) + ")";
  case Collapse::Kind::Collapses:
    return "Collapses(" + std::to_string(c.steps) + ", c^" + std::to_string(c.power) + ")";
  case Collapse::Kind::Survives:
    break;
  }
  return "Survives(" + std::to_string(c.steps) + ")";
}

LaurentExtract laurent_extract(const Algebra &alg, const Cycle &c, const Element &x) {
  SMap s(alg, c);
  LaurentPoly p;
  for (const auto &[w, coef] : x.terms()) {
    auto k = s.cycle_power(alg.walk(w.alpha, w.beta));
    if (!k) return LaurentExtract{std::nullopt, alg.walk_to_string(w)};
    p.set(*k, p.coeff(*k) + coef);
  }
  return LaurentExtract{p, ""};
}

CentralizerSeed comet_centralizer_from_laurent(const Algebra &alg, const LaurentPoly &p) {
  const Graph &g = alg.graph();
  CometResult cr = is_comet(g);
  if (!cr.is_comet) throw std::invalid_argument("not a comet: " + cr.reason);
  const Cycle &c = *cr.cycle;
  SMap s(alg, c);
  VertexId u = c.base();

  Element pc = alg.zero();
  for (const auto &[k, coef] : p.coeffs()) pc += coef * s.power(k);

  CentralizerSeed seed;
  seed.values.assign(g.num_vertices(), alg.zero());
  std::vector<char> done(g.num_vertices(), 0);
  seed.values[index(u)] = pc;
  done[index(u)] = 1;
  for (std::size_t i = 1; i < c.length(); ++i) {
    Path sigma = prefix_of(c.rep, i);
    VertexId v = path_range(g, sigma);
    seed.values[index(v)] = alg.ghost(sigma) * pc * alg.path(sigma);
    done[index(v)] = 1;
  }

  Closure cl = hs_closure(g, {u});
  for (std::size_t level = 1; level < cl.num_levels; ++level)
    for (VertexId w : g.vertices()) {
      if (cl.level[index(w)] != level) continue;
      Element val = alg.zero();
      for (EdgeId e : g.out_edges(w)) val += alg.edge(e) * seed.at(g.range(e)) * alg.ghost(e);
      seed.values[index(w)] = val;
      done[index(w)] = 1;
    }
  if (std::find(done.begin(), done.end(), 0) != done.end())
    throw std::logic_error("comet closure does not cover every vertex");
  return seed;
}

Element omega(const CentralizerSeed &seed, VertexId u) { return seed.at(u); }

Reconstruction reconstruct_from_value(const Algebra &alg, VertexId u, const Element &x) {
  const Graph &g = alg.graph();
  if (!mt3(g).holds) throw std::invalid_argument("reconstruct_from_value: graph is not MT3");
  Closure cl = hs_closure(g, {u});
  if (cl.vertices.size() != g.num_vertices())
    throw std::invalid_argument("reconstruct_from_value: closure of {" + g.name(u) +
                                "} is not the whole vertex set");
  Reconstruction out;
  if (!in_corner(g, x, u)) {
    out.failure = "value is not in the corner at '" + g.name(u) + "'";
    return out;
  }

  std::vector<std::optional<Path>> route(g.num_vertices());
  route[index(u)] = Path::vertex(u);
  std::deque<VertexId> queue{u};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.out_edges(v)) {
      VertexId w = g.range(e);
      if (route[index(w)]) continue;
      Path p = *route[index(v)];
      p.edges.push_back(e);
      route[index(w)] = std::move(p);
      queue.push_back(w);
    }
  }

  CentralizerSeed seed;
  seed.values.assign(g.num_vertices(), alg.zero());
  for (VertexId v : g.vertices())
    if (route[index(v)]) seed.values[index(v)] = alg.ghost(*route[index(v)]) * x * alg.path(*route[index(v)]);

  for (VertexId v : g.vertices()) {
    if (!route[index(v)]) continue;
    for (EdgeId e : g.out_edges(v)) {
      VertexId w = g.range(e);
      if (alg.ghost(e) * seed.at(v) * alg.edge(e) == seed.at(w)) continue;
      Path other = *route[index(v)];
      other.edges.push_back(e);
      out.failure = "lambda* x lambda depends on the path to '" + g.name(w) + "'";
      out.witness = std::make_pair(*route[index(w)], other);
      return out;
    }
  }

  for (std::size_t level = 1; level < cl.num_levels; ++level)
    for (VertexId w : g.vertices()) {
      if (cl.level[index(w)] != level) continue;
      Element val = alg.zero();
      for (EdgeId e : g.out_edges(w)) val += alg.edge(e) * seed.at(g.range(e)) * alg.ghost(e);
      seed.values[index(w)] = val;
    }

  SeedCheck chk = validate_seed(alg, seed);
  if (!chk.valid) {
    out.failure = chk.detail;
    return out;
  }
  out.seed = std::move(seed);
  return out;
}

PathMembershipReport path_membership_checks(const Algebra &alg, VertexId u, std::size_t d) {
  const Graph &g = alg.graph();
  if (!is_simple(g)) throw std::invalid_argument("path_membership_checks: graph is not simple");
  SeedSpace space = seed_space(alg, d);
  PathMembershipReport rep;
  rep.dimension = space.dimension();
  Walk uu{Path::vertex(u), Path::vertex(u)};
  for (const CentralizerSeed &s : space.basis) {
    const Element &val = s.at(u);
    bool scalar = val.is_zero() || (val.size() == 1 && val.terms().begin()->first == uu);
    if (!scalar) {
      rep.ok = false;
      rep.detail = "seed value at '" + g.name(u) + "' is " + val.to_string();
      return rep;
    }
  }
  return rep;
}

std::string seed_to_string(const Algebra &alg, const CentralizerSeed &seed) {
  std::string out;
  for (VertexId v : alg.graph().vertices()) {
    if (!out.empty()) out += "; ";
    out += alg.graph().name(v) + " -> " + seed.at(v).to_string();
  }
  return out;
}

} // namespace lpa
