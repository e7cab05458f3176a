#include "lpa/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpa {

std::string rational_to_string(const Rational &q) { return q.get_str(); }

namespace {

void acc_add(Element::Terms &acc, const Walk &w, const Rational &c) {
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

Path suffix(const Graph &g, const Path &p, std::size_t from) {
  Path out;
  out.edges.assign(p.edges.begin() + static_cast<std::ptrdiff_t>(from), p.edges.end());
  out.base = out.edges.empty() ? path_range(g, p) : g.source(out.edges.front());
  return out;
}

Path join(const Path &a, const Path &b) {
  Path out = a;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

} // namespace

// ---------------------------------------------------------------- Element

Rational Element::coeff(const Walk &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Algebra *Element::pick(const Element &o) const {
  if (alg_ && o.alg_ && alg_ != o.alg_)
    throw std::invalid_argument("elements belong to different algebras");
  return alg_ ? alg_ : o.alg_;
}

Element &Element::operator+=(const Element &o) {
  alg_ = pick(o);
  for (const auto &[w, c] : o.terms_) acc_add(terms_, w, c);
  return *this;
}

Element &Element::operator-=(const Element &o) {
  alg_ = pick(o);
  for (const auto &[w, c] : o.terms_) acc_add(terms_, w, -c);
  return *this;
}

Element Element::operator+(const Element &o) const {
  Element r = *this;
  r += o;
  return r;
}

Element Element::operator-(const Element &o) const {
  Element r = *this;
  r -= o;
  return r;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto &[w, c] : r.terms_) c = -c;
  return r;
}

Element operator*(const Rational &k, const Element &x) {
  if (k == 0) return Element(x.alg_, {});
  Element r = x;
  for (auto &[w, c] : r.terms_) c *= k;
  return r;
}

Element Element::operator*(const Element &o) const {
  const Algebra *alg = pick(o);
  if (!alg) return Element{};
  return alg->multiply(*this, o);
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[w, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1) out += rational_to_string(mag) + "*";
    out += alg_->walk_to_string(w);
    first = false;
  }
  return out;
}

// ------------------------------------------------------------ BasisChoice

BasisChoice BasisChoice::last_declared(const Graph &g) {
  BasisChoice b;
  b.special_.assign(g.num_vertices(), std::nullopt);
  for (VertexId v : g.vertices())
    if (g.is_regular(v)) b.special_[index(v)] = g.out_edges(v).back();
  return b;
}

BasisChoice BasisChoice::from_map(const Graph &g, const std::map<VertexId, EdgeId> &choice) {
  BasisChoice b = last_declared(g);
  for (const auto &[v, e] : choice) {
    if (index(v) >= g.num_vertices() || index(e) >= g.num_edges() || g.source(e) != v)
      throw std::invalid_argument("special edge must be an outgoing edge of its vertex");
    if (!g.is_regular(v)) throw std::invalid_argument("special edges exist only at regular vertices");
    b.special_[index(v)] = e;
  }
  return b;
}

std::string BasisChoice::describe(const Graph &g) const {
  std::string out = "special:";
  for (VertexId v : g.vertices())
    if (special_[index(v)]) out += " " + g.name(v) + "=" + g.name(*special_[index(v)]);
  return out;
}

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(Graph g) : Algebra(g, BasisChoice::last_declared(g)) {}

Algebra::Algebra(Graph g, BasisChoice basis) : graph_(std::move(g)), basis_(std::move(basis)) {
  if (!graph_.row_finite())
    throw std::invalid_argument("algebra engine requires a row-finite graph (CK2 is undefined at "
                                "infinite emitters)");
}

bool Algebra::is_valid_walk(const Walk &w) const {
  auto ok_path = [&](const Path &p) {
    if (index(p.base) >= graph_.num_vertices()) return false;
    if (!p.trivial() && graph_.source(p.edges.front()) != p.base) return false;
    for (std::size_t i = 0; i + 1 < p.edges.size(); ++i)
      if (graph_.range(p.edges[i]) != graph_.source(p.edges[i + 1])) return false;
    return true;
  };
  return ok_path(w.alpha) && ok_path(w.beta) &&
         path_range(graph_, w.alpha) == path_range(graph_, w.beta);
}

bool Algebra::is_forbidden(const Walk &w) const {
  if (w.alpha.trivial() || w.beta.trivial()) return false;
  EdgeId e = w.alpha.edges.back();
  if (e != w.beta.edges.back()) return false;
  return basis_.special(graph_.source(e)) == e;
}

void Algebra::add_normalized(Element::Terms &acc, Walk w, const Rational &c) const {
  // alpha' e e^* beta'^* = alpha' beta'^* - sum_{f != e} alpha' f f^* beta'^*;
  // the f-terms are basic, only alpha' beta'^* can still be forbidden.
  while (is_forbidden(w)) {
    EdgeId e = w.alpha.edges.back();
    VertexId v = graph_.source(e);
    w.alpha.edges.pop_back();
    w.beta.edges.pop_back();
    for (EdgeId f : graph_.out_edges(v)) {
      if (f == e) continue;
      Walk t = w;
      t.alpha.edges.push_back(f);
      t.beta.edges.push_back(f);
      acc_add(acc, t, -c);
    }
  }
  acc_add(acc, w, c);
}

Element Algebra::normal_form(const std::vector<std::pair<Walk, Rational>> &raw) const {
  Element::Terms acc;
  for (const auto &[w, c] : raw) {
    if (!is_valid_walk(w)) throw std::invalid_argument("normal_form: malformed walk");
    if (c != 0) add_normalized(acc, w, c);
  }
  return Element(this, std::move(acc));
}

Element Algebra::vertex(VertexId v) const { return walk(Path::vertex(v), Path::vertex(v)); }

Element Algebra::edge(EdgeId e) const {
  return walk(Path{graph_.source(e), {e}}, Path::vertex(graph_.range(e)));
}

Element Algebra::ghost(EdgeId e) const {
  return walk(Path::vertex(graph_.range(e)), Path{graph_.source(e), {e}});
}

Element Algebra::path(const Path &p) const {
  return walk(p, Path::vertex(path_range(graph_, p)));
}

Element Algebra::ghost(const Path &p) const {
  return walk(Path::vertex(path_range(graph_, p)), p);
}

Element Algebra::walk(const Path &alpha, const Path &beta, const Rational &k) const {
  return normal_form({{Walk{alpha, beta}, k}});
}

Element Algebra::scalar_unit(const Rational &k) const {
  Element out = zero();
  for (VertexId v : graph_.vertices()) out += k * vertex(v);
  return out;
}

std::optional<Walk> Algebra::walk_product(const Walk &a, const Walk &b) const {
  const Path &beta = a.beta;
  const Path &gamma = b.alpha;
  if (path_source(graph_, beta) != path_source(graph_, gamma)) return std::nullopt;
  if (beta.length() <= gamma.length()) {
    if (!std::equal(beta.edges.begin(), beta.edges.end(), gamma.edges.begin())) return std::nullopt;
    return Walk{join(a.alpha, suffix(graph_, gamma, beta.length())), b.beta};
  }
  if (!std::equal(gamma.edges.begin(), gamma.edges.end(), beta.edges.begin())) return std::nullopt;
  return Walk{a.alpha, join(b.beta, suffix(graph_, beta, gamma.length()))};
}

Element Algebra::multiply(const Element &x, const Element &y) const {
  if ((x.alg_ && x.alg_ != this) || (y.alg_ && y.alg_ != this))
    throw std::invalid_argument("multiply: element from a different algebra");
  Element::Terms acc;
  for (const auto &[wa, ca] : x.terms_)
    for (const auto &[wb, cb] : y.terms_)
      if (auto w = walk_product(wa, wb)) add_normalized(acc, std::move(*w), ca * cb);
  return Element(this, std::move(acc));
}

Element Algebra::involution(const Element &x) const {
  Element::Terms out;
  for (const auto &[w, c] : x.terms_) out.emplace(Walk{w.beta, w.alpha}, c);
  return Element(this, std::move(out));
}

std::map<int, Element> Algebra::grade(const Element &x) const {
  std::map<int, Element> out;
  for (const auto &[w, c] : x.terms_) {
    auto [it, _] = out.try_emplace(w.grade(), zero());
    it->second.terms_.emplace(w, c);
  }
  return out;
}

std::size_t Algebra::partial_B(const Element &x) const {
  std::size_t best = 0;
  for (const auto &[w, c] : x.terms_) best = std::max(best, w.alpha.length());
  return best;
}

Element Algebra::corner_project(const Element &x, VertexId u) const {
  Element::Terms out;
  for (const auto &[w, c] : x.terms_)
    if (path_source(graph_, w.alpha) == u && path_source(graph_, w.beta) == u) out.emplace(w, c);
  return Element(this, std::move(out));
}

std::vector<Path> Algebra::paths_from(VertexId u, std::size_t d) const {
  std::vector<Path> out{Path::vertex(u)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].length() >= d) continue;
    VertexId r = path_range(graph_, out[i]);
    for (EdgeId e : graph_.out_edges(r)) {
      Path p = out[i];
      p.edges.push_back(e);
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Walk> Algebra::corner_basis(VertexId u, std::size_t d) const {
  std::vector<Path> ps = paths_from(u, d);
  std::map<VertexId, std::vector<const Path *>> by_range;
  for (const Path &p : ps) by_range[path_range(graph_, p)].push_back(&p);
  std::vector<Walk> out;
  for (const auto &[r, group] : by_range)
    for (const Path *a : group)
      for (const Path *b : group) {
        Walk w{*a, *b};
        if (!is_forbidden(w)) out.push_back(std::move(w));
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Algebra::walk_to_string(const Walk &w) const {
  if (w.alpha.trivial() && w.beta.trivial()) return graph_.name(w.alpha.base);
  if (w.beta.trivial()) return path_to_string(graph_, w.alpha);
  if (w.alpha.trivial()) return "~" + path_to_string(graph_, w.beta);
  return path_to_string(graph_, w.alpha) + "~" + path_to_string(graph_, w.beta);
}

// ------------------------------------------------------- verify_relations

bool VerifyRelationsReport::all_passed() const {
  return std::all_of(families.begin(), families.end(), [](const Family &f) { return f.passed; });
}

VerifyRelationsReport verify_relations(const Algebra &alg) {
  const Graph &g = alg.graph();
  VerifyRelationsReport rep;
  auto check = [](VerifyRelationsReport::Family &fam, const Element &lhs, const Element &rhs,
                  const std::string &label) {
    if (fam.passed && !(lhs == rhs)) {
      fam.passed = false;
      fam.counterexample = label + ": " + lhs.to_string() + " != " + rhs.to_string();
    }
  };
  VerifyRelationsReport::Family v{"V", true, ""}, e1{"E1", true, ""}, e2{"E2", true, ""},
      ck1{"CK1", true, ""}, ck2{"CK2", true, ""};
  for (VertexId a : g.vertices())
    for (VertexId b : g.vertices())
      check(v, alg.vertex(a) * alg.vertex(b), a == b ? alg.vertex(a) : alg.zero(),
            g.name(a) + "*" + g.name(b));
  for (EdgeId e : g.edges()) {
    Element s = alg.vertex(g.source(e)), r = alg.vertex(g.range(e));
    Element x = alg.edge(e), xs = alg.ghost(e);
    check(e1, s * x, x, "s(e)e for " + g.name(e));
    check(e1, x * r, x, "e r(e) for " + g.name(e));
    check(e2, r * xs, xs, "r(e)e* for " + g.name(e));
    check(e2, xs * s, xs, "e* s(e) for " + g.name(e));
    for (EdgeId f : g.edges())
      check(ck1, xs * alg.edge(f), e == f ? r : alg.zero(), g.name(e) + "* " + g.name(f));
  }
  for (VertexId u : g.vertices()) {
    if (!g.is_regular(u)) continue;
    Element sum = alg.zero();
    for (EdgeId f : g.out_edges(u)) sum += alg.edge(f) * alg.ghost(f);
    check(ck2, sum, alg.vertex(u), "sum ff* at " + g.name(u));
  }
  rep.families = {v, e1, e2, ck1, ck2};
  return rep;
}

} // namespace lpa
