#include "lpa/battery.hpp"
#include "lpa/centroid.hpp"
#include "lpa/classifier.hpp"
#include "lpa/comet_iso.hpp"
#include "lpa/limits.hpp"
#include "lpa/linalg.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>

namespace lpa {

using nlohmann::json;

ElementSampler::ElementSampler(const Algebra &alg, std::uint64_t seed, std::size_t max_degree, std::size_t max_terms)
    : alg_(&alg), rng_(seed), max_degree_(max_degree), max_terms_(max_terms) {
  const Graph &g = alg.graph();
  incoming_.resize(g.num_vertices());
  for (EdgeId e : g.edges()) incoming_[index(g.range(e))].push_back(e);
}

Path ElementSampler::backward_path(VertexId end, std::size_t len) {
  std::vector<EdgeId> rev;
  VertexId at = end;
  for (std::size_t i = 0; i < len && !incoming_[index(at)].empty(); ++i) {
    const auto &in = incoming_[index(at)];
    EdgeId e = in[std::uniform_int_distribution<std::size_t>(0, in.size() - 1)(rng_)];
    rev.push_back(e);
    at = alg_->graph().source(e);
  }
  std::reverse(rev.begin(), rev.end());
  return Path{at, std::move(rev)};
}

Walk ElementSampler::walk() {
  const Graph &g = alg_->graph();
  VertexId w{static_cast<std::uint32_t>(std::uniform_int_distribution<std::size_t>(0, g.num_vertices() - 1)(rng_))};
  std::uniform_int_distribution<std::size_t> len(0, max_degree_);
  Path a = backward_path(w, len(rng_));
  Path b = backward_path(w, len(rng_));
  return Walk{std::move(a), std::move(b)};
}

Element ElementSampler::element() {
  std::size_t terms = std::uniform_int_distribution<std::size_t>(1, max_terms_)(rng_);
  std::vector<std::pair<Walk, Rational>> raw;
  std::uniform_int_distribution<int> num(1, 3), den(1, 2), sign(0, 1);
  for (std::size_t i = 0; i < terms; ++i) {
    Rational c(num(rng_) * (sign(rng_) ? -1 : 1), den(rng_));
    c.canonicalize();
    raw.emplace_back(walk(), c);
  }
  return alg_->normal_form(raw);
}

std::vector<Walk> basis_walks(const Algebra &alg, std::size_t d) {
  const Graph &g = alg.graph();
  std::vector<std::vector<Path>> by_range(g.num_vertices());
  for (VertexId v : g.vertices())
    for (Path &p : alg.paths_from(v, d)) by_range[index(path_range(g, p))].push_back(std::move(p));
  std::vector<Walk> out;
  for (const auto &ps : by_range)
    for (const Path &a : ps)
      for (const Path &b : ps) {
        Walk w{a, b};
        if (!alg.is_forbidden(w)) out.push_back(std::move(w));
      }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Recorder {
  std::string graph;
  std::vector<BatteryResult> results;

  void add(std::string check, bool passed, std::string detail = "") {
    results.push_back(BatteryResult{graph, std::move(check), passed, std::move(detail)});
  }
};

SparseVector matrix_coords(const LaurentMatrix &m, long lo, long hi) {
  SparseVector v;
  std::size_t n = m.size();
  std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto &[k, c] : m.at(i, j).coeffs()) v[(i * n + j) * width + static_cast<std::size_t>(k - lo)] = c;
  return v;
}

void check_seeds(Recorder &rec, const Algebra &alg, const BatteryOptions &opts) {
  const Graph &g = alg.graph();
  SeedSpace space = seed_space(alg, opts.degree);
  ElementSampler smp(alg, opts.seed + 1);

  bool valid = true;
  for (const auto &s : space.basis) valid = valid && validate_seed(alg, s).valid;
  rec.add("seed_basis_valid", valid);

  std::string law_failure;
  for (std::size_t si = 0; si < space.basis.size() && law_failure.empty(); ++si) {
    const CentralizerSeed &s = space.basis[si];
    for (std::size_t i = 0; i < opts.centroid_pairs; ++i) {
      Element x = smp.element(), y = smp.element();
      Element txy = evaluate_unchecked(alg, s, x * y);
      if (!(txy == evaluate_unchecked(alg, s, x) * y) || !(txy == x * evaluate_unchecked(alg, s, y))) {
        law_failure = "seed " + std::to_string(si) + " at x=" + x.to_string() + ", y=" + y.to_string();
        break;
      }
    }
  }
  rec.add("centroid_law", law_failure.empty(), law_failure);

  if (mt3(g).holds) {
    std::optional<VertexId> u;
    for (VertexId v : g.vertices())
      if (hs_closure(g, {v}).vertices.size() == g.num_vertices()) {
        u = v;
        break;
      }
    if (u) {
      std::string fail;
      for (const auto &s : space.basis) {
        Reconstruction r = reconstruct_from_value(alg, *u, omega(s, *u));
        if (!r.seed || !(*r.seed == s)) {
          fail = "reconstruction from " + g.name(*u) + " differs: " + r.failure;
          break;
        }
        for (int i = 0; i < 20 && fail.empty(); ++i) {
          Element x = smp.element();
          if (!(evaluate_unchecked(alg, *r.seed, x) == evaluate_unchecked(alg, s, x)))
            fail = "evaluations differ at " + x.to_string();
        }
      }
      rec.add("uniqueness", fail.empty(), fail);
    }
  }

  std::vector<char> on_cycle(g.num_vertices(), 0);
  for (const Cycle &c : cycles(g))
    for (VertexId v : c.vertex_set) on_cycle[index(v)] = 1;
  std::string descent;
  for (const auto &s : space.basis)
    for (VertexId u : g.vertices()) {
      if (on_cycle[index(u)] || !descent.empty()) continue;
      const Element &val = s.at(u);
      Walk uu{Path::vertex(u), Path::vertex(u)};
      if (val.is_zero() || (val.size() == 1 && val.terms().begin()->first == uu)) continue;
      for (EdgeId e : g.out_edges(u))
        if (alg.partial_B(val) <= alg.partial_B(s.at(g.range(e))))
          descent = "at " + g.name(u) + " along " + g.name(e);
    }
  rec.add("partial_B_descent", descent.empty(), descent);
}

void check_smap(Recorder &rec, const Algebra &alg, const BatteryOptions &opts) {
  const Graph &g = alg.graph();
  std::mt19937_64 rng(opts.seed + 2);
  std::string fail;
  for (const Cycle &c : cycles(g)) {
    SMap s(alg, c);
    std::vector<Walk> pool = alg.corner_basis(c.base(), 4);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t i = 0; i < opts.smap_walks && fail.empty(); ++i) {
      const Walk &w = pool[pick(rng)];
      std::size_t bound = 2 * std::max(w.alpha.length(), w.beta.length()) + 2;
      Collapse out = s_collapse(s, w, bound);
      std::string label = alg.walk_to_string(w) + " on cycle " + path_to_string(g, c.rep);
      Element x = alg.walk(w.alpha, w.beta);
      for (std::size_t n = 0; n < out.steps; ++n) x = s.apply(x);
      if (out.kind == Collapse::Kind::Survives) {
        fail = label + " survives " + std::to_string(bound) + " steps";
      } else if (out.kind == Collapse::Kind::Dies) {
        if (!x.is_zero()) fail = label + ": raw iterate dies but normal form is " + x.to_string();
      } else {
        if (!(x == s.power(out.power))) fail = label + ": collapse value mismatch";
        std::optional<Walk> y = w;
        for (std::size_t n = 0; n < out.steps + 3 && fail.empty(); ++n) {
          if (n >= out.steps && (!y || s.cycle_power(*y) != out.power))
            fail = label + ": not a fixed cycle power after collapse";
          y = y ? s.apply(*y) : std::nullopt;
        }
      }
    }
  }
  rec.add("smap_collapse", fail.empty(), fail);
}

void check_pi_identity(Recorder &rec, const Algebra &alg) {
  const Graph &g = alg.graph();
  std::size_t n = g.num_vertices();
  std::string fail;
  std::size_t pairs = 0;
  for (std::uint32_t mask = 0; mask < (1u << n) && fail.empty(); ++mask) {
    VertexSet h;
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask >> i & 1u) h.insert(VertexId{i});
    if (!is_hereditary(g, h)) continue;
    for (VertexId v : hs_closure(g, h).vertices) {
      if (h.count(v)) continue;
      Element sum = alg.zero();
      for (const Path &p : paths_to_H(g, v, h)) sum += alg.path(p) * alg.ghost(p);
      ++pairs;
      if (!(sum == alg.vertex(v))) {
        fail = "v=" + g.name(v) + ", H=" + vertex_set_to_string(g, h) + ": sum is " + sum.to_string();
        break;
      }
    }
  }
  rec.add("pi_identity", fail.empty(), fail.empty() ? std::to_string(pairs) + " pairs" : fail);
}

void check_comet(Recorder &rec, const Algebra &alg, const BatteryOptions &opts) {
  CometIso iso(alg);
  VertexId v0 = iso.base();
  ElementSampler smp(alg, opts.seed + 3);
  std::vector<LaurentPoly> ps = {Rational(1), LaurentPoly::monomial(1), LaurentPoly::monomial(-1),
                                 LaurentPoly::parse("2*x^3 - x^-2")};

  std::string fail;
  std::vector<CentralizerSeed> seeds;
  for (const auto &p : ps) {
    CentralizerSeed s = comet_centralizer_from_laurent(alg, p);
    if (!validate_seed(alg, s).valid) fail = "seed for " + p.to_string() + " is invalid";
    LaurentExtract back = laurent_extract(alg, iso.cycle(), omega(s, v0));
    if (fail.empty() && (!back.poly || !(*back.poly == p))) fail = "laurent_extract does not return " + p.to_string();
    LaurentMatrix img = iso.apply(s.at(v0));
    LaurentMatrix want(iso.size());
    want.at(0, 0) = p;
    if (fail.empty() && !(img == want)) fail = "corner image of tau(v0) for " + p.to_string() + " is " + img.to_string();
    seeds.push_back(std::move(s));
  }
  rec.add("comet_construction", fail.empty(), fail);

  fail.clear();
  for (std::size_t i = 0; i < ps.size() && fail.empty(); ++i)
    for (std::size_t j = 0; j < ps.size() && fail.empty(); ++j) {
      CentralizerSeed prod = comet_centralizer_from_laurent(alg, ps[i] * ps[j]);
      for (int k = 0; k < 10; ++k) {
        Element y = smp.element();
        if (!(evaluate_unchecked(alg, seeds[i], evaluate_unchecked(alg, seeds[j], y)) ==
              evaluate_unchecked(alg, prod, y))) {
          fail = "tau_p tau_q != tau_pq for p=" + ps[i].to_string() + ", q=" + ps[j].to_string();
          break;
        }
      }
    }
  rec.add("comet_multiplicative", fail.empty(), fail);

  fail.clear();
  for (std::size_t i = 0; i < opts.iso_pairs && fail.empty(); ++i) {
    Element x = smp.element(), y = smp.element();
    if (!(iso.apply(x * y) == iso.apply(x) * iso.apply(y)))
      fail = "phi(xy) != phi(x)phi(y) at x=" + x.to_string() + ", y=" + y.to_string();
    else if (!(iso.apply(alg.involution(x)) == iso.apply(x).conjugate_transpose()))
      fail = "phi(x*) != phi(x)^* at x=" + x.to_string();
  }
  rec.add("comet_iso_homomorphism", fail.empty(), fail);

  std::vector<Walk> basis = basis_walks(alg, 3);
  long lo = 0, hi = 0;
  std::vector<LaurentMatrix> images;
  for (const Walk &w : basis) {
    images.push_back(iso.apply(w));
    for (std::size_t a = 0; a < iso.size(); ++a)
      for (std::size_t b = 0; b < iso.size(); ++b)
        if (!images.back().at(a, b).is_zero()) {
          lo = std::min(lo, images.back().at(a, b).min_exponent());
          hi = std::max(hi, images.back().at(a, b).max_exponent());
        }
  }
  std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  EchelonSolver solver(iso.size() * iso.size() * width);
  std::size_t rank = 0;
  for (const auto &m : images) rank += solver.add_row(matrix_coords(m, lo, hi));
  rec.add("comet_iso_injective", rank == basis.size(),
          std::to_string(rank) + " of " + std::to_string(basis.size()) + " basis images independent");
}

} // namespace

std::vector<BatteryResult> run_graph_battery(const Graph &g, const std::string &name, const BatteryOptions &opts) {
  Recorder rec{name, {}};
  auto want = [&](unsigned flag) { return (opts.checks & flag) != 0; };
  Classification cl = classify(g);
  if (want(kCheckCertify)) {
    CertifyReport cr = certify(g, cl, opts.degree);
    rec.add("certify", cr.ok(), cr.ok() ? to_string(cl.verdict) : cr.first_failure());
  }
  if (!g.row_finite()) return rec.results;

  Algebra alg(g);
  if (want(kCheckRelations)) {
    VerifyRelationsReport rel = verify_relations(alg);
    std::string relfail;
    for (const auto &f : rel.families)
      if (!f.passed && relfail.empty()) relfail = f.name + ": " + f.counterexample;
    rec.add("relations", rel.all_passed(), relfail);
  }

  if (want(kCheckAssociativity)) {
    ElementSampler smp(alg, opts.seed);
    std::string assoc;
    for (std::size_t i = 0; i < opts.assoc_triples; ++i) {
      Element x = smp.element(), y = smp.element(), z = smp.element();
      if (!((x * y) * z == x * (y * z))) {
        assoc = "x=" + x.to_string() + ", y=" + y.to_string() + ", z=" + z.to_string();
        break;
      }
    }
    rec.add("associativity", assoc.empty(), assoc);
  }

  // Same size gate as certify, so every certified graph gets its seeds checked.
  if (want(kCheckSeeds) && g.num_vertices() <= 10 && seed_space_unknowns(alg, opts.degree + 1) <= kSeedBudget)
    check_seeds(rec, alg, opts);
  if (want(kCheckSMap) && !cycles(g).empty()) check_smap(rec, alg, opts);
  if (want(kCheckPiIdentity) && g.num_vertices() <= 8) check_pi_identity(rec, alg);
  if (want(kCheckComet) && cl.verdict == Verdict::PrimeLaurent) check_comet(rec, alg, opts);

  if (want(kCheckAcyclicCorners) && cycles(g).empty()) {
    bool mt3_holds = mt3(g).holds;
    std::string fail;
    for (VertexId u : g.vertices()) {
      std::vector<Element> z = acyclic_corner_center(alg, u);
      if (mt3_holds) {
        if (z.size() != 1 || !(z[0].size() == 1 && z[0].terms().begin()->first == Walk{Path::vertex(u), Path::vertex(u)}))
          fail = "centre at " + g.name(u) + " is not Q*" + g.name(u);
      } else {
        for (const Element &e : z)
          for (const auto &[w, c] : e.terms())
            if (!(w.alpha == w.beta)) fail = "centre at " + g.name(u) + " has term " + alg.walk_to_string(w);
      }
      if (!fail.empty()) break;
    }
    rec.add("acyclic_corner_center", fail.empty(), fail);
  }
  return rec.results;
}

std::vector<BatteryResult> run_limit_battery(std::size_t stages, std::size_t d) {
  Recorder rec{"<limits>", {}};
  LimitReport lr = inverse_limit_stabilize(MatrixTower::corner_tower(stages), d);
  rec.add("tower_stabilized", lr.stabilized && lr.limit == "K[x,x^-1]", lr.limit);
  rec.add("sigma_composition", lr.composition_ok);
  LimitReport kr = inverse_limit_stabilize(MatrixTower::constant_tower(stages), d);
  rec.add("constant_tower", kr.stabilized && kr.limit == "K", kr.limit);
  std::string fail;
  for (std::size_t n = 1; n <= 3; ++n) {
    MatrixCenter c = matrix_center(n, d);
    if (!c.all_scalar || c.basis.size() != 2 * d + 1) fail = "n=" + std::to_string(n);
  }
  rec.add("matrix_center_scalar", fail.empty(), fail);
  return rec.results;
}

bool VerifyReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const BatteryResult &r) { return r.passed; });
}

VerifyReport verify_corpus(const std::string &dir, const BatteryOptions &opts) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::invalid_argument("not a directory: " + dir);
  VerifyReport rep;
  rep.seed = opts.seed;
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".graph") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) rep.warnings.push_back("no .graph files in " + dir);

  struct Outcome {
    std::vector<BatteryResult> results;
    std::vector<std::string> warnings;
  };
  std::vector<std::future<Outcome>> jobs;
  for (const fs::path &f : files)
    jobs.push_back(std::async(std::launch::async, [f, opts] {
      Outcome out;
      std::string name = f.filename().string();
      Graph g;
      try {
        g = load_graph(f.string());
      } catch (const std::exception &e) {
        out.results.push_back(BatteryResult{name, "parse", false, e.what()});
        return out;
      }
      fs::path sidecar = f;
      sidecar.replace_extension(".cert.json");
      if (fs::exists(sidecar)) {
        try {
          std::ifstream in(sidecar);
          json j = json::parse(in);
          Classification claimed = classification_from_json(g, j);
          Classification actual = classify(g);
          CertifyReport cr = certify(g, claimed, opts.degree);
          std::string detail = cr.first_failure();
          if (detail.empty() && (claimed.verdict != actual.verdict || claimed.branch != actual.branch))
            detail = "sidecar claims " + to_string(claimed.verdict) + "/" + to_string(claimed.branch) + ", classify gives " +
                     to_string(actual.verdict) + "/" + to_string(actual.branch);
          out.results.push_back(BatteryResult{name, "sidecar_certificate", detail.empty(), detail});
        } catch (const std::exception &e) {
          out.results.push_back(BatteryResult{name, "sidecar_certificate", false, e.what()});
        }
      } else {
        out.warnings.push_back(name + ": no certificate sidecar");
      }
      try {
        auto rs = run_graph_battery(g, name, opts);
        out.results.insert(out.results.end(), rs.begin(), rs.end());
      } catch (const std::exception &e) {
        out.results.push_back(BatteryResult{name, "battery", false, e.what()});
      }
      return out;
    }));
  for (auto &j : jobs) {
    Outcome o = j.get();
    rep.results.insert(rep.results.end(), o.results.begin(), o.results.end());
    rep.warnings.insert(rep.warnings.end(), o.warnings.begin(), o.warnings.end());
  }
  auto lim = run_limit_battery();
  rep.results.insert(rep.results.end(), lim.begin(), lim.end());
  return rep;
}

json verify_json(const VerifyReport &rep) {
  json out;
  out["seed"] = rep.seed;
  out["ok"] = rep.ok();
  json rs = json::array();
  for (const auto &r : rep.results)
    rs.push_back({{"graph", r.graph}, {"check", r.check}, {"passed", r.passed}, {"detail", r.detail}});
  out["results"] = rs;
  out["warnings"] = rep.warnings;
  return out;
}

} // namespace lpa
