#include "lpa/classifier.hpp"
#include "lpa/algebra.hpp"
#include "lpa/centroid.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <filesystem>
#include <future>
#include <stdexcept>

namespace lpa {

using nlohmann::json;

namespace {

using Reach = std::vector<std::vector<char>>;

// Floyd-Warshall over declared edges; independent of the BFS in structure.cpp.
Reach reach_matrix(const Graph &g) {
  std::size_t n = g.num_vertices();
  Reach r(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  for (EdgeId e : g.edges()) r[index(g.source(e))][index(g.range(e))] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  return r;
}

bool common_descendant(const Reach &r, std::size_t a, std::size_t b) {
  for (std::size_t u = 0; u < r.size(); ++u)
    if (r[a][u] && r[b][u]) return true;
  return false;
}

// Kahn's algorithm restricted to `keep`; empty optional if a cycle remains.
std::optional<std::vector<VertexId>> kahn_order(const Graph &g, const std::vector<char> &keep) {
  std::size_t n = g.num_vertices();
  std::vector<std::size_t> indeg(n, 0);
  for (EdgeId e : g.edges())
    if (keep[index(g.source(e))] && keep[index(g.range(e))]) ++indeg[index(g.range(e))];
  std::deque<VertexId> ready;
  std::size_t total = 0;
  for (VertexId v : g.vertices()) {
    if (!keep[index(v)]) continue;
    ++total;
    if (indeg[index(v)] == 0) ready.push_back(v);
  }
  std::vector<VertexId> order;
  while (!ready.empty()) {
    VertexId v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (EdgeId e : g.out_edges(v)) {
      VertexId w = g.range(e);
      if (keep[index(w)] && --indeg[index(w)] == 0) ready.push_back(w);
    }
  }
  if (order.size() != total) return std::nullopt;
  return order;
}

// Closed, consecutive, distinct sources.
std::string cycle_problem(const Graph &g, const Path &rep) {
  if (rep.edges.empty()) return "cycle has no edges";
  std::set<VertexId> seen;
  for (std::size_t i = 0; i < rep.edges.size(); ++i) {
    EdgeId e = rep.edges[i];
    EdgeId next = rep.edges[(i + 1) % rep.edges.size()];
    if (g.range(e) != g.source(next)) return "edges " + g.name(e) + " and " + g.name(next) + " do not chain";
    if (!seen.insert(g.source(e)).second) return "vertex " + g.name(g.source(e)) + " repeats";
  }
  return "";
}

std::optional<EdgeId> cycle_edge_at(const Graph &g, const Path &rep, VertexId v) {
  for (EdgeId e : rep.edges)
    if (g.source(e) == v) return e;
  return std::nullopt;
}

std::string exit_problem(const Graph &g, const Path &rep, const Exit &x) {
  auto on_cycle = cycle_edge_at(g, rep, x.vertex);
  if (!on_cycle) return "exit vertex " + g.name(x.vertex) + " is not on the cycle";
  if (!x.edge) {
    if (!g.inf_emitter(x.vertex)) return "implicit exit at unflagged vertex " + g.name(x.vertex);
    return "";
  }
  if (g.source(*x.edge) != x.vertex) return "edge " + g.name(*x.edge) + " does not start at " + g.name(x.vertex);
  if (*x.edge == *on_cycle) return "edge " + g.name(*x.edge) + " is the cycle edge";
  return "";
}

json names(const Graph &g, const std::vector<VertexId> &vs) {
  json out = json::array();
  for (VertexId v : vs) out.push_back(g.name(v));
  return out;
}

json names(const Graph &g, const VertexSet &vs) { return names(g, std::vector<VertexId>(vs.begin(), vs.end())); }

json edge_names(const Graph &g, const std::vector<EdgeId> &es) {
  json out = json::array();
  for (EdgeId e : es) out.push_back(g.name(e));
  return out;
}

VertexId vertex_named(const Graph &g, const json &j) {
  if (!j.is_string()) throw std::invalid_argument("certificate: expected a vertex name");
  auto v = g.find_vertex(j.get<std::string>());
  if (!v) throw std::invalid_argument("certificate: unknown vertex '" + j.get<std::string>() + "'");
  return *v;
}

EdgeId edge_named(const Graph &g, const json &j) {
  if (!j.is_string()) throw std::invalid_argument("certificate: expected an edge name");
  auto e = g.find_edge(j.get<std::string>());
  if (!e) throw std::invalid_argument("certificate: unknown edge '" + j.get<std::string>() + "'");
  return *e;
}

} // namespace

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::NotPrime: return "NotPrime";
  case Verdict::SimpleK: return "Simple_K";
  case Verdict::PrimeK: return "Prime_K";
  case Verdict::PrimeLaurent: return "Prime_Laurent";
  case Verdict::Unsupported: break;
  }
  return "Unsupported";
}

std::string to_string(Branch b) {
  switch (b) {
  case Branch::Acyclic: return "Acyclic";
  case Branch::CycleWithExits: return "CycleWithExits";
  case Branch::InfiniteEmitter: return "InfiniteEmitter";
  case Branch::UniqueNoExitCycle_NonComet: return "UniqueNoExitCycle_NonComet";
  case Branch::Comet: return "Comet";
  case Branch::None: break;
  }
  return "None";
}

Verdict verdict_from_string(const std::string &s) {
  for (Verdict v : {Verdict::NotPrime, Verdict::SimpleK, Verdict::PrimeK, Verdict::PrimeLaurent, Verdict::Unsupported})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

Branch branch_from_string(const std::string &s) {
  for (Branch b : {Branch::None, Branch::Acyclic, Branch::CycleWithExits, Branch::InfiniteEmitter,
                   Branch::UniqueNoExitCycle_NonComet, Branch::Comet})
    if (to_string(b) == s) return b;
  throw std::invalid_argument("unknown branch '" + s + "'");
}

std::string centroid_name(Verdict v) {
  switch (v) {
  case Verdict::SimpleK:
  case Verdict::PrimeK: return "K";
  case Verdict::PrimeLaurent: return "K[x,x^-1]";
  default: return "n/a";
  }
}

Classification classify(const Graph &g) {
  Classification cl;
  Certificate &cert = cl.certificate;
  Mt3Result m = mt3(g);
  if (!m.holds) {
    cl.verdict = Verdict::NotPrime;
    cert.mt3_witness = m.witness;
    return cl;
  }

  std::vector<VertexSet> trees;
  for (VertexId v : g.vertices()) trees.push_back(tree(g, v));
  for (VertexId v : g.vertices())
    for (VertexId w : g.vertices()) {
      if (index(w) <= index(v) || cert.mt3_bounds.size() >= 64) continue;
      for (VertexId u : trees[index(v)])
        if (trees[index(w)].count(u)) {
          cert.mt3_bounds.emplace_back(v, w, u);
          break;
        }
    }

  if (g.row_finite()) cl.simple = is_simple(g);
  cl.verdict = Verdict::PrimeK;
  auto cs = cycles(g);
  if (cs.empty()) {
    cl.branch = Branch::Acyclic;
    cert.topological_order = kahn_order(g, std::vector<char>(g.num_vertices(), 1));
  } else {
    for (const Cycle &c : cs) {
      auto exits = cycle_exits(g, c);
      if (!exits.empty()) {
        cl.branch = Branch::CycleWithExits;
        cert.cycle = c;
        cert.exit = exits.front();
        break;
      }
    }
    if (cl.branch == Branch::None) {
      auto kinds = vertex_kinds(g);
      if (!kinds.inf_emitters.empty()) {
        cl.branch = Branch::InfiniteEmitter;
        cert.emitter = kinds.inf_emitters.front();
      } else {
        CometResult cr = is_comet(g);
        cert.cycle = cr.cycle ? *cr.cycle : cs.front();
        if (cr.is_comet) {
          cl.branch = Branch::Comet;
          cl.verdict = Verdict::PrimeLaurent;
        } else {
          cl.branch = Branch::UniqueNoExitCycle_NonComet;
          for (VertexId v : g.vertices()) {
            bool hits = false;
            for (VertexId w : cert.cycle->vertex_set) hits = hits || reaches(g, v, w);
            if (!hits) {
              cert.stray_vertex = v;
              break;
            }
          }
        }
      }
    }
  }
  if (cl.verdict == Verdict::PrimeK && cl.simple.value_or(false)) cl.verdict = Verdict::SimpleK;
  return cl;
}

bool CertifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CertifyCheck &c) { return c.passed; });
}

std::string CertifyReport::first_failure() const {
  for (const auto &c : checks)
    if (!c.passed) return c.name + ": " + c.detail;
  return "";
}

CertifyReport certify(const Graph &g, const Classification &cl, std::size_t d) {
  CertifyReport rep;
  rep.degree = d;
  auto check = [&](std::string name, bool passed, std::string detail = "") {
    rep.checks.push_back(CertifyCheck{std::move(name), passed, std::move(detail)});
  };
  const Certificate &cert = cl.certificate;
  Reach reach = reach_matrix(g);
  std::size_t n = g.num_vertices();

  std::optional<std::pair<std::size_t, std::size_t>> bad_pair;
  for (std::size_t a = 0; a < n && !bad_pair; ++a)
    for (std::size_t b = a + 1; b < n && !bad_pair; ++b)
      if (!common_descendant(reach, a, b)) bad_pair = std::make_pair(a, b);

  if (cl.verdict == Verdict::Unsupported) {
    check("verdict", false, "Unsupported verdict on a valid graph");
    return rep;
  }
  if (cl.verdict == Verdict::NotPrime) {
    if (!cert.mt3_witness) {
      check("mt3_witness", false, "missing");
    } else {
      auto [v, w] = *cert.mt3_witness;
      bool ok = !common_descendant(reach, index(v), index(w));
      check("mt3_witness", ok,
            ok ? "" : g.name(v) + " and " + g.name(w) + " have a common descendant");
    }
  } else {
    check("mt3", !bad_pair,
          bad_pair ? "no common descendant for " + g.name(VertexId(bad_pair->first)) + " and " +
                         g.name(VertexId(bad_pair->second))
                   : "");
    for (const auto &[v, w, u] : cert.mt3_bounds)
      if (!reach[index(v)][index(u)] || !reach[index(w)][index(u)]) {
        check("mt3_bounds", false, g.name(u) + " is not below both " + g.name(v) + " and " + g.name(w));
        break;
      }
  }

  std::vector<char> all(n, 1);
  bool acyclic = kahn_order(g, all).has_value();
  switch (cl.branch) {
  case Branch::None:
    check("branch", cl.verdict == Verdict::NotPrime, "prime verdict without a branch");
    break;
  case Branch::Acyclic: {
    bool ok = cert.topological_order && cert.topological_order->size() == n;
    if (ok) {
      std::vector<std::size_t> pos(n, n);
      for (std::size_t i = 0; i < n; ++i) pos[index((*cert.topological_order)[i])] = i;
      for (EdgeId e : g.edges()) ok = ok && pos[index(g.source(e))] < pos[index(g.range(e))];
    }
    check("topological_order", ok, ok ? "" : "order is missing or an edge points backwards");
    check("acyclic", acyclic, acyclic ? "" : "graph has a cycle");
    break;
  }
  case Branch::CycleWithExits: {
    if (!cert.cycle || !cert.exit) {
      check("cycle_exit", false, "missing cycle or exit");
      break;
    }
    std::string cp = cycle_problem(g, cert.cycle->rep);
    check("cycle", cp.empty(), cp);
    std::string ep = exit_problem(g, cert.cycle->rep, *cert.exit);
    check("exit", ep.empty(), ep);
    break;
  }
  case Branch::InfiniteEmitter: {
    bool ok = cert.emitter && g.inf_emitter(*cert.emitter);
    check("emitter", ok, ok ? "" : "emitter is missing or not flagged");
    break;
  }
  case Branch::Comet:
  case Branch::UniqueNoExitCycle_NonComet: {
    if (!cert.cycle) {
      check("cycle", false, "missing");
      break;
    }
    std::string cp = cycle_problem(g, cert.cycle->rep);
    check("cycle", cp.empty(), cp);
    if (!cp.empty()) break;
    check("row_finite", g.row_finite(), g.row_finite() ? "" : "graph has an infinite emitter");
    bool no_exit = true;
    for (EdgeId e : cert.cycle->rep.edges)
      no_exit = no_exit && g.out_edges(g.source(e)).size() == 1 && !g.inf_emitter(g.source(e));
    check("no_exit", no_exit, no_exit ? "" : "cycle has an exit");
    std::vector<char> off(n, 1);
    for (EdgeId e : cert.cycle->rep.edges) off[index(g.source(e))] = 0;
    std::optional<VertexId> stray;
    for (VertexId v : g.vertices()) {
      bool hits = false;
      for (EdgeId e : cert.cycle->rep.edges) hits = hits || reach[index(v)][index(g.source(e))];
      if (!hits && !stray) stray = v;
    }
    if (cl.branch == Branch::Comet) {
      check("connects", !stray, stray ? g.name(*stray) + " does not reach the cycle" : "");
      bool unique = kahn_order(g, off).has_value();
      check("unique_cycle", unique, unique ? "" : "another cycle avoids the comet cycle");
    } else {
      bool ok = cert.stray_vertex.has_value();
      for (EdgeId e : cert.cycle->rep.edges)
        ok = ok && !reach[index(*cert.stray_vertex)][index(g.source(e))];
      check("stray_vertex", ok, ok ? "" : "stray vertex missing or reaches the cycle");
    }
    break;
  }
  }

  bool expect_laurent = cl.verdict == Verdict::PrimeLaurent;
  if (cl.verdict == Verdict::SimpleK || (cl.simple && cl.verdict != Verdict::NotPrime)) {
    bool simple = false;
    if (g.row_finite() && n <= 20) {
      auto subsets = hs_subsets(g);
      bool cycles_exit = true;
      for (const Cycle &c : cycles(g)) cycles_exit = cycles_exit && !cycle_exits(g, c).empty();
      simple = subsets.size() == (n == 0 ? 1 : 2) && cycles_exit;
    }
    bool claimed = cl.verdict == Verdict::SimpleK;
    check("simple", simple == claimed, claimed ? "graph is not simple" : "graph is simple");
  }

  if (g.row_finite() && n <= 10) {
    Algebra alg(g);
    std::size_t estimate = seed_space_unknowns(alg, d + 1);
    if (estimate > kSeedBudget) {
      rep.seed_note = "seed-space check skipped: about " + std::to_string(estimate) + " unknowns at degree " +
                      std::to_string(d + 1);
    } else {
      std::size_t a = seed_space(alg, d).dimension();
      std::size_t b = seed_space(alg, d + 1).dimension();
      rep.seed_dims = std::make_pair(a, b);
      if (cl.verdict == Verdict::NotPrime) {
        rep.stable = a == b;
      } else {
        std::size_t ea = expect_laurent ? 2 * d + 1 : 1;
        std::size_t eb = expect_laurent ? 2 * d + 3 : 1;
        rep.stable = a == ea && b == eb;
        check("seed_dims", *rep.stable,
              "expected " + std::to_string(ea) + "," + std::to_string(eb) + " got " + std::to_string(a) + "," +
                  std::to_string(b));
      }
    }
  }
  return rep;
}

json properties_json(const Graph &g) {
  json p;
  p["vertices"] = g.num_vertices();
  p["edges"] = g.num_edges();
  p["row_finite"] = g.row_finite();
  VertexKinds k = vertex_kinds(g);
  p["sinks"] = names(g, k.sinks);
  p["regular"] = names(g, k.regular);
  p["inf_emitters"] = names(g, k.inf_emitters);
  json cs = json::array();
  auto all_cycles = cycles(g);
  for (const Cycle &c : all_cycles) {
    json exits = json::array();
    for (const Exit &x : cycle_exits(g, c))
      exits.push_back({{"vertex", g.name(x.vertex)}, {"edge", x.edge ? json(g.name(*x.edge)) : json(nullptr)}});
    cs.push_back({{"path", path_to_string(g, c.rep)}, {"vertices", names(g, c.vertex_set)}, {"exits", exits}});
  }
  p["cycles"] = cs;
  p["acyclic"] = all_cycles.empty();
  p["condition_L"] = condition_L(g);
  Mt3Result m = mt3(g);
  p["mt3"] = m.holds;
  p["mt3_witness"] = m.witness ? json::array({g.name(m.witness->first), g.name(m.witness->second)}) : json(nullptr);
  if (g.row_finite()) {
    CometResult cr = is_comet(g);
    p["comet"] = cr.is_comet;
    p["comet_reason"] = cr.reason;
    p["graded_simple"] = is_graded_simple(g);
    p["simple"] = is_simple(g);
    p["basis"] = BasisChoice::last_declared(g).describe(g);
  } else {
    p["comet"] = nullptr;
    p["comet_reason"] = "comet test requires row-finite graph";
    p["graded_simple"] = nullptr;
    p["simple"] = nullptr;
    p["basis"] = nullptr;
  }
  if (g.num_vertices() <= 8) {
    json hs = json::array();
    for (const VertexSet &h : hs_subsets(g)) hs.push_back(names(g, h));
    p["hs_subsets"] = hs;
  } else {
    p["hs_subsets"] = nullptr;
  }
  return p;
}

json certificate_json(const Graph &g, const Classification &cl) {
  const Certificate &c = cl.certificate;
  json j = json::object();
  if (c.mt3_witness) j["mt3_witness"] = {g.name(c.mt3_witness->first), g.name(c.mt3_witness->second)};
  if (!c.mt3_bounds.empty()) {
    json b = json::array();
    for (const auto &[v, w, u] : c.mt3_bounds) b.push_back({g.name(v), g.name(w), g.name(u)});
    j["mt3_bounds"] = b;
  }
  if (c.topological_order) j["topological_order"] = names(g, *c.topological_order);
  if (c.cycle) j["cycle"] = edge_names(g, c.cycle->rep.edges);
  if (c.exit) j["exit"] = {{"vertex", g.name(c.exit->vertex)}, {"edge", c.exit->edge ? json(g.name(*c.exit->edge)) : json(nullptr)}};
  if (c.emitter) j["emitter"] = g.name(*c.emitter);
  if (c.stray_vertex) j["stray_vertex"] = g.name(*c.stray_vertex);
  if (cl.simple) j["simple"] = *cl.simple;
  return j;
}

json classification_json(const Graph &g, const Classification &cl) {
  return {{"verdict", to_string(cl.verdict)},
          {"branch", cl.branch == Branch::None ? json(nullptr) : json(to_string(cl.branch))},
          {"certificate", certificate_json(g, cl)}};
}

Classification classification_from_json(const Graph &g, const json &j) {
  if (!j.is_object() || !j.contains("verdict")) throw std::invalid_argument("certificate: missing verdict");
  Classification cl;
  cl.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  cl.branch = j.contains("branch") && !j.at("branch").is_null() ? branch_from_string(j.at("branch").get<std::string>())
                                                                 : Branch::None;
  const json c = j.value("certificate", json::object());
  Certificate &cert = cl.certificate;
  try {
    if (c.contains("mt3_witness"))
      cert.mt3_witness = std::make_pair(vertex_named(g, c.at("mt3_witness").at(0)), vertex_named(g, c.at("mt3_witness").at(1)));
    if (c.contains("mt3_bounds"))
      for (const json &t : c.at("mt3_bounds"))
        cert.mt3_bounds.emplace_back(vertex_named(g, t.at(0)), vertex_named(g, t.at(1)), vertex_named(g, t.at(2)));
    if (c.contains("topological_order")) {
      std::vector<VertexId> order;
      for (const json &v : c.at("topological_order")) order.push_back(vertex_named(g, v));
      cert.topological_order = order;
    }
    if (c.contains("cycle")) {
      std::vector<EdgeId> es;
      for (const json &e : c.at("cycle")) es.push_back(edge_named(g, e));
      if (es.empty()) throw std::invalid_argument("certificate: empty cycle");
      Cycle cy;
      cy.rep = Path{g.source(es.front()), es};
      for (EdgeId e : es) cy.vertex_set.insert(g.source(e));
      cert.cycle = cy;
    }
    if (c.contains("exit")) {
      const json &x = c.at("exit");
      Exit ex{vertex_named(g, x.at("vertex")), std::nullopt};
      if (!x.at("edge").is_null()) ex.edge = edge_named(g, x.at("edge"));
      cert.exit = ex;
    }
    if (c.contains("emitter")) cert.emitter = vertex_named(g, c.at("emitter"));
    if (c.contains("stray_vertex")) cert.stray_vertex = vertex_named(g, c.at("stray_vertex"));
    if (c.contains("simple")) cl.simple = c.at("simple").get<bool>();
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("certificate: malformed field: ") + e.what());
  }
  return cl;
}

json centroid_report(const Graph &g, const std::string &name, std::size_t d, const ReportOptions &opts) {
  auto t0 = std::chrono::steady_clock::now();
  json r;
  r["graph"] = {{"name", name}, {"vertices", g.num_vertices()}, {"edges", g.num_edges()}};
  r["properties"] = properties_json(g);
  Classification cl = classify(g);
  r["verdict"] = to_string(cl.verdict);
  r["centroid"] = centroid_name(cl.verdict);
  r["branch"] = cl.branch == Branch::None ? json(nullptr) : json(to_string(cl.branch));
  r["certificate"] = certificate_json(g, cl);
  r["degree"] = d;
  r["seed_dims"] = nullptr;
  r["stable"] = nullptr;
  if (opts.certify) {
    CertifyReport cr = certify(g, cl, d);
    json checks = json::array();
    for (const auto &c : cr.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    r["certification"] = {{"ok", cr.ok()}, {"checks", checks}, {"note", cr.seed_note}};
    if (cr.seed_dims)
      r["seed_dims"] = {{std::to_string(d), cr.seed_dims->first}, {std::to_string(d + 1), cr.seed_dims->second}};
    if (cr.stable) r["stable"] = *cr.stable;
  }
  if (opts.timings)
    r["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CorpusRow> corpus_run(const std::string &dir, std::size_t d, const ReportOptions &opts) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::invalid_argument("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".graph") files.push_back(entry.path());
  std::sort(files.begin(), files.end(), [](const fs::path &a, const fs::path &b) {
    return a.filename().string() < b.filename().string();
  });

  std::vector<std::future<CorpusRow>> jobs;
  for (const fs::path &f : files)
    jobs.push_back(std::async(std::launch::async, [f, d, opts] {
      CorpusRow row;
      row.file = f.filename().string();
      try {
        Graph g = load_graph(f.string());
        row.report = centroid_report(g, row.file, d, opts);
        row.certified = !opts.certify || row.report["certification"]["ok"].get<bool>();
      } catch (const std::exception &e) {
        row.error = true;
        row.message = e.what();
      }
      return row;
    }));
  std::vector<CorpusRow> rows;
  for (auto &j : jobs) rows.push_back(j.get());
  return rows;
}

json corpus_json(const std::vector<CorpusRow> &rows, std::size_t d) {
  json out;
  out["degree"] = d;
  json arr = json::array();
  std::size_t errors = 0, certified = 0;
  for (const CorpusRow &r : rows) {
    json row = {{"file", r.file}, {"error", r.error ? json(r.message) : json(nullptr)}, {"certified", r.certified}};
    if (!r.error) {
      for (const char *key : {"verdict", "branch", "centroid", "seed_dims", "stable", "properties", "certificate"})
        row[key] = r.report.at(key);
      if (r.report.contains("timing_ms")) row["timing_ms"] = r.report["timing_ms"];
    }
    errors += r.error;
    certified += r.certified && !r.error;
    arr.push_back(row);
  }
  out["graphs"] = arr;
  out["summary"] = {{"total", rows.size()}, {"certified", certified}, {"errors", errors}};
  return out;
}

} // namespace lpa
