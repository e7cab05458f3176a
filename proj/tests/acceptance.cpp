// Acceptance runner: one PASS/FAIL line per criterion, each with a time limit.
#include "lpa/battery.hpp"
#include "lpa/centroid.hpp"
#include "lpa/classifier.hpp"
#include "lpa/limits.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#ifndef LPA_CORPUS_DIR
#define LPA_CORPUS_DIR "corpus"
#endif

namespace fs = std::filesystem;
using namespace lpa;

namespace {

struct CorpusGraph {
  std::string name;
  Graph graph;
  Classification cl;
};

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string &why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::vector<CorpusGraph> load_corpus(const std::string &dir) {
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".graph") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusGraph> out;
  for (const auto &f : files) {
    Graph g = load_graph(f.string());
    Classification cl = classify(g);
    out.push_back(CorpusGraph{f.filename().string(), std::move(g), std::move(cl)});
  }
  return out;
}

// Runs the selected battery families on every graph, keeping the named checks.
Outcome battery(const std::vector<CorpusGraph> &corpus, unsigned checks, const std::set<std::string> &names,
                std::size_t *count = nullptr) {
  Outcome out;
  BatteryOptions opts;
  opts.checks = checks;
  std::size_t seen = 0;
  for (const auto &cg : corpus)
    for (const auto &r : run_graph_battery(cg.graph, cg.name, opts)) {
      if (!names.count(r.check)) continue;
      ++seen;
      if (!r.passed) out.fail(cg.name + " " + r.check + ": " + r.detail);
    }
  if (count) *count = seen;
  if (out.passed) out.detail = std::to_string(seen) + " checks";
  return out;
}

Outcome conformance(const std::vector<CorpusGraph> &corpus, const std::string &dir) {
  Outcome out;
  if (corpus.size() < 20) out.fail("corpus has only " + std::to_string(corpus.size()) + " graphs");

  std::set<Branch> branches;
  std::set<Verdict> verdicts;
  std::map<std::string, const CorpusGraph *> by_stem;
  for (const auto &cg : corpus) {
    branches.insert(cg.cl.branch);
    verdicts.insert(cg.cl.verdict);
    by_stem[fs::path(cg.name).stem().string()] = &cg;
  }
  for (Branch b : {Branch::Acyclic, Branch::CycleWithExits, Branch::InfiniteEmitter, Branch::Comet})
    if (!branches.count(b)) out.fail("no corpus graph reaches branch " + to_string(b));
  for (Verdict v : {Verdict::NotPrime, Verdict::SimpleK, Verdict::PrimeK, Verdict::PrimeLaurent})
    if (!verdicts.count(v)) out.fail("no corpus graph has verdict " + to_string(v));

  auto expect = [&](const std::string &stem, Verdict v, Branch b) {
    auto it = by_stem.find(stem);
    if (it == by_stem.end()) return out.fail("missing required graph " + stem);
    if (it->second->cl.verdict != v || it->second->cl.branch != b)
      out.fail(stem + " classified as " + to_string(it->second->cl.verdict) + "/" + to_string(it->second->cl.branch));
  };
  for (const char *e : {"e1", "e2", "e3"}) expect(e, Verdict::PrimeK, Branch::CycleWithExits);
  for (const char *a : {"comet_a2", "comet_a3"}) expect(a, Verdict::PrimeLaurent, Branch::Comet);
  expect("rose2", Verdict::SimpleK, Branch::CycleWithExits);
  expect("flagged_comet", Verdict::PrimeK, Branch::InfiniteEmitter);
  expect("two_sinks", Verdict::NotPrime, Branch::None);

  std::size_t dims_checked = 0, skipped = 0;
  for (const auto &cg : corpus) {
    CertifyReport cr = certify(cg.graph, cg.cl, 3);
    if (!cr.ok()) out.fail(cg.name + ": " + cr.first_failure());
    fs::path sidecar = fs::path(dir) / (fs::path(cg.name).stem().string() + ".cert.json");
    if (fs::exists(sidecar)) {
      std::ifstream in(sidecar);
      Classification claimed = classification_from_json(cg.graph, nlohmann::json::parse(in));
      if (claimed.verdict != cg.cl.verdict || claimed.branch != cg.cl.branch)
        out.fail(cg.name + ": sidecar disagrees with classify");
    }
    if (!cg.graph.row_finite() || cg.graph.num_vertices() > 10) continue;
    if (!cr.seed_dims) {
      ++skipped;
      continue;
    }
    ++dims_checked;
    auto [a, b] = *cr.seed_dims;
    if (cg.cl.verdict == Verdict::PrimeLaurent) {
      if (a != 7 || b != 9) out.fail(cg.name + ": Laurent dims " + std::to_string(a) + "," + std::to_string(b));
    } else if (cg.cl.verdict != Verdict::NotPrime) {
      if (a != 1 || b != 1) out.fail(cg.name + ": K dims " + std::to_string(a) + "," + std::to_string(b));
    }
  }
  if (out.passed)
    out.detail = std::to_string(corpus.size()) + " graphs certified; seed dims checked on " +
                 std::to_string(dims_checked) + " (" + std::to_string(skipped) + " over budget)";
  return out;
}

Outcome limits() {
  Outcome out;
  for (const auto &r : run_limit_battery(5, 3))
    if (!r.passed) out.fail(r.check + ": " + r.detail);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t d = 0; d <= 3; ++d)
      if (!matrix_center(n, d).all_scalar) out.fail("non-scalar centre at n=" + std::to_string(n));
  // Composition on every triple i < j < k of the five-stage tower.
  MatrixTower t = MatrixTower::corner_tower(5);
  LaurentPoly p = LaurentPoly::parse("2*x^3 - x^-2");
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      for (std::size_t k = j + 1; k < 5; ++k) {
        LaurentMatrix z = LaurentMatrix::scalar(t.sizes[k], p);
        if (!(sigma_map(t.between(i, j), sigma_map(t.between(j, k), z)) == sigma_map(t.between(i, k), z)))
          out.fail("sigma composition fails on (" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + ")");
      }
  if (out.passed) out.detail = "M1..M5 stabilized at K[x,x^-1]";
  return out;
}

Outcome acyclic(const std::vector<CorpusGraph> &corpus) {
  bool mt3_seen = false, non_mt3_seen = false;
  for (const auto &cg : corpus)
    if (cg.graph.row_finite() && cycles(cg.graph).empty()) (mt3(cg.graph).holds ? mt3_seen : non_mt3_seen) = true;
  Outcome out = battery(corpus, kCheckAcyclicCorners, {"acyclic_corner_center"});
  if (!mt3_seen) out.fail("no acyclic MT3 graph in the corpus");
  if (!non_mt3_seen) out.fail("no acyclic non-MT3 graph in the corpus");
  return out;
}

} // namespace

int main(int argc, char **argv) {
  std::string dir = argc > 1 ? argv[1] : LPA_CORPUS_DIR;
  std::vector<CorpusGraph> corpus;
  try {
    corpus = load_corpus(dir);
  } catch (const std::exception &e) {
    std::cout << "FAIL corpus could not be loaded: " << e.what() << "\n";
    return 1;
  }

  struct Criterion {
    int id;
    std::string title;
    double limit_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "classification conformance", 60, [&] { return conformance(corpus, dir); }},
      {2, "relations and ring axioms", 30,
       [&] { return battery(corpus, kCheckRelations | kCheckAssociativity, {"relations", "associativity"}); }},
      {3, "centroid law and uniqueness", 30,
       [&] { return battery(corpus, kCheckSeeds, {"seed_basis_valid", "centroid_law", "uniqueness"}); }},
      {4, "constructive comet centroid", 10,
       [&] { return battery(corpus, kCheckComet, {"comet_construction", "comet_multiplicative"}); }},
      {5, "S-map collapse", 10, [&] { return battery(corpus, kCheckSMap, {"smap_collapse"}); }},
      {6, "Pi-identity", 10, [&] { return battery(corpus, kCheckPiIdentity, {"pi_identity"}); }},
      {7, "limits", 10, [] { return limits(); }},
      {8, "comet isomorphism", 10,
       [&] {
         return battery(corpus, kCheckComet, {"comet_construction", "comet_iso_homomorphism", "comet_iso_injective"});
       }},
      {9, "acyclic corners", 10, [&] { return acyclic(corpus); }},
  };

  bool all = true;
  for (const auto &c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) o.fail("took longer than the limit");
    all = all && o.passed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.passed ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << secs << " s, limit "
         << c.limit_s << " s): " << o.detail;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
