#include "oracles.hpp"

#include "lpa/classifier.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

using namespace lpa;
namespace fs = std::filesystem;

namespace {

const char *kE2 = "vertex v2\nvertex v1\nvertex v0\nvertex vm1\nedge a2 v2 v1\nedge a1 v1 v0\n"
                  "edge l0 v0 v0\nedge x v0 vm1\nedge lm1 vm1 vm1\n";
const char *kA3 = "vertex v1\nvertex v2\nvertex v3\nedge e1 v1 v2\nedge e2 v2 v3\nedge c v3 v3\n";
const char *kRose = "vertex v\nedge e v v\nedge f v v\n";
const char *kLoop = "vertex v\nedge c v v\n";

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string &tag) {
    path = fs::temp_directory_path() / ("lpa_test_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string &name, const std::string &text) const { std::ofstream(path / name) << text; }
};

} // namespace

TEST_CASE("classify examples") {
  auto e2 = classify(parse_graph(kE2));
  CHECK(e2.verdict == Verdict::PrimeK);
  CHECK(e2.branch == Branch::CycleWithExits);
  CHECK(e2.certificate.exit);

  auto a3 = classify(parse_graph(kA3));
  CHECK(a3.verdict == Verdict::PrimeLaurent);
  CHECK(a3.branch == Branch::Comet);
  CHECK(a3.certificate.cycle);

  auto fl = classify(parse_graph("vertex u !inf\nvertex v\nedge e u v\nedge c v v\n"));
  CHECK(fl.verdict == Verdict::PrimeK);
  CHECK(fl.branch == Branch::InfiniteEmitter);
  CHECK(fl.certificate.emitter);

  Graph two = parse_graph("vertex s1\nvertex s2\n");
  auto np = classify(two);
  CHECK(np.verdict == Verdict::NotPrime);
  REQUIRE(np.certificate.mt3_witness);
  CHECK(two.name(np.certificate.mt3_witness->first) == "s1");
  CHECK(two.name(np.certificate.mt3_witness->second) == "s2");

  auto ac = classify(parse_graph("vertex a\nvertex b\nedge x a b\n"));
  CHECK(ac.branch == Branch::Acyclic);
  CHECK(ac.certificate.topological_order);

  CHECK(classify(parse_graph(kRose)).verdict == Verdict::SimpleK);
  CHECK(centroid_name(Verdict::PrimeLaurent) == "K[x,x^-1]");
  CHECK(centroid_name(Verdict::SimpleK) == "K");
}

TEST_CASE("certify cross-checks seed dimensions") {
  Graph rose = parse_graph(kRose);
  auto r = certify(rose, classify(rose), 3);
  CHECK(r.ok());
  REQUIRE(r.seed_dims);
  CHECK(*r.seed_dims == std::make_pair(std::size_t{1}, std::size_t{1}));

  Graph loop = parse_graph(kLoop);
  auto l = certify(loop, classify(loop), 3);
  CHECK(l.ok());
  REQUIRE(l.seed_dims);
  CHECK(*l.seed_dims == std::make_pair(std::size_t{7}, std::size_t{9}));
  CHECK(l.stable == true);
}

TEST_CASE("corrupted certificates fail with a witness") {
  Graph g = parse_graph(kE2);
  auto cl = classify(g);
  auto j = classification_json(g, cl);
  j["certificate"]["exit"]["edge"] = "l0";
  auto bad = classification_from_json(g, j);
  auto rep = certify(g, bad, 2);
  CHECK(!rep.ok());
  CHECK(rep.first_failure().find("l0") != std::string::npos);

  auto flipped = cl;
  flipped.verdict = Verdict::PrimeLaurent;
  flipped.branch = Branch::Comet;
  CHECK(!certify(g, flipped, 2).ok());

  // Round trip of an honest certificate.
  auto back = classification_from_json(g, classification_json(g, cl));
  CHECK(back.verdict == cl.verdict);
  CHECK(back.branch == cl.branch);
  CHECK(certify(g, back, 2).ok());
}

TEST_CASE("decision tree is exhaustive and consistent on random graphs") {
  std::mt19937_64 rng(20240641);
  for (int t = 0; t < 300; ++t) {
    Graph g = parse_graph(oracle::random_graph(rng, 5, 7, t % 4 == 0));
    auto cl = classify(g);
    CHECK(cl.verdict != Verdict::Unsupported);
    CHECK(cl.branch != Branch::UniqueNoExitCycle_NonComet); // unreachable for finite graphs
    if (cl.verdict == Verdict::NotPrime) continue;
    if (g.row_finite()) CHECK((cl.verdict == Verdict::PrimeLaurent) == is_comet(g).is_comet);
    if (g.row_finite() && is_simple(g)) CHECK(cl.verdict == Verdict::SimpleK);
    if (g.row_finite() && is_graded_simple(g) && !is_simple(g)) CHECK(cl.verdict == Verdict::PrimeLaurent);
    if (g.num_edges() <= 4) CHECK(certify(g, cl, 2).ok());
  }
}

TEST_CASE("properties JSON") {
  auto j = properties_json(parse_graph(kA3));
  CHECK(j["comet"] == true);
  CHECK(j["mt3"] == true);
  auto report = centroid_report(parse_graph(kA3), "a3", 2);
  for (const char *key : {"graph", "properties", "verdict", "branch", "certificate", "seed_dims", "stable"})
    CHECK(report.contains(key));
  CHECK(report["verdict"] == "Prime_Laurent");
}

TEST_CASE("corpus runs") {
  TempDir empty("empty");
  CHECK(corpus_run(empty.path.string(), 2).empty());

  TempDir mixed("mixed");
  mixed.write("a_loop.graph", kLoop);
  mixed.write("b_broken.graph", "vertex a\nedge x a nowhere\n");
  mixed.write("c_rose.graph", kRose);
  mixed.write("notes.txt", "ignored");
  auto rows = corpus_run(mixed.path.string(), 2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].file == "a_loop.graph");
  CHECK(rows[0].certified);
  CHECK(rows[1].error);
  CHECK(!rows[1].message.empty());
  CHECK(rows[2].certified);
  auto j = corpus_json(rows, 2);
  CHECK(j["summary"]["errors"] == 1);
  CHECK(j["summary"]["certified"] == 2);
  // Deterministic output regardless of scheduling.
  CHECK(corpus_json(corpus_run(mixed.path.string(), 2), 2).dump() == j.dump());
}
