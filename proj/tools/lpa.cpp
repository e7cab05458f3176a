// lpa: command-line front end for the Leavitt path algebra toolkit.
#include "lpa/algebra.hpp"
#include "lpa/battery.hpp"
#include "lpa/classifier.hpp"
#include "lpa/comet_iso.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kUsage = 2;
constexpr std::size_t kDefaultDegree = 6;

struct CliError {
  int exit_code;
  std::string code;
  std::string message;
};

[[noreturn]] void fail(int exit_code, std::string code, std::string message) {
  throw CliError{exit_code, std::move(code), std::move(message)};
}

std::size_t resolve_degree(std::optional<long> flag) {
  long d = static_cast<long>(kDefaultDegree);
  if (flag) {
    d = *flag;
  } else if (const char *env = std::getenv("LPA_DEGREE")) {
    try {
      std::size_t used = 0;
      d = std::stol(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception &) {
      fail(kUsage, "E_USAGE", std::string("LPA_DEGREE is not an integer: '") + env + "'");
    }
  }
  if (d < 1) fail(kUsage, "E_USAGE", "degree must be at least 1");
  return static_cast<std::size_t>(d);
}

lpa::Graph load(const std::string &path) {
  try {
    return lpa::load_graph(path);
  } catch (const lpa::GraphError &e) {
    fail(kUsage, std::filesystem::exists(path) ? "E_GRAPH_PARSE" : "E_IO", e.what());
  }
}

lpa::Element parse_expr(const lpa::Algebra &alg, const std::string &text) {
  try {
    return lpa::parse_element(alg, text);
  } catch (const lpa::ElementParseError &e) {
    fail(kUsage, "E_ELEMENT_PARSE", "'" + text + "': " + e.what());
  } catch (const std::invalid_argument &e) {
    fail(kUsage, "E_ELEMENT_PARSE", "'" + text + "': " + e.what());
  }
}

std::string yes_no(const json &j) {
  if (j.is_null()) return "n/a";
  return j.get<bool>() ? "yes" : "no";
}

std::string join(const json &arr, const std::string &sep = ", ") {
  std::string out;
  for (const auto &x : arr) {
    if (!out.empty()) out += sep;
    out += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return out;
}

void print_properties(const json &p) {
  std::cout << "vertices: " << p["vertices"].get<std::size_t>() << "; edges: " << p["edges"].get<std::size_t>()
            << "; row-finite: " << yes_no(p["row_finite"]) << "\n";
  std::cout << "sinks: {" << join(p["sinks"]) << "}; regular: {" << join(p["regular"]) << "}; infinite emitters: {"
            << join(p["inf_emitters"]) << "}\n";

  std::string cyc = "cycles: " + std::to_string(p["cycles"].size());
  std::vector<std::string> exit_vertices;
  for (const auto &c : p["cycles"])
    for (const auto &x : c["exits"]) {
      std::string v = x["vertex"].get<std::string>();
      if (std::find(exit_vertices.begin(), exit_vertices.end(), v) == exit_vertices.end()) exit_vertices.push_back(v);
    }
  if (!p["cycles"].empty()) {
    if (exit_vertices.empty()) {
      cyc += " (no exits)";
    } else {
      cyc += "; exit at ";
      for (std::size_t i = 0; i < exit_vertices.size(); ++i) cyc += (i ? ", " : "") + exit_vertices[i];
    }
  }
  std::string mt3 = "MT3: " + yes_no(p["mt3"]);
  if (!p["mt3_witness"].is_null()) mt3 += " (" + join(p["mt3_witness"], ",") + ")";
  std::cout << "comet: " << yes_no(p["comet"]) << "; " << cyc << "; " << mt3 << "\n";
  for (const auto &c : p["cycles"]) {
    std::cout << "  cycle " << c["path"].get<std::string>() << ": ";
    if (c["exits"].empty()) {
      std::cout << "no exits\n";
      continue;
    }
    std::vector<std::string> xs;
    for (const auto &x : c["exits"])
      xs.push_back(x["edge"].is_null() ? x["vertex"].get<std::string>() + " (infinite emitter)"
                                       : x["edge"].get<std::string>() + " at " + x["vertex"].get<std::string>());
    std::cout << "exits ";
    for (std::size_t i = 0; i < xs.size(); ++i) std::cout << (i ? ", " : "") << xs[i];
    std::cout << "\n";
  }
  std::cout << "condition (L): " << yes_no(p["condition_L"]) << "; graded simple: " << yes_no(p["graded_simple"])
            << "; simple: " << yes_no(p["simple"]) << "\n";
  if (p["hs_subsets"].is_null()) {
    std::cout << "hereditary saturated subsets: not enumerated (more than 8 vertices)\n";
  } else {
    std::cout << "hereditary saturated subsets: " << p["hs_subsets"].size() << "\n";
    for (const auto &h : p["hs_subsets"]) std::cout << "  {" << join(h) << "}\n";
  }
}

void print_report(const json &r) {
  std::cout << "graph: " << r["graph"]["name"].get<std::string>() << "\n";
  std::cout << "verdict: " << r["verdict"].get<std::string>() << " (centroid " << r["centroid"].get<std::string>()
            << ")\n";
  std::cout << "branch: " << (r["branch"].is_null() ? "none" : r["branch"].get<std::string>()) << "\n";
  const json &c = r["certificate"];
  if (c.contains("mt3_witness")) std::cout << "MT3 witness: (" << join(c["mt3_witness"], ",") << ")\n";
  if (c.contains("topological_order")) std::cout << "topological order: " << join(c["topological_order"]) << "\n";
  if (c.contains("cycle")) std::cout << "cycle: " << join(c["cycle"], ".") << "\n";
  if (c.contains("exit"))
    std::cout << "exit: " << (c["exit"]["edge"].is_null() ? "infinite emitter" : c["exit"]["edge"].get<std::string>())
              << " at " << c["exit"]["vertex"].get<std::string>() << "\n";
  if (c.contains("emitter")) std::cout << "infinite emitter: " << c["emitter"].get<std::string>() << "\n";
  if (c.contains("stray_vertex")) std::cout << "stray vertex: " << c["stray_vertex"].get<std::string>() << "\n";
  if (r.contains("certification")) {
    const json &cert = r["certification"];
    std::cout << "certified: " << (cert["ok"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto &ch : cert["checks"])
      if (!ch["passed"].get<bool>())
        std::cout << "  FAILED " << ch["name"].get<std::string>() << ": " << ch["detail"].get<std::string>() << "\n";
    if (!cert["note"].get<std::string>().empty()) std::cout << "  " << cert["note"].get<std::string>() << "\n";
  }
  if (!r["seed_dims"].is_null()) {
    std::cout << "seed dimensions:";
    for (const auto &[k, v] : r["seed_dims"].items()) std::cout << " d=" << k << ": " << v.get<std::size_t>();
    std::cout << "; stable: " << yes_no(r["stable"]) << "\n";
  }
}

int cmd_analyze(const std::string &file, bool as_json) {
  lpa::Graph g = load(file);
  json p = lpa::properties_json(g);
  if (as_json)
    std::cout << json{{"graph", file}, {"properties", p}}.dump(2) << "\n";
  else
    print_properties(p);
  return kOk;
}

int cmd_centroid(const std::string &file, bool certify, std::size_t d, bool as_json, bool cert_only, bool timings) {
  lpa::Graph g = load(file);
  if (cert_only) {
    std::cout << lpa::classification_json(g, lpa::classify(g)).dump(2) << "\n";
    return kOk;
  }
  lpa::ReportOptions opts{certify, timings};
  json r = lpa::centroid_report(g, file, d, opts);
  if (as_json) {
    std::cout << r.dump(2) << "\n";
  } else {
    print_report(r);
  }
  if (certify && !r["certification"]["ok"].get<bool>()) return kVerifyFailure;
  return kOk;
}

int cmd_eval(const std::string &file, const std::string &lhs, const std::string &rhs, bool as_json) {
  lpa::Algebra alg(load(file));
  lpa::Element x = parse_expr(alg, lhs), y = parse_expr(alg, rhs);
  lpa::Element p = x * y;
  json grades = json::object();
  for (const auto &[k, e] : alg.grade(p)) grades[std::to_string(k)] = e.to_string();
  if (as_json) {
    std::cout << json{{"product", p.to_string()},
                      {"grades", grades},
                      {"partial_B", alg.partial_B(p)},
                      {"basis", alg.basis().describe(alg.graph())}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << "product: " << p.to_string() << "\n";
  for (const auto &[k, e] : alg.grade(p)) std::cout << "grade " << k << ": " << e.to_string() << "\n";
  std::cout << "partial_B: " << alg.partial_B(p) << "\n";
  return kOk;
}

int cmd_comet_iso(const std::string &file, const std::string &expr, bool as_json) {
  lpa::Algebra alg(load(file));
  std::optional<lpa::CometIso> iso;
  try {
    iso.emplace(alg);
  } catch (const std::invalid_argument &e) {
    fail(kUsage, "E_PRECONDITION", e.what());
  }
  lpa::Element x = parse_expr(alg, expr);
  lpa::LaurentMatrix m = iso->apply(x);
  json idx = json::array();
  for (const auto &p : iso->index_set()) idx.push_back(lpa::path_to_string(alg.graph(), p));
  if (as_json) {
    std::cout << json{{"element", x.to_string()}, {"index_set", idx}, {"matrix", m.to_string()}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << "index set: " << join(idx) << "\n";
  std::cout << "matrix: " << m.to_string() << "\n";
  return kOk;
}

int cmd_corpus(const std::string &dir, std::size_t d, bool as_json, bool timings) {
  std::vector<lpa::CorpusRow> rows;
  try {
    rows = lpa::corpus_run(dir, d, lpa::ReportOptions{true, timings});
  } catch (const std::invalid_argument &e) {
    fail(kUsage, "E_IO", e.what());
  }
  json out = lpa::corpus_json(rows, d);
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto &row : out["graphs"]) {
      std::cout << row["file"].get<std::string>() << ": ";
      if (!row["error"].is_null()) {
        std::cout << "ERROR " << row["error"].get<std::string>() << "\n";
        continue;
      }
      std::cout << row["verdict"].get<std::string>();
      if (!row["branch"].is_null()) std::cout << " / " << row["branch"].get<std::string>();
      std::cout << " (" << (row["certified"].get<bool>() ? "certified" : "NOT certified");
      if (!row["seed_dims"].is_null())
        for (const auto &[k, v] : row["seed_dims"].items()) std::cout << ", d=" << k << ": " << v.get<std::size_t>();
      std::cout << ")\n";
    }
    const json &s = out["summary"];
    std::cout << s["certified"].get<std::size_t>() << " of " << s["total"].get<std::size_t>() << " certified, "
              << s["errors"].get<std::size_t>() << " errors\n";
  }
  const json &s = out["summary"];
  return s["certified"] == s["total"] ? kOk : kVerifyFailure;
}

int cmd_verify(const std::string &dir, std::uint64_t seed, bool as_json) {
  lpa::BatteryOptions opts;
  opts.seed = seed;
  lpa::VerifyReport rep;
  try {
    rep = lpa::verify_corpus(dir, opts);
  } catch (const std::invalid_argument &e) {
    fail(kUsage, "E_IO", e.what());
  }
  for (const auto &w : rep.warnings) std::cerr << "warning: " << w << "\n";
  if (as_json) {
    std::cout << lpa::verify_json(rep).dump(2) << "\n";
  } else {
    std::cout << "seed: " << rep.seed << "\n";
    std::size_t failed = 0;
    for (const auto &r : rep.results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.graph << " " << r.check;
      if (!r.detail.empty()) std::cout << ": " << r.detail;
      std::cout << "\n";
      failed += !r.passed;
    }
    std::cout << rep.results.size() - failed << " passed, " << failed << " failed\n";
  }
  return rep.ok() ? kOk : kVerifyFailure;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Leavitt path algebras over Q: structure, centroids and certificates"};
  app.require_subcommand(1, 1);
  bool as_json = false;

  std::string file, dir, lhs, rhs, element;
  std::optional<long> degree;
  bool certify = false, cert_only = false, timings = false;
  std::uint64_t seed = lpa::BatteryOptions{}.seed;

  auto *analyze = app.add_subcommand("analyze", "Structural properties of a graph");
  analyze->add_option("file", file, "Graph file")->required();
  analyze->add_flag("--json", as_json, "Emit JSON");

  auto *centroid = app.add_subcommand("centroid", "Classify the centroid");
  centroid->add_option("file", file, "Graph file")->required();
  centroid->add_flag("--certify", certify, "Re-verify the certificate and seed dimensions");
  centroid->add_option("--degree,-d", degree, "Truncation degree (default 6, or LPA_DEGREE)");
  centroid->add_flag("--json", as_json, "Emit JSON");
  centroid->add_flag("--cert", cert_only, "Emit only {verdict, branch, certificate}");
  centroid->add_flag("--timings", timings, "Include wall-clock timings in JSON");

  auto *eval = app.add_subcommand("eval", "Normal form of a product of two elements");
  eval->add_option("file", file, "Graph file")->required();
  eval->add_option("lhs", lhs, "Left factor")->required();
  eval->add_option("rhs", rhs, "Right factor")->required();
  eval->add_flag("--json", as_json, "Emit JSON");

  auto *iso = app.add_subcommand("comet-iso", "Matrix image of an element of a comet algebra");
  iso->add_option("file", file, "Graph file")->required();
  iso->add_option("--element,-e", element, "Element expression")->required();
  iso->add_flag("--json", as_json, "Emit JSON");

  auto *corpus = app.add_subcommand("corpus", "Classify and certify every graph in a directory");
  corpus->add_option("dir", dir, "Corpus directory")->required();
  corpus->add_option("--degree,-d", degree, "Truncation degree (default 6, or LPA_DEGREE)");
  corpus->add_flag("--json", as_json, "Emit JSON");
  corpus->add_flag("--timings", timings, "Include wall-clock timings");

  auto *verify = app.add_subcommand("verify", "Run the invariant battery over a corpus");
  verify->add_option("dir", dir, "Corpus directory")->required();
  verify->add_option("--seed", seed, "Random seed for property checks");
  verify->add_flag("--json", as_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error[E_USAGE]: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(file, as_json);
    if (centroid->parsed()) return cmd_centroid(file, certify, resolve_degree(degree), as_json, cert_only, timings);
    if (eval->parsed()) return cmd_eval(file, lhs, rhs, as_json);
    if (iso->parsed()) return cmd_comet_iso(file, element, as_json);
    if (corpus->parsed()) return cmd_corpus(dir, resolve_degree(degree), as_json, timings);
    if (verify->parsed()) return cmd_verify(dir, seed, as_json);
  } catch (const CliError &e) {
    std::cerr << "error[" << e.code << "]: " << e.message << "\n";
    if (as_json) std::cout << json{{"error", {{"code", e.code}, {"message", e.message}}}}.dump(2) << "\n";
    return e.exit_code;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error[E_PRECONDITION]: " << e.what() << "\n";
    if (as_json) std::cout << json{{"error", {{"code", "E_PRECONDITION"}, {"message", e.what()}}}}.dump(2) << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error[E_INTERNAL]: " << e.what() << "\n";
    return kVerifyFailure;
  }
  return kUsage;
}
