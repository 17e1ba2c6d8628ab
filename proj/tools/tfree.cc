// Copyright 2026 The tfree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 resource limit exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tfree/bounds.h"
#include "tfree/canonical.h"
#include "tfree/enumerate.h"
#include "tfree/envelope.h"
#include "tfree/errors.h"
#include "tfree/exact_prob.h"
#include "tfree/graph.h"
#include "tfree/graph6.h"
#include "tfree/hypergraph.h"
#include "tfree/kernels.h"
#include "tfree/montecarlo.h"
#include "tfree/parallel.h"
#include "tfree/search.h"
#include "tfree/verify.h"

namespace tfree {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GraphSource {
  std::string graph;
  std::string construct;
  std::string file;
  bool from_stdin = false;
};

struct Common {
  std::string format = "json";
  int jobs = DefaultJobs();
  bool quiet = false;
};

void Progress(const Common& common, const std::string& message) {
  if (!common.quiet) std::cerr << "tfree: " << message << std::endl;
}

std::string ReadStream(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return ReadStream(in);
}

int ParseInt(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("bad " + what + ": '" + text + "'");
  return value;
}

// "g1", "g2", "g3", "mantel+1:N", "K:n", "K:a,b".
std::optional<Graph> NamedGraph(const std::string& name) {
  const CandidateGraphs c = CrossoverCandidates();
  if (name == "g1") return c.g1;
  if (name == "g2") return c.g2;
  if (name == "g3") return c.g3;
  if (name.rfind("mantel+1:", 0) == 0) {
    const int n = ParseInt(name.substr(9), "vertex count");
    if (n < 3) throw UsageError("mantel+1 needs n >= 3");
    if (n > kMaxVertices) throw LimitExceeded("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
    return MantelPlusOne(n);
  }
  if (name.rfind("K:", 0) == 0) {
    const std::string spec = name.substr(2);
    const auto comma = spec.find(',');
    if (comma == std::string::npos) {
      const int n = ParseInt(spec, "vertex count");
      if (n < 0) throw UsageError("K:n needs n >= 0");
      if (n > kMaxVertices) throw LimitExceeded("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
      return CompleteGraph(n);
    }
    const int a = ParseInt(spec.substr(0, comma), "part size");
    const int b = ParseInt(spec.substr(comma + 1), "part size");
    if (a < 0 || b < 0) throw UsageError("K:a,b needs a, b >= 0");
    if (a + b > kMaxVertices) throw LimitExceeded("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
    return CompleteBipartite(a, b);
  }
  return std::nullopt;
}

// graph6 unless the text contains a space-separated pair, then edge list.
Graph GraphFromText(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line.find_first_of(" \t", first) != std::string::npos) return ParseEdgeList(text);
    if (line.rfind(">>graph6<<", first) == first) return ParseGraph6(text);
    // A single integer line opens an edge list.
    if (line.find_first_not_of("0123456789 \t\r", first) == std::string::npos) return ParseEdgeList(text);
    return ParseGraph6(text);
  }
  throw ParseError("empty graph input");
}

Graph LoadGraph(const GraphSource& src) {
  const int sources = !src.graph.empty() + !src.construct.empty() + !src.file.empty() + src.from_stdin;
  if (sources != 1) throw UsageError("give exactly one of --graph, --construct, --file, --stdin");
  if (!src.construct.empty()) {
    if (auto g = NamedGraph(src.construct)) return *g;
    throw UsageError("unknown construction '" + src.construct + "' (g1, g2, g3, mantel+1:N, K:n, K:a,b)");
  }
  if (!src.graph.empty()) {
    if (auto g = NamedGraph(src.graph)) return *g;
    return ParseGraph6(src.graph);
  }
  if (!src.file.empty()) return GraphFromText(ReadFile(src.file));
  return ParseGraph6(ReadStream(std::cin));
}

void AddGraphSource(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--graph", src.graph, "graph6 string or named graph");
  cmd->add_option("--construct", src.construct, "g1, g2, g3, mantel+1:N, K:n, K:a,b");
  cmd->add_option("--file", src.file, "file holding graph6 or an edge list");
  cmd->add_flag("--stdin", src.from_stdin, "read graph6 from standard input");
}

void AddCommon(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--jobs", common.jobs, "worker threads (default from TFREE_JOBS)")->check(CLI::PositiveNumber);
  cmd->add_flag("--quiet", common.quiet, "suppress progress messages");
}

struct ProbabilityArg {
  std::string text;
  bool given() const { return !text.empty(); }
};

ParsedProbability ParseP(const ProbabilityArg& arg, const Common& common, bool open) {
  ParsedProbability parsed = ParseProbability(arg.text);
  RequireUnitInterval(parsed.value, open);
  if (parsed.from_decimal) {
    Progress(common, "decimal p=" + arg.text + " read as exactly " + ToString(parsed.value));
  }
  return parsed;
}

Json ParseJson(const std::string& s) { return Json::parse(s); }

Json GraphJson(const Graph& g) {
  Json j;
  j["graph6"] = WriteGraph6(g);
  if (g.vertex_count() <= kMaxCanonicalVertices) j["canonical"] = CanonicalForm(g);
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["triangles"] = TriangleCount(g);
  return j;
}

std::string CoeffsSpaced(const Polynomial& p) {
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out += (k ? " " : "") + p.coeffs()[k].get_str();
  return p.is_zero() ? "0" : out;
}

// ---- phi -------------------------------------------------------------

int RunPhi(const GraphSource& src, const ProbabilityArg& p_arg, int clique_order, const Common& common) {
  const Graph g = LoadGraph(src);
  const TfProfile profile = ComputeTfProfile(g, clique_order);
  const PhiPolynomial phi = ComputePhiPolynomial(g, clique_order);
  std::optional<ParsedProbability> p;
  if (p_arg.given()) p = ParseP(p_arg, common, false);

  if (common.format == "json") {
    Json j = GraphJson(g);
    j["clique_order"] = clique_order;
    j["profile"] = ParseJson(profile.ToJson())["counts"];
    j["phi"] = {{"text", phi.ToText()}, {"coeffs", ParseJson(phi.ToJson())["coeffs"]}};
    if (p) {
      const Rational v = PhiEval(phi, p->value);
      j["p"] = ToString(p->value);
      j["p_from_decimal"] = p->from_decimal;
      j["value"] = ToString(v);
      j["value_approx"] = ToDouble(v);
    }
    std::cout << j.dump() << '\n';
  } else if (common.format == "csv") {
    std::cout << "s,tf,coeff\n";
    const std::size_t rows = std::max(profile.counts.size(), phi.coeffs().size());
    for (std::size_t s = 0; s < rows; ++s) {
      std::cout << s << ',' << (s < profile.counts.size() ? profile.counts[s].get_str() : "") << ','
                << phi.coeff(s).get_str() << '\n';
    }
  } else {
    std::cout << "graph6: " << WriteGraph6(g) << "\n"
              << "n: " << g.vertex_count() << "  m: " << g.edge_count() << "  triangles: " << TriangleCount(g)
              << "\n"
              << "profile: ";
    for (std::size_t s = 0; s < profile.counts.size(); ++s) std::cout << (s ? " " : "") << profile.counts[s];
    std::cout << "\nphi: " << phi.ToText() << "\n";
    if (p) {
      const Rational v = PhiEval(phi, p->value);
      std::cout << "phi(" << ToString(p->value) << ") = " << ToString(v) << " ~ " << ToDecimal(v, 15) << "\n";
    }
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------

struct VerifyOptions {
  bool t1 = false;
  bool crossover = false;
  bool ls = false;
  bool linear_bound = false;
  int n = 0;
  int i = 0;
};

int RunVerify(VerifyOptions opt, const Common& common) {
  if (!opt.t1 && !opt.crossover && !opt.ls && !opt.linear_bound) {
    opt.t1 = opt.crossover = opt.ls = opt.linear_bound = true;
  }
  if (opt.i != 0 && !opt.ls) throw UsageError("--i only applies to --ls");
  Json checks = Json::array();
  bool all = true;
  auto record = [&](const std::string& kind, Json body, bool pass) {
    all = all && pass;
    Json entry;
    entry["check"] = kind;
    entry["pass"] = pass;
    entry["report"] = std::move(body);
    checks.push_back(std::move(entry));
  };

  if (opt.t1) {
    const int lo = opt.n ? opt.n : 3;
    const int hi = opt.n ? opt.n : 7;
    for (int n = lo; n <= hi; ++n) {
      Progress(common, "verifying the one-extra-edge maximum for n=" + std::to_string(n));
      const T1Report r = VerifyT1(n, common.jobs);
      record("t1", ParseJson(r.ToJson()), r.pass);
    }
  }
  if (opt.ls) {
    const int lo = opt.n ? opt.n : 3;
    const int hi = opt.n ? opt.n : 7;
    for (int n = lo; n <= hi; ++n) {
      const int ilo = opt.i ? opt.i : 1;
      const int ihi = opt.i ? opt.i : n / 2;
      for (int i = ilo; i <= ihi; ++i) {
        if (MantelMaxEdges(n) + i > static_cast<long long>(n) * (n - 1) / 2) continue;
        Progress(common, "checking the triangle floor for n=" + std::to_string(n) + " i=" + std::to_string(i));
        const TriangleFloorReport r = CheckTriangleFloor(n, i, common.jobs);
        record("ls", ParseJson(r.ToJson()), r.pass);
      }
    }
  }
  if (opt.crossover) {
    for (const ClaimReport& c : CrossoverChecks()) record("crossover", ParseJson(c.ToJson()), c.pass);
  }
  if (opt.linear_bound) {
    Progress(common, "checking the linear hypergraph bound on the corpus");
    const ClaimReport c = LinearBoundCorpusCheck();
    record("linear_bound", ParseJson(c.ToJson()), c.pass);
  }

  if (common.format == "json") {
    Json j;
    j["pass"] = all;
    j["checks"] = checks;
    std::cout << j.dump() << '\n';
  } else if (common.format == "csv") {
    std::cout << "check,pass,summary\n";
    for (const auto& c : checks) {
      std::string summary = c["report"].contains("claim") ? c["report"]["claim"].get<std::string>()
                                                            : "n=" + c["report"]["n"].dump();
      if (c["report"].contains("i")) summary += " i=" + c["report"]["i"].dump();
      std::cout << c["check"].get<std::string>() << ',' << (c["pass"].get<bool>() ? "pass" : "FAIL") << ",\""
                << summary << "\"\n";
    }
  } else {
    for (const auto& c : checks) {
      std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["check"].get<std::string>() << " "
                << c["report"].dump() << '\n';
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return all ? kExitOk : kExitVerifyFailed;
}

// ---- search ----------------------------------------------------------

int RunSearch(int n, int i, const ProbabilityArg& p_arg, bool no_prune, const Common& common) {
  const ParsedProbability p = ParseP(p_arg, common, true);
  Progress(common, "searching n=" + std::to_string(n) + " i=" + std::to_string(i));
  const SearchReport r = MaximizePhi(n, i, p.value, !no_prune, common.jobs);
  Progress(common, "done in " + std::to_string(r.runtime_ms) + " ms");
  if (common.format == "json") {
    Json j = ParseJson(r.ToJson());
    j["p_from_decimal"] = p.from_decimal;
    std::cout << j.dump() << '\n';
  } else if (common.format == "csv") {
    std::cout << "graph6,value\n";
    for (const auto& g : r.maximizers) std::cout << g << ',' << ToString(r.max_value) << '\n';
  } else {
    std::cout << "max phi = " << ToString(r.max_value) << " ~ " << ToDecimal(r.max_value, 15) << " over "
              << r.enumerated << " classes (" << r.pruned << " pruned)\n";
    for (const auto& g : r.maximizers) std::cout << "maximizer: " << g << '\n';
  }
  return kExitOk;
}

// ---- envelope --------------------------------------------------------

int RunEnvelope(int n, int i, const Common& common) {
  Progress(common, "computing the envelope for n=" + std::to_string(n) + " i=" + std::to_string(i));
  const EnvelopeReport r = Envelope(n, i, common.jobs);
  if (common.format == "json") {
    std::cout << r.ToJson() << '\n';
  } else if (common.format == "csv") {
    std::cout << "lo,hi,maximizers,coeffs\n";
    for (const auto& s : r.segments) {
      std::string labels;
      for (const auto& m : s.maximizers) labels += (labels.empty() ? "" : " ") + m;
      std::cout << s.lo.approx << ',' << s.hi.approx << ",\"" << labels << "\"," << CoeffsSpaced(s.poly) << '\n';
    }
  } else {
    for (const auto& s : r.segments) {
      std::cout << "[" << s.lo.approx << ", " << s.hi.approx << "]: " << s.poly.ToText() << "  (";
      for (std::size_t k = 0; k < s.maximizers.size(); ++k) std::cout << (k ? " " : "") << s.maximizers[k];
      std::cout << ")\n";
    }
    for (const auto& c : r.crossovers) {
      std::cout << "crossover in [" << ToDecimal(c.lo, 16) << ", " << ToDecimal(c.hi, 16) << "]\n";
    }
  }
  return kExitOk;
}

// ---- mc --------------------------------------------------------------

int RunMc(const GraphSource& src, const ProbabilityArg& p_arg, std::uint64_t samples, std::uint64_t seed,
          const Common& common) {
  const Graph g = LoadGraph(src);
  const ParsedProbability p = ParseP(p_arg, common, true);
  Progress(common, "sampling " + std::to_string(samples) + " subgraphs");
  const Estimate e = EstimatePhi(g, p.value, samples, seed, common.jobs);
  if (common.format == "json") {
    Json j = ParseJson(e.ToJson());
    j["p_from_decimal"] = p.from_decimal;
    std::cout << j.dump() << '\n';
  } else if (common.format == "csv") {
    std::cout << "mean,ci_low,ci_high,samples,seed,p\n"
              << e.mean << ',' << e.ci_low << ',' << e.ci_high << ',' << e.samples << ',' << e.seed << ','
              << ToString(e.p) << '\n';
  } else {
    std::cout << "estimate " << e.mean << "  95% CI [" << e.ci_low << ", " << e.ci_high << "]  (" << e.successes
              << "/" << e.samples << ", seed " << e.seed << ")\n";
  }
  return kExitOk;
}

// ---- classes ---------------------------------------------------------

int RunClasses(int n, int m, const std::string& output, const std::string& checkpoint, const Common& common) {
  if (n < 1 || n > kMaxEnumerationVertices) {
    throw LimitExceeded("class enumeration is limited to 1 <= n <= " + std::to_string(kMaxEnumerationVertices));
  }
  Progress(common, "enumerating classes for n=" + std::to_string(n) + " m=" + std::to_string(m));
  if (output.empty()) {
    ExportClassesCsv(n, m, std::cout, checkpoint, true, common.jobs);
    return kExitOk;
  }
  const bool resuming = !checkpoint.empty() && std::ifstream(checkpoint).good();
  std::ofstream out(output, resuming ? std::ios::app : std::ios::trunc);
  if (!out) throw UsageError("cannot write " + output);
  ExportClassesCsv(n, m, out, checkpoint, !resuming, common.jobs);
  return kExitOk;
}

// ---- indep -----------------------------------------------------------

int RunIndep(const std::string& file, bool from_stdin, const ProbabilityArg& p_arg, const Common& common) {
  if (file.empty() == !from_stdin) throw UsageError("give exactly one of --file, --stdin");
  const CliqueHypergraph h = ParseHypergraph(file.empty() ? ReadStream(std::cin) : ReadFile(file));
  const IndependenceProfile profile = CountIndependentSets(h);
  std::optional<ParsedProbability> p;
  if (p_arg.given()) p = ParseP(p_arg, common, false);
  if (common.format == "json") {
    Json j;
    j["vertices"] = h.vertex_count();
    j["hyperedges"] = h.edge_count();
    j["linear"] = IsLinear(h);
    j["flower"] = IsFlower(h);
    Json counts = Json::array();
    for (const auto& c : profile.counts) counts.push_back(c.get_str());
    j["counts"] = counts;
    if (p) {
      const Rational v = IndependenceProbability(h, p->value);
      j["p"] = ToString(p->value);
      j["p_from_decimal"] = p->from_decimal;
      j["value"] = ToString(v);
      j["value_approx"] = ToDouble(v);
      if (h.clique_order() == 3) j["linear_bound"] = ToString(LinearBoundAt(h.edge_count(), p->value));
    }
    std::cout << j.dump() << '\n';
  } else if (common.format == "csv") {
    std::cout << "s,count\n";
    for (std::size_t s = 0; s < profile.counts.size(); ++s) std::cout << s << ',' << profile.counts[s] << '\n';
  } else {
    std::cout << "counts:";
    for (const auto& c : profile.counts) std::cout << ' ' << c;
    std::cout << '\n';
    if (p) std::cout << "P(independent) = " << ToString(IndependenceProbability(h, p->value)) << '\n';
  }
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Exact and sampled triangle-free probabilities of random subgraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tfree 1.0");

  Common common;
  GraphSource src;
  ProbabilityArg p_arg;

  auto* phi = app.add_subcommand("phi", "tf profile, polynomial and exact value");
  int clique_order = 3;
  AddGraphSource(phi, src);
  AddCommon(phi, common);
  phi->add_option("--p", p_arg.text, "probability as num/den or decimal");
  phi->add_option("--k", clique_order, "forbidden clique order")->check(CLI::Range(3, 8));

  auto* verify = app.add_subcommand("verify", "run reproducibility checks (all when no check is selected)");
  VerifyOptions vopt;
  AddCommon(verify, common);
  verify->add_flag("--t1", vopt.t1, "one-extra-edge maximum by exhaustive search");
  verify->add_flag("--crossover,--section4", vopt.crossover, "six-vertex crossover example");
  verify->add_flag("--ls", vopt.ls, "forced triangle floor");
  verify->add_flag("--linear-bound,--lemma", vopt.linear_bound, "linear hypergraph bound on the corpus");
  verify->add_option("--n", vopt.n, "restrict to one vertex count")->check(CLI::Range(3, 8));
  verify->add_option("--i", vopt.i, "restrict --ls to one surplus")->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search", "maximise phi over all classes with floor(n^2/4)+i edges");
  int n = 0;
  int i = 0;
  bool no_prune = false;
  AddCommon(search, common);
  search->add_option("--n", n, "vertices")->required();
  search->add_option("--i", i, "edges above floor(n^2/4)")->required();
  search->add_option("--p", p_arg.text, "probability")->required();
  search->add_flag("--no-prune", no_prune, "evaluate every class");

  auto* envelope = app.add_subcommand("envelope", "upper envelope over p in (0,1)");
  AddCommon(envelope, common);
  envelope->add_option("--n", n, "vertices")->required();
  envelope->add_option("--i", i, "edges above floor(n^2/4)")->required();

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate with a 95% Wilson interval");
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  AddGraphSource(mc, src);
  AddCommon(mc, common);
  mc->add_option("--p", p_arg.text, "probability")->required();
  mc->add_option("--samples", samples, "sample count")->check(CLI::PositiveNumber);
  mc->add_option("--seed", seed, "generator seed");

  auto* classes = app.add_subcommand("classes", "CSV of every class with n vertices and m edges");
  int m = 0;
  std::string output;
  std::string checkpoint;
  AddCommon(classes, common);
  classes->add_option("--n", n, "vertices")->required();
  classes->add_option("--m", m, "edges")->required();
  classes->add_option("--output", output, "write rows here instead of stdout");
  classes->add_option("--checkpoint", checkpoint, "resume file");

  auto* indep = app.add_subcommand("indep", "independent set counts of a hypergraph file");
  std::string hfile;
  bool hstdin = false;
  AddCommon(indep, common);
  indep->add_option("--file", hfile, "hypergraph text file");
  indep->add_flag("--stdin", hstdin, "read the hypergraph from standard input");
  indep->add_option("--p", p_arg.text, "probability");

  auto* info = app.add_subcommand("info", "build and kernel information");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (phi->parsed()) return RunPhi(src, p_arg, clique_order, common);
    if (verify->parsed()) return RunVerify(vopt, common);
    if (search->parsed()) return RunSearch(n, i, p_arg, no_prune, common);
    if (envelope->parsed()) return RunEnvelope(n, i, common);
    if (mc->parsed()) return RunMc(src, p_arg, samples, seed, common);
    if (classes->parsed()) return RunClasses(n, m, output, checkpoint, common);
    if (indep->parsed()) return RunIndep(hfile, hstdin, p_arg, common);
    if (info->parsed()) {
      Json j;
      j["kernel"] = std::string(kernels::IsaName(kernels::ActiveIsa()));
      j["avx2_available"] = kernels::IsaAvailable(kernels::Isa::kAvx2);
      j["default_jobs"] = DefaultJobs();
      std::cout << j.dump() << '\n';
      return kExitOk;
    }
  } catch (const LimitExceeded& e) {
    std::cerr << "tfree: limit exceeded: " << e.what() << "\n"
              << "tfree: for large graphs use the sampling estimate: tfree mc --p P --samples N ...\n";
    return kExitLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "tfree: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "tfree: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "tfree: error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace tfree

int main(int argc, char** argv) { return tfree::Main(argc, argv); }
