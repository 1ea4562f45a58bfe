// nhtop command-line front end: duals, homology, classification, collapses,
// generators, and verification suites over complex documents.
//
// Exit codes: 0 success / all cases passed, 1 verification failure,
// 2 usage or input error, 3 result Unknown within budget.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nhtop/alexander.hpp"
#include "nhtop/collapse.hpp"
#include "nhtop/complex.hpp"
#include "nhtop/document.hpp"
#include "nhtop/generators.hpp"
#include "nhtop/harness.hpp"
#include "nhtop/homology.hpp"
#include "nhtop/recognition.hpp"
#include "nhtop/version.hpp"

namespace {

using nlohmann::json;
using namespace nhtop;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open input file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file \"" + path + "\"");
  out << text << '\n';
}

ComplexDocument load_document(const std::string& path) {
  return parse_complex_document(read_text(path));
}

std::vector<Vertex> to_vertices(const std::vector<std::string>& labels, const char* what) {
  std::set<std::string> seen;
  std::vector<Vertex> out;
  for (const std::string& l : labels) {
    if (l.empty()) throw UsageError(std::string(what) + ": vertex labels must be nonempty");
    if (!seen.insert(l).second)
      throw UsageError(std::string(what) + ": repeated vertex \"" + l + "\"");
    out.emplace_back(l);
  }
  return out;
}

json complex_json(const SimplicialComplex& k) {
  return json::parse(serialize_complex(k, false));
}

json document_json(const ComplexDocument& doc) {
  return json::parse(serialize_complex_document(doc, false));
}

json labels_json(const Simplex& s) {
  json out = json::array();
  for (const Vertex& v : s.vertices()) out.push_back(v.label());
  return out;
}

json report_root(const char* kind) {
  json root;
  root["format"] = "nhtop-report";
  root["report"] = kind;
  root["version"] = std::string(version);
  return root;
}

void emit(const json& root, const std::string& output, bool compact) {
  write_text(output, compact ? root.dump() : root.dump(2));
}

void emit(const ComplexDocument& doc, const std::string& output, bool compact) {
  write_text(output, serialize_complex_document(doc, !compact));
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "unknown";
  }
}

json sequence_json(const CollapseSequence& seq) {
  json out;
  out["start"] = complex_json(seq.start);
  out["end"] = complex_json(seq.end);
  json steps = json::array();
  for (const CollapseStep& s : seq.steps) {
    json step;
    step["free_face"] = labels_json(s.free_face);
    step["cofacet"] = labels_json(s.cofacet);
    steps.push_back(step);
  }
  out["steps"] = steps;
  return out;
}

std::string ground_string(const GroundSet& ground) {
  std::string out = "{";
  for (std::size_t i = 0; i < ground.vertices().size(); ++i) {
    if (i) out += ",";
    out += ground.vertices()[i].label();
  }
  return out + "}";
}

// --- dual ------------------------------------------------------------------

struct DualArgs {
  std::string input = "-";
  std::string output = "-";
  std::vector<std::string> tau;
  std::vector<std::string> ground;
  bool tau_given = false;
  bool ground_given = false;
  bool compact = false;
};

int run_dual(const DualArgs& a) {
  ComplexDocument doc = load_document(a.input);
  const SimplicialComplex& k = doc.complex;
  if (a.tau_given && a.ground_given)
    throw UsageError("dual: --tau and --ground are mutually exclusive");

  SimplicialComplex result;
  GroundSet used;
  if (a.tau_given) {
    Simplex tau(to_vertices(a.tau, "--tau"));
    for (const Vertex& v : tau.vertices())
      if (k.has_face(Simplex({v})))
        throw UsageError("dual: --tau vertex \"" + v.label() + "\" already lies in the complex");
    if (k.is_void()) throw UsageError("dual: the void complex has no relative dual; use --ground");
    result = relative_dual(k, tau);
    used = GroundSet(merge_vertex_sets(k.vertex_set(), tau.vertices()));
  } else {
    if (a.ground_given) {
      used = GroundSet(to_vertices(a.ground, "--ground"));
    } else if (doc.ground) {
      used = GroundSet(*doc.ground);
    } else if (!k.is_void()) {
      used = GroundSet(k.vertex_set());
    } else {
      throw UsageError("dual: the void complex needs an explicit ground set (--ground or a document ground field)");
    }
    if (!used.contains_all(k.vertex_set()))
      throw UsageError("dual: ground set must contain every vertex of the complex");
    result = dual_over(k, used);
  }

  ComplexDocument out;
  out.complex = result;
  out.ground = used.vertices();
  if (doc.name) out.name = "dual of " + *doc.name;
  out.description = "Alexander dual over " + ground_string(used);
  emit(out, a.output, a.compact);
  return kPass;
}

// --- double-dual -----------------------------------------------------------

struct DoubleDualArgs {
  std::string input = "-";
  std::string output = "-";
  std::vector<std::string> tau;
  std::vector<std::string> sigma;
  bool compact = false;
};

int run_double_dual(const DoubleDualArgs& a) {
  ComplexDocument doc = load_document(a.input);
  Simplex tau(to_vertices(a.tau, "--tau"));
  Simplex sigma(to_vertices(a.sigma, "--sigma"));
  for (const Vertex& v : sigma.vertices())
    if (tau.contains(v))
      throw UsageError("double-dual: --tau and --sigma must be disjoint (\"" + v.label() + "\")");
  SimplicialComplex result = double_dual(doc.complex, tau, sigma);

  ComplexDocument out;
  out.complex = result;
  if (doc.name) out.name = "double dual of " + *doc.name;
  out.description = "relative double dual via tau=" + tau.to_string() + ", sigma=" + sigma.to_string();
  emit(out, a.output, a.compact);
  return kPass;
}

// --- homology ---------------------------------------------------------------

struct HomologyArgs {
  std::string input = "-";
  std::string output = "-";
  bool compact = false;
};

int run_homology(const HomologyArgs& a) {
  ComplexDocument doc = load_document(a.input);
  const SimplicialComplex& k = doc.complex;
  BettiProfile profile = betti(k);

  json root = report_root("homology");
  if (doc.name) root["name"] = *doc.name;
  const std::size_t levels = std::max(profile.mod2.size(), profile.integral.size());
  json groups = json::array();
  for (std::size_t i = 0; i < levels; ++i) {
    json g;
    g["dim"] = static_cast<int>(i) - 1;
    g["mod2"] = profile.mod2_at(static_cast<int>(i) - 1);
    IntegralGroup grp = profile.integral_at(static_cast<int>(i) - 1);
    g["rank"] = grp.rank;
    g["torsion"] = grp.torsion;
    g["group"] = grp.to_string();
    groups.push_back(g);
  }
  root["reduced"] = groups;
  root["pretty"] = profile.to_string();
  root["euler"] = reduced_euler_characteristic(k);
  root["acyclic"] = is_acyclic(k);
  std::optional<int> m = sphere_profile(k);
  root["sphere"] = m ? json(*m) : json(nullptr);
  emit(root, a.output, a.compact);
  return kPass;
}

// --- classify ---------------------------------------------------------------

struct ClassifyArgs {
  std::string input = "-";
  std::string output = "-";
  std::uint64_t budget = SearchBudget{}.max_nodes;
  bool subdivision_retry = false;
  bool compact = false;
};

int run_classify(const ClassifyArgs& a) {
  ComplexDocument doc = load_document(a.input);
  if (doc.complex.is_void()) throw UsageError("classify: the void complex has no classification");
  SearchBudget budget;
  budget.max_nodes = a.budget;
  budget.subdivision_retry = a.subdivision_retry;
  Classification c = classify_nh(doc.complex, budget);

  json root = report_root("classification");
  if (doc.name) root["name"] = *doc.name;
  root["budget"] = a.budget;
  root["kind"] = to_string(c.kind);
  if (c.homotopy_dim)
    root["homotopy_dim"] = *c.homotopy_dim;
  else if (c.kind == NhKind::CombinatorialSphere)
    root["homotopy_dim"] = doc.complex.dim();
  root["witness"] = c.witness;
  if (c.decomposition) {
    json d;
    d["nh_ball"] = complex_json(c.decomposition->nh_ball);
    d["k_ball"] = complex_json(c.decomposition->k_ball);
    d["k"] = c.decomposition->k;
    root["decomposition"] = d;
  }
  if (c.collapse) root["collapse"] = sequence_json(*c.collapse);
  emit(root, a.output, a.compact);
  return c.kind == NhKind::Unknown ? kUnknown : kPass;
}

// --- collapse ----------------------------------------------------------------

struct CollapseArgs {
  std::string input = "-";
  std::string output = "-";
  std::string target;
  bool spine = false;
  std::optional<int> spine_dim;
  std::uint64_t budget = SearchBudget{}.max_nodes;
  bool subdivision_retry = false;
  bool compact = false;
};

int run_collapse(const CollapseArgs& a) {
  ComplexDocument doc = load_document(a.input);
  if (!a.target.empty() && a.spine)
    throw UsageError("collapse: --target and --spine are mutually exclusive");
  SearchBudget budget;
  budget.max_nodes = a.budget;
  budget.subdivision_retry = a.subdivision_retry;

  json root = report_root("collapse");
  if (doc.name) root["name"] = *doc.name;
  root["budget"] = a.budget;

  Verdict verdict;
  if (a.spine) {
    SpineResult r = spine(doc.complex, budget, a.spine_dim);
    verdict = r.verdict;
    root["mode"] = "spine";
    root["verdict"] = verdict_name(r.verdict);
    root["note"] = r.note;
    root["spine"] = complex_json(r.result);
    if (!r.result.is_void()) root["spine_dim"] = r.result.dim();
    root["sequence"] = sequence_json(r.sequence);
  } else if (!a.target.empty()) {
    ComplexDocument target = load_document(a.target);
    CollapseOutcome r = collapses_to(doc.complex, target.complex, budget);
    verdict = r.verdict;
    root["mode"] = "target";
    root["verdict"] = verdict_name(r.verdict);
    root["note"] = r.note;
    root["nodes"] = r.nodes_used;
    if (r.sequence) root["sequence"] = sequence_json(*r.sequence);
  } else {
    CollapseOutcome r = is_collapsible(doc.complex, budget);
    verdict = r.verdict;
    root["mode"] = "point";
    root["verdict"] = verdict_name(r.verdict);
    root["note"] = r.note;
    root["nodes"] = r.nodes_used;
    if (r.sequence) root["sequence"] = sequence_json(*r.sequence);
  }
  emit(root, a.output, a.compact);
  return verdict == Verdict::Unknown ? kUnknown : kPass;
}

// --- generate ----------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  std::string output = "-";
  int dim = 0;
  bool dim_given = false;
  int facets = 0;
  int tau_dim = 0;
  int sigma_dim = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string name;
  bool compact = false;
};

int run_generate(const GenerateArgs& a) {
  auto need_dim = [&] {
    if (!a.dim_given) throw UsageError("generate: --dim is required for kind \"" + a.kind + "\"");
  };
  auto need_seed = [&] {
    if (!a.seed_given)
      throw UsageError("generate: kind \"" + a.kind + "\" is randomized and requires --seed");
  };

  ComplexDocument out;
  std::string params;
  if (a.kind == "simplex") {
    need_dim();
    out.complex = standard(StandardKind::Simplex, a.dim);
    out.name = "simplex-" + std::to_string(a.dim);
    params = "kind=simplex dim=" + std::to_string(a.dim);
  } else if (a.kind == "boundary-sphere") {
    need_dim();
    out.complex = standard(StandardKind::BoundarySphere, a.dim);
    out.name = "boundary-sphere-" + std::to_string(a.dim);
    params = "kind=boundary-sphere dim=" + std::to_string(a.dim);
  } else if (a.kind == "shelled-ball") {
    need_dim();
    need_seed();
    int n = a.facets;
    if (n <= 0) n = a.dim == 0 ? 1 : a.dim + 3;
    out.complex = shelled_ball(a.dim, n, a.seed).complex;
    out.name = "shelled-ball-" + std::to_string(a.dim);
    params = "kind=shelled-ball dim=" + std::to_string(a.dim) + " facets=" + std::to_string(n) +
             " seed=" + std::to_string(a.seed);
  } else if (a.kind == "nh-ball" || a.kind == "nh-sphere") {
    need_dim();
    need_seed();
    SampleKind sk = a.kind == "nh-ball" ? SampleKind::Ball : SampleKind::Sphere;
    out.complex = nh_double_dual(sk, a.dim, a.tau_dim, a.sigma_dim, a.seed).complex;
    out.name = a.kind + "-" + std::to_string(a.dim);
    params = "kind=" + a.kind + " dim=" + std::to_string(a.dim) +
             " tau_dim=" + std::to_string(a.tau_dim) +
             " sigma_dim=" + std::to_string(a.sigma_dim) + " seed=" + std::to_string(a.seed);
  } else if (a.kind == "reference") {
    if (a.name.empty()) {
      std::string names;
      for (const std::string& n : reference_names()) names += (names.empty() ? "" : ", ") + n;
      throw UsageError("generate: kind \"reference\" requires --name (one of: " + names + ")");
    }
    out = reference(a.name);
    params = "kind=reference name=" + a.name;
  } else {
    throw UsageError(
        "generate: unknown kind \"" + a.kind +
        "\" (choose simplex, boundary-sphere, shelled-ball, nh-ball, nh-sphere, reference)");
  }

  std::string stamp = "generated by nhtop " + std::string(version) + "; " + params;
  out.description = out.description ? *out.description + " [" + stamp + "]" : stamp;
  emit(out, a.output, a.compact);
  return kPass;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::string output = "-";
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::size_t count = 0;
  bool count_given = false;
  bool list = false;
  bool compact = false;
};

int run_verify(const VerifyArgs& a) {
  if (a.list) {
    std::string out;
    for (const std::string& n : suite_names()) out += n + "\n";
    out.pop_back();
    write_text(a.output, out);
    return kPass;
  }
  if (a.suite.empty()) throw UsageError("verify: --suite is required (or --list to see suites)");
  if (!a.seed_given) throw UsageError("verify: --seed is required; suites use no ambient entropy");
  if (!a.count_given) throw UsageError("verify: --count is required");

  SuiteReport rep = run_suite(a.suite, a.seed, a.count);

  json root = report_root("verify");
  root["suite"] = rep.suite_id;
  root["seed"] = rep.seed;
  root["count"] = a.count;
  root["cases_run"] = rep.cases_run;
  root["passes"] = rep.passes;
  root["unknowns"] = rep.unknowns;
  json failures = json::array();
  for (const CaseFailure& f : rep.failures) {
    json jf;
    jf["index"] = f.index;
    jf["fingerprint"] = f.fingerprint;
    jf["expected"] = f.expected;
    jf["observed"] = f.observed;
    failures.push_back(jf);
  }
  root["failures"] = failures;
  json unknown_cases = json::array();
  for (const CaseRecord& c : rep.cases) {
    if (!c.unknown) continue;
    json jc;
    jc["index"] = c.index;
    jc["tag"] = c.tag;
    jc["note"] = c.note;
    unknown_cases.push_back(jc);
  }
  root["unknown_cases"] = unknown_cases;
  root["elapsed_seconds"] = rep.elapsed_seconds;
  root["summary"] = rep.summary();
  emit(root, a.output, a.compact);
  std::cerr << rep.summary() << '\n';

  if (!rep.failures.empty()) return kFail;
  if (rep.unknowns > 0) return kUnknown;
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simplicial complexes: Alexander duals, homology, collapses, NH classification"};
  app.set_version_flag("--version", std::string(version));
  app.require_subcommand(1);

  DualArgs dual_args;
  CLI::App* dual_cmd = app.add_subcommand("dual", "Alexander dual of a complex document");
  dual_cmd->add_option("--input", dual_args.input, "complex document (\"-\" = stdin)");
  dual_cmd->add_option("--output", dual_args.output, "output path (\"-\" = stdout)");
  dual_cmd->add_option("--tau", dual_args.tau, "fresh vertices spanning τ for the relative dual")
      ->delimiter(',');
  dual_cmd->add_option("--ground", dual_args.ground, "explicit ground set (must contain every vertex)")
      ->delimiter(',');
  dual_cmd->add_flag("--compact", dual_args.compact, "single-line JSON output");

  DoubleDualArgs dd_args;
  CLI::App* dd_cmd = app.add_subcommand("double-dual", "relative double dual (K^τ)^σ");
  dd_cmd->add_option("--input", dd_args.input, "complex document (\"-\" = stdin)");
  dd_cmd->add_option("--output", dd_args.output, "output path (\"-\" = stdout)");
  dd_cmd->add_option("--tau", dd_args.tau, "fresh vertices spanning τ")->delimiter(',');
  dd_cmd->add_option("--sigma", dd_args.sigma, "fresh vertices spanning σ")->delimiter(',');
  dd_cmd->add_flag("--compact", dd_args.compact, "single-line JSON output");

  HomologyArgs hom_args;
  CLI::App* hom_cmd = app.add_subcommand("homology", "reduced homology profile (GF(2) + integral)");
  hom_cmd->add_option("--input", hom_args.input, "complex document (\"-\" = stdin)");
  hom_cmd->add_option("--output", hom_args.output, "output path (\"-\" = stdout)");
  hom_cmd->add_flag("--compact", hom_args.compact, "single-line JSON output");

  ClassifyArgs cls_args;
  CLI::App* cls_cmd = app.add_subcommand("classify", "NH-manifold / NH-ball / NH-sphere recognition");
  cls_cmd->add_option("--input", cls_args.input, "complex document (\"-\" = stdin)");
  cls_cmd->add_option("--output", cls_args.output, "output path (\"-\" = stdout)");
  cls_cmd->add_option("--budget", cls_args.budget, "collapse-search node budget");
  cls_cmd->add_flag("--subdivision-retry", cls_args.subdivision_retry,
                    "retry failed collapse searches on the barycentric subdivision");
  cls_cmd->add_flag("--compact", cls_args.compact, "single-line JSON output");

  CollapseArgs col_args;
  CLI::App* col_cmd = app.add_subcommand("collapse", "collapsibility / collapses-to / spine search");
  col_cmd->add_option("--input", col_args.input, "complex document (\"-\" = stdin)");
  col_cmd->add_option("--output", col_args.output, "output path (\"-\" = stdout)");
  col_cmd->add_option("--target", col_args.target, "target complex document for a collapses-to search");
  bool spine_flag = false;
  col_cmd->add_flag("--spine", spine_flag, "collapse whole dimension levels to a low-dimensional spine");
  int spine_dim_val = 0;
  CLI::Option* spine_dim_opt =
      col_cmd->add_option("--spine-dim", spine_dim_val, "target spine dimension (default: dim-1)");
  col_cmd->add_option("--budget", col_args.budget, "search node budget");
  col_cmd->add_flag("--subdivision-retry", col_args.subdivision_retry,
                    "retry a failed search on the barycentric subdivision");
  col_cmd->add_flag("--compact", col_args.compact, "single-line JSON output");

  GenerateArgs gen_args;
  CLI::App* gen_cmd = app.add_subcommand("generate", "emit a generated or reference complex document");
  gen_cmd->add_option("--kind", gen_args.kind,
                      "simplex | boundary-sphere | shelled-ball | nh-ball | nh-sphere | reference")
      ->required();
  gen_cmd->add_option("--output", gen_args.output, "output path (\"-\" = stdout)");
  CLI::Option* dim_opt = gen_cmd->add_option("--dim", gen_args.dim, "dimension of the result");
  gen_cmd->add_option("--facets", gen_args.facets, "facet count for shelled-ball (default dim+3)");
  gen_cmd->add_option("--tau-dim", gen_args.tau_dim, "dim τ for nh-ball / nh-sphere (default 0)");
  gen_cmd->add_option("--sigma-dim", gen_args.sigma_dim, "dim σ for nh-ball / nh-sphere (default 0)");
  CLI::Option* seed_opt = gen_cmd->add_option("--seed", gen_args.seed, "RNG seed (required when randomized)");
  gen_cmd->add_option("--name", gen_args.name, "reference complex name (see kind reference)");
  gen_cmd->add_flag("--compact", gen_args.compact, "single-line JSON output");

  VerifyArgs ver_args;
  CLI::App* ver_cmd = app.add_subcommand("verify", "run a deterministic identity/theorem suite");
  ver_cmd->add_option("--suite", ver_args.suite, "suite id (see --list)");
  ver_cmd->add_option("--output", ver_args.output, "report path (\"-\" = stdout)");
  CLI::Option* vseed_opt = ver_cmd->add_option("--seed", ver_args.seed, "suite seed (required)");
  CLI::Option* vcount_opt =
      ver_cmd->add_option("--count", ver_args.count, "case count (vertex cap for exhaustive suites)");
  ver_cmd->add_flag("--list", ver_args.list, "list suite ids and exit");
  ver_cmd->add_flag("--compact", ver_args.compact, "single-line JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*dual_cmd) {
      dual_args.tau_given = dual_cmd->count("--tau") > 0;
      dual_args.ground_given = dual_cmd->count("--ground") > 0;
      return run_dual(dual_args);
    }
    if (*dd_cmd) return run_double_dual(dd_args);
    if (*hom_cmd) return run_homology(hom_args);
    if (*cls_cmd) return run_classify(cls_args);
    if (*col_cmd) {
      col_args.spine = spine_flag;
      if (spine_dim_opt->count() > 0) {
        if (!spine_flag) throw UsageError("collapse: --spine-dim requires --spine");
        col_args.spine_dim = spine_dim_val;
      }
      return run_collapse(col_args);
    }
    if (*gen_cmd) {
      gen_args.dim_given = dim_opt->count() > 0;
      gen_args.seed_given = seed_opt->count() > 0;
      return run_generate(gen_args);
    }
    if (*ver_cmd) {
      ver_args.seed_given = vseed_opt->count() > 0;
      ver_args.count_given = vcount_opt->count() > 0;
      return run_verify(ver_args);
    }
  } catch (const UsageError& e) {
    std::cerr << "nhtop: " << e.what() << '\n';
    return kUsage;
  } catch (const DocumentError& e) {
    std::cerr << "nhtop: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "nhtop: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "nhtop: internal error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
