// antiforce: command-line front end.
// Exit status: 0 success, 1 a check or computation failed, 2 usage or input error.

#include <bit>
#include <map>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "antiforce/antiforce.hpp"

namespace af = antiforce;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw af::InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw af::InvalidInput("cannot write " + path);
  out << text;
}

// Parse diagnostics gain the file name: "FILE: line N: ...".
af::Graph load_graph(const std::string& path) {
  try {
    return af::parse_graph(slurp(path));
  } catch (const af::ParseError& e) {
    throw af::InvalidInput(path + ": " + e.what());
  }
}

af::PerfectMatching load_matching(const std::string& path, const af::Graph& g) {
  try {
    return af::parse_matching(slurp(path), g);
  } catch (const af::ParseError& e) {
    throw af::InvalidInput(path + ": " + e.what());
  }
}

json edges_json(const std::vector<af::Edge>& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

std::string rational_string(const af::Rational& r) {
  return r.is_integer() ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

// Edge classes read off hypercube-style ids: class i holds the edges whose
// endpoints differ exactly in bit i-1, and class n+1 holds every other edge
// when they all share one xor pattern.
af::LabeledClasses classes_from_ids(const af::Graph& g) {
  const auto v = g.vertex_count();
  if (v < 2 || !std::has_single_bit(v)) {
    throw af::InvalidInput("--matching-class needs 2^n vertices or a --classes sidecar");
  }
  const int n = std::countr_zero(v);
  std::map<int, std::vector<af::Edge>> buckets;
  std::uint32_t extra_mask = 0;
  for (auto e : g.edges()) {
    const std::uint32_t x = e.u ^ e.v;
    if (std::has_single_bit(x)) {
      buckets[std::countr_zero(x) + 1].push_back(e);
    } else {
      if (extra_mask != 0 && extra_mask != x) {
        throw af::InvalidInput("edges outside the coordinate classes do not form one class");
      }
      extra_mask = x;
      buckets[n + 1].push_back(e);
    }
  }
  af::LabeledClasses out;
  for (auto& [id, es] : buckets) out.emplace(id, af::EdgeSet(std::move(es)));
  return out;
}

int run_gen(const std::string& family, const std::vector<int>& params, const std::string& out,
            const std::string& classes_out) {
  auto it = af::family_names().find(family);
  if (it == af::family_names().end()) throw af::InvalidInput("unknown family " + family);
  af::FamilySpec spec{it->second, 0, 0};
  const bool two = spec.family == af::Family::complete_bipartite ||
                   spec.family == af::Family::enhanced_hypercube;
  if (params.size() != (two ? 2u : 1u)) {
    throw af::InvalidInput(family + " takes " + std::string(two ? "two parameters" : "one parameter"));
  }
  spec.a = params[0];
  if (two) spec.b = params[1];
  auto gg = af::generate(spec);
  write_out(out, af::format_graph(gg.graph));
  if (!classes_out.empty()) write_out(classes_out, af::format_classes(gg.classes));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anti-forcing numbers, nice perfect matchings and Cartesian structure"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(af::kVersion));

  // gen
  auto* gen = app.add_subcommand("gen", "Write a named graph family in the graph text format");
  std::string gen_family;
  std::vector<int> gen_params;
  std::string gen_out;
  std::string gen_classes;
  gen->add_option("family", gen_family,
                  "complete | complete_bipartite | cycle | path | hypercube | folded_hypercube | "
                  "enhanced_hypercube")
      ->required();
  gen->add_option("params", gen_params, "n, or m n for complete_bipartite, or n k for enhanced_hypercube")
      ->required();
  gen->add_option("-o,--output", gen_out, "Graph file (default: stdout)");
  gen->add_option("--classes", gen_classes, "Also write the edge-class sidecar to this file");

  // af
  auto* afc = app.add_subcommand("af", "Anti-forcing number of a matching, or the maximum over all");
  std::string af_graph;
  std::string af_matching;
  int af_class = 0;
  std::string af_classes_file;
  bool af_max = false;
  unsigned af_threads = 1;
  afc->add_option("graph", af_graph, "Graph file")->required();
  auto* opt_m = afc->add_option("--matching", af_matching, "Matching file");
  auto* opt_c = afc->add_option("--matching-class", af_class,
                                "Use edge class i as the matching (from --classes, else from vertex ids)");
  afc->add_option("--classes", af_classes_file, "Edge-class sidecar written by gen");
  auto* opt_max = afc->add_flag("--max", af_max, "Maximum over every perfect matching");
  afc->add_option("--threads", af_threads, "Worker threads for --max")->capture_default_str();
  opt_m->excludes(opt_c)->excludes(opt_max);
  opt_c->excludes(opt_max);

  // nice
  auto* nice = app.add_subcommand("nice", "Nice perfect matchings");
  std::string nice_graph;
  bool nice_count = false;
  bool nice_list = false;
  bool nice_classes = false;
  nice->add_option("graph", nice_graph, "Graph file")->required();
  nice->add_flag("--count", nice_count, "Print the number of nice perfect matchings (default)");
  nice->add_flag("--list", nice_list, "Print each nice perfect matching, blank-line separated");
  nice->add_flag("--classes", nice_classes, "Print equivalence classes as JSON arrays of indices");

  // involutions
  auto* invc = app.add_subcommand("involutions", "Edge-involutions, one image list per line");
  std::string inv_graph;
  invc->add_option("graph", inv_graph, "Graph file")->required();

  // theta
  auto* theta = app.add_subcommand("theta", "Closure classes of the distance relation on edges");
  std::string theta_graph;
  bool theta_classes = false;
  bool theta_prime = false;
  theta->add_option("graph", theta_graph, "Graph file")->required();
  theta->add_flag("--classes", theta_classes, "Print the classes (default)");
  theta->add_flag("--prime", theta_prime, "Print prime or inconclusive");

  // product
  auto* prod = app.add_subcommand("product", "Cartesian products");
  std::vector<std::string> prod_build;
  std::vector<std::string> prod_iso;
  std::string prod_out;
  auto* opt_build = prod->add_option("--build", prod_build, "Write the product of two graph files")
                        ->expected(2);
  auto* opt_iso = prod->add_option("--verify-iso", prod_iso, "Test two graph files for isomorphism")
                      ->expected(2);
  prod->add_option("-o,--output", prod_out, "Output file for --build (default: stdout)");
  opt_build->excludes(opt_iso);

  // construct
  auto* cons = app.add_subcommand("construct", "Expansion traces");
  std::uint64_t cons_seed = 0;
  std::size_t cons_steps = 10;
  std::size_t cons_cap = 14;
  std::vector<std::string> cons_decompose;
  std::string cons_out;
  cons->add_option("--seed", cons_seed, "Random seed")->capture_default_str();
  cons->add_option("--steps", cons_steps, "Number of random steps")->capture_default_str();
  cons->add_option("--max-vertices", cons_cap, "Vertex cap for random traces")->capture_default_str();
  cons->add_option("--decompose", cons_decompose, "Trace rebuilding GRAPH with nice MATCHING")
      ->expected(2);
  cons->add_option("-o,--output", cons_out, "Trace file (default: stdout)");

  // verify
  auto* ver = app.add_subcommand("verify", "Recompute the reference values and report");
  std::string ver_suite = "paper";
  int ver_dim = 4;
  std::string ver_format = "json";
  std::uint64_t ver_seed = 0;
  bool ver_timings = false;
  unsigned ver_threads = 1;
  ver->add_option("--suite", ver_suite, "Suite name")->check(CLI::IsMember({"paper"}))->capture_default_str();
  ver->add_option("--max-dim", ver_dim, "Largest cube dimension: 3, 4 or 5")
      ->check(CLI::Range(3, 5))
      ->capture_default_str();
  ver->add_option("--format", ver_format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  ver->add_option("--seed", ver_seed, "Seed for the random construction checks")->capture_default_str();
  ver->add_flag("--timings", ver_timings, "Record wall-clock millis (otherwise 0)");
  ver->add_option("--threads", ver_threads, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return run_gen(gen_family, gen_params, gen_out, gen_classes);

    if (*afc) {
      const auto g = load_graph(af_graph);
      const auto b = af::bounds(g);
      json out{{"graph", af_graph},
               {"quarter_bound", rational_string(b.quarter)},
               {"cyclomatic_bound", b.cyclomatic}};
      if (af_max) {
        auto r = af::max_antiforcing(g, af_threads);
        out["af"] = r.value;
        out["matching"] = edges_json(r.argmax.edges());
        out["perfect_matchings"] = r.matchings;
        std::cout << out.dump() << "\n";
        return kOk;
      }
      af::PerfectMatching m;
      if (!af_matching.empty()) {
        m = load_matching(af_matching, g);
      } else if (*opt_c) {
        auto classes = af_classes_file.empty() ? classes_from_ids(g) : af::parse_classes(slurp(af_classes_file));
        auto it = classes.find(af_class);
        if (it == classes.end()) throw af::InvalidInput("no edge class " + std::to_string(af_class));
        m = af::PerfectMatching::from_edges(g.vertex_count(), it->second.edges());
      } else {
        throw af::InvalidInput("af needs --matching, --matching-class or --max");
      }
      auto r = af::min_antiforcing(g, m);
      out["matching"] = edges_json(m.edges());
      out["af"] = r.value;
      out["witness"] = edges_json(r.witness.edges());
      out["lower_bound_c4"] = r.lower_bound_c4;
      std::cout << out.dump() << "\n";
      return kOk;
    }

    if (*nice) {
      const auto g = load_graph(nice_graph);
      const auto set = af::enumerate_nice(g);
      if (!nice_list && !nice_classes) nice_count = true;
      if (nice_count) std::cout << set.count() << "\n";
      if (nice_list) {
        for (std::size_t i = 0; i < set.matchings.size(); ++i) {
          if (i > 0) std::cout << "\n";
          std::cout << af::format_matching(set.matchings[i]);
        }
      }
      if (nice_classes) std::cout << json(af::equivalence_classes(g, set)).dump() << "\n";
      return kOk;
    }

    if (*invc) {
      const auto g = load_graph(inv_graph);
      for (const auto& inv : af::enumerate_involutions(g)) {
        for (std::size_t i = 0; i < inv.alpha.size(); ++i) std::cout << (i ? " " : "") << inv.alpha[i];
        std::cout << "\n";
      }
      return kOk;
    }

    if (*theta) {
      const auto g = load_graph(theta_graph);
      const auto part = af::theta_partition(g);
      if (!theta_prime) theta_classes = true;
      if (theta_classes) {
        af::LabeledClasses labeled;
        auto classes = part.classes(g);
        for (std::size_t i = 0; i < classes.size(); ++i) labeled.emplace(static_cast<int>(i + 1), classes[i]);
        std::cout << af::format_classes(labeled);
      }
      if (theta_prime) std::cout << (part.class_count == 1 ? "prime" : "inconclusive") << "\n";
      return kOk;
    }

    if (*prod) {
      if (!prod_build.empty()) {
        auto p = af::cartesian_product(load_graph(prod_build[0]), load_graph(prod_build[1]));
        write_out(prod_out, af::format_graph(p.graph));
        return kOk;
      }
      if (!prod_iso.empty()) {
        auto phi = af::is_isomorphic(load_graph(prod_iso[0]), load_graph(prod_iso[1]));
        if (!phi) {
          std::cout << "not isomorphic\n";
          return kFailed;
        }
        std::cout << "isomorphic";
        for (auto x : *phi) std::cout << " " << x;
        std::cout << "\n";
        return kOk;
      }
      throw af::InvalidInput("product needs --build or --verify-iso");
    }

    if (*cons) {
      af::ConstructionTrace t;
      if (!cons_decompose.empty()) {
        const auto g = load_graph(cons_decompose[0]);
        t = af::decompose(g, load_matching(cons_decompose[1], g));
      } else {
        t = af::random_extremal(cons_seed, cons_steps, cons_cap);
      }
      write_out(cons_out, af::trace_to_json(t.steps).dump(2) + "\n");
      return kOk;
    }

    if (*ver) {
      af::SuiteOptions opt;
      opt.max_dim = ver_dim;
      opt.seed = ver_seed;
      opt.timings = ver_timings;
      opt.threads = ver_threads;
      auto report = af::run_suite(opt);
      std::cout << af::emit_report(report, ver_format == "tsv" ? af::ReportFormat::tsv
                                                                : af::ReportFormat::json);
      return report.pass() ? kOk : kFailed;
    }
  } catch (const af::ParseError& e) {
    std::cerr << "antiforce: " << e.what() << "\n";
    return kUsage;
  } catch (const af::InvalidInput& e) {
    std::cerr << "antiforce: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "antiforce: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
