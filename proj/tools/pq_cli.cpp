// Command-line front end. Reports go to stdout, diagnostics to stderr.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pq/pq.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Global {
  std::uint64_t budget = 0;
  std::uint64_t work_budget = 0;
  unsigned repair_cap = 0;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::string format = "json";
};

struct Failure {
  pq_status status;
  std::string message;
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { pq_string_free(s); }
};

void check(pq_status st) {
  if (st != PQ_OK) throw Failure{st, pq_last_error()};
}

json take_json(pq_status st, OwnedString& out) {
  check(st);
  return json::parse(out.s);
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{PQ_ERR_IO, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string digest(const std::string& bytes) {
  OwnedString hex;
  check(pq_digest(bytes.data(), bytes.size(), &hex.s));
  return hex.s;
}

using FamilyPtr = std::unique_ptr<pq_family, decltype(&pq_family_free)>;
using PointsPtr = std::unique_ptr<pq_points, decltype(&pq_points_free)>;

FamilyPtr load_family(const std::string& bytes) {
  pq_family* f = nullptr;
  check(pq_family_parse(bytes.data(), bytes.size(), &f));
  return FamilyPtr(f, pq_family_free);
}

PointsPtr load_points(const std::string& bytes) {
  pq_points* p = nullptr;
  check(pq_points_parse(bytes.data(), bytes.size(), &p));
  return PointsPtr(p, pq_points_free);
}

// Flattens a report into "path,value" rows.
void flatten(const json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
    }
  } else if (j.is_array()) {
    if (j.empty()) os << path << ",[]\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    std::string v = j.is_string() ? j.get<std::string>() : j.dump();
    if (v.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : v) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      v = quoted + "\"";
    }
    os << path << "," << v << "\n";
  }
}

void print_report(const json& report, const std::string& format) {
  if (format == "csv") {
    std::cout << "key,value\n";
    flatten(report, "", std::cout);
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

int exit_for(pq_status st) {
  switch (st) {
    case PQ_OK: return kExitOk;
    case PQ_ERR_VERIFICATION: return kExitViolation;
    default: return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact (p,q)-property and piercing toolkit for planar convex families"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--budget", g.budget, "Cap on enumerated subfamilies (0: default)");
  app.add_option("--work-budget", g.work_budget, "Cap on other search nodes (0: default)");
  app.add_option("--repair-cap", g.repair_cap, "Weak-net repair iterations (0: default)");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", g.seed, "Generator seed");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv"}));

  // gen
  pq_gen_spec spec;
  pq_gen_spec_default(&spec);
  std::string kind, out_path;
  auto* gen = app.add_subcommand("gen", "Generate a family or point-set file");
  gen->add_option("--kind", kind, "Generator kind")
      ->required()
      ->check(CLI::IsMember({"crossing-segments", "disjoint", "concentric", "segments-plus-boxes",
                             "random-polygons", "disc-polygons", "grid-points"}));
  gen->add_option("--n", spec.n, "Number of bodies or support points");
  gen->add_option("--p", spec.p);
  gen->add_option("--q", spec.q);
  gen->add_option("--grid", spec.grid);
  gen->add_option("--vertices", spec.vertices);
  gen->add_option("--radius", spec.radius);
  gen->add_option("--max-weight", spec.max_weight);
  gen->add_flag("--strips", spec.strips, "Thin parallelograms instead of segments");
  gen->add_option("--out", out_path, "Write the file here (default: stdout)");

  std::string input;
  int p = 0, q = 0, p_small = 0, q_small = 0, k = 0, d = 2, criterion = 0;
  std::string eps;

  auto* analyze = app.add_subcommand("analyze", "Intersection graph and tuple counts");
  analyze->add_option("file", input)->required();
  analyze->add_option("--k-max", k, "Largest tuple size (0: n)");

  auto* pqcheck = app.add_subcommand("pq-check", "Exhaustive (p,q)-property test");
  pqcheck->add_option("file", input)->required();
  pqcheck->add_option("--p", p)->required();
  pqcheck->add_option("--q", q)->required();

  auto* dich = app.add_subcommand("dichotomy", "Smaller property or split-off subfamily");
  dich->add_option("file", input)->required();
  dich->add_option("--p", p)->required();
  dich->add_option("--q", q)->required();
  dich->add_option("--p-small", p_small)->required();
  dich->add_option("--q-small", q_small)->required();

  auto* pierce = app.add_subcommand("pierce", "Piercing set with certificate");
  pierce->add_option("file", input)->required();
  bool exact = false, greedy = false, pipeline = false;
  auto* mode = pierce->add_option_group("mode");
  mode->add_flag("--exact", exact, "Minimum transversal");
  mode->add_flag("--greedy", greedy, "Greedy transversal");
  mode->add_flag("--pipeline", pipeline, "Four-stage verified pipeline (needs --p, --q)");
  mode->require_option(1);
  pierce->add_option("--p", p);
  pierce->add_option("--q", q);

  auto* lp = app.add_subcommand("lp", "Fractional transversal and matching LPs");
  lp->add_option("file", input)->required();

  auto* net = app.add_subcommand("net", "Weak epsilon-net for a point file");
  net->add_option("file", input)->required();
  net->add_option("--eps", eps, "Rational, e.g. 1/3")->required();

  auto* bounds = app.add_subcommand("bounds", "Bound calculators for (p,q,d)");
  bounds->add_option("--p", p)->required();
  bounds->add_option("--q", q)->required();
  bounds->add_option("--d", d);
  bounds->add_option("--eps", eps, "Enables the large-q regime test");

  auto* clique = app.add_subcommand("maxclique", "Max-clique approximation via deepest point");
  clique->add_option("file", input)->required();
  bool no_exact = false;
  clique->add_flag("--no-exact", no_exact, "Skip the exact clique and ratio");

  auto* uni = app.add_subcommand("union", "Union complexity and related checks");
  uni->add_option("file", input)->required();
  uni->add_option("--k", k, "Also test every k-subfamily (k >= 3)");
  bool exactly_two = false;
  uni->add_flag("--exactly-two", exactly_two, "Check the C(k,2) lower bound for an exactly 2-intersecting family");
  int forcing_p = 0, forcing_k = 0;
  uni->add_option("--forcing-p", forcing_p, "With --forcing-k: scan a (p,2)-family without exactly 2-intersecting k-subfamilies for forced triples");
  uni->add_option("--forcing-k", forcing_k);

  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify->add_option("--criterion", criterion, "Run one criterion (1..10)")->check(CLI::Range(0, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  pq_options opt;
  pq_options_default(&opt);
  if (g.budget) opt.max_subsets = g.budget;
  if (g.work_budget) opt.max_work = g.work_budget;
  if (g.repair_cap) opt.repair_cap = g.repair_cap;
  opt.threads = g.threads;

  CLI::App* sub = app.get_subcommands().front();
  json report = {{"command", sub->get_name()}};
  json args = json::array();
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
  report["argv"] = args;
  report["input_digest"] = nullptr;

  pq_usage usage{0, 0};
  int rc = kExitOk;
  const auto start = std::chrono::steady_clock::now();
  try {
    std::string bytes;
    if (!input.empty()) {
      bytes = read_bytes(input);
      report["input_digest"] = digest(bytes);
    }
    OwnedString out;
    json results;
    if (sub == gen) {
      spec.kind = kind.c_str();
      spec.seed = g.seed;
      check(pq_gen(&spec, &out.s));
      if (out_path.empty()) {
        std::cout << out.s;
        return kExitOk;
      }
      std::ofstream f(out_path, std::ios::binary);
      if (!f || !(f << out.s)) throw Failure{PQ_ERR_IO, "cannot write " + out_path};
      results = {{"path", out_path}, {"file_digest", digest(out.s)}};
    } else if (sub == analyze) {
      auto f = load_family(bytes);
      results = take_json(pq_analyze(f.get(), k, &opt, &out.s, &usage), out);
    } else if (sub == pqcheck) {
      auto f = load_family(bytes);
      results = take_json(pq_pq_check(f.get(), p, q, &opt, &out.s, &usage), out);
      if (!results["holds"].get<bool>()) rc = kExitViolation;
    } else if (sub == dich) {
      auto f = load_family(bytes);
      results = take_json(pq_dichotomy(f.get(), p, q, p_small, q_small, &opt, &out.s, &usage), out);
    } else if (sub == pierce) {
      auto f = load_family(bytes);
      const pq_pierce_mode m = exact ? PQ_PIERCE_EXACT : (greedy ? PQ_PIERCE_GREEDY : PQ_PIERCE_PIPELINE);
      results = take_json(pq_pierce(f.get(), m, p, q, &opt, &out.s, &usage), out);
    } else if (sub == lp) {
      auto f = load_family(bytes);
      results = take_json(pq_lp(f.get(), &out.s), out);
    } else if (sub == net) {
      auto pts = load_points(bytes);
      results = take_json(pq_net(pts.get(), eps.c_str(), &opt, &out.s, &usage), out);
    } else if (sub == bounds) {
      results = take_json(pq_bounds(p, q, d, eps.empty() ? nullptr : eps.c_str(), &out.s), out);
    } else if (sub == clique) {
      auto f = load_family(bytes);
      results = take_json(pq_maxclique(f.get(), no_exact ? 0 : 1, &out.s), out);
    } else if (sub == uni) {
      auto f = load_family(bytes);
      results = take_json(pq_union(f.get(), k, &opt, &out.s, &usage), out);
      if (results.contains("condition") && !results["condition"]["holds"].get<bool>()) {
        rc = kExitViolation;
      }
      if (exactly_two) {
        OwnedString extra;
        results["exactly_two"] = take_json(pq_exactly_two_union(f.get(), &opt, &extra.s, &usage), extra);
      }
      if (forcing_p || forcing_k) {
        OwnedString extra;
        results["triple_forcing"] =
            take_json(pq_triple_forcing(f.get(), forcing_p, forcing_k, &opt, &extra.s, &usage), extra);
      }
    } else if (sub == verify) {
      results = take_json(pq_verify_all(criterion, &opt, &out.s), out);
      for (const auto& c : results["criteria"]) {
        std::cerr << (c["passed"].get<bool>() ? "PASS" : "FAIL") << " [" << c["id"] << "] "
                  << c["name"].get<std::string>() << " (" << c["seconds"] << " s)\n";
      }
      if (!results["all_passed"].get<bool>()) rc = kExitViolation;
    }
    report["results"] = std::move(results);
  } catch (const Failure& e) {
    std::cerr << "error: " << pq_status_name(e.status) << ": " << e.message << "\n";
    report["error"] = {{"status", pq_status_name(e.status)}, {"message", e.message}};
    rc = exit_for(e.status);
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  report["wall_time_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  report["budget"] = {{"subsets_used", usage.subsets_used}, {"work_used", usage.work_used},
                      {"max_subsets", opt.max_subsets}, {"max_work", opt.max_work},
                      {"repair_cap", opt.repair_cap}, {"threads", opt.threads}};
  report["exit_code"] = rc;
  print_report(report, g.format);
  return rc;
}
