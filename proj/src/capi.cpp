#include "pq/pq.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "pq/acceptance.hpp"
#include "pq/bounds.hpp"
#include "pq/clique.hpp"
#include "pq/errors.hpp"
#include "pq/family.hpp"
#include "pq/instances.hpp"
#include "pq/pierce.hpp"
#include "pq/serialize.hpp"

struct pq_family {
  pq::Family family;
};

struct pq_points {
  pq::WeightedPoints points;
};

namespace {

thread_local std::string g_last_error;

struct IoError : pq::Error {
  using pq::Error::Error;
};

pq_status fail(pq_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Maps exceptions to status codes; every API entry point goes through here.
template <class Fn>
pq_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return PQ_OK;
  } catch (const pq::ParseError& e) {
    return fail(PQ_ERR_PARSE, e.what());
  } catch (const pq::PreconditionError& e) {
    return fail(PQ_ERR_PRECONDITION, e.what());
  } catch (const pq::BudgetExceeded& e) {
    return fail(PQ_ERR_BUDGET, e.what());
  } catch (const pq::VerificationFailure& e) {
    return fail(PQ_ERR_VERIFICATION, e.what());
  } catch (const IoError& e) {
    return fail(PQ_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(PQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PQ_ERR_INTERNAL, "unknown error");
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void emit(char** out, const pq::Json& j) { *out = copy_out(pq::dump(j)); }

pq::BudgetLimits limits_of(const pq_options* opt) {
  pq::BudgetLimits l;
  if (opt) {
    l.max_subsets = opt->max_subsets;
    l.max_work = opt->max_work;
    l.repair_cap = opt->repair_cap;
    l.threads = opt->threads == 0 ? 1 : opt->threads;
  }
  return l;
}

// Copies the counters out even when the call throws.
class Metered {
 public:
  Metered(const pq_options* opt, pq_usage* usage) : budget_(limits_of(opt)), usage_(usage) {}
  ~Metered() {
    if (usage_) *usage_ = {budget_.subsets_used(), budget_.work_used()};
  }
  pq::Budget& budget() { return budget_; }

 private:
  pq::Budget budget_;
  pq_usage* usage_;
};

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(std::string("cannot open ") + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void require(bool ok, const char* what) {
  if (!ok) throw pq::PreconditionError(what);
}

}  // namespace

extern "C" {

const char* pq_version(void) { return "1.0.0"; }
const char* pq_last_error(void) { return g_last_error.c_str(); }

const char* pq_status_name(pq_status status) {
  switch (status) {
    case PQ_OK: return "ok";
    case PQ_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case PQ_ERR_PARSE: return "parse-error";
    case PQ_ERR_PRECONDITION: return "precondition";
    case PQ_ERR_BUDGET: return "budget-exceeded";
    case PQ_ERR_VERIFICATION: return "verification-failure";
    case PQ_ERR_IO: return "io-error";
    case PQ_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

void pq_options_default(pq_options* out) {
  if (!out) return;
  const pq::BudgetLimits l;
  *out = {l.max_subsets, l.max_work, l.repair_cap, l.threads};
}

void pq_gen_spec_default(pq_gen_spec* out) {
  if (!out) return;
  const pq::GenSpec s;
  *out = {"crossing-segments", s.n, s.p, s.q, s.grid, s.vertices, s.radius, s.max_weight,
          s.strips ? 1 : 0, s.seed};
}

void pq_string_free(char* s) { std::free(s); }

pq_status pq_family_parse(const char* text, size_t len, pq_family** out) {
  if (!text || !out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto doc = pq::parse_json_text(std::string_view(text, len));
    *out = new pq_family{pq::family_from_json(doc)};
  });
}

pq_status pq_family_load(const char* path, pq_family** out) {
  if (!path || !out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string text = read_file(path);
    *out = new pq_family{pq::family_from_json(pq::parse_json_text(text))};
  });
}

void pq_family_free(pq_family* f) { delete f; }
size_t pq_family_size(const pq_family* f) { return f ? f->family.size() : 0; }

pq_status pq_family_to_json(const pq_family* f, char** out) {
  if (!f || !out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { emit(out, pq::family_to_json(f->family)); });
}

pq_status pq_points_parse(const char* text, size_t len, pq_points** out) {
  if (!text || !out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto doc = pq::parse_json_text(std::string_view(text, len));
    *out = new pq_points{pq::points_from_json(doc)};
  });
}

pq_status pq_points_load(const char* path, pq_points** out) {
  if (!path || !out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string text = read_file(path);
    *out = new pq_points{pq::points_from_json(pq::parse_json_text(text))};
  });
}

void pq_points_free(pq_points* p) { delete p; }
size_t pq_points_size(const pq_points* p) { return p ? p->points.size() : 0; }

pq_status pq_points_to_json(const pq_points* p, char** out) {
  if (!p || !out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { emit(out, pq::points_to_json(p->points)); });
}

pq_status pq_gen(const pq_gen_spec* spec, char** out_file) {
  if (!spec || !out_file || !spec->kind) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto kind = pq::parse_gen_kind(spec->kind);
    if (!kind) throw pq::PreconditionError(std::string("unknown generator kind ") + spec->kind);
    pq::GenSpec s;
    s.kind = *kind;
    s.n = spec->n;
    s.p = spec->p;
    s.q = spec->q;
    s.grid = spec->grid;
    s.vertices = spec->vertices;
    s.radius = spec->radius;
    s.max_weight = spec->max_weight;
    s.strips = spec->strips != 0;
    s.seed = spec->seed;
    if (s.kind == pq::GenKind::kSegmentsPlusBoxes) s.n = s.p;
    emit(out_file, pq::generated_to_json(s, pq::gen(s)));
  });
}

pq_status pq_analyze(const pq_family* f, int k_max, const pq_options* opt, char** out,
                     pq_usage* usage) {
  if (!f || !out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Metered m(opt, usage);
    const auto& fam = f->family;
    const int k = k_max <= 0 ? static_cast<int>(fam.size()) : k_max;
    const auto graph = pq::intersection_graph(fam);
    pq::Json j = {{"n", fam.size()},
                  {"intersection_graph", graph},
                  {"edge_count", graph.edge_count()},
                  {"tuple_stats", pq::tuple_stats(fam, k, m.budget())}};
    emit(out, j);
  });
}

pq_status pq_pq_check(const pq_family* f, int p, int q, const pq_options* opt, char** out,
                      pq_usage* usage) {
  if (!f || !out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Metered m(opt, usage);
    pq::Json j = pq::has_pq_property(f->family, p, q, m.budget());
    j["p"] = p;
    j["q"] = q;
    emit(out, j);
  });
}

pq_status pq_dichotomy(const pq_family* f, int p, int q, int p_small, int q_small,
                       const pq_options* opt, char** out, pq_usage* usage) {
  if (!f || !out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Metered m(opt, usage);
    pq::Json j = pq::dichotomy_split(f->family, p, q, p_small, q_small, m.budget());
    j["input"] = {{"p", p}, {"q", q}, {"p_small", p_small}, {"q_small", q_small}};
    emit(out, j);
  });
}

pq_status pq_pierce(const pq_family* f, pq_pierce_mode mode, int p, int q, const pq_options* opt,
                    char** out, pq_usage* usage) {
  if (!f || !out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Metered m(opt, usage);
    pq::Json j;
    switch (mode) {
      case PQ_PIERCE_EXACT:
        j = {{"mode", "exact"}, {"transversal", pq::exact_min_piercing(f->family, m.budget())}};
        break;
      case PQ_PIERCE_GREEDY:
        j = {{"mode", "greedy"}, {"transversal", pq::greedy_piercing(f->family)}};
        break;
      case PQ_PIERCE_PIPELINE:
        j = {{"mode", "pipeline"},
             {"pipeline", pq::ak_pipeline(f->family, {p, q, 2}, m.budget())}};
        j["transversal"] = j["pipeline"]["transversal"];
        break;
      default:
        throw pq::PreconditionError("unknown pierce mode");
    }
    j["size"] = j["transversal"]["size"];
    emit(out, j);
  });
}

pq_status pq_lp(const pq_family* f, char** out) {
  if (!f || !out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { emit(out, pq::Json(pq::fractional_lps(f->family))); });
}

pq_status pq_net(const pq_points* pts, const char* eps, const pq_options* opt, char** out,
                 pq_usage* usage) {
  if (!pts || !eps || !out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Metered m(opt, usage);
    const auto e = pq::Rational::parse(eps);
    require(e.sign() > 0 && e <= pq::Rational(1), "eps must lie in (0, 1]");
    const auto net = pq::weak_epsilon_net(pts->points, e, m.budget());
    pq::Json j = net;
    j["eps"] = e;
    j["support_size"] = pts->points.size();
    j["total_weight"] = pts->points.total();
    j["verified"] = true;  // weak_epsilon_net never returns an unverified net
    emit(out, j);
  });
}

pq_status pq_bounds(int p, int q, int d, const char* eps, char** out) {
  if (!out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::optional<pq::Rational> e;
    if (eps) e = pq::Rational::parse(eps);
    const pq::PQParams params{p, q, d};
    pq::Json j = {{"p", p}, {"q", q}, {"d", d}, {"regime", pq::hd_regime(params, e)},
                  {"alon_kleitman_exponent", pq::alon_kleitman_exponent(d)}};
    j["exponent_a"] = q > d ? pq::Json(pq::exponent_a(params)) : pq::Json(nullptr);
    if (p >= q && q > d) {
      j["piercing_fraction_bound"] = pq::piercing_fraction_bound(params);
    } else {
      j["piercing_fraction_bound"] = nullptr;
    }
    emit(out, j);
  });
}

pq_status pq_maxclique(const pq_family* f, int compute_exact, char** out) {
  if (!f || !out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { emit(out, pq::Json(pq::approx_max_clique(f->family, compute_exact != 0))); });
}

pq_status pq_union(const pq_family* f, int k, const pq_options* opt, char** out, pq_usage* usage) {
  if (!f || !out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Metered m(opt, usage);
    pq::Json j = {{"union_complexity", pq::union_complexity(f->family)}};
    if (k != 0) {
      j["condition"] = pq::check_union_condition(f->family, k, m.budget());
      j["condition"]["k"] = k;
    }
    emit(out, j);
  });
}

pq_status pq_exactly_two_union(const pq_family* f, const pq_options* opt, char** out, pq_usage* usage) {
  if (!f || !out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Metered m(opt, usage);
    emit(out, pq::Json(pq::exactly_two_union_check(f->family, m.budget())));
  });
}

pq_status pq_triple_forcing(const pq_family* f, int p, int k, const pq_options* opt, char** out,
                     pq_usage* usage) {
  if (!f || !out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    Metered m(opt, usage);
    emit(out, pq::Json(pq::triple_forcing_check(f->family, p, k, m.budget())));
  });
}

pq_status pq_verify_all(int criterion, const pq_options* opt, char** out) {
  if (!out) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto limits = limits_of(opt);
    std::vector<pq::CriterionResult> results;
    if (criterion == 0) {
      results = pq::run_acceptance(limits);
    } else {
      results.push_back(pq::run_criterion(criterion, limits));
    }
    bool all = true;
    pq::Json arr = pq::Json::array();
    for (const auto& r : results) {
      all = all && r.passed;
      arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                     {"seconds", r.seconds}, {"limit_seconds", r.limit_seconds}});
    }
    emit(out, pq::Json{{"criteria", std::move(arr)}, {"all_passed", all}});
  });
}

pq_status pq_digest(const void* data, size_t len, char** out_hex) {
  if ((!data && len) || !out_hex) return fail(PQ_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out_hex = copy_out(pq::sha256_hex(std::string_view(static_cast<const char*>(data), len)));
  });
}

}  // extern "C"
