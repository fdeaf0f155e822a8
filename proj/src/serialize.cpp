#include "pq/serialize.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>

#include "pq/errors.hpp"

namespace pq {

namespace {

std::string idx(std::string_view base, std::size_t i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + "." + key, "missing field");
  return *it;
}

Rational rational_field(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError(where, "expected a \"num/den\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where, e.what());
  }
}

Point2 point_field(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() < 2) throw ParseError(where, "expected [x, y]");
  return {rational_field(j[0], where + "[0]"), rational_field(j[1], where + "[1]")};
}

void check_header(const Json& doc, const char* format) {
  const auto& fmt = field(doc, "format", "$");
  if (!fmt.is_string() || fmt.get<std::string>() != format) {
    throw ParseError("$.format", std::string("expected \"") + format + "\"");
  }
  const auto& ver = field(doc, "version", "$");
  if (!ver.is_number_integer() || ver.get<int>() != kFileVersion) {
    throw ParseError("$.version", "unsupported version (expected 1)");
  }
}

int int_field(const Json& obj, const char* key, int fallback, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) throw ParseError(where + "." + key, "expected an integer");
  return it->get<int>();
}

}  // namespace

Json family_to_json(const Family& family, const Json& metadata) {
  Json bodies = Json::array();
  for (const auto& b : family.bodies()) {
    Json verts = Json::array();
    for (const auto& v : b.vertices()) verts.push_back(Json::array({v.x.str(), v.y.str()}));
    bodies.push_back({{"id", b.id()}, {"vertices", std::move(verts)}});
  }
  Json doc = {{"format", kFamilyFormat}, {"version", kFileVersion}, {"bodies", std::move(bodies)}};
  if (!metadata.empty()) doc["metadata"] = metadata;
  return doc;
}

Family family_from_json(const Json& doc) {
  check_header(doc, kFamilyFormat);
  const auto& bodies = field(doc, "bodies", "$");
  if (!bodies.is_array()) throw ParseError("$.bodies", "expected an array");
  if (bodies.empty()) throw ParseError("$.bodies", "family must contain at least one body");
  std::vector<ConvexBody> out;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    const std::string where = idx("$.bodies", i);
    const Json* verts = &bodies[i];
    int id = static_cast<int>(i);
    if (bodies[i].is_object()) {
      verts = &field(bodies[i], "vertices", where);
      id = int_field(bodies[i], "id", id, where);
    }
    if (!verts->is_array() || verts->empty()) {
      throw ParseError(where + ".vertices", "expected a nonempty vertex array");
    }
    std::vector<Point2> pts;
    for (std::size_t v = 0; v < verts->size(); ++v) {
      pts.push_back(point_field((*verts)[v], idx(where + ".vertices", v)));
    }
    out.emplace_back(pts, id);
  }
  try {
    return Family(std::move(out));
  } catch (const PreconditionError& e) {
    throw ParseError("$.bodies", e.what());
  }
}

Json points_to_json(const WeightedPoints& points, const Json& metadata) {
  Json arr = Json::array();
  for (const auto& e : points.entries()) {
    arr.push_back(Json::array({e.point.x.str(), e.point.y.str(), e.weight.str()}));
  }
  Json doc = {{"format", kPointsFormat}, {"version", kFileVersion}, {"points", std::move(arr)}};
  if (!metadata.empty()) doc["metadata"] = metadata;
  return doc;
}

WeightedPoints points_from_json(const Json& doc) {
  check_header(doc, kPointsFormat);
  const auto& pts = field(doc, "points", "$");
  if (!pts.is_array() || pts.empty()) throw ParseError("$.points", "expected a nonempty array");
  std::vector<WeightedPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string where = idx("$.points", i);
    const Point2 p = point_field(pts[i], where);
    Rational w(1);
    if (pts[i].size() >= 3) w = rational_field(pts[i][2], where + "[2]");
    if (w.sign() <= 0) throw ParseError(where + "[2]", "weight must be positive");
    out.push_back({p, w});
  }
  return WeightedPoints(std::move(out));
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ParseError("line " + std::to_string(line), e.what());
  }
}

Json gen_spec_to_json(const GenSpec& s) {
  Json j = {{"kind", gen_kind_name(s.kind)}, {"n", s.n}, {"seed", s.seed}};
  switch (s.kind) {
    case GenKind::kCrossingSegments: j["strips"] = s.strips; break;
    case GenKind::kSegmentsPlusBoxes: j["p"] = s.p; j["q"] = s.q; break;
    case GenKind::kRandomPolygons:
    case GenKind::kDiscPolygons:
      j["grid"] = s.grid; j["vertices"] = s.vertices; j["radius"] = s.radius; break;
    case GenKind::kGridPoints: j["grid"] = s.grid; j["max_weight"] = s.max_weight; break;
    default: break;
  }
  return j;
}

GenSpec gen_spec_from_json(const Json& j) {
  GenSpec s;
  const auto& kind = field(j, "kind", "$");
  if (!kind.is_string()) throw ParseError("$.kind", "expected a string");
  auto k = parse_gen_kind(kind.get<std::string>());
  if (!k) throw ParseError("$.kind", "unknown generator kind " + kind.get<std::string>());
  s.kind = *k;
  s.n = int_field(j, "n", s.n, "$");
  s.p = int_field(j, "p", s.p, "$");
  s.q = int_field(j, "q", s.q, "$");
  s.grid = int_field(j, "grid", s.grid, "$");
  s.vertices = int_field(j, "vertices", s.vertices, "$");
  s.radius = int_field(j, "radius", s.radius, "$");
  s.max_weight = int_field(j, "max_weight", s.max_weight, "$");
  if (auto it = j.find("strips"); it != j.end()) s.strips = it->get<bool>();
  if (auto it = j.find("seed"); it != j.end()) s.seed = it->get<std::uint64_t>();
  if (s.kind == GenKind::kSegmentsPlusBoxes) s.n = s.p;
  return s;
}

Json generated_to_json(const GenSpec& spec, const Generated& g) {
  const Json meta = {{"generator", gen_spec_to_json(spec)}};
  if (const auto* f = std::get_if<Family>(&g)) return family_to_json(*f, meta);
  return points_to_json(std::get<WeightedPoints>(g), meta);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

void to_json(Json& j, const Rational& r) { j = r.str(); }
void to_json(Json& j, const Point2& p) { j = Json::array({p.x.str(), p.y.str()}); }

void to_json(Json& j, const TupleStats& s) {
  j = {{"f", s.f}};
  if (s.helly_residue) j["helly_residue_r"] = *s.helly_residue;
  else j["helly_residue_r"] = nullptr;
}

void to_json(Json& j, const PQDecision& d) {
  j = {{"holds", d.holds}};
  j["counterexample"] = d.counterexample ? Json(*d.counterexample) : Json(nullptr);
}

void to_json(Json& j, const DichotomyResult& d) {
  if (const auto* left = std::get_if<SmallerPropertyHolds>(&d)) {
    j = {{"branch", "smaller-property"}, {"p", left->p}, {"q", left->q},
         {"certificate", left->certificate}};
  } else {
    const auto& right = std::get<SplitOff>(d);
    j = {{"branch", "split"},
         {"subfamily", right.subfamily},
         {"found_greedily", right.found_greedily},
         {"residual_p", right.residual_p},
         {"residual_q", right.residual_q},
         {"residual", right.residual}};
  }
}

void to_json(Json& j, const PiercingSet& s) {
  Json cert = Json::object();
  for (const auto& [id, i] : s.certificate) cert[std::to_string(id)] = i;
  j = {{"size", s.size()}, {"points", s.points}, {"certificate", std::move(cert)}};
}

void to_json(Json& j, const WeightedPoints& w) {
  Json arr = Json::array();
  for (const auto& e : w.entries()) arr.push_back({{"point", e.point}, {"weight", e.weight}});
  j = {{"entries", std::move(arr)}, {"total", w.total()}};
}

void to_json(Json& j, const LPResult& r) {
  Json sets = Json::object();
  for (const auto& [id, w] : r.set_weights) sets[std::to_string(id)] = w.str();
  j = {{"primal_value", r.primal_value}, {"dual_value", r.dual_value},
       {"duality_gap_zero", r.primal_value == r.dual_value},
       {"alpha", r.alpha}, {"point_weights", r.point_weights},
       {"set_weights", std::move(sets)}, {"candidate_count", r.candidate_count},
       {"column_count", r.column_count}, {"pivots", r.pivots}};
}

void to_json(Json& j, const WeakNet& n) {
  j = {{"size", n.points.size()}, {"points", n.points}, {"grid_points", n.grid_points},
       {"repairs", n.repairs}, {"pruned", n.pruned}};
}

void to_json(Json& j, const PipelineReport& r) {
  Json kalai = Json::array();
  for (const auto& k : r.kalai) kalai.push_back(k.get_str());
  j = {{"params", {{"p", r.params.p}, {"q", r.params.q}, {"d", r.params.d}}},
       {"n", r.n},
       {"stage1", {{"tuple_stats", r.stats}, {"decaen_lower_bound", r.decaen},
                   {"kalai_residue_r", r.kalai_residue}, {"kalai_upper_bounds", std::move(kalai)}}},
       {"stage2", {{"deepest_point", r.deepest.point}, {"depth", r.deepest.depth},
                   {"members", r.deepest.members},
                   {"fraction_bound", r.depth_fraction_bound},
                   {"check_applied", r.depth_check_applied}}},
       {"stage3", r.lp},
       {"stage4", r.net},
       {"transversal", r.transversal}};
}

void to_json(Json& j, const BoundReport& r) {
  j = {{"regime", regime_name(r.regime)}, {"lower", r.lower}, {"notes", r.notes}};
  j["upper_exact"] = r.upper_exact ? Json(*r.upper_exact) : Json(nullptr);
  j["upper_exponent"] = r.upper_exponent ? Json(r.upper_exponent->str()) : Json(nullptr);
}

void to_json(Json& j, const WeakNetRelation& r) {
  j = {{"r", r.r}, {"q", r.q}, {"d", r.d}, {"p", r.p}, {"statement", r.statement}};
}

void to_json(Json& j, const UnionComplexityReport& r) {
  j = {{"vertex_count", r.vertex_count}, {"vertices", r.vertices}, {"k", r.k},
       {"threshold", r.threshold.get_str()}};
}

void to_json(Json& j, const UnionConditionResult& r) {
  j = {{"holds", r.holds}, {"subfamilies_checked", r.subfamilies_checked}};
  j["violating"] = r.violating ? Json(*r.violating) : Json(nullptr);
  if (r.violating) j["violating_complexity"] = r.violating_complexity;
}

void to_json(Json& j, const ExactlyTwoUnionRecord& r) {
  j = {{"k", r.k}, {"union_complexity", r.union_complexity},
       {"threshold", r.threshold.get_str()}, {"tight", r.tight}};
}

void to_json(Json& j, const TripleForcingRecord& r) {
  j = {{"p", r.p}, {"k", r.k}, {"ramsey_bound", r.ramsey_bound.get_str()},
       {"subfamilies_checked", r.subfamilies_checked},
       {"cliques_confirmed", r.cliques_confirmed}};
  j["smallest_m"] = r.smallest_m ? Json(*r.smallest_m) : Json(nullptr);
}

void to_json(Json& j, const CliqueApproxReport& r) {
  j = {{"approx_clique", r.approx_clique}, {"approx_size", r.approx_clique.size()},
       {"witness_point", r.witness_point}};
  j["exact_clique_size"] = r.exact_clique_size ? Json(*r.exact_clique_size) : Json(nullptr);
  j["exact_clique"] = r.exact_clique ? Json(*r.exact_clique) : Json(nullptr);
  j["ratio"] = r.ratio ? Json(r.ratio->str()) : Json(nullptr);
}

void to_json(Json& j, const IntersectionGraph& g) {
  Json edges = Json::array();
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      if (g.adjacent[a][b]) edges.push_back(Json::array({g.ids[a], g.ids[b]}));
    }
  }
  j = {{"vertices", g.ids}, {"edges", std::move(edges)}};
}

}  // namespace pq
