#include "tlg/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "tlg/errors.hpp"

namespace tlg::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InputError(field + ": " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(field, "missing field '" + key + "'");
  return *it;
}

const Json& array(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array");
  return j;
}

bool bool_from(const Json& j, const std::string& key, bool fallback, const std::string& field) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_boolean()) fail(field + "." + key, "expected true or false");
  return j[key].get<bool>();
}

std::string path(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

Json block_json(const RowBlock& b) {
  Json j;
  j["kind"] = b.kind == RowKind::Lattice ? "lattice" : "unit";
  if (b.part != kNoPart) j["part"] = b.part + 1;
  return j;
}

RowBlock block_from(const Json& j, const std::string& field) {
  RowBlock b;
  std::string kind = member(j, "kind", field).is_string() ? j["kind"].get<std::string>() : "";
  if (kind == "lattice") b.kind = RowKind::Lattice;
  else if (kind == "unit") b.kind = RowKind::Unit;
  else fail(field + ".kind", "expected \"lattice\" or \"unit\"");
  if (j.contains("part")) {
    Int p = int_from(j["part"], field + ".part");
    if (p < 1) fail(field + ".part", "parts are numbered from 1");
    b.part = p.get_ui() - 1;
  }
  return b;
}

std::string fixed15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

Json optional_string(const std::string& s) { return s.empty() ? Json(nullptr) : Json(s); }

}  // namespace

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::LGModel: return "lg-model";
    case ModelKind::SigmaInput: return "sigma-input";
    case ModelKind::NefData: return "nef-data";
    case ModelKind::BHData: return "bh-data";
    case ModelKind::Polyhedron: return "polyhedron";
  }
  return "?";
}

ModelFile parse_model_file(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  const Json& version = member(j, "format_version", "$");
  if (!version.is_string() || version.get<std::string>() != kFormatVersion)
    fail("$.format_version", std::string("unsupported version, expected \"") + kFormatVersion + "\"");
  const Json& kind = member(j, "kind", "$");
  if (!kind.is_string()) fail("$.kind", "expected a string");
  ModelFile out;
  const std::string k = kind.get<std::string>();
  if (k == "lg-model") out.kind = ModelKind::LGModel;
  else if (k == "sigma-input") out.kind = ModelKind::SigmaInput;
  else if (k == "nef-data") out.kind = ModelKind::NefData;
  else if (k == "bh-data") out.kind = ModelKind::BHData;
  else if (k == "polyhedron") out.kind = ModelKind::Polyhedron;
  else fail("$.kind", "unknown kind '" + k + "'");
  out.data = member(j, "data", "$");
  if (!out.data.is_object()) fail("$.data", "expected an object");
  return out;
}

Json model_file(ModelKind kind, Json data) {
  return Json{{"format_version", kFormatVersion}, {"kind", to_string(kind)}, {"data", std::move(data)}};
}

// ---- scalars ------------------------------------------------------------

Json to_json(const Int& v) { return tlg::to_string(v); }
Json to_json(const Rat& v) { return tlg::to_string(v); }

Json to_json(const IntVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Json to_json(const RatVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Json to_json(const IntMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

Json to_json(const ComplexLift& z) { return Json{{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

Json to_json(const LiftVector& v) {
  Json j = Json::array();
  for (const auto& z : v) j.push_back(to_json(z));
  return j;
}

Json to_json(const std::vector<std::size_t>& indices) {
  Json j = Json::array();
  for (auto i : indices) j.push_back(i);
  return j;
}

Json to_json(const std::vector<IntVector>& rows) {
  Json j = Json::array();
  for (const auto& r : rows) j.push_back(to_json(r));
  return j;
}

Json to_json(const std::vector<RatVector>& rows) {
  Json j = Json::array();
  for (const auto& r : rows) j.push_back(to_json(r));
  return j;
}

Int int_from(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_int(j.get<std::string>());
    } catch (const InputError& e) {
      fail(field, e.what());
    }
  }
  fail(field, "expected an integer or a decimal string");
}

Rat rat_from(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const InputError& e) {
      fail(field, e.what());
    }
  }
  fail(field, "expected an integer or a \"p/q\" string");
}

IntVector int_vector_from(const Json& j, const std::string& field) {
  IntVector out;
  for (std::size_t i = 0; i < array(j, field).size(); ++i) out.push_back(int_from(j[i], path(field, i)));
  return out;
}

RatVector rat_vector_from(const Json& j, const std::string& field) {
  RatVector out;
  for (std::size_t i = 0; i < array(j, field).size(); ++i) out.push_back(rat_from(j[i], path(field, i)));
  return out;
}

IntMatrix int_matrix_from(const Json& j, const std::string& field) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < array(j, field).size(); ++i) rows.push_back(int_vector_from(j[i], path(field, i)));
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != cols) fail(path(field, i), "row length differs from the first row");
  return IntMatrix::from_rows(rows, cols);
}

ComplexLift lift_from(const Json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected {\"re\": ..., \"im\": ...}");
  Rat re = j.contains("re") ? rat_from(j["re"], field + ".re") : Rat(0);
  Rat im = j.contains("im") ? rat_from(j["im"], field + ".im") : Rat(0);
  return ComplexLift(re, im);
}

LiftVector lift_vector_from(const Json& j, const std::string& field) {
  LiftVector out;
  for (std::size_t i = 0; i < array(j, field).size(); ++i) out.push_back(lift_from(j[i], path(field, i)));
  return out;
}

RatVector parse_rat_list(const std::string& text) {
  RatVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty entry in list '" + text + "'");
    out.push_back(parse_rat(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

// ---- payloads -----------------------------------------------------------

Json to_json(const LinearData& D) {
  Json j{{"matrix", to_json(D.matrix)}, {"lift", to_json(D.lift)}};
  j["cokernel"] = Json{{"free_rank", D.coker.free_rank},
                       {"torsion", to_json(D.coker.torsion)},
                       {"projection", to_json(D.coker.projection)}};
  return j;
}

Json to_json(const BlockLayout& L) {
  Json a = Json::array(), b = Json::array();
  for (const auto& r : L.a_rows) a.push_back(block_json(r));
  for (const auto& r : L.b_rows) b.push_back(block_json(r));
  return Json{{"base_cols", L.base_cols}, {"parts", L.parts}, {"a_rows", a}, {"b_rows", b}};
}

Json to_json(const ToricLGModel& M) {
  Json j{{"A", to_json(M.A)}, {"B", to_json(M.B)}};
  j["blocks"] = M.blocks ? to_json(*M.blocks) : Json(nullptr);
  return j;
}

Json to_json(const Polyhedron& P) { return Json{{"normals", to_json(P.normals)}, {"offsets", to_json(P.offsets)}}; }

Json to_json(const CanonicalForm& F) { return Json{{"normals", to_json(F.normals)}, {"offsets", to_json(F.offsets)}}; }

Json to_json(const PointSet& S) { return Json{{"vertices", to_json(S.points)}, {"rays", to_json(S.rays)}}; }

Json to_json(const ToricVarietyData& T) {
  Json names = Json::array();
  for (const auto& n : T.ray_names) names.push_back(n);
  return Json{{"rays", names}, {"div", to_json(T.div)}, {"smooth", T.smooth}, {"complete", T.complete}};
}

Json to_json(const SectionSpec& S) {
  if (S.generic)
    return Json{{"generic", true},
                {"order", S.order == SectionOrder::Angular ? "angular" : "lex"},
                {"nonzero_lift", to_json(S.nonzero_lift)},
                {"zero_lift", to_json(S.zero_lift)}};
  Json terms = Json::array();
  for (const auto& t : S.terms)
    terms.push_back(Json{{"part", t.part + 1}, {"exponent", to_json(t.exponent)}, {"lift", to_json(t.lift)}});
  return Json{{"terms", terms}};
}

Json to_json(const BHData& B) {
  return Json{{"weights", to_json(B.weights)}, {"degree", to_json(B.degree)}, {"P", to_json(B.P)}};
}

LinearData linear_data_from(const Json& j, const std::string& field) {
  IntMatrix m = int_matrix_from(member(j, "matrix", field), field + ".matrix");
  LiftVector lift = j.contains("lift") ? lift_vector_from(j["lift"], field + ".lift") : LiftVector(m.rows());
  if (lift.size() != m.rows()) fail(field + ".lift", "length differs from the number of matrix rows");
  return LinearData(std::move(m), std::move(lift));
}

ToricLGModel lg_model_from(const Json& j) {
  LinearData A = linear_data_from(member(j, "A", "data"), "data.A");
  LinearData B = linear_data_from(member(j, "B", "data"), "data.B");
  if (A.cols() != B.cols()) fail("data", "A and B have different numbers of columns");
  std::optional<BlockLayout> layout;
  if (j.contains("blocks") && !j["blocks"].is_null()) {
    const Json& b = j["blocks"];
    BlockLayout L;
    L.base_cols = int_from(member(b, "base_cols", "data.blocks"), "data.blocks.base_cols").get_ui();
    L.parts = int_from(member(b, "parts", "data.blocks"), "data.blocks.parts").get_ui();
    const Json& ar = array(member(b, "a_rows", "data.blocks"), "data.blocks.a_rows");
    for (std::size_t i = 0; i < ar.size(); ++i) L.a_rows.push_back(block_from(ar[i], path("data.blocks.a_rows", i)));
    const Json& br = array(member(b, "b_rows", "data.blocks"), "data.blocks.b_rows");
    for (std::size_t i = 0; i < br.size(); ++i) L.b_rows.push_back(block_from(br[i], path("data.blocks.b_rows", i)));
    if (L.a_rows.size() != A.rows() || L.b_rows.size() != B.rows())
      fail("data.blocks", "row layout does not match the matrices");
    layout = std::move(L);
  }
  return ToricLGModel(std::move(A), std::move(B), std::move(layout));
}

Polyhedron polyhedron_from(const Json& j) {
  if (j.contains("normals")) {
    IntMatrix N = int_matrix_from(j["normals"], "data.normals");
    RatVector a = rat_vector_from(member(j, "offsets", "data"), "data.offsets");
    if (a.size() != N.rows()) fail("data.offsets", "length differs from the number of normals");
    return Polyhedron(std::move(N), std::move(a));
  }
  if (j.contains("vertices")) {
    PointSet S;
    const Json& v = array(j["vertices"], "data.vertices");
    for (std::size_t i = 0; i < v.size(); ++i) S.points.push_back(rat_vector_from(v[i], path("data.vertices", i)));
    if (j.contains("rays")) {
      const Json& r = array(j["rays"], "data.rays");
      for (std::size_t i = 0; i < r.size(); ++i) S.rays.push_back(int_vector_from(r[i], path("data.rays", i)));
    }
    if (S.points.empty()) fail("data.vertices", "at least one point is needed");
    return convex_hull(S);
  }
  fail("data", "expected \"normals\"/\"offsets\" or \"vertices\"/\"rays\"");
}

ToricVarietyData variety_from(const Json& j, const std::string& field) {
  IntMatrix div = int_matrix_from(member(j, "div", field), field + ".div");
  std::vector<std::string> names;
  if (j.contains("rays")) {
    const Json& r = array(j["rays"], field + ".rays");
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!r[i].is_string()) fail(path(field + ".rays", i), "expected a ray name");
      names.push_back(r[i].get<std::string>());
    }
  }
  return ToricVarietyData(std::move(div), std::move(names), bool_from(j, "smooth", false, field),
                          bool_from(j, "complete", false, field));
}

SectionSpec section_from(const Json& j, const std::string& field) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "generic") return SectionSpec::generic_section();
    if (s == "angular") return SectionSpec::generic_section(SectionOrder::Angular);
    fail(field, "expected \"generic\", \"angular\" or an object");
  }
  if (!j.is_object()) fail(field, "expected an object");
  if (j.contains("terms")) {
    std::vector<SectionTerm> terms;
    const Json& t = array(j["terms"], field + ".terms");
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::string f = path(field + ".terms", i);
      SectionTerm term;
      Int part = int_from(member(t[i], "part", f), f + ".part");
      if (part < 1) fail(f + ".part", "parts are numbered from 1");
      term.part = part.get_ui() - 1;
      term.exponent = int_vector_from(member(t[i], "exponent", f), f + ".exponent");
      if (t[i].contains("lift")) term.lift = lift_from(t[i]["lift"], f + ".lift");
      terms.push_back(std::move(term));
    }
    SectionSpec S = SectionSpec::explicit_terms(std::move(terms));
    if (j.contains("order") && j["order"] == "angular") S.order = SectionOrder::Angular;
    return S;
  }
  SectionSpec S;
  if (j.contains("order")) {
    if (j["order"] == "angular") S.order = SectionOrder::Angular;
    else if (j["order"] != "lex") fail(field + ".order", "expected \"lex\" or \"angular\"");
  }
  if (j.contains("nonzero_lift")) S.nonzero_lift = lift_from(j["nonzero_lift"], field + ".nonzero_lift");
  if (j.contains("zero_lift")) S.zero_lift = lift_from(j["zero_lift"], field + ".zero_lift");
  return S;
}

namespace {

std::vector<IntVector> divisors_from(const Json& j, std::size_t rays) {
  std::vector<IntVector> out;
  const Json& d = array(member(j, "divisors", "data"), "data.divisors");
  for (std::size_t i = 0; i < d.size(); ++i) {
    out.push_back(int_vector_from(d[i], path("data.divisors", i)));
    if (out.back().size() != rays) fail(path("data.divisors", i), "length differs from the number of rays");
  }
  return out;
}

LiftVector k_lift_from(const Json& j, std::size_t rays) {
  if (!j.contains("K_lift")) return LiftVector(rays);
  LiftVector K = lift_vector_from(j["K_lift"], "data.K_lift");
  if (K.size() != rays) fail("data.K_lift", "length differs from the number of rays");
  return K;
}

}  // namespace

SigmaInput sigma_input_from(const Json& j) {
  SigmaInput out;
  ToricVarietyData base = variety_from(member(j, "base", "data"), "data.base");
  auto divisors = divisors_from(j, base.num_rays());
  out.K_base = k_lift_from(j, base.num_rays());
  out.bundle = SplitBundleData(std::move(base), std::move(divisors));
  out.section = j.contains("section") ? section_from(j["section"], "data.section") : SectionSpec::generic_section();
  return out;
}

NefInput nef_input_from(const Json& j) {
  NefInput out;
  out.nef.base = variety_from(member(j, "base", "data"), "data.base");
  out.nef.parts = divisors_from(j, out.nef.base.num_rays());
  out.K_base = k_lift_from(j, out.nef.base.num_rays());
  return out;
}

BHData bh_data_from(const Json& j) {
  BHData B;
  B.weights = int_vector_from(member(j, "weights", "data"), "data.weights");
  B.degree = int_from(member(j, "degree", "data"), "data.degree");
  B.P = int_matrix_from(member(j, "P", "data"), "data.P");
  return B;
}

// ---- reports ------------------------------------------------------------

namespace {

Json k_map_json(const std::vector<std::size_t>& map) {
  Json j = Json::array();
  for (auto i : map) j.push_back(i == kDropped ? Json(nullptr) : Json(i));
  return j;
}

}  // namespace

Json to_json(const KopaseticReport& r) {
  Json interior = r.interior == InteriorStatus::Interior   ? "interior"
                  : r.interior == InteriorStatus::Degenerate ? "degenerate"
                                                             : "empty";
  return Json{{"verdict", r.verdict},
              {"reason", to_string(r.reason)},
              {"interior", interior},
              {"interior_witness", to_json(r.interior_witness)},
              {"facet_indices", to_json(r.facet_indices)},
              {"k_row_map", k_map_json(r.k_row_map)},
              {"duplicate_of", k_map_json(r.duplicate_of)},
              {"primitivity_failures", to_json(r.primitivity_failures)},
              {"facet_matrix", to_json(r.facet_matrix)},
              {"pushed_lift", to_json(r.pushed_lift)}};
}

Json to_json(const RegularityReport& r) {
  Json neg = Json::array();
  for (auto [a, b] : r.negative_entries) neg.push_back(Json::array({a, b}));
  return Json{{"regular", r.regular}, {"product", to_json(r.product)}, {"negative_entries", neg}};
}

Json to_json(const PairReport& r) {
  return Json{{"a_side", to_json(r.a_side)}, {"regularity", to_json(r.regularity)}, {"verdict", r.verdict}};
}

Json to_json(const YPrime& y) {
  return Json{{"report", to_json(y.report)},
              {"div", to_json(y.div)},
              {"torsion", to_json(y.coker.torsion)},
              {"class_projection", to_json(y.coker.projection)},
              {"D_classes", to_json(y.D_classes)}};
}

Json to_json(const VjResult& v) {
  Json parts = Json::array();
  for (const auto& p : v.parts)
    parts.push_back(Json{{"rows", to_json(p.rows)},
                         {"points", to_json(p.points)},
                         {"vertex_rows", to_json(p.vertex_rows)}});
  return Json{{"path", to_string(v.path)}, {"parts", parts}};
}

Json to_json(const BundleReport& b) {
  return Json{{"vj", to_json(b.vj)},
              {"is_bundle", b.is_bundle},
              {"failing", to_json(b.failing)},
              {"vertex_facet_agreement", b.vertex_facet_agreement ? Json(*b.vertex_facet_agreement) : Json(nullptr)},
              {"eprime_div", to_json(b.eprime_div)},
              {"facets_match_eprime", b.facets_match_eprime},
              {"x_local_cy", b.x_local_cy},
              {"e_local_cy", b.e_local_cy}};
}

Json to_json(const SectionTestResult& s) {
  return Json{{"outcome", to_string(s.outcome)},
              {"ok", s.ok()},
              {"witness", to_json(s.witness)},
              {"divisors", to_json(s.divisors)},
              {"nodes_visited", s.nodes_visited}};
}

Json to_json(const DoubleDual& d) {
  return Json{{"model", to_json(d.model)}, {"deleted", to_json(d.deleted)}};
}

Json to_json(const Analysis& a) {
  Json j;
  j["alpha_prime"] = to_json(a.alpha_prime);
  j["alpha_suggested"] = a.alpha_suggested;
  j["dual"] = Json{{"raw", to_json(a.dual.raw)}, {"report", to_json(a.dual.report)}};
  j["d_prime"] = to_json(a.blocks.d_prime);
  j["D_prime"] = to_json(a.blocks.D_prime);
  j["y_report"] = to_json(a.y_report);
  j["yprime"] = a.yprime ? to_json(*a.yprime) : Json(nullptr);
  j["yprime_failure"] = optional_string(a.yprime_failure);
  j["bundle"] = a.bundle ? to_json(*a.bundle) : Json(nullptr);
  j["bundle_failure"] = optional_string(a.bundle_failure);
  j["section"] = to_json(a.section);
  j["double_dual"] = a.double_dual ? to_json(*a.double_dual) : Json(nullptr);
  j["double_dual_failure"] = optional_string(a.double_dual_failure);
  return j;
}

Json to_json(const NefCheck& c) {
  return Json{{"givental", c.givental},         {"calabi_yau", c.calabi_yau},
              {"hulls_nonempty", c.hulls_nonempty}, {"vertex_union", c.vertex_union},
              {"valid", c.valid()},               {"reasons", c.reasons}};
}

Json to_json(const BBDual& d) {
  Json E = Json::array();
  for (const auto& e : d.E_star) E.push_back(to_json(e));
  Json nabla = Json::array();
  for (const auto& n : d.nabla) nabla.push_back(to_json(vertices_and_rays(n).generators));
  return Json{{"star", Json{{"base", to_json(d.star.base)}, {"divisors", to_json(d.star.parts)}}},
              {"nabla", nabla},
              {"E_star", E},
              {"p_star_polar", to_json(canonical_form(d.p_star_polar))},
              {"p_star", to_json(canonical_form(d.p_star))}};
}

Json to_json(const BBMirrorReport& r) {
  Json j{{"yprime_matches_pstar", r.yprime_matches_pstar},
         {"classes_match", r.classes_match},
         {"is_bundle", r.is_bundle},
         {"section_ok", r.section_ok},
         {"passed", r.passed()},
         {"alpha_prime", to_json(r.analysis.alpha_prime)}};
  if (r.analysis.yprime) {
    const YPrime& y = *r.analysis.yprime;
    j["yprime_div"] = to_json(y.div);
    j["yprime_polytope"] = to_json(canonical_form(Polyhedron(y.div, apply_k(y.report, r.analysis.alpha_prime))));
  } else {
    j["yprime_div"] = nullptr;
    j["yprime_polytope"] = nullptr;
  }
  return j;
}

Json to_json(const BHDual& d) {
  return Json{{"mirror", to_json(d.mirror)},
              {"calabi_yau", d.calabi_yau},
              {"factorization", d.factorization},
              {"cokernel_of_B", d.cokernel_of_B}};
}

Json to_json(const GiventalPresentation& g) {
  const std::size_t r = g.m.cols();
  std::vector<std::string> xs(g.F.begin(), g.F.begin() + r), ys(g.F.begin() + r, g.F.end());
  std::vector<std::string> qs;
  for (std::size_t i = 0; i < g.m.rows(); ++i) qs.push_back("Q" + std::to_string(i + 1));
  Json rel = Json::array();
  for (const auto& b : g.relations) {
    IntVector q(g.m.rows(), Int(0));
    q[b.parameter] = 1;
    std::string rhs = monomial_string(qs, q);
    std::string y = monomial_string(ys, b.y_exponents);
    if (y != "1") rhs += " " + y;
    rel.push_back(Json{{"x_exponents", to_json(b.x_exponents)},
                       {"y_exponents", to_json(b.y_exponents)},
                       {"parameter", b.parameter + 1},
                       {"text", monomial_string(xs, b.x_exponents) + " = " + rhs}});
  }
  std::string F;
  for (const auto& v : g.F) F += (F.empty() ? "" : " + ") + v;
  Json vars = Json::array();
  for (const auto& v : g.variables)
    vars.push_back(Json{{"variable", v.variable}, {"q_exponents", to_json(v.q_exponents)}, {"character", to_json(v.character)}});
  return Json{{"m", to_json(g.m)},
              {"d", to_json(g.d)},
              {"relations", rel},
              {"F", F},
              {"variables", vars},
              {"t_hat", to_json(g.t_hat)},
              {"q_identity", g.q_identity},
              {"K_class", to_json(g.K_class)}};
}

Json to_json(const HVPresentation& h) {
  return Json{{"frak_m", to_json(h.frak_m)},
              {"frak_d", to_json(h.frak_d)},
              {"t_sign", h.t_sign},
              {"certificate", h.certificate}};
}

Json to_json(const SemigroupVerdict& s) {
  return Json{{"generated", s.generated},
              {"pointed", s.pointed},
              {"counterexample", s.counterexample ? to_json(*s.counterexample) : Json(nullptr)},
              {"points_checked", s.points_checked}};
}

Json numeric_coefficients(const LiftVector& v) {
  Json j = Json::array();
  for (const auto& z : v) {
    auto c = coefficient_value(z);
    // sin(pi k) is not exactly 0 in floating point
    double eps = 1e-14 * std::abs(c);
    if (std::fabs(c.real()) < eps) c.real(0.0);
    if (std::fabs(c.imag()) < eps) c.imag(0.0);
    j.push_back(Json{{"re", fixed15(c.real())}, {"im", fixed15(c.imag())}});
  }
  return j;
}

}  // namespace tlg::io
