#include "tlg/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "tlg/errors.hpp"
#include "tlg/io.hpp"
#include "tlg/svg.hpp"

namespace tlg {

namespace {

using io::Json;

struct Options {
  std::string command;
  std::string input;
  std::string output;
  bool pretty = false;
  std::string alpha_prime;
  std::string section;
  bool numeric = false;
  long bound = -1;
  std::string svg;
  std::string text;  // model file given inline
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

io::ModelFile load(const Options& o) {
  if (!o.text.empty()) return io::parse_model_file(o.text);
  if (o.input.empty()) throw InputError("missing --input");
  return io::parse_model_file(read_file(o.input));
}

void expect(const io::ModelFile& f, std::initializer_list<io::ModelKind> kinds, const std::string& cmd) {
  for (auto k : kinds)
    if (f.kind == k) return;
  std::string names;
  for (auto k : kinds) names += (names.empty() ? "" : " or ") + io::to_string(k);
  throw InputError(cmd + " expects a " + names + " file, got " + io::to_string(f.kind));
}

io::SigmaInput sigma_input(const io::ModelFile& f, const Options& o) {
  io::SigmaInput s = io::sigma_input_from(f.data);
  if (!o.section.empty()) {
    if (o.section == "generic" || o.section == "angular")
      s.section = io::section_from(Json(o.section), "--section");
    else
      s.section = io::section_from(io::parse_model_file(read_file(o.section)).data, "--section");
  }
  return s;
}

Json base_warnings(const ToricVarietyData& T) {
  Json w = Json::array();
  if (T.smooth || T.complete) w.push_back("smooth/complete flags are declared by the input and not verified");
  return w;
}

struct Model {
  ToricLGModel M;
  Json warnings = Json::array();
};

Model model_of(const io::ModelFile& f, const Options& o, const std::string& cmd) {
  expect(f, {io::ModelKind::LGModel, io::ModelKind::SigmaInput}, cmd);
  if (f.kind == io::ModelKind::LGModel) return {io::lg_model_from(f.data)};
  io::SigmaInput s = sigma_input(f, o);
  return {s.build(), base_warnings(s.bundle.base)};
}

Json with_numeric(Json model, const ToricLGModel& M) {
  model["A"]["coefficients"] = io::numeric_coefficients(M.A.lift);
  model["B"]["coefficients"] = io::numeric_coefficients(M.B.lift);
  return model;
}

Json model_json(const ToricLGModel& M, const Options& o) {
  Json j = io::to_json(M);
  return o.numeric ? with_numeric(std::move(j), M) : j;
}

Json cmd_check(const Options& o) {
  auto f = load(o);
  Model m = model_of(f, o, "check");
  PairReport r = pair_kopasetic(m.M);
  Json j{{"verdict", r.verdict}, {"pair", io::to_json(r)}, {"warnings", m.warnings}};
  if (m.M.blocks) j["dual_exists"] = to_string(dual_exists(m.M));
  if (o.numeric) j["model"] = model_json(m.M, o);
  return j;
}

Json cmd_dualize(const Options& o) {
  auto f = load(o);
  Model m = model_of(f, o, "dualize");
  Json j{{"warnings", m.warnings}};
  try {
    DualResult d = dualize(m.M);
    j["kopasetic"] = true;
    j["report"] = io::to_json(d.report);
    j["dual"] = model_json(d.raw, o);
    j["realized"] = model_json(d.realized, o);
  } catch (const KopaseticError& e) {
    j["kopasetic"] = false;
    j["report"] = io::to_json(e.report);
    j["dual"] = nullptr;
    j["realized"] = nullptr;
  }
  return j;
}

Json cmd_analyze(const Options& o) {
  auto f = load(o);
  Model m = model_of(f, o, "analyze");
  std::optional<RatVector> alpha;
  if (!o.alpha_prime.empty()) alpha = io::parse_rat_list(o.alpha_prime);
  Analysis a = analyze(m.M, alpha);
  Json j{{"analysis", io::to_json(a)}, {"warnings", m.warnings}};
  j["is_bundle"] = a.bundle ? Json(a.bundle->is_bundle) : Json(nullptr);
  j["section_ok"] = a.section.ok();
  j["yprime_div"] = a.yprime ? io::to_json(a.yprime->div) : Json(nullptr);
  if (a.yprime) {
    Polyhedron Y(a.yprime->div, apply_k(a.yprime->report, a.alpha_prime));
    j["yprime_polytope"] = io::to_json(canonical_form(Y));
    if (!o.svg.empty()) {
      if (Y.dim() != 2) throw InputError("--svg needs a 2-dimensional Y' polytope");
      write_file(o.svg, render_svg(Y));
    }
  } else {
    j["yprime_polytope"] = nullptr;
  }
  return j;
}

Json cmd_sigma(const Options& o) {
  auto f = load(o);
  expect(f, {io::ModelKind::SigmaInput}, "sigma");
  io::SigmaInput s = sigma_input(f, o);
  ToricLGModel M = s.build();
  Json points = Json::array();
  for (const auto& D : s.bundle.divisors)
    points.push_back(io::to_json(section_lattice_points(s.bundle.base, D, s.section.order)));
  ChowComparison c = chow_comparison(s.bundle);
  Json j{{"model_file", io::model_file(io::ModelKind::LGModel, model_json(M, o))},
         {"div_X", io::to_json(M.A.matrix)},
         {"mon", io::to_json(M.B.matrix)},
         {"section_points", points},
         {"dual_exists", to_string(dual_exists(M))},
         {"chow", Json{{"isomorphic", c.isomorphic},
                       {"free_rank_base", c.free_rank_base},
                       {"free_rank_total", c.free_rank_total},
                       {"torsion_base", io::to_json(c.torsion_base)},
                       {"torsion_total", io::to_json(c.torsion_total)},
                       {"witness", io::to_json(c.witness)}}},
         {"warnings", base_warnings(s.bundle.base)}};
  return j;
}

Json cmd_bb(const Options& o) {
  auto f = load(o);
  expect(f, {io::ModelKind::NefData}, "bb");
  io::NefInput in = io::nef_input_from(f.data);
  NefCheck check = nef_subpartition_check(in.nef);
  Json j{{"nef_check", io::to_json(check)}, {"warnings", base_warnings(in.nef.base)}};
  j["conventions"] = Json::array({"w_BB: nonzero terms carry lift i, the constant terms 0_j carry 0"});
  try {
    j["phi_check"] = phi_check(in.nef);
  } catch (const InputError& e) {
    j["phi_check"] = nullptr;
    j["phi_check_error"] = e.what();
  }
  if (!check.valid() || !check.calabi_yau) {
    j["bb_dual"] = nullptr;
    j["mirror"] = nullptr;
    return j;
  }
  BBDual d = bb_dual(in.nef);
  j["bb_dual"] = io::to_json(d);
  j["involution"] = partition_rays(bb_dual(d.star).star) == partition_rays(in.nef);
  BBMirrorReport r = bb_mirror_via_duality(in.nef, in.K_base);
  j["mirror"] = io::to_json(r);
  return j;
}

Json cmd_bh(const Options& o) {
  auto f = load(o);
  expect(f, {io::ModelKind::BHData}, "bh");
  BHData B = io::bh_data_from(f.data);
  BHDual d = bh_dual(B);
  BHDual back = bh_dual(d.mirror);
  bool involution = back.mirror.weights == B.weights && back.mirror.degree == B.degree && back.mirror.P == B.P;
  Json j{{"dual", io::to_json(d)}, {"involution", involution}};
  j["monomials"] = io::to_json(degree_monomials(B.weights, B.degree));
  j["mirror_monomials"] = io::to_json(degree_monomials(d.mirror.weights, d.mirror.degree));
  return j;
}

Json cmd_givental(const Options& o) {
  auto f = load(o);
  Model m = model_of(f, o, "givental");
  HVPresentation h = hv_presentation(m.M);
  return Json{{"givental", io::to_json(h.givental)}, {"hori_vafa", io::to_json(h)}, {"warnings", m.warnings}};
}

Json cmd_poly(const Options& o) {
  auto f = load(o);
  expect(f, {io::ModelKind::Polyhedron}, "poly");
  Polyhedron P = io::polyhedron_from(f.data);
  Json j{{"input", io::to_json(P)}};
  InteriorResult ir = interior_point(P);
  j["interior"] = ir.status == InteriorStatus::Interior ? "interior"
                  : ir.status == InteriorStatus::Degenerate ? "degenerate"
                                                             : "empty";
  if (ir.has_interior()) {
    j["facets"] = io::to_json(facet_rows(P).facets);
    j["canonical_form"] = io::to_json(canonical_form(P));
  }
  if (ir.status != InteriorStatus::Empty) {
    VertexResult V = vertices_and_rays(P);
    j["pointed"] = V.pointed;
    j["generators"] = io::to_json(V.generators);
    bool bounded = V.generators.rays.empty();
    j["bounded"] = bounded;
    if (bounded) j["lattice_points"] = io::to_json(lattice_points(P));
    try {
      j["polar"] = io::to_json(polar(P));
      j["reflexive"] = bounded && is_reflexive(P);
    } catch (const InputError&) {
      j["polar"] = nullptr;
      j["reflexive"] = false;
    }
  }
  if (o.bound >= 0) j["semigroup"] = io::to_json(semigroup_generation_check(P.normals, o.bound));
  return j;
}

std::string cmd_plot(const Options& o) {
  auto f = load(o);
  expect(f, {io::ModelKind::Polyhedron}, "plot");
  return render_svg(io::polyhedron_from(f.data));
}

std::string dispatch(const Options& o) {
  if (o.command == "plot") return cmd_plot(o);
  Json j;
  if (o.command == "check") j = cmd_check(o);
  else if (o.command == "dualize") j = cmd_dualize(o);
  else if (o.command == "analyze") j = cmd_analyze(o);
  else if (o.command == "sigma") j = cmd_sigma(o);
  else if (o.command == "bb") j = cmd_bb(o);
  else if (o.command == "bh") j = cmd_bh(o);
  else if (o.command == "givental") j = cmd_givental(o);
  else if (o.command == "poly") j = cmd_poly(o);
  else throw InputError("unknown command '" + o.command + "'");
  j["command"] = o.command;
  j["format_version"] = io::kFormatVersion;
  return j.dump(o.pretty ? 2 : -1) + "\n";
}

}  // namespace

std::string run_command(const std::string& command, const std::string& model_text,
                        const CommandOptions& options) {
  Options o;
  o.command = command;
  o.text = model_text;
  if (o.text.empty()) throw InputError("empty model text");
  o.alpha_prime = options.alpha_prime;
  o.section = options.section;
  o.numeric = options.numeric;
  o.bound = options.bound;
  return dispatch(o);
}

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Exact toolkit for toric Landau-Ginzburg models and their duals", "tlg"};
  app.require_subcommand(1);
  Options o;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-i,--input", o.input, "input JSON file")->required();
    sub->add_option("-o,--output", o.output, "write the report here instead of stdout");
    sub->add_flag("--pretty", o.pretty, "indent the JSON report");
    return sub;
  };
  auto* check = add("check", "kopasetic and regularity checks of both sides");
  check->add_flag("--numeric", o.numeric, "add floating coefficients exp(2 pi i lift)");
  check->add_option("--section", o.section, "generic, angular or a JSON file with section terms");
  auto* dual = add("dualize", "swap the linear data and realize the dual");
  dual->add_flag("--numeric", o.numeric, "add floating coefficients exp(2 pi i lift)");
  dual->add_option("--section", o.section, "generic, angular or a JSON file with section terms");
  auto* an = add("analyze", "structure of the dual: Y', V_j, bundle and section tests");
  an->add_option("--alpha-prime", o.alpha_prime, "comma separated lift for the dual, e.g. 0,2,5,0");
  an->add_option("--section", o.section, "generic, angular or a JSON file with section terms");
  an->add_option("--svg", o.svg, "also plot the Y' polytope when it is 2-dimensional");
  auto* sg = add("sigma", "build the LG model of a complete intersection");
  sg->add_option("--section", o.section, "generic, angular or a JSON file with section terms");
  sg->add_flag("--numeric", o.numeric, "add floating coefficients exp(2 pi i lift)");
  add("bb", "nef partition checks and the dual partition");
  add("bh", "transpose weights of an invertible polynomial");
  auto* gv = add("givental", "binomial presentation of the dual and the weight certificate");
  gv->add_option("--section", o.section, "generic, angular or a JSON file with section terms");
  auto* po = add("poly", "facets, vertices, lattice points and polar of a polyhedron");
  po->add_option("--bound", o.bound, "check that the normals generate the cone semigroup up to this box");
  add("plot", "SVG drawing of a 2-dimensional polyhedron");

  std::vector<const char*> argv{"tlg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  CliResult res;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int rc = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.code = rc == 0 ? kExitOk : kExitInput;
    return res;
  }
  o.command = app.get_subcommands().front()->get_name();

  try {
    std::string text = dispatch(o);
    if (o.output.empty()) res.out = std::move(text);
    else write_file(o.output, text);
  } catch (const InputError& e) {
    res.code = kExitInput;
    res.err = std::string("error: ") + e.what() + "\n";
  } catch (const ConsistencyError& e) {
    res.code = kExitConsistency;
    res.err = std::string("consistency failure: ") + e.what() + "\n";
  } catch (const Json::exception& e) {
    res.code = kExitInput;
    res.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    res.code = kExitConsistency;
    res.err = std::string("internal error: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace tlg
