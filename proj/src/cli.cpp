#include "blowup/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "blowup/blowup_gate.hpp"
#include "blowup/error.hpp"
#include "blowup/invariants.hpp"
#include "blowup/link_model.hpp"
#include "blowup/presentation.hpp"
#include "blowup/psl2r.hpp"
#include "blowup/repvar.hpp"

namespace blowup::cli {

namespace {

using nlohmann::json;
using algebra::Integer;
using algebra::Rational;

[[noreturn]] void input_error(const std::string& msg) { throw Error(Errc::InputError, msg); }

// ---------------------------------------------------------------------------
// Input

json load(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) input_error("cannot open input file '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    input_error(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) input_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    input_error("field '" + what + "' has the wrong type");
  }
}

Integer to_integer(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  input_error("field '" + what + "' must be an integer");
}

Rational to_rational(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(to_integer(j, what));
  if (j.is_string()) {
    try {
      Rational q(j.get<std::string>());
      if (q.get_den() == 0) input_error("field '" + what + "' has zero denominator");
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
    }
  }
  input_error("field '" + what + "' must be an integer or a \"p/q\" string");
}

std::vector<Integer> integers(const json& j, const std::string& what) {
  if (!j.is_array()) input_error("field '" + what + "' must be an array");
  std::vector<Integer> out;
  for (const auto& v : j) out.push_back(to_integer(v, what));
  return out;
}

link::LinkDiagram parse_link(const json& j) {
  if (j.contains("braid")) {
    const json& b = j.at("braid");
    link::BraidWord w;
    w.strands = get_as<int>(field(b, "strands"), "braid.strands");
    w.word = get_as<std::vector<int>>(field(b, "word"), "braid.word");
    return link::from_braid(w);
  }
  if (j.contains("pd")) return link::parse_pd(get_as<link::PDCode>(j.at("pd"), "pd"));
  input_error("link needs a 'pd' or 'braid' field");
}

Presentation parse_presentation(const json& j) {
  Presentation p;
  p.generators = get_as<std::vector<std::string>>(field(j, "generators"), "generators");
  for (const auto& r : get_as<std::vector<std::vector<long>>>(field(j, "relators"), "relators"))
    p.relators.push_back(word_from_signed(r, p.generators.size()));
  return p;
}

std::vector<psl2::SL2> parse_matrices(const json& j) {
  std::vector<psl2::SL2> out;
  const auto ms = get_as<std::vector<std::array<std::array<double, 2>, 2>>>(field(j, "matrices"), "matrices");
  for (const auto& m : ms) out.push_back(psl2::SL2::make(m[0][0], m[0][1], m[1][0], m[1][1]));
  return out;
}

// ---------------------------------------------------------------------------
// Output

json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json to_json(const Rational& q) {
  if (q.get_den() == 1) return to_json(q.get_num());
  return q.get_str();
}

template <class T>
json to_json_list(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const algebra::LaurentPoly& p) {
  return {{"coeffs", p.is_zero() ? json::array() : to_json_list(p.coeffs())}, {"min_exp", p.min_exp()}};
}

json to_json(const algebra::AbelianGroup& g) { return {{"rank", g.rank}, {"torsion", to_json_list(g.torsion)}}; }

json to_json(const gate::HomologyElement& e) {
  return {{"free", to_json_list(e.free)}, {"torsion", to_json_list(e.torsion)}};
}

json to_json(const psl2::SL2& m) { return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}); }

json matrices_json(const std::vector<psl2::SL2>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(to_json(psl2::PSL2(m).rep()));
  return a;
}

void text_lines(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) text_lines(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) text_lines(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const json& body, const std::string& format, std::ostream& out) {
  json j = body;
  j["schema"] = "1";
  if (format == "text") {
    json rest = j;
    rest.erase("schema");
    text_lines(rest, "", out);
  } else {
    out << j.dump(2) << "\n";
  }
}

// ---------------------------------------------------------------------------
// Subcommands

json cmd_invariants(const std::string& input) {
  const auto d = parse_link(load(input));
  const auto inv = invariants::compute(d);
  return {{"components", inv.components},
          {"alexander", to_json(inv.alexander)},
          {"det", to_json(inv.det.abs_value)},
          {"h1_branched", to_json(inv.h1_branched)},
          {"route", invariants::to_string(inv.route)}};
}

std::vector<bool> parse_monodromy(const json& j) {
  std::vector<bool> out;
  if (!j.is_array()) input_error("field 'monodromy' must be an array");
  for (const auto& v : j) {
    if (v.is_boolean()) out.push_back(v.get<bool>());
    else if (v.is_number_integer() && (v == 0 || v == 1)) out.push_back(v == 1);
    else input_error("monodromy entries must be 0/1 or booleans");
  }
  return out;
}

json cmd_gate(const std::string& input, const std::string& monodromy) {
  const json j = load(input);
  const auto d = parse_link(j);
  std::vector<bool> labels(d.num_components(), true);
  if (!monodromy.empty()) {
    labels.clear();
    std::stringstream ss(monodromy);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok == "1" || tok == "true") labels.push_back(true);
      else if (tok == "0" || tok == "false") labels.push_back(false);
      else input_error("monodromy entries must be 0/1");
    }
  } else if (j.contains("monodromy")) {
    labels = parse_monodromy(j.at("monodromy"));
  }
  const auto v = gate::gate(d, labels);
  json reasons = json::array();
  for (auto r : v.reasons) reasons.push_back(gate::to_string(r));
  json cert{{"components", v.certificates.components}, {"z1", v.certificates.z1}};
  if (v.certificates.alexander_z1) cert["alexander_z1"] = to_json(*v.certificates.alexander_z1);
  if (v.certificates.det_z1) {
    cert["det_z1"] = to_json(v.certificates.det_z1->abs_value);
    cert["det_z1_signed"] = to_json(v.certificates.det_z1->signed_value);
  }
  if (v.certificates.h1_z1) cert["h1_z1"] = to_json(*v.certificates.h1_z1);
  return {{"status", gate::to_string(v.status)}, {"reasons", reasons}, {"certificates", cert}};
}

gate::HomologyElement parse_element(const json& j, const std::string& what) {
  gate::HomologyElement e;
  if (j.contains("free")) e.free = integers(j.at("free"), what + ".free");
  if (j.contains("torsion")) e.torsion = integers(j.at("torsion"), what + ".torsion");
  return e;
}

json cmd_flow(const std::string& input) {
  const json j = load(input);
  gate::FlowGraph g;
  g.vertices = get_as<std::size_t>(field(j, "vertices"), "vertices");
  const json& edges = field(j, "edges");
  if (!edges.is_array()) input_error("field 'edges' must be an array");
  for (const auto& e : edges) {
    gate::FlowEdge fe;
    fe.from = get_as<std::size_t>(field(e, "from"), "edges.from");
    fe.to = get_as<std::size_t>(field(e, "to"), "edges.to");
    if (e.contains("label")) fe.label = parse_element(e.at("label"), "edges.label");
    g.edges.push_back(std::move(fe));
  }
  g.validate();

  gate::Flow f;
  const json& w = field(j, "weights");
  if (!w.is_array()) input_error("field 'weights' must be an array");
  for (const auto& x : w) f.weights.push_back(to_rational(x, "weights"));
  f.orientations = j.contains("orientations") ? get_as<std::vector<int>>(j.at("orientations"), "orientations")
                                              : std::vector<int>(f.weights.size(), 1);
  if (f.size() != g.edges.size()) throw Error(Errc::SizeMismatch, "one weight per edge is required");
  f.validate();

  gate::HomologyModel h;
  if (j.contains("homology")) {
    const json& hm = j.at("homology");
    h.rank = get_as<std::size_t>(field(hm, "rank"), "homology.rank");
    if (hm.contains("torsion")) h.torsion = integers(hm.at("torsion"), "homology.torsion");
  } else {
    h.rank = g.edges.empty() ? 0 : g.edges.front().label.free.size();
  }
  for (auto& e : g.edges) e.label = h.reduce(e.label);

  json out{{"is_flow", gate::is_flow(g, f)}};
  if (!out["is_flow"].get<bool>()) {
    out["class"] = nullptr;
    return out;
  }
  const auto c = gate::homology_class(g, f, h);
  out["class"] = to_json(c);
  std::optional<std::vector<gate::HomologyElement>> admissible;
  if (j.contains("admissible")) {
    admissible.emplace();
    for (const auto& a : j.at("admissible")) admissible->push_back(h.reduce(parse_element(a, "admissible")));
  } else if (j.contains("milnor_wood")) {
    const json& mw = j.at("milnor_wood");
    const auto genera = get_as<std::vector<int>>(field(mw, "genera"), "milnor_wood.genera");
    const auto rows = get_as<std::vector<std::vector<json>>>(field(mw, "pd"), "milnor_wood.pd");
    algebra::IntMatrix pd(rows.size(), rows.empty() ? 0 : rows.front().size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != pd.cols()) input_error("milnor_wood.pd must be rectangular");
      for (std::size_t c2 = 0; c2 < pd.cols(); ++c2) pd(r, c2) = to_integer(rows[r][c2], "milnor_wood.pd");
    }
    admissible = gate::admissible_from_milnor_wood(psl2::milnor_wood_admissible(genera), pd, h);
  }
  if (admissible) {
    const auto rk = gate::realizable_k(h, c, *admissible);
    json r{{"infinite", rk.infinite}};
    if (rk.infinite) {
      r["period"] = to_json(rk.period);
      r["residues"] = to_json_list(rk.residues);
    } else {
      r["ks"] = to_json_list(rk.ks);
    }
    out["realizable_k"] = r;
  }
  return out;
}

json rep_json(const repvar::RepAssignment& r) {
  return {{"matrices", matrices_json(r.matrices)},
          {"residual", r.residual},
          {"traces", repvar::trace_coordinates(r.matrices)},
          {"irreducible", repvar::is_irreducible(r.matrices)},
          {"abelian", repvar::is_abelian(r.matrices)},
          {"metabelian", repvar::is_metabelian(r.matrices)}};
}

json cmd_solve(const std::string& input, int restarts, double tol, std::uint64_t seed) {
  const auto p = parse_presentation(load(input));
  const auto reps = repvar::solve(p, restarts, tol, seed);
  json list = json::array();
  for (const auto& r : reps) list.push_back(rep_json(r));
  return {{"generators", p.generators}, {"count", reps.size()}, {"representations", list}};
}

json cmd_brieskorn(const std::vector<long>& pqr, int restarts, double tol, std::uint64_t seed) {
  if (pqr.size() != 3) input_error("brieskorn needs exactly three exponents");
  const auto d = repvar::BrieskornData::make(pqr[0], pqr[1], pqr[2]);
  const auto classes = repvar::brieskorn_enumerate(d, restarts, tol, seed);
  json list = json::array();
  for (const auto& c : classes)
    list.push_back({{"rotation", c.rotation},
                    {"trivial", c.trivial},
                    {"irreducible", c.irreducible},
                    {"residual", c.rep.residual},
                    {"traces", c.traces},
                    {"matrices", matrices_json(c.rep.matrices)}});
  return {{"p", d.p}, {"b", d.b}, {"b0", d.b0}, {"generators", {"x1", "x2", "x3", "h"}},
          {"count", classes.size()}, {"classes", list}};
}

json cmd_euler(const std::string& input, int genus) {
  const auto ms = parse_matrices(load(input));
  std::vector<psl2::PSL2> rep(ms.begin(), ms.end());
  const auto e = psl2::euler_number(rep, genus);
  return {{"euler", e.euler}, {"residual", e.residual}, {"raw", e.raw}};
}

json cmd_mw(const std::vector<int>& genera) {
  return {{"genera", genera}, {"vectors", psl2::milnor_wood_admissible(genera)}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blow-up set obstructions and PSL(2,R) representation varieties", "blowupgate"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.fallthrough();

  std::string input, monodromy;
  int restarts = 32, genus = 2;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::vector<long> pqr;
  std::vector<int> genera;

  auto add_solver_opts = [&](CLI::App* s) {
    s->add_option("--restarts", restarts, "Random restarts")->check(CLI::PositiveNumber);
    s->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);
    s->add_option("--seed", seed, "Random seed");
  };

  auto* inv = app.add_subcommand("invariants", "Alexander polynomial, determinant, H1 of the double branched cover");
  inv->add_option("link", input, "Link JSON file or inline JSON")->required();
  auto* gt = app.add_subcommand("gate", "Blow-up set admissibility verdict");
  gt->add_option("link", input, "Link JSON file or inline JSON")->required();
  gt->add_option("--monodromy", monodromy, "Comma separated 0/1 per component");
  auto* fl = app.add_subcommand("flow", "Flow check, homology class and realizable multiples");
  fl->add_option("graph", input, "Flow graph JSON file or inline JSON")->required();
  auto* sv = app.add_subcommand("solve", "PSL(2,R) representations of a presentation");
  sv->add_option("presentation", input, "Presentation JSON file or inline JSON")->required();
  add_solver_opts(sv);
  auto* bk = app.add_subcommand("brieskorn", "Representation census of a Brieskorn sphere");
  bk->add_option("exponents", pqr, "p q r")->required()->expected(3);
  add_solver_opts(bk);
  auto* eu = app.add_subcommand("euler", "Euler number of a surface group representation");
  eu->add_option("rep", input, "Representation JSON file or inline JSON")->required();
  eu->add_option("--genus", genus, "Surface genus")->check(CLI::PositiveNumber);
  auto* mw = app.add_subcommand("mw-admissible", "Milnor-Wood admissible Euler vectors");
  mw->add_option("--genera", genera, "Comma separated genera")->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    json body;
    if (*inv) body = cmd_invariants(input);
    else if (*gt) body = cmd_gate(input, monodromy);
    else if (*fl) body = cmd_flow(input);
    else if (*sv) body = cmd_solve(input, restarts, tol, seed);
    else if (*bk) body = cmd_brieskorn(pqr, bk->count("--restarts") ? restarts : 64, tol, seed);
    else if (*eu) body = cmd_euler(input, genus);
    else body = cmd_mw(genera);
    emit(body, format, out);
    return 0;
  } catch (const Error& e) {
    const json j{{"schema", "1"}, {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
    out << j.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    const json j{{"schema", "1"}, {"error", {{"code", "InputError"}, {"message", e.what()}}}};
    out << j.dump(2) << "\n";
    return 1;
  }
}

}  // namespace blowup::cli
