#include "monokit/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "monokit/algebraic.hpp"
#include "monokit/errors.hpp"
#include "monokit/parse.hpp"
#include "monokit/ritt.hpp"

namespace monokit {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& content) {
  try {
    return json::parse(content);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

GaussRational gauss_from_json(const json& j) {
  if (j.is_string()) return parse_gauss_rational(j.get<std::string>());
  if (j.is_number_integer()) return {Rational(j.get<std::int64_t>()), 0};
  if (j.is_number()) return {parse_rational(shortest(j.get<double>())), 0};
  throw Error(ErrorKind::ParseError, "expected a number or complex string, got " + j.dump());
}

Complex complex_from_json(const json& j) { return gauss_from_json(j).to_complex(); }

double real_from_json(const json& j) {
  GaussRational g = gauss_from_json(j);
  if (g.im != 0) throw Error(ErrorKind::ParseError, "expected a real number, got " + j.dump());
  return to_double(g.re);
}

json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(format_complex(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json verdict_json(const Verdict& v) {
  json fields = json::object();
  for (const auto& [k, val] : v.fields) fields[k] = val;
  return {{"class", v.class_name()}, {"status", to_string(v.status)}, {"reason", v.reason}, {"fields", fields}};
}

json config_json(const RunConfig& c) {
  return {{"tol_root", c.tol.root}, {"tol_ode", c.tol.ode},   {"tol_cluster", c.tol.cluster},
          {"tol_rank", c.tol.rank}, {"seed", c.seed},          {"kmax", c.kmax},
          {"k", c.k},               {"assume_small", c.assume_small}};
}

MonodromyOptions monodromy_options(const RunConfig& c) {
  MonodromyOptions o;
  o.tol = c.tol;
  o.threads = c.threads;
  return o;
}

json group_json(const PermutationGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_cycle_string());
  return gens;
}

std::string text_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void text_lines(std::ostringstream& os, const json& obj, const std::string& indent) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (it->is_object()) {
      os << indent << it.key() << ":\n";
      text_lines(os, *it, indent + "  ");
    } else {
      os << indent << it.key() << ": " << text_value(*it) << "\n";
    }
  }
}

}  // namespace

void RunConfig::validate() const {
  tol.validate();
  if (kmax < 1 || kmax > 32) throw Error(ErrorKind::InvalidInput, "kmax must lie in [1, 32]");
  if (k < 0 || k > 32) throw Error(ErrorKind::InvalidInput, "k must lie in [1, 32]");
  if (threads < 1) throw Error(ErrorKind::InvalidInput, "threads must be at least 1");
}

int Report::exit_code() const {
  for (const auto& v : verdicts)
    if (v.status == VerdictStatus::Inconclusive) return 2;
  return 0;
}

json Report::to_json() const {
  json vs = json::array();
  for (const auto& v : verdicts) vs.push_back(verdict_json(v));
  return {{"subcommand", subcommand}, {"input", input},     {"intermediates", intermediates},
          {"verdicts", vs},           {"config", config},   {"version", version}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "monokit " << version << " " << subcommand << "\n";
  os << "input: " << text_value(input) << "\n";
  os << "intermediates:\n";
  text_lines(os, intermediates, "  ");
  os << "verdicts:\n";
  for (const auto& v : verdicts) os << "  " << v.class_name() << ": " << to_string(v.status) << " (" << v.reason << ")\n";
  os << "config:\n";
  text_lines(os, config, "  ");
  return os.str();
}

FuchsianInput parse_fuchsian_json(const std::string& content) {
  const json j = parse_json(content);
  if (!j.is_object() || !j.contains("poles") || !j.contains("residues"))
    throw Error(ErrorKind::ParseError, "fuchsian input needs \"poles\" and \"residues\"");
  FuchsianInput in;
  for (const auto& p : j.at("poles")) in.system.poles.push_back(complex_from_json(p));
  for (const auto& m : j.at("residues")) {
    GaussMatrix g;
    for (const auto& row : m) {
      std::vector<GaussRational> r;
      for (const auto& e : row) r.push_back(gauss_from_json(e));
      g.push_back(std::move(r));
    }
    in.system.residues.push_back(to_cmatrix(g));
    in.exact_residues.push_back(std::move(g));
  }
  in.system.validate();
  return in;
}

PolygonSpec parse_polygon_json(const std::string& content) {
  json j = parse_json(content);
  if (j.is_object() && j.contains("sides")) j = j.at("sides");
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "polygon input must be a list of sides");
  PolygonSpec poly;
  for (const auto& s : j) {
    const std::string kind = s.value("kind", "");
    if (kind == "circle") {
      const Complex c = complex_from_json(s.at("center"));
      const double r = real_from_json(s.at("radius"));
      const double from = real_from_json(s.at("from")), to = real_from_json(s.at("to"));
      poly.sides.push_back({GenCircle::circle(c, r), c + std::polar(r, from), c + std::polar(r, to)});
    } else if (kind == "line") {
      const Complex a = complex_from_json(s.at("p1")), b = complex_from_json(s.at("p2"));
      poly.sides.push_back({GenCircle::line(a, b), a, b});
    } else {
      throw Error(ErrorKind::ParseError, "side kind must be \"circle\" or \"line\", got " + s.dump());
    }
  }
  poly.validate();
  return poly;
}

Report run_algebraic(const std::string& text, const RunConfig& cfg) {
  cfg.validate();
  Report r;
  r.subcommand = "algebraic";
  r.input = text;
  r.config = config_json(cfg);
  const BiPoly f = parse_bivariate(text);
  auto rep = classify_algebraic(f, cfg.kmax, monodromy_options(cfg));
  json bps = json::array();
  for (auto b : rep.skeleton.points) bps.push_back(format_complex(b));
  json loops = json::array();
  for (const auto& p : rep.permutations) loops.push_back(p.to_cycle_string());
  const auto series = derived_series(rep.group);
  json series_orders = json::array();
  for (const auto& g : series) series_orders.push_back(g.order().str());
  r.intermediates = {
      {"polynomial", to_string(f)},
      {"discriminant", to_string(rep.branch.discriminant, 'x')},
      {"branch_points", bps},
      {"base_point", format_complex(rep.skeleton.base_point)},
      {"n_sheets", rep.branch.n_sheets},
      {"loop_permutations", loops},
      {"infinity_permutation", rep.infinity_permutation.to_cycle_string()},
      {"group_order", rep.group.order().str()},
      {"transitive", rep.transitive},
      {"stabilizer_order", rep.pair.stabilizer.order().str()},
      {"derived_series_orders", series_orders},
      {"factor_signature", composition_factor_signature(rep.group).to_string()},
  };
  r.verdicts = rep.verdicts;
  return r;
}

Report run_invert_poly(const std::string& text, const RunConfig& cfg) {
  cfg.validate();
  Report r;
  r.subcommand = "invert-poly";
  r.input = text;
  r.config = config_json(cfg);
  const RatPoly p = parse_univariate(text);
  if (p.degree() < 2) throw Error(ErrorKind::InvalidInput, "invert-poly needs degree at least 2");
  const auto opts = monodromy_options(cfg);
  auto rad = invertible_by_radicals(p, opts);
  json decs = json::array();
  for (const auto& d : rad.decompositions) {
    json comps = json::array(), tags = json::array();
    for (size_t i = 0; i < d.components.size(); ++i) {
      comps.push_back(to_string(d.components[i]));
      tags.push_back(to_string(d.tags[i]));
    }
    decs.push_back({{"components", comps}, {"tags", tags}});
  }
  auto inv = inverse_monodromy(p, opts);
  r.intermediates = {
      {"polynomial", to_string(p)},
      {"decompositions", decs},
      {"certificate", rad.certificate ? rad.certificate->to_string() : ""},
      {"inverse_monodromy_generators", group_json(inv.group)},
      {"infinity_permutation", inv.infinity_permutation.to_cycle_string()},
      {"group_order", rad.group_order.str()},
      {"group_solvable", rad.group_solvable},
      {"primitive", is_transitive(inv.group) && is_primitive(inv.group).primitive},
  };
  r.verdicts.push_back(rad.verdict);
  if (cfg.k > 0) {
    auto kr = invertible_by_k_radicals(p, cfg.k, opts);
    json comps = json::array();
    for (const auto& c : kr.components)
      comps.push_back({{"component", to_string(c.component)},
                       {"tag", to_string(c.tag)},
                       {"group_order", c.group_order.str()},
                       {"k_solvable", c.k_solvable},
                       {"exceptional", c.exceptional}});
    r.intermediates["k_components"] = comps;
    r.verdicts.push_back(kr.verdict);
  }
  return r;
}

Report run_fuchsian(const std::string& content, const RunConfig& cfg) {
  cfg.validate();
  Report r;
  r.subcommand = "fuchsian";
  r.input = parse_json(content);
  r.config = config_json(cfg);
  FuchsianInput in = parse_fuchsian_json(content);
  FuchsianOptions opts;
  opts.tol = cfg.tol;
  opts.assume_small = cfg.assume_small;
  opts.seed = cfg.seed;
  opts.threads = cfg.threads;
  opts.exact_residues = in.exact_residues;
  auto rep = classify_fuchsian(in.system, opts);
  json mats = json::array(), dets = json::array();
  for (size_t i = 0; i < rep.monodromy.matrices.size(); ++i) {
    mats.push_back(matrix_json(rep.monodromy.matrices[i]));
    const int idx = rep.monodromy.skeleton.order[i];
    const Complex want = std::exp(Complex(0, 2 * std::numbers::pi) * in.system.residues[idx].trace());
    dets.push_back(shortest(std::abs(rep.monodromy.matrices[i].determinant() - want)));
  }
  json poles = json::array();
  for (auto p : rep.monodromy.skeleton.points) poles.push_back(format_complex(p));
  json dims = json::array();
  for (int d : rep.triangularization.closure.derived_dims) dims.push_back(d);
  r.intermediates = {
      {"loop_order_poles", poles},
      {"base_point", format_complex(rep.monodromy.skeleton.base_point)},
      {"monodromy_matrices", mats},
      {"infinity_matrix", matrix_json(rep.monodromy.infinity_matrix)},
      {"loop_residual", shortest(rep.monodromy.residual)},
      {"det_defects", dets},
      {"lie_closure_dim", rep.triangularization.closure.dimension()},
      {"derived_dims", dims},
      {"triangularizable", rep.triangularization.triangularizable},
  };
  if (rep.triangularization.witness) r.intermediates["witness"] = matrix_json(*rep.triangularization.witness);
  if (rep.probe)
    r.intermediates["probe"] = {{"skipped", rep.probe->skipped},
                                {"trials", rep.probe->trials},
                                {"failures", rep.probe->failures},
                                {"min_motion", shortest(rep.probe->min_motion)}};
  r.verdicts = rep.verdicts;
  return r;
}

Report run_polygon(const std::string& content, const RunConfig& cfg) {
  cfg.validate();
  Report r;
  r.subcommand = "polygon";
  r.input = parse_json(content);
  r.config = config_json(cfg);
  const PolygonSpec poly = parse_polygon_json(content);
  auto c = classify_polygon(poly, cfg.tol.cluster);
  json also = json::array();
  for (int k : c.also_holds) also.push_back(k);
  r.intermediates = {
      {"case", c.case_number},
      {"tag", c.tag},
      {"also_holds", also},
      {"closure_finite", c.closure.finite},
      {"closure_order", c.closure.order},
      {"rotation_order", c.closure.rotation_order},
      {"net", c.closure.net},
  };
  if (c.common_point) r.intermediates["common_point"] = c.common_point->to_string();
  if (c.pair) r.intermediates["symmetric_pair"] = {c.pair->p.to_string(), c.pair->q.to_string()};
  r.verdicts = c.verdicts;
  return r;
}

Report run(const std::string& sub, const std::string& input, const RunConfig& cfg) {
  if (sub == "algebraic") return run_algebraic(input, cfg);
  if (sub == "invert-poly") return run_invert_poly(input, cfg);
  if (sub == "fuchsian") return run_fuchsian(read_file(input), cfg);
  if (sub == "polygon") return run_polygon(read_file(input), cfg);
  throw Error(ErrorKind::InvalidInput, "unknown subcommand '" + sub + "'");
}

}  // namespace monokit
