#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monokit/algebraic.hpp"
#include "monokit/errors.hpp"
#include "monokit/fuchsian.hpp"
#include "monokit/parse.hpp"
#include "monokit/report.hpp"
#include "monokit/ritt.hpp"
#include "monokit/roots.hpp"

namespace py = pybind11;
using namespace monokit;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::string to_json_text(const py::object& o) {
  if (py::isinstance<py::str>(o)) return o.cast<std::string>();
  return py::module_::import("json").attr("dumps")(o).cast<std::string>();
}

RunConfig make_config(double tol_root, double tol_ode, std::uint64_t seed, int kmax, int k, bool assume_small,
                      int threads) {
  RunConfig cfg;
  cfg.tol.root = tol_root;
  cfg.tol.ode = tol_ode;
  cfg.seed = seed;
  cfg.kmax = kmax;
  cfg.k = k;
  cfg.assume_small = assume_small;
  cfg.threads = threads;
  cfg.validate();
  return cfg;
}

py::dict report_dict(const Report& r) {
  py::dict d = to_python(r.to_json());
  d["exit_code"] = r.exit_code();
  return d;
}

PermutationGroup make_group(int degree, const std::vector<std::vector<int>>& gens) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.emplace_back(g);
  return {degree, perms};
}

CMatrix to_matrix(const std::vector<std::vector<Complex>>& rows) {
  CMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.empty() ? 0 : rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != static_cast<size_t>(m.cols())) throw Error(ErrorKind::InvalidInput, "ragged matrix");
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<Complex>> from_matrix(const CMatrix& m) {
  std::vector<std::vector<Complex>> rows(static_cast<size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[i].push_back(m(i, j));
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Monodromy-based representability checks.";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "MonokitError", PyExc_RuntimeError);

#define CONFIG_ARGS                                                                                         \
  py::arg("tol_root") = 1e-10, py::arg("tol_ode") = 1e-10, py::arg("seed") = 42, py::arg("kmax") = 8,        \
  py::arg("k") = 0, py::arg("assume_small") = false, py::arg("threads") = 1

  m.def(
      "algebraic",
      [](const std::string& poly, double tr, double to, std::uint64_t seed, int kmax, int k, bool small, int th) {
        return report_dict(run_algebraic(poly, make_config(tr, to, seed, kmax, k, small, th)));
      },
      py::arg("poly"), CONFIG_ARGS, "Monodromy report for y(x) defined by poly(x, y) = 0.");
  m.def(
      "invert_poly",
      [](const std::string& poly, double tr, double to, std::uint64_t seed, int kmax, int k, bool small, int th) {
        return report_dict(run_invert_poly(poly, make_config(tr, to, seed, kmax, k, small, th)));
      },
      py::arg("poly"), CONFIG_ARGS, "Invertibility of a polynomial in z by radicals (and k-radicals when k > 0).");
  m.def(
      "fuchsian",
      [](const py::object& system, double tr, double to, std::uint64_t seed, int kmax, int k, bool small, int th) {
        return report_dict(run_fuchsian(to_json_text(system), make_config(tr, to, seed, kmax, k, small, th)));
      },
      py::arg("system"), CONFIG_ARGS,
      "Report for a Fuchsian system given as {'poles': [...], 'residues': [...]} or its JSON text.");
  m.def(
      "polygon",
      [](const py::object& sides, double tr, double to, std::uint64_t seed, int kmax, int k, bool small, int th) {
        return report_dict(run_polygon(to_json_text(sides), make_config(tr, to, seed, kmax, k, small, th)));
      },
      py::arg("sides"), CONFIG_ARGS, "Classification of a circular polygon given as a list of side records.");
#undef CONFIG_ARGS

  m.def(
      "monodromy",
      [](const std::string& poly, int threads) {
        MonodromyOptions opts;
        opts.threads = threads;
        auto r = monodromy(parse_bivariate(poly), opts);
        py::dict d;
        d["branch_points"] = r.branch.branch_points;
        d["base_point"] = r.skeleton.base_point;
        std::vector<std::vector<int>> perms;
        for (const auto& p : r.permutations) perms.push_back(p.images());
        d["permutations"] = perms;
        d["infinity_permutation"] = r.infinity_permutation.images();
        d["group_order"] = r.group.order().str();
        d["transitive"] = r.transitive;
        return d;
      },
      py::arg("poly"), py::arg("threads") = 1,
      "Branch points and loop permutations; permutations are image lists.");

  m.def(
      "group_order",
      [](int degree, const std::vector<std::vector<int>>& gens) { return make_group(degree, gens).order().str(); },
      py::arg("degree"), py::arg("generators"), "Order of the permutation group, as a decimal string.");
  m.def(
      "is_solvable",
      [](int degree, const std::vector<std::vector<int>>& gens) { return is_solvable(make_group(degree, gens)); },
      py::arg("degree"), py::arg("generators"));
  m.def(
      "is_k_solvable",
      [](int degree, const std::vector<std::vector<int>>& gens, int k) {
        return is_k_solvable(make_group(degree, gens), k);
      },
      py::arg("degree"), py::arg("generators"), py::arg("k"));
  m.def(
      "composition_factors",
      [](int degree, const std::vector<std::vector<int>>& gens) {
        std::vector<std::string> out;
        for (const auto& f : composition_factor_signature(make_group(degree, gens)).factors)
          out.push_back(f.to_string());
        return out;
      },
      py::arg("degree"), py::arg("generators"));

  m.def(
      "decompose",
      [](const std::string& poly) {
        std::vector<std::vector<std::pair<std::string, std::string>>> out;
        for (const auto& d : decompose(parse_univariate(poly))) {
          std::vector<std::pair<std::string, std::string>> chain;
          for (size_t i = 0; i < d.components.size(); ++i)
            chain.emplace_back(to_string(d.components[i]), to_string(d.tags[i]));
          out.push_back(chain);
        }
        return out;
      },
      py::arg("poly"), "Complete decompositions, outermost component first, as (component, tag) pairs.");
  m.def(
      "chebyshev", [](int n) { return to_string(chebyshev(n)); }, py::arg("n"));
  m.def(
      "roots",
      [](const std::vector<Complex>& coeffs, double tol) {
        std::vector<std::pair<Complex, int>> out;
        for (const auto& r : roots_all(CPoly(coeffs), tol)) out.emplace_back(r.value, r.multiplicity);
        return out;
      },
      py::arg("coeffs"), py::arg("tol") = 1e-10, "Roots with multiplicities; coefficients lowest degree first.");
  m.def(
      "lie_closure",
      [](const std::vector<std::vector<std::vector<Complex>>>& mats, double tol) {
        std::vector<CMatrix> gens;
        for (const auto& mm : mats) gens.push_back(to_matrix(mm));
        auto t = is_simultaneously_triangularizable(gens, tol);
        py::dict d;
        d["dimension"] = t.closure.dimension();
        d["derived_dims"] = t.closure.derived_dims;
        d["triangularizable"] = t.triangularizable;
        if (t.witness) d["witness"] = from_matrix(*t.witness);
        return d;
      },
      py::arg("matrices"), py::arg("tol") = 1e-9, "Lie closure of the matrices and a triangularizing basis if any.");
}
