#include <iostream>

#include <CLI11.hpp>

#include "monokit/errors.hpp"
#include "monokit/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Monodromy groups and representability verdicts"};
  app.set_version_flag("--version", std::string("monokit ") + monokit::kVersion);
  app.require_subcommand(1);

  monokit::RunConfig cfg;
  std::string format = "text";
  app.add_option("--tol-root", cfg.tol.root, "root-finding tolerance");
  app.add_option("--tol-ode", cfg.tol.ode, "ODE integration tolerance");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", cfg.threads, "worker threads for loop tracking")->check(CLI::PositiveNumber);

  std::string input;
  auto* algebraic = app.add_subcommand("algebraic", "monodromy of y(x) defined by f(x, y) = 0");
  algebraic->add_option("poly", input, "polynomial in x and y, e.g. \"y^5 + y - x\"")->required();
  algebraic->add_option("--kmax", cfg.kmax, "largest k for k-radical verdicts");

  auto* invert = app.add_subcommand("invert-poly", "invertibility of a polynomial by radicals");
  invert->add_option("poly", input, "polynomial in z, e.g. \"z^6\"")->required();
  invert->add_option("--k", cfg.k, "also decide invertibility by k-radicals");

  auto* fuchsian = app.add_subcommand("fuchsian", "Fuchsian system classification");
  fuchsian->add_option("file", input, "JSON system file")->required();
  fuchsian->add_flag("--assume-small", cfg.assume_small, "assert that the residues are small");

  auto* polygon = app.add_subcommand("polygon", "circular-arc polygon classification");
  polygon->add_option("file", input, "JSON polygon file")->required();

  for (auto* sub : {algebraic, invert, fuchsian, polygon}) {
    sub->fallthrough();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--tol-root", cfg.tol.root, "root-finding tolerance");
    sub->add_option("--tol-ode", cfg.tol.ode, "ODE integration tolerance");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  }

  CLI11_PARSE(app, argc, argv);
  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    monokit::Report r = monokit::run(sub, input, cfg);
    if (format == "json")
      std::cout << r.to_json().dump(2) << "\n";
    else
      std::cout << r.to_text();
    return r.exit_code();
  } catch (const monokit::Error& e) {
    if (format == "json")
      std::cout << nlohmann::json{{"error", std::string(monokit::to_string(e.kind()))}, {"message", e.what()}}.dump(2)
                << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
