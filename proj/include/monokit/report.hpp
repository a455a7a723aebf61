#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "monokit/fuchsian.hpp"
#include "monokit/polygon.hpp"
#include "monokit/tolerance.hpp"
#include "monokit/verdict.hpp"

namespace monokit {

inline constexpr const char* kVersion = "1.0.0";

struct RunConfig {
  ToleranceConfig tol;
  std::uint64_t seed = 42;
  int kmax = 8;
  /// k for invert-poly; 0 means no k-radical verdict.
  int k = 0;
  bool assume_small = false;
  int threads = 1;

  /// Throws InvalidInput (tolerance floors, 1 <= kmax <= 32, 0 <= k <= 32, threads >= 1).
  void validate() const;
};

struct Report {
  std::string subcommand;
  nlohmann::json input;
  nlohmann::json intermediates;
  std::vector<Verdict> verdicts;
  nlohmann::json config;
  std::string version = kVersion;

  /// 0 classified, 2 when some verdict is Inconclusive.
  int exit_code() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Fuchsian input record {"poles": [...], "residues": [...]}. Entries may be
/// numbers or strings like "1/2-3i"; exact entries are kept for rank fallback.
struct FuchsianInput {
  FuchsianSystem system;
  std::vector<GaussMatrix> exact_residues;
};
FuchsianInput parse_fuchsian_json(const std::string& content);

/// Polygon input: a list of side records, or {"sides": [...]}. Circle sides
/// take "center", "radius" and endpoint angles "from"/"to" in radians; line
/// sides take endpoints "p1", "p2".
PolygonSpec parse_polygon_json(const std::string& content);

Report run_algebraic(const std::string& poly_text, const RunConfig& cfg);
Report run_invert_poly(const std::string& poly_text, const RunConfig& cfg);
Report run_fuchsian(const std::string& content, const RunConfig& cfg);
Report run_polygon(const std::string& content, const RunConfig& cfg);

/// Dispatch on subcommand; `input` is polynomial text for algebraic and
/// invert-poly and a file path for fuchsian and polygon.
Report run(const std::string& subcommand, const std::string& input, const RunConfig& cfg);

}  // namespace monokit
