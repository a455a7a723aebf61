#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "monokit/errors.hpp"
#include "monokit/parse.hpp"
#include "monokit/report.hpp"

using namespace monokit;

namespace {

const std::string kData = MONOKIT_TEST_DATA;

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-50, 50), den(1, 12);
  return {num(rng), den(rng)};
}

void check_schema_and_text(const Report& r) {
  auto j = r.to_json();
  for (const char* key : {"input", "intermediates", "verdicts", "config", "version"}) CHECK(j.contains(key));
  CHECK(j["version"] == kVersion);
  const std::string text = r.to_text();
  REQUIRE(j["verdicts"].size() == r.verdicts.size());
  for (const auto& v : j["verdicts"]) {
    for (const char* key : {"class", "status", "reason"}) CHECK(v.contains(key));
    const std::string line = v["class"].get<std::string>() + ": " + v["status"].get<std::string>() + " (" +
                             v["reason"].get<std::string>() + ")";
    CHECK(text.find(line) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("parse and print round-trip") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> deg(0, 12), keep(0, 2);
  for (int t = 0; t < 1000; ++t) {
    std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& v : c) v = keep(rng) ? random_rational(rng) : Rational(0);
    if (c.back() == 0) c.back() = 1;
    RatPoly p(c);
    INFO(to_string(p));
    CHECK(parse_univariate(to_string(p)) == p);
  }
  for (int t = 0; t < 200; ++t) {
    std::map<BiPoly::Key, Rational> terms;
    std::uniform_int_distribution<int> e(0, 4);
    for (int k = 0; k < 5; ++k) terms[{e(rng), e(rng) + 1}] += random_rational(rng);
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
    BiPoly f(terms);
    if (f.is_zero()) continue;
    INFO(to_string(f));
    CHECK(parse_bivariate(to_string(f)) == f);
  }
}

TEST_CASE("parser examples and errors") {
  auto q = parse_polynomial("y^5 + y - x");
  REQUIRE(q.bi);
  CHECK(q.bi->degree_y() == 5);
  CHECK(parse_univariate("z^2").degree() == 2);
  CHECK(parse_bivariate("y^2 - (x-1)*(x-2)").degree_y() == 2);
  CHECK(parse_univariate("(z+1)^3/2") == RatPoly(std::vector<Rational>{Rational(1, 2), Rational(3, 2),
                                                                        Rational(3, 2), Rational(1, 2)}));
  for (const char* bad : {"z^", "(z+1", "z/z", "2**z", "z^-1", "z^2000", "w + 1", ""})
    CHECK_THROWS_AS(parse_polynomial(bad), Error);
}

TEST_CASE("reports: exit codes, schema, text agreement") {
  RunConfig cfg;
  auto quintic = run("algebraic", "y^5+y-x", cfg);
  CHECK(quintic.exit_code() == 0);
  CHECK(quintic.intermediates["group_order"] == "120");
  check_schema_and_text(quintic);

  cfg.k = 5;
  auto z6 = run("invert-poly", "z^6", cfg);
  CHECK(z6.exit_code() == 0);
  REQUIRE(find_verdict(z6.verdicts, VerdictClass::Radicals));
  CHECK(find_verdict(z6.verdicts, VerdictClass::Radicals)->status == VerdictStatus::Representable);
  check_schema_and_text(z6);
  cfg.k = 0;

  auto open = run("fuchsian", kData + "/sl2_small.json", cfg);
  CHECK(open.exit_code() == 2);
  check_schema_and_text(open);
  cfg.assume_small = true;
  auto small = run("fuchsian", kData + "/sl2_small.json", cfg);
  CHECK(small.exit_code() == 0);
  CHECK(find_verdict(small.verdicts, VerdictClass::GeneralizedQuadratures)->status ==
        VerdictStatus::StronglyNonRepresentable);
  cfg.assume_small = false;
  CHECK(run("fuchsian", kData + "/triangular.json", cfg).exit_code() == 0);

  for (const char* f : {"straight_quadrilateral", "concentric_quadrilateral", "tetrahedral_triangle",
                        "vanishing_triangle"}) {
    auto r = run("polygon", kData + "/" + f + ".json", cfg);
    CHECK(r.exit_code() == 0);
    check_schema_and_text(r);
  }

  CHECK_THROWS_AS(run("algebraic", "y^2 x", cfg), Error);
  CHECK_THROWS_AS(run("fuchsian", kData + "/missing.json", cfg), Error);
  CHECK_THROWS_AS(run("nonsense", "z", cfg), Error);
}

TEST_CASE("reports are deterministic and independent of thread count") {
  RunConfig a, b;
  b.threads = 4;
  for (auto [sub, in] : {std::pair<std::string, std::string>{"algebraic", "y^6+y-x"},
                         {"invert-poly", "z^5-z+1"},
                         {"fuchsian", kData + "/sl2_small.json"}}) {
    const std::string first = run(sub, in, a).to_json().dump();
    CHECK(run(sub, in, a).to_json().dump() == first);
    CHECK(run(sub, in, b).to_json().dump() == first);
  }
}
