#include <doctest.h>

#include <json.hpp>

#include "config.hpp"
#include "report.hpp"
#include "runner.hpp"

using namespace nsvsi;

namespace {

const char* kKaigorodovConfig = R"JSON({
  "family": "kaigorodov",
  "parameters": {"K": 1, "C0": "3/2"},
  "checks": ["einstein", "csi", "kundt", "csi1-einstein"],
  "sample": {"count": 6, "seed": 42},
  "order": 3,
  "mode": "float",
  "tolerance": 1e-9,
  "check_tolerances": {"einstein": 1e-10, "csi": 1e-8}
})JSON";

const char* kFlatConfig = R"JSON({
  "family": "flat",
  "checks": ["vacuum", "einstein", "vsi-battery", "csi", "kundt", "walker", "nilpotency",
             "vsi-preconditions"],
  "sample": {"count": 5, "seed": 7},
  "order": 3,
  "mode": "rational"
})JSON";

const char* kBadPreconditionConfig = R"JSON({
  "family": "kundt",
  "components": {"H": "0", "W_x2": "v^2", "W_x3": "0", "g22": "1", "g23": "0", "g33": "1"},
  "checks": ["vsi-preconditions"],
  "sample": {"count": 3, "seed": 5},
  "order": 2,
  "mode": "float"
})JSON";

}  // namespace

TEST_CASE("config parsing validates fields and reports paths") {
  CHECK_THROWS_WITH_AS(parse_config("{"), doctest::Contains("invalid JSON"), Error);
  CHECK_THROWS_WITH_AS(parse_config("{}"), doctest::Contains("family"), Error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"family":"flat","order":9})"),
                       doctest::Contains("order"), Error);
  CHECK_THROWS_WITH_AS(parse_config(R"({"family":"flat","mode":"exact"})"),
                       doctest::Contains("mode"), Error);
  auto cfg = parse_config(kKaigorodovConfig);
  CHECK(cfg.family == "kaigorodov");
  CHECK(cfg.params.at("C0") == std::pair<long long, long long>{3, 2});
  CHECK(cfg.sample.seed == 42);
  CHECK(cfg.check_tolerances.at("einstein") == 1e-10);
}

TEST_CASE("overrides replace config fields") {
  auto cfg = parse_config(kFlatConfig);
  apply_overrides(cfg, R"({"seed": 11, "points": 9, "mode": "float", "order": 4})");
  CHECK(cfg.sample.seed == 11);
  CHECK(cfg.sample.count == 9);
  CHECK(cfg.mode == Mode::Float);
  CHECK(cfg.order == 4);
  CHECK_THROWS_AS(apply_overrides(cfg, R"({"order": 1})"), Error);
}

TEST_CASE("kaigorodov config: all checks pass, lambda reported") {
  auto cfg = parse_config(kKaigorodovConfig);
  auto rep = run(cfg);
  CHECK(rep.all_pass());
  CHECK(rep.exit_code() == 0);
  bool saw_lambda = false;
  for (const auto& c : rep.checks) {
    CAPTURE(c.id);
    CHECK(c.pass);
    if (c.id == "einstein")
      for (const auto& [k, v] : c.details)
        if (k == "lambda") {
          saw_lambda = true;
          CHECK(v == doctest::Approx(-3.0));
        }
  }
  CHECK(saw_lambda);
}

TEST_CASE("flat config passes everything in rational mode") {
  auto cfg = parse_config(kFlatConfig);
  auto rep = run(cfg);
  CHECK(rep.all_pass());
}

TEST_CASE("deliberate v-quadratic W fails vsi-preconditions with exit code 1") {
  auto cfg = parse_config(kBadPreconditionConfig);
  auto rep = run(cfg);
  CHECK(!rep.all_pass());
  CHECK(rep.exit_code() == 1);
}

TEST_CASE("reports are byte-identical for identical config and seed") {
  auto cfg = parse_config(kKaigorodovConfig);
  auto r1 = run(cfg);
  auto r2 = run(cfg);
  CHECK(r1.to_json() == r2.to_json());
  CHECK(r1.to_text() == r2.to_text());
  apply_overrides(cfg, R"({"seed": 43})");
  auto r3 = run(cfg);
  CHECK(r1.to_json() != r3.to_json());
}

TEST_CASE("rational sampling uses bounded denominators") {
  SampleStream rng(99);
  for (int k = 0; k < 200; ++k) {
    auto [p, q] = rng.next_ratio(-2.0, 3.0);
    CHECK(q >= 1);
    CHECK(q <= 24);
    double x = static_cast<double>(p) / static_cast<double>(q);
    CHECK(x >= -2.0);
    CHECK(x <= 3.0);
  }
}

TEST_CASE("branchA config via roles and antiderivatives") {
  const char* cfgtext = R"JSON({
    "family": "branchA",
    "roles": {"alpha": "al", "beta": "be", "gamma": "ga", "F1": "f1", "F2": "f2"},
    "functions": [
      {"name": "al", "args": ["u1", "u2"], "body": "u1*u2"},
      {"name": "be", "args": ["u1", "v2"], "body": "v2"},
      {"name": "ga", "args": ["u1", "u2"], "body": "0"},
      {"name": "f1", "args": ["u1", "u2"], "body": "u1 + u2^2"},
      {"name": "f2", "args": ["u1", "v2"], "body": "u1*v2"},
      {"name": "Ial", "args": ["u1", "u2"], "body": "u1*u2^2/2"},
      {"name": "Ibe", "args": ["u1", "v2"], "body": "v2^2/2"},
      {"name": "Iga", "args": ["u1", "u2"], "body": "0"}
    ],
    "antiderivatives": [
      {"function": "al", "wrt": "u2", "antiderivative": "Ial"},
      {"function": "be", "wrt": "v2", "antiderivative": "Ibe"},
      {"function": "ga", "wrt": "u2", "antiderivative": "Iga"}
    ],
    "checks": ["vacuum", "vsi-battery", "null-vacuum", "kundt", "walker", "nilpotency",
               "antiderivatives", "cross-check", "vsi-preconditions"],
    "sample": {"count": 6, "seed": 3},
    "order": 3,
    "mode": "rational"
  })JSON";
  auto cfg = parse_config(cfgtext);
  auto rep = run(cfg);
  for (const auto& c : rep.checks) {
    CAPTURE(c.id);
    CAPTURE(c.note);
    CHECK(c.pass);
    CHECK(c.max_residual == 0.0);
  }
}

TEST_CASE("transform declarations are checked from the config") {
  const char* cfgtext = R"JSON({
    "family": "null_vsi",
    "components": {"W1_u2": "0", "W0_u2": "u2*v2", "W0_v2": "0",
                   "H1": "0", "H0": "v2^2"},
    "checks": [],
    "transforms": [
      {"kind": "null-shift", "h": "u2*v2 + u1"},
      {"kind": "null-rescale", "g": "(2*u1 + 1)/(u1 + 3)",
       "g_inverse": "(3*u1 - 1)/(2 - u1)"}
    ],
    "sample": {"count": 4, "seed": 9,
               "box": {"u1": [0.25, 2.0]}},
    "order": 3,
    "mode": "float",
    "check_tolerances": {"transform": 1e-9}
  })JSON";
  auto cfg = parse_config(cfgtext);
  auto rep = run(cfg);
  REQUIRE(rep.checks.size() == 2);
  for (const auto& c : rep.checks) {
    CAPTURE(c.id);
    CHECK(c.pass);
  }
}

TEST_CASE("evaluation failures carry the eval exit code") {
  const char* cfgtext = R"JSON({
    "family": "kaigorodov",
    "parameters": {"K": 1, "C0": 1},
    "checks": ["einstein"],
    "mode": "rational"
  })JSON";
  auto cfg = parse_config(cfgtext);
  try {
    run(cfg);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.exit_code() == 3);
  }
}

TEST_CASE("list_families and explain") {
  auto txt = list_families_json();
  auto j = nlohmann::json::parse(txt);
  CHECK(j.is_array());
  CHECK(j.size() >= 8);
  bool kaig = false;
  for (const auto& f : j)
    for (const auto& p : f["presets"])
      if (p.get<std::string>() == "kaigorodov") kaig = true;
  CHECK(kaig);

  auto doc = explain("walker");
  CHECK(doc.find("recurrence") != std::string::npos);
  CHECK_THROWS_AS(explain("no-such-check"), Error);
}

TEST_CASE("float formatting is deterministic") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-3.0) == "-3");
  CHECK(format_double(1e-10) == "1e-10");
}
