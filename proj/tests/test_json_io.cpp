#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "golden/family_tables.hpp"
#include "gorenstein/json_io.hpp"
#include "test_support.hpp"

using namespace gorenstein;
using gorenstein::testing::gf;
using gorenstein::testing::qq;
using gorenstein::testing::random_form;

TEST_CASE("dual element round trip") {
  std::mt19937_64 rng(81);
  for (const Field& field : {qq(), gf()}) {
    const auto w = random_form<DualElement>(field, 4, rng);
    const Json j = to_json(w);
    CHECK(j["field"] == field.to_string());
    CHECK(j["degree"] == 4);
    CHECK(dual_from_json(j) == w);
    CHECK(dual_from_json(Json::parse(j.dump())) == w);
  }
  const Json fam = to_json(family_phi(2));
  CHECK(fam["coeffs"]["1,1,1"] == "6");
  CHECK(fam["coeffs"]["2,1,0"] == "3");
  CHECK_FALSE(fam["coeffs"].contains("3,0,0"));
}

TEST_CASE("malformed dual elements") {
  CHECK_THROWS_AS(dual_from_json(Json::parse(R"({"degree": 2, "coeffs": {}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(dual_from_json(Json::parse(R"({"field": "Q", "degree": -1, "coeffs": {}})")),
                  std::invalid_argument);
  CHECK_THROWS(dual_from_json(Json::parse(R"({"field": "Q", "degree": 2, "coeffs": {"1,1,1": "1"}})")));
  CHECK_THROWS(dual_from_json(Json::parse(R"({"field": "Fp:10", "degree": 1, "coeffs": {}})")));
}

TEST_CASE("matrix text") {
  const FieldMatrix p_inv = golden::constant_table(golden::kN2PInverse);
  const Json j = to_json(p_inv);
  CHECK(j[0][0] == "-1/2");
  CHECK(field_matrix_from_json(qq(), j) == p_inv);
  const PolyMatrix c2 = golden::polynomial_table(golden::kN2C2, 2);
  const Json jc = to_json(c2);
  CHECK(jc[0][1] == "(-1/6)x^2 + (1/6)xz + (-1/6)z^2");
  CHECK(jc[0][0] == "0");
  CHECK(poly_matrix_from_json(qq(), 2, jc) == c2);
}

TEST_CASE("cleared denominators") {
  const Json c = cleared_json(golden::constant_table(golden::kN4PInverse));
  CHECK(c["factor"] == "1/70");
  CHECK(c["entries"][0][0] == "-35");
  const Json d = cleared_json(golden::polynomial_table(golden::kN4C2, 2));
  CHECK(d["factor"] == "1/70");
  CHECK(d["entries"][0][1] == "(-10)x^2 + (15)xz + (-10)z^2");
  const Json a = cleared_json(golden::constant_table(golden::kN4APrime));
  CHECK(a["factor"] == "1/2");
  CHECK(cleared_json(golden::constant_table(golden::kN2P))["factor"] == "1");
}

TEST_CASE("resolution report") {
  const DualElement phi = family_phi(2);
  const auto lin = build_linear_presentation(phi, 2);
  const auto quad = build_quadratic_presentation(lin);
  const Json report = resolution_report(lin, quad);
  CHECK(report["n"] == 2);
  CHECK(report["field"] == "Q");
  CHECK(report["linear"]["linearly_presented"] == true);
  CHECK(report["linear"]["a_prime"] == Json::parse(R"([["0","6"],["-6","0"]])"));
  CHECK(report["linear"]["betti_shape"] == Json::parse("[[0,1],[2,5],[3,5],[5,1]]"));
  CHECK(report["quadratic"]["status"] == "presented");
  CHECK(report["quadratic"]["betti_shape"] == Json::parse("[[0,1],[2,3],[4,3],[6,1]]"));
  CHECK(report["quadratic"]["syzygies"] == to_json(golden::polynomial_table(golden::kN2C2, 2)));
  CHECK(report.dump() == resolution_report(lin, quad).dump());

  const Json cleared = resolution_report(lin, quad, {.clear_denominators = true});
  CHECK(cleared["quadratic"]["syzygies"]["factor"] == "1/6");

  const auto singular = build_linear_presentation(DualElement(qq(), 3), 2);
  const Json sr = resolution_report(singular, std::nullopt);
  CHECK(sr["linear"]["linearly_presented"] == false);
  CHECK_FALSE(sr["linear"].contains("syzygies"));
  CHECK_FALSE(sr.contains("quadratic"));
}

TEST_CASE("summary and Lefschetz output") {
  const auto summary = summarize_ideal(family_phi(2));
  const Json s = to_json(summary, false);
  CHECK(s["hilbert_function"] == Json::parse("[1,3,3,1]"));
  CHECK(s["min_generators"] == Json::parse("[0,0,3,0,0]"));
  CHECK_FALSE(s.contains("kernel_bases"));
  CHECK(to_json(summary, true)["kernel_bases"][2].size() == 3);

  const Json w = to_json(wlp_test(family_phi(2), variable(qq(), 0)));
  CHECK(w["lefschetz"] == true);
  CHECK(w["matrix"] == to_json(golden::constant_table(golden::kN2P)));
}

TEST_CASE("file round trip") {
  const std::string path = "test_json_io_phi.json";
  const DualElement phi = family_phi(3);
  write_json_file(path, to_json(phi));
  CHECK(read_dual_file(path) == phi);
  std::remove(path.c_str());
  CHECK_THROWS(read_dual_file("does/not/exist.json"));
}
