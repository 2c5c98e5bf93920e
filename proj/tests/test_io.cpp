#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistcert/io.hpp"
#include "twistcert/classify.hpp"
#include "twistcert/pingpong.hpp"

using namespace twistcert;
using io::json;

namespace {

const std::string kData = TWISTCERT_DATA_DIR;

}  // namespace

TEST_CASE("shipped system files parse and round-trip") {
  for (const char* name : {"lantern.json", "tbta.json", "chain.json", "torus_relation.json",
                           "triple_six.json"}) {
    const CurveSystem sys = io::load_system(kData + "/" + std::string(name));
    CHECK(validate(sys).empty());
    const CurveSystem again = io::parse_system(io::system_to_json(sys));
    CHECK(io::system_to_json(again) == io::system_to_json(sys));
  }
}

TEST_CASE("lantern file contents") {
  const CurveSystem sys = io::load_system(kData + "/lantern.json");
  REQUIRE(sys.families().size() == 2);
  CHECK(sys.family_pair_total(0, 1) == 2);
  REQUIRE(sys.has_alg());
  CHECK(sys.alg_abs(0, 1) == 0);
}

TEST_CASE("triple-six file feeds the n-generator certifier") {
  const CurveSystem sys = io::load_system(kData + "/triple_six.json");
  REQUIRE(sys.families().size() == 3);
  CHECK(certify_free_n(sys).verdict == Verdict::CertifiedFree);
}

TEST_CASE("parse_system diagnostics") {
  json doc = {{"families", json::array({json{{"name", "A"}, {"curves", {"a"}}, {"powers", {1}}},
                                        json{{"name", "B"}, {"curves", {"b"}}, {"powers", {1}}}})},
              {"geom", {{"a|b", -1}}}};
  try {
    io::parse_system(doc);
    FAIL("expected a diagnostic");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("nonnegative") != std::string::npos);
  }

  json bad_key = doc;
  bad_key["geom"] = {{"a-b", 1}};
  CHECK_THROWS_AS(static_cast<void>(io::parse_system(bad_key)), std::invalid_argument);

  json unknown = doc;
  unknown["geom"] = {{"a|z", 1}};
  try {
    io::parse_system(unknown);
    FAIL("expected a diagnostic");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("unknown curve") != std::string::npos);
  }
}

TEST_CASE("integers as strings beyond 53 bits") {
  json doc = {{"families", json::array({json{{"name", "A"}, {"curves", {"a"}}, {"powers", {1}}},
                                        json{{"name", "B"}, {"curves", {"b"}}, {"powers", {1}}}})},
              {"geom", {{"a|b", "36028797018963970"}}}};
  const CurveSystem sys = io::parse_system(doc);
  CHECK(sys.geom(0, 1) == 36028797018963970LL);
  CHECK(io::int_to_json(Int("36028797018963970")).is_string());
  CHECK(io::int_to_json(Int(42)) == json(42));
}

TEST_CASE("chart file") {
  const auto chart = io::load_chart(kData + "/chart_s5.json");
  CHECK(chart.branch_count == 3);
  REQUIRE(chart.generators.size() == 1);
  CHECK(chart.generators[0].matrix[1][1] == 4);
  CHECK(chart.generators[0].det_pm1);
}

TEST_CASE("parse_word") {
  const std::vector<std::string> names = {"A", "B"};
  CHECK(io::parse_word("B A", names) == TwistWord{{{1, 1}, {0, 1}}});
  CHECK(io::parse_word("B A B A", names).size() == 4);
  CHECK(io::parse_word("A^-1 A", names).empty());
  CHECK(io::parse_word("A^3 B^-2", names) == TwistWord{{{0, 3}, {1, -2}}});
  CHECK_THROWS_AS(static_cast<void>(io::parse_word("C", names)), std::invalid_argument);
  CHECK_THROWS_AS(static_cast<void>(io::parse_word("A^0", names)), std::invalid_argument);

  CHECK(io::word_to_string(TwistWord{{{0, 3}, {1, -2}, {0, 1}}}, names) == "A^3 B^-2 A");
}

TEST_CASE("certificate serialization is stable and float-free") {
  const CurveSystem sys = io::load_system(kData + "/triple_six.json");
  const Certificate cert = certify_free_n(sys);
  const json j = io::certificate_to_json(cert);
  CHECK(j["verdict"] == "CertifiedFree");
  CHECK(j["basis"] == "Thm7.2");
  const std::string text = j.dump();
  CHECK(text == io::certificate_to_json(certify_free_n(sys)).dump());
  CHECK(text.find("0.") == std::string::npos);
  CHECK(j["parameters"]["max_ratio"] == "1/6");
}

TEST_CASE("exit codes cover every verdict") {
  CHECK(io::exit_code(Verdict::CertifiedFree) == 0);
  CHECK(io::exit_code(Verdict::CertifiedRelPA) == 0);
  CHECK(io::exit_code(Verdict::CertifiedNotFree) == 10);
  CHECK(io::exit_code(Verdict::CertifiedNotRelPA) == 10);
  CHECK(io::exit_code(Verdict::Unknown) == 20);
}

TEST_CASE("relation serialization") {
  const json j = io::relation_to_json(catalog_entry(RelationName::Pow3Chain));
  CHECK(j["name"] == "pow3_chain");
  CHECK(j["description"] == "(AB^3)^3 = (AB)^6");
  CHECK(j.contains("rhs_word"));
}

TEST_CASE("seed parsing") {
  json doc = io::load_document(kData + "/chain.json");
  doc["seed"] = {{"a", 1}, {"b", 0}};
  const CurveSystem sys = io::parse_system(doc);
  CHECK(io::document_has_seed(doc));
  CHECK(io::parse_seed(doc, sys) == std::vector<long long>{1, 0});

  doc["seed"] = {{"a", 1}};
  CHECK_THROWS_AS(static_cast<void>(io::parse_seed(doc, sys)), std::invalid_argument);
}
