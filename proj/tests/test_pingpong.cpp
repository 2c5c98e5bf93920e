#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "twistcert/pingpong.hpp"

using namespace twistcert;

namespace {

CurveSystem two_singles(long long ab, long long m, long long n,
                        std::optional<long long> alg = std::nullopt) {
  std::vector<CurveFamily> fams = {{"A", {"a"}, {m}}, {"B", {"b"}, {n}}};
  std::vector<std::vector<long long>> geom = {{0, ab}, {ab, 0}};
  std::optional<std::vector<std::vector<long long>>> algm;
  if (alg) algm = std::vector<std::vector<long long>>{{0, *alg}, {*alg, 0}};
  return CurveSystem(fams, geom, algm);
}

CurveSystem triple(long long g12, long long g13, long long g23,
                   std::vector<long long> powers = {1, 1, 1}) {
  std::vector<CurveFamily> fams = {{"A1", {"a1"}, {powers[0]}},
                                   {"A2", {"a2"}, {powers[1]}},
                                   {"A3", {"a3"}, {powers[2]}}};
  std::vector<std::vector<long long>> geom = {{0, g12, g13}, {g12, 0, g23}, {g13, g23, 0}};
  return CurveSystem(fams, geom);
}

}  // namespace

TEST_CASE("certify_free_two: theorem routes") {
  CHECK(certify_free_two(two_singles(2, 1, 1)).verdict == Verdict::CertifiedFree);
  {
    const auto c = certify_free_two(two_singles(1, 2, 2));
    CHECK(c.verdict == Verdict::CertifiedFree);
    CHECK(c.basis == "Thm3.2");
  }
  {
    const auto c = certify_free_two(two_singles(1, 1, 5));
    CHECK(c.verdict == Verdict::CertifiedFree);
    CHECK(c.basis == "Thm3.4");
  }
  {
    const auto c = certify_free_two(two_singles(1, 1, 3));
    CHECK(c.verdict == Verdict::CertifiedNotFree);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->name == RelationName::Pow3Chain);
  }
  CHECK_THROWS_AS(certify_free_two(two_singles(0, 1, 1)), std::invalid_argument);
}

TEST_CASE("certify_free_two: multi-curve families") {
  // {a1,a2} vs {b}: a2 disjoint from b, so the support is disconnected
  std::vector<CurveFamily> fams = {{"A", {"a1", "a2"}, {1, 1}}, {"B", {"b"}, {1}}};
  std::vector<std::vector<long long>> geom = {{0, 0, 2}, {0, 0, 0}, {2, 0, 0}};
  const auto c = certify_free_two(CurveSystem(fams, geom));
  CHECK(c.verdict == Verdict::Unknown);
  CHECK(c.note.find("disconnected") != std::string::npos);

  // both curves meet b twice: Thm3.2 applies
  std::vector<std::vector<long long>> geom2 = {{0, 0, 2}, {0, 0, 2}, {2, 2, 0}};
  const auto c2 = certify_free_two(CurveSystem(fams, geom2));
  CHECK(c2.verdict == Verdict::CertifiedFree);
  CHECK(c2.basis == "Thm3.2");
}

TEST_CASE("Thm3.2 monotonicity in the powers") {
  for (long long ab = 1; ab <= 3; ++ab)
    for (long long m = 1; m <= 4; ++m)
      for (long long n = 1; n <= 4; ++n) {
        if (certify_free_two(two_singles(ab, m, n)).basis != "Thm3.2") continue;
        CHECK(certify_free_two(two_singles(ab, m + 1, n)).verdict == Verdict::CertifiedFree);
        CHECK(certify_free_two(two_singles(ab, m, n + 1)).verdict == Verdict::CertifiedFree);
      }
}

TEST_CASE("certify_relpa_two: regimes and table fallback") {
  {
    const auto c = certify_relpa_two(two_singles(3, 1, 1));
    CHECK(c.verdict == Verdict::CertifiedRelPA);
    CHECK(c.basis == "Thm3.7(i)");
  }
  {
    const auto c = certify_relpa_two(two_singles(2, 1, 1, 0));
    CHECK(c.verdict == Verdict::CertifiedNotRelPA);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->name == RelationName::Lantern);
  }
  {
    const auto c = certify_relpa_two(two_singles(2, 1, 1, 2));
    CHECK(c.verdict == Verdict::CertifiedNotRelPA);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->name == RelationName::TbTaSquared);
  }
  {
    const auto c = certify_relpa_two(two_singles(1, 2, 2));
    CHECK(c.verdict == Verdict::CertifiedNotRelPA);
    CHECK(c.witness_word.has_value());
  }
}

TEST_CASE("nu_bound on the triple-six system") {
  const auto sys = triple(6, 6, 6);
  const auto rep = nu_bound(sys, 0, 1, NSetParams{});
  CHECK(rep.max_value == 1);
  CHECK(rep.nu == 1);

  std::vector<Rat> values;
  for (const auto& e : rep.entries) values.push_back(e.value);
  for (const Rat& expect : {Rat(1, 3), Rat(1, 2), Rat(1), Rat(5, 6), Rat(2, 3)})
    CHECK(std::find(values.begin(), values.end(), expect) != values.end());
}

TEST_CASE("nu_bound scaling monotonicity") {
  const auto rep6 = nu_bound(triple(6, 6, 6), 0, 1, NSetParams{});
  const auto rep12 = nu_bound(triple(12, 12, 12), 0, 1, NSetParams{});
  CHECK(rep12.max_value == Rat(1, 2));
  CHECK(rep12.nu <= rep6.nu);
}

TEST_CASE("nu_bound rejects bad parameters") {
  NSetParams bad;
  bad.lambda = [](int, int, int) { return Rat(1); };
  CHECK_THROWS_AS(nu_bound(triple(6, 6, 6), 0, 1, bad), std::invalid_argument);
  NSetParams badmu;
  badmu.mu = [](int, int) { return Rat(-1); };
  CHECK_THROWS_AS(nu_bound(triple(6, 6, 6), 0, 1, badmu), std::invalid_argument);
}

TEST_CASE("certify_free_n") {
  {
    const auto c = certify_free_n(triple(6, 6, 6));
    CHECK(c.verdict == Verdict::CertifiedFree);
    CHECK(c.basis == "Thm7.2");
  }
  CHECK(certify_free_n(triple(5, 5, 5)).verdict == Verdict::Unknown);
  for (long long cc = 1; cc <= 10; ++cc)
    CHECK(certify_free_n(triple(cc, cc, cc * cc)).verdict == Verdict::Unknown);

  // powers route: nu = 1 everywhere for the triple-six system
  {
    const auto c = certify_free_n(triple(6, 6, 6), std::vector<long long>{2, 2, 2});
    CHECK(c.verdict == Verdict::CertifiedFree);
    CHECK(c.basis == "Lem7.1");
  }
  CHECK_THROWS_AS(certify_free_n(triple(0, 1, 1)), std::invalid_argument);
}
