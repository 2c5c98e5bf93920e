// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "twistcert/bounds.hpp"
#include "twistcert/classify.hpp"
#include "twistcert/io.hpp"
#include "twistcert/pingpong.hpp"
#include "twistcert/sl2z.hpp"
#include "twistcert/traintrack.hpp"

using namespace twistcert;

namespace {

int g_failures = 0;

class Criterion {
 public:
  explicit Criterion(int number) : number_(number), start_(clock::now()) {}

  void fail(const std::string& why) {
    if (!failed_) first_reason_ = why;
    failed_ = true;
  }

  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }

  void finish(long long budget_ms) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        clock::now() - start_)
                        .count();
    if (ms > budget_ms) fail("exceeded time budget (" + std::to_string(ms) + " ms)");
    if (failed_) {
      ++g_failures;
      std::cout << "criterion " << number_ << ": FAIL — " << first_reason_ << "\n";
    } else {
      std::cout << "criterion " << number_ << ": PASS (" << ms << " ms)\n";
    }
  }

 private:
  using clock = std::chrono::steady_clock;
  int number_;
  clock::time_point start_;
  bool failed_ = false;
  std::string first_reason_;
};

TwistWord W(std::initializer_list<Letter> ls) { return TwistWord{std::vector<Letter>(ls)}; }

TwistWord power(const TwistWord& block, int times) {
  TwistWord w;
  for (int i = 0; i < times; ++i)
    for (const Letter& l : block.letters) w.letters.push_back(l);
  return w;
}

CurveSystem two_singles(long long ab, std::optional<long long> alg, long long m, long long n) {
  std::vector<CurveFamily> fams = {{"A", {"a"}, {m}}, {"B", {"b"}, {n}}};
  std::vector<std::vector<long long>> geom = {{0, ab}, {ab, 0}};
  std::optional<std::vector<std::vector<long long>>> algm;
  if (alg) algm = std::vector<std::vector<long long>>{{0, *alg}, {*alg, 0}};
  return CurveSystem(fams, geom, algm);
}

std::string word_len_key(long long m, long long n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

// ---- criterion 1: Thm 3.5 / 3.9 truth tables -------------------------------

void criterion1() {
  Criterion c(1);
  int cases = 0;
  for (long long ab = 1; ab <= 5; ++ab) {
    std::vector<std::optional<long long>> algs;
    if (ab == 2)
      algs = {std::optional<long long>(0), std::optional<long long>(2)};
    else
      algs = {std::nullopt};
    for (long long m = 1; m <= 5 && !false; ++m)
      for (long long n = 1; n <= 5; ++n)
        for (const auto& alg : algs) {
          ++cases;
          const long long lo = std::min(m, n), hi = std::max(m, n);
          const bool expect_free = ab >= 2 || !(lo == 1 && hi <= 3);
          const bool expect_relpa = ab >= 3 || (ab == 2 && hi > 1) ||
                                    (ab == 1 && !(lo == 1 && hi <= 4) &&
                                     !(lo == 2 && hi == 2));
          const auto sys = two_singles(ab, alg, m, n);
          const std::string tag = "ab=" + std::to_string(ab) + " m=" + std::to_string(m) +
                                  " n=" + std::to_string(n);

          const Certificate cf = certify_free_two(sys);
          if (cf.verdict == Verdict::Unknown) {
            c.fail("free verdict Unknown at " + tag);
            continue;
          }
          c.require((cf.verdict == Verdict::CertifiedFree) == expect_free,
                    "free table mismatch at " + tag);
          if (cf.verdict == Verdict::CertifiedNotFree)
            c.require(cf.witness.has_value(), "missing free witness at " + tag);

          const Certificate cr = certify_relpa_two(sys);
          if (cr.verdict == Verdict::Unknown) {
            c.fail("relpa verdict Unknown at " + tag);
            continue;
          }
          c.require((cr.verdict == Verdict::CertifiedRelPA) == expect_relpa,
                    "relpa table mismatch at " + tag);
          if (cr.verdict == Verdict::CertifiedNotRelPA) {
            c.require(cr.witness.has_value() || cr.witness_word.has_value(),
                      "missing relpa witness at " + tag);
            if (cr.witness_word)
              c.require(sl2z::eval_word(*cr.witness_word, m, n).trace() == -2,
                        "witness word is not trace -2 at " + tag);
            if (ab == 2 && cr.witness)
              c.require(cr.witness->name == (*alg == 0 ? RelationName::Lantern
                                                       : RelationName::TbTaSquared),
                        "wrong ab=2 witness at " + tag);
          }
        }
  }
  c.require(cases == 150, "unexpected case count");
  c.finish(1000);
}

// ---- criterion 2: SL(2,Z) relation suite -----------------------------------

void criterion2() {
  Criterion c(2);
  c.require(sl2z::eval_word(power(W({{0, 1}, {1, 1}}), 6), 1, 1).is_identity(),
            "(ts)^6 != I");
  c.require(sl2z::eval_word(power(W({{0, 1}, {1, 2}}), 4), 1, 1).is_identity(),
            "(ts^2)^4 != I");
  c.require(sl2z::eval_word(power(W({{0, 1}, {1, 3}}), 3), 1, 1).is_identity(),
            "(ts^3)^3 != I");
  const sl2z::Mat2 q{0, 1, -1, 0};
  c.require(sl2z::eval_word(W({{0, 1}, {1, 1}, {0, 1}}), 1, 1) == q, "tst != q");
  c.require(sl2z::eval_word(W({{1, 1}, {0, 1}, {1, 1}}), 1, 1) == q, "sts != q");
  c.require(sl2z::eval_word(W({{0, 2}, {1, 2}}), 1, 1).trace() == -2, "tr(t^2 s^2) != -2");
  c.require(sl2z::eval_word(W({{0, 1}, {1, 4}}), 1, 1).trace() == -2, "tr(t s^4) != -2");
  c.require(sl2z::eval_word(W({{0, 4}, {1, 1}}), 1, 1).trace() == -2, "tr(t^4 s) != -2");
  c.finish(1000);
}

// ---- criterion 3: BFS oracle concordance -----------------------------------

void criterion3() {
  Criterion c(3);
  struct Found {
    long long m, n;
    std::size_t length;
  };
  // (1,1) at 6: the braid relator t s t s^-1 t^-1 s^-1.
  // (1,3) at 6: (ts^3)^3 = I since ts^3 has trace -1, hence order 3.
  const Found expected[] = {{1, 1, 6}, {1, 2, 8}, {1, 3, 6}};
  for (const Found& f : expected) {
    const auto rel = sl2z::find_relation(f.m, f.n, 16);
    if (!rel) {
      c.fail("no identity word found for " + word_len_key(f.m, f.n));
      continue;
    }
    std::size_t len = 0;
    for (const Letter& l : rel->letters) len += static_cast<std::size_t>(std::llabs(l.exp));
    c.require(len == f.length, "wrong length for " + word_len_key(f.m, f.n) + ": got " +
                                   std::to_string(len));
    c.require(sl2z::eval_word(*rel, f.m, f.n).is_identity(),
              "found word does not evaluate to the identity");
  }
  const std::pair<long long, long long> empty_cases[] = {{2, 2}, {1, 4}, {1, 5}};
  for (const auto& [m, n] : empty_cases)
    c.require(!sl2z::find_relation(m, n, 16).has_value(),
              "unexpected identity word for " + word_len_key(m, n));
  c.finish(30000);
}

// ---- criterion 4: train-track fixture --------------------------------------

void criterion4() {
  Criterion c(4);
  const traintrack::IntMatrix fixture = {{2, 3, 3}, {1, 4, 3}, {1, 1, 1}};
  const auto fac = traintrack::factor_poly(traintrack::char_poly(fixture));
  bool lin = false, quad = false;
  for (const auto& [f, mult] : fac.factors) {
    if (f.coeffs == std::vector<Int>{-1, 1} && mult == 1) lin = true;
    if (f.coeffs == std::vector<Int>{-1, -6, 1} && mult == 1) quad = true;
  }
  c.require(lin && quad && fac.factors.size() == 2,
            "char poly is not (x-1)(x^2-6x-1)");

  const traintrack::QuadraticNumber lam{Rat(3), Rat(1), 10};
  const std::vector<traintrack::QuadraticNumber> v = {
      {Rat(2), Rat(1), 10}, {Rat(2), Rat(1), 10}, traintrack::QuadraticNumber::rational(2)};
  c.require(traintrack::verify_eigenpair(fixture, lam, v), "eigenpair check failed");

  const auto cert = traintrack::pa_certificate(fixture);
  c.require(cert.certified, "pa_certificate not certified: " + cert.reason);
  c.require(cert.certified && cert.dilatation == lam, "wrong dilatation");
  c.finish(1000);
}

// ---- criterion 5: word classifier ------------------------------------------

void criterion5() {
  Criterion c(5);
  const auto alg0 = two_singles(2, 0, 1, 1);
  const auto alg2 = two_singles(2, 2, 1, 1);

  {
    const auto v = classify_word(alg0, W({{0, 1}, {1, 1}}));
    c.require(v.kind == WordKind::MultiTwist && v.relation &&
                  v.relation->name == RelationName::Lantern,
              "example 1 (alg 0, T_aT_b)");
  }
  {
    const auto v = classify_word(alg2, power(W({{1, 1}, {0, 1}}), 2));
    c.require(v.kind == WordKind::MultiTwist && v.relation &&
                  v.relation->name == RelationName::TbTaSquared,
              "example 2 (alg 2, (T_bT_a)^2)");
  }
  c.require(classify_word(alg2, W({{1, 1}, {0, 1}})).kind == WordKind::ReducibleNotRelPA,
            "example 3 (alg 2, T_bT_a)");
  c.require(classify_word(alg0, W({{1, 1}, {0, -1}})).kind == WordKind::RelPA &&
                classify_word(alg2, W({{1, 1}, {0, -1}})).kind == WordKind::RelPA,
            "example 4 (T_bT_a^-1)");
  c.require(classify_word(alg2, W({{1, 1}, {0, 2}})).kind == WordKind::RelPA,
            "example 5 (T_bT_a^2)");

  // structural sweep: every freely reduced letter sequence of length <= 4
  // over {A, A^-1, B, B^-1}; RelPA expected unless the cyclic core is a
  // power of one generator, of BA, or of BA^-1
  auto run_sweep = [&](const CurveSystem& sys, long long alg) {
    std::vector<std::vector<int>> stack = {{}};
    while (!stack.empty()) {
      const std::vector<int> seq = stack.back();
      stack.pop_back();
      if (seq.size() < 4)
        for (int l = 0; l < 4; ++l) {
          if (!seq.empty() && (seq.back() ^ 1) == l) continue;
          auto next = seq;
          next.push_back(l);
          stack.push_back(std::move(next));
        }
      if (seq.empty()) continue;

      TwistWord w;
      for (int l : seq) w.letters.push_back({l < 2 ? 0 : 1, l % 2 == 0 ? 1LL : -1LL});
      const auto core = cyclic_reduce(free_reduce(w)).core;
      const auto v = classify_word(sys, w);
      c.require(v.kind != WordKind::Unknown, "Unknown verdict in the sweep");

      if (core.letters.size() <= 1) {
        c.require(v.kind == WordKind::GeneratorPower, "core <= 1 letter not GeneratorPower");
        continue;
      }
      bool is_ba = true, is_bainv = true;
      long long sign[2] = {0, 0};
      for (const Letter& l : core.letters) {
        if (l.exp != 1 && l.exp != -1) is_ba = is_bainv = false;
        if (sign[l.family] == 0)
          sign[l.family] = l.exp;
        else if (sign[l.family] != l.exp)
          is_ba = is_bainv = false;
      }
      if (core.letters.size() % 2 != 0) is_ba = is_bainv = false;
      if (is_ba && sign[0] != sign[1]) is_ba = false;
      if (is_bainv && sign[0] == sign[1]) is_bainv = false;

      if (!is_ba && !is_bainv) {
        c.require(v.kind == WordKind::RelPA, "non-exceptional core not RelPA");
      } else if (is_bainv) {
        c.require(v.kind == WordKind::RelPA, "power of BA^-1 not RelPA");
      } else {
        const long long p = static_cast<long long>(core.letters.size()) / 2;
        if (alg == 0 || p % 2 == 0)
          c.require(v.kind == WordKind::MultiTwist, "power of BA not MultiTwist");
        else
          c.require(v.kind == WordKind::ReducibleNotRelPA,
                    "odd power of BA (alg 2) not ReducibleNotRelPA");
      }
    }
  };
  run_sweep(alg0, 0);
  run_sweep(alg2, 2);
  c.finish(1000);
}

// ---- criterion 6: n >= 3 certifier -----------------------------------------

void criterion6() {
  Criterion c(6);
  auto triple = [](long long g12, long long g13, long long g23) {
    std::vector<CurveFamily> fams = {{"A1", {"a1"}, {1}}, {"A2", {"a2"}, {1}},
                                     {"A3", {"a3"}, {1}}};
    std::vector<std::vector<long long>> geom = {{0, g12, g13}, {g12, 0, g23}, {g13, g23, 0}};
    return CurveSystem(fams, geom);
  };

  const auto cert = certify_free_n(triple(6, 6, 6));
  c.require(cert.verdict == Verdict::CertifiedFree, "triple-six not certified free");
  bool max_ok = false;
  for (const auto& [name, value] : cert.parameters)
    if (name == "nu_max_expression") max_ok = value == 1;
  c.require(max_ok, "nu report max != 1");

  const auto rep = nu_bound(triple(6, 6, 6), 0, 1, NSetParams{});
  c.require(rep.max_value == 1 && rep.nu == 1, "nu_bound max/nu mismatch");
  for (const Rat& expect : {Rat(1, 3), Rat(1, 2), Rat(1), Rat(5, 6), Rat(2, 3)}) {
    bool found = false;
    for (const auto& e : rep.entries) found = found || e.value == expect;
    c.require(found, "missing nu expression value " + rat_to_string(expect));
  }

  for (long long cc = 1; cc <= 10; ++cc)
    c.require(certify_free_n(triple(cc, cc, cc * cc)).verdict == Verdict::Unknown,
              "(c, c, c^2) pattern unexpectedly certified at c=" + std::to_string(cc));
  c.finish(1000);
}

// ---- criterion 7: bounds soundness sweep -----------------------------------

struct TorusSeed {
  long long p, q;
  PairState state;
};

void sweep_rec(const CurveSystem& sys, const std::vector<std::array<long long, 2>>& vecs,
               const std::vector<PairState>& states, int next_family, int depth,
               Criterion& c, long long& checks) {
  if (depth == 6) return;
  for (int fam = 0; fam < 2; ++fam) {
    if (depth > 0 && fam != next_family) continue;
    for (long long e = -3; e <= 3; ++e) {
      if (e == 0) continue;
      const Letter letter{fam, e};
      std::vector<std::array<long long, 2>> nvecs(vecs.size());
      std::vector<PairState> nstates(states.size());
      for (std::size_t s = 0; s < vecs.size(); ++s) {
        // torus model: T_a = t, T_b = s acting on slope vectors
        const long long p = vecs[s][0], q = vecs[s][1];
        if (fam == 0)
          nvecs[s] = {p + e * q, q};
        else
          nvecs[s] = {p, q - e * p};
        nstates[s] = apply_letter(sys, states[s], letter);
        const Int true_a = sl2z::torus_intersection(make_int(nvecs[s][0]), make_int(nvecs[s][1]), 1, 0);
        const Int true_b = sl2z::torus_intersection(make_int(nvecs[s][0]), make_int(nvecs[s][1]), 0, 1);
        ++checks;
        if (!nstates[s].by_curve[0].contains(Rat(true_a)) ||
            !nstates[s].by_curve[1].contains(Rat(true_b))) {
          c.fail("interval violation at depth " + std::to_string(depth + 1));
          return;
        }
      }
      sweep_rec(sys, nvecs, nstates, 1 - fam, depth + 1, c, checks);
    }
  }
}

void criterion7() {
  Criterion c(7);
  const auto sys = two_singles(1, std::nullopt, 1, 1);
  std::vector<std::array<long long, 2>> vecs;
  std::vector<PairState> states;
  for (long long p = -5; p <= 5; ++p)
    for (long long q = -5; q <= 5; ++q) {
      if (p == 0 && q == 0) continue;
      vecs.push_back({p, q});
      PairState st;
      // (x, a) for a = (1,0) is |q|; (x, b) for b = (0,1) is |p|
      st.by_curve.push_back(IntervalBound::exact_value(make_rat(std::llabs(q))));
      st.by_curve.push_back(IntervalBound::exact_value(make_rat(std::llabs(p))));
      states.push_back(std::move(st));
    }
  long long checks = 0;
  sweep_rec(sys, vecs, states, -1, 0, c, checks);
  c.require(checks > 1000000, "sweep did not cover the expected volume");
  c.finish(60000);
}

// ---- criterion 8: lantern-like catalog -------------------------------------

void criterion8() {
  Criterion c(8);
  c.require(relation_catalog().size() == 7, "catalog does not have 7 entries");
  c.require(lantern_like_query(2, 0).relations.size() == 1 &&
                lantern_like_query(2, 0).relations[0].name == RelationName::Lantern,
            "(2, alg 0) query");
  c.require(lantern_like_query(2, 2).relations.size() == 1 &&
                lantern_like_query(2, 2).relations[0].name == RelationName::TbTaSquared,
            "(2, alg 2) query");
  c.require(lantern_like_query(1, std::nullopt).relations.empty(), "(1) query not empty");
  c.require(lantern_like_query(3, std::nullopt).relations.empty(), "(3) query not empty");
  c.require(lantern_like_query(5, std::nullopt).relations.empty(), "(5) query not empty");
  c.finish(1000);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
