#include "twistcert/pingpong.hpp"

#include <stdexcept>
#include <string>

#include "twistcert/classify.hpp"

namespace twistcert {

namespace {

void require_n_single(const CurveSystem& sys) {
  const int n = static_cast<int>(sys.families().size());
  if (n < 3) throw std::invalid_argument("at least three families required");
  for (int f = 0; f < n; ++f)
    if (sys.family_curves(f).size() != 1)
      throw std::invalid_argument("single-curve families required");
  for (int f1 = 0; f1 < n; ++f1)
    for (int f2 = f1 + 1; f2 < n; ++f2)
      if (sys.family_pair_total(f1, f2) <= 0)
        throw std::invalid_argument("all pairwise intersections must be positive");
}

Rat check_mu(const NSetParams& p, int i, int j) {
  const Rat mu = p.mu(i, j);
  if (mu <= 0) throw std::invalid_argument("mu must be positive");
  if (p.mu(j, i) * mu != 1) throw std::invalid_argument("mu_ji must equal 1/mu_ij");
  return mu;
}

Rat check_lambda(const NSetParams& p, int i, int j, int k) {
  const Rat l = p.lambda(i, j, k);
  if (l <= 1) throw std::invalid_argument("lambda must exceed 1");
  return l;
}

}  // namespace

NuBoundReport nu_bound(const CurveSystem& sys, int i, int j, const NSetParams& params) {
  require_n_single(sys);
  const int n = static_cast<int>(sys.families().size());
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw std::invalid_argument("nu_bound: need distinct family indices");

  auto g = [&](int f1, int f2) { return make_rat(sys.family_pair_total(f1, f2)); };

  NuBoundReport rep;
  rep.i = i;
  rep.j = j;
  auto add = [&](int fam, int k, int l, Rat v) {
    rep.entries.push_back({fam, k, l, std::move(v)});
  };

  const Rat mu_ij = check_mu(params, i, j);

  add(1, -1, -1, Rat(2) / (mu_ij * g(i, j)));

  for (int k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    const Rat mu_ik = check_mu(params, i, k);
    const Rat l_jik = check_lambda(params, j, i, k);
    add(2, k, -1, 1 / (mu_ik * g(i, k)) + l_jik * g(j, k) / (g(i, j) * g(i, k)));
  }

  // Third family: k = l is admitted alongside k != l. The extra expressions
  // can only raise the max, so the reported nu stays sufficient.
  for (int k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    for (int l = 0; l < n; ++l) {
      if (l == i || l == j) continue;
      const Rat l_jil = check_lambda(params, j, i, l);
      const Rat l_ikl = check_lambda(params, i, k, l);
      const Rat l_jik = check_lambda(params, j, i, k);
      add(3, k, l,
          l_jil / (l_ikl - 1) * g(j, l) / (g(i, l) * g(j, i)) +
              l_ikl * l_jik / (l_ikl - 1) * g(j, k) / (g(j, i) * g(i, k)));
    }
  }

  for (int k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    const Rat l_ikj = check_lambda(params, i, k, j);
    const Rat l_jik = check_lambda(params, j, i, k);
    add(4, k, j,
        1 / ((l_ikj - 1) * mu_ij * g(i, j)) +
            l_ikj * l_jik / (l_ikj - 1) * g(j, k) / (g(j, i) * g(i, k)));
  }

  for (int l = 0; l < n; ++l) {
    if (l == i || l == j) continue;
    const Rat l_ijl = check_lambda(params, i, j, l);
    const Rat l_jil = check_lambda(params, j, i, l);
    add(5, j, l,
        l_ijl / ((l_ijl - 1) * mu_ij * g(i, j)) +
            l_jil / (l_ijl - 1) * g(j, l) / (g(j, i) * g(i, l)));
  }

  rep.max_value = rep.entries.front().value;
  for (const NuEntry& e : rep.entries)
    if (e.value > rep.max_value) rep.max_value = e.value;
  rep.nu = ceil_rat(rep.max_value);
  if (rep.nu < 1) rep.nu = 1;
  return rep;
}

namespace {

void require_two(const CurveSystem& sys) {
  if (sys.families().size() != 2)
    throw std::invalid_argument("exactly two families required");
  if (sys.family_pair_total(0, 1) <= 0)
    throw std::invalid_argument("(a,b) = 0: disjoint generators are outside the hypotheses");
}

// Every curve of family f meets the other family at least `threshold` times,
// counted with its twist power.
bool all_weighted_at_least(const CurveSystem& sys, int f, long long threshold) {
  const int other = 1 - f;
  for (int c : sys.family_curves(f))
    if (sys.power(c) * sys.geom_with_family(c, other) < threshold) return false;
  return true;
}

bool some_weighted_equal(const CurveSystem& sys, int f, long long value) {
  const int other = 1 - f;
  for (int c : sys.family_curves(f))
    if (sys.power(c) * sys.geom_with_family(c, other) == value) return true;
  return false;
}

bool some_weighted_at_most(const CurveSystem& sys, int f, long long value) {
  const int other = 1 - f;
  for (int c : sys.family_curves(f))
    if (sys.power(c) * sys.geom_with_family(c, other) <= value) return true;
  return false;
}

bool single_curve_pair(const CurveSystem& sys) {
  return sys.family_curves(0).size() == 1 && sys.family_curves(1).size() == 1;
}

Certificate from_two_group_free(const CurveSystem& sys) {
  const long long ab = sys.family_pair_total(0, 1);
  std::optional<long long> alg;
  if (sys.has_alg()) alg = sys.alg_abs(sys.family_curves(0)[0], sys.family_curves(1)[0]);
  const TwoGroupResult r = classify_two_group(ab, alg, sys.power(sys.family_curves(0)[0]),
                                              sys.power(sys.family_curves(1)[0]));
  Certificate c;
  c.verdict = r.free ? Verdict::CertifiedFree : Verdict::CertifiedNotFree;
  c.basis = "Thm3.5";
  c.witness = r.free_witness;
  c.note = r.note;
  return c;
}

Certificate from_two_group_relpa(const CurveSystem& sys) {
  const long long ab = sys.family_pair_total(0, 1);
  std::optional<long long> alg;
  if (sys.has_alg()) alg = sys.alg_abs(sys.family_curves(0)[0], sys.family_curves(1)[0]);
  const TwoGroupResult r = classify_two_group(ab, alg, sys.power(sys.family_curves(0)[0]),
                                              sys.power(sys.family_curves(1)[0]));
  Certificate c;
  c.verdict = r.relpa ? Verdict::CertifiedRelPA : Verdict::CertifiedNotRelPA;
  c.basis = "Thm3.9";
  c.witness = r.relpa_witness;
  c.witness_word = r.relpa_witness_word;
  c.note = r.note;
  return c;
}

}  // namespace

Certificate certify_free_two(const CurveSystem& sys) {
  require_two(sys);

  if (all_weighted_at_least(sys, 0, 2) && all_weighted_at_least(sys, 1, 2)) {
    Certificate c;
    c.verdict = Verdict::CertifiedFree;
    c.basis = "Thm3.2";
    return c;
  }

  if (support_connected(sys)) {
    const bool exceptional =
        (some_weighted_equal(sys, 0, 1) && some_weighted_at_most(sys, 1, 3)) ||
        (some_weighted_equal(sys, 1, 1) && some_weighted_at_most(sys, 0, 3));
    if (!exceptional) {
      Certificate c;
      c.verdict = Verdict::CertifiedFree;
      c.basis = "Thm3.4";
      return c;
    }
  }

  if (single_curve_pair(sys)) return from_two_group_free(sys);

  std::string note = "sufficient conditions not met";
  if (!support_connected(sys))
    note += "; support disconnected, consider certifying each component separately";
  return unknown_certificate(note);
}

Certificate certify_relpa_two(const CurveSystem& sys) {
  require_two(sys);

  struct Regime {
    long long ta, tb;
    const char* tag;
  };
  static const Regime regimes[] = {
      {2, 3, "Thm3.7(i)"}, {3, 2, "Thm3.7(ii)"}, {1, 5, "Thm3.7(iii)"}, {5, 1, "Thm3.7(iv)"}};
  for (const Regime& r : regimes) {
    if (all_weighted_at_least(sys, 0, r.ta) && all_weighted_at_least(sys, 1, r.tb)) {
      Certificate c;
      c.verdict = Verdict::CertifiedRelPA;
      c.basis = r.tag;
      return c;
    }
  }

  if (single_curve_pair(sys)) return from_two_group_relpa(sys);

  return unknown_certificate("none of the four regimes holds");
}

Certificate certify_free_n(const CurveSystem& sys, std::optional<std::vector<long long>> powers,
                           const NSetParams& params_in) {
  require_n_single(sys);
  const int n = static_cast<int>(sys.families().size());

  std::vector<long long> pw(n);
  if (powers) {
    if (static_cast<int>(powers->size()) != n)
      throw std::invalid_argument("certify_free_n: one power per family required");
    pw = *powers;
    for (long long p : pw)
      if (p < 1) throw std::invalid_argument("certify_free_n: powers must be positive");
  } else {
    for (int f = 0; f < n; ++f) pw[f] = sys.power(sys.family_curves(f)[0]);
  }

  auto g = [&](int f1, int f2) { return make_rat(sys.family_pair_total(f1, f2)); };

  bool all_one = true;
  for (long long p : pw) all_one = all_one && p == 1;

  // The nu report is informative in both routes.
  const NSetParams& defaults = params_in;
  Rat nu_max(0);
  std::vector<std::pair<std::string, Rat>> params;
  std::vector<Int> nu_required(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const NuBoundReport rep = nu_bound(sys, i, j, defaults);
      if (rep.max_value > nu_max) nu_max = rep.max_value;
      if (rep.nu > nu_required[i]) nu_required[i] = rep.nu;
      params.emplace_back("nu_" + sys.families()[i].name + "_" + sys.families()[j].name,
                          Rat(rep.nu));
    }
  }
  params.emplace_back("nu_max_expression", nu_max);

  if (all_one) {
    Rat worst(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (i == j || j == k || i == k) continue;
          const Rat ratio = g(i, k) / (g(i, j) * g(j, k));
          if (ratio > worst) worst = ratio;
        }
    params.emplace_back("max_ratio", worst);
    if (worst * 6 <= 1) {
      Certificate c;
      c.verdict = Verdict::CertifiedFree;
      c.basis = "Thm7.2";
      c.parameters = std::move(params);
      return c;
    }
    Certificate c = unknown_certificate("generalized ratio condition fails (needs <= 1/6)");
    c.parameters = std::move(params);
    return c;
  }

  bool ok = true;
  for (int i = 0; i < n; ++i) ok = ok && make_int(pw[i]) >= nu_required[i];
  if (ok) {
    Certificate c;
    c.verdict = Verdict::CertifiedFree;
    c.basis = "Lem7.1";
    c.parameters = std::move(params);
    return c;
  }
  Certificate c = unknown_certificate("some power is below the required nu bound");
  c.parameters = std::move(params);
  return c;
}

}  // namespace twistcert
