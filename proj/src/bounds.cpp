#include "twistcert/bounds.hpp"

#include <stdexcept>

namespace twistcert {

IntervalBound IntervalBound::exact_value(Rat v) {
  if (v < 0) throw std::invalid_argument("intersection numbers are nonnegative");
  return {v, v, true};
}

IntervalBound IntervalBound::enclosure(Rat lo, Rat hi) {
  if (lo < 0) lo = 0;
  if (lo > hi) throw std::invalid_argument("empty interval");
  const bool exact = lo == hi;
  return {std::move(lo), std::move(hi), exact};
}

IntervalBound twist_bound(long long n, long long xa, long long xb, long long ab) {
  if (n < 0 || xa < 0 || xb < 0 || ab < 0)
    throw std::invalid_argument("twist_bound: inputs must be nonnegative");
  const Rat rxb = make_rat(xb);
  if (n == 0) return IntervalBound::exact_value(rxb);
  const Rat center = make_rat(n) * make_rat(xa) * make_rat(ab);
  return IntervalBound::enclosure(center - rxb, center + rxb);
}

IntervalBound multitwist_bound(long long n, std::span<const MultiTwistTerm> terms,
                               long long xb) {
  if (xb < 0) throw std::invalid_argument("multitwist_bound: xb must be nonnegative");
  Rat s = 0;
  for (const MultiTwistTerm& t : terms) {
    if (t.m < 1) throw std::invalid_argument("multitwist_bound: powers must be positive");
    if (t.x_ai < 0 || t.ai_b < 0)
      throw std::invalid_argument("multitwist_bound: intersections must be nonnegative");
    s += make_rat(t.m) * make_rat(t.x_ai) * make_rat(t.ai_b);
  }
  const Rat rxb = make_rat(xb);
  if (n == 0) return IntervalBound::exact_value(rxb);
  const Rat center = make_rat(n < 0 ? -n : n) * s;
  return IntervalBound::enclosure(center - rxb, center + rxb);
}

IntervalBound PairState::family_total(const CurveSystem& sys, int family) const {
  Rat lo = 0, hi = 0;
  bool exact = true;
  for (int c : sys.family_curves(family)) {
    lo += by_curve[c].lo;
    hi += by_curve[c].hi;
    exact = exact && by_curve[c].exact;
  }
  return {std::move(lo), std::move(hi), exact};
}

PairState apply_letter(const CurveSystem& sys, const PairState& state, const Letter& l) {
  if (l.family < 0 || l.family >= static_cast<int>(sys.families().size()))
    throw std::invalid_argument("apply_letter: unknown family index");
  if (state.by_curve.size() != sys.curve_count())
    throw std::invalid_argument("apply_letter: state size mismatch");

  const std::vector<int>& twisted = sys.family_curves(l.family);
  const Rat abs_n = make_rat(l.exp < 0 ? -l.exp : l.exp);

  PairState next;
  next.by_curve.resize(sys.curve_count());
  for (std::size_t c = 0; c < sys.curve_count(); ++c) {
    if (sys.family_of_curve(static_cast<int>(c)) == l.family) {
      // Twist invariance: curves of the twisted family keep their values.
      next.by_curve[c] = state.by_curve[c];
      continue;
    }
    Rat s_lo = 0, s_hi = 0;
    for (int a : twisted) {
      const Rat w = make_rat(sys.power(a)) * make_rat(sys.geom(a, static_cast<int>(c)));
      s_lo += w * state.by_curve[a].lo;
      s_hi += w * state.by_curve[a].hi;
    }
    const IntervalBound& xb = state.by_curve[c];
    next.by_curve[c] = IntervalBound::enclosure(abs_n * s_lo - xb.hi, abs_n * s_hi + xb.hi);
  }
  return next;
}

std::vector<PairState> propagate(const CurveSystem& sys, const TwistWord& w,
                                 const PairState& seed) {
  for (const IntervalBound& b : seed.by_curve)
    if (!b.exact) throw std::invalid_argument("propagate: seed must be exact");
  std::vector<PairState> out;
  out.reserve(w.size() + 1);
  out.push_back(seed);
  // Rightmost letter acts first.
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.push_back(apply_letter(sys, out.back(), *it));
  return out;
}

TwoFamilyRegion nset_membership_two(const CurveSystem& sys, const PairState& state,
                                    const Rat& lambda) {
  if (lambda <= 0) throw std::invalid_argument("nset_membership_two: lambda must be positive");
  if (sys.families().size() != 2)
    throw std::invalid_argument("nset_membership_two: exactly two families required");
  const IntervalBound xa = state.family_total(sys, 0);
  const IntervalBound xb = state.family_total(sys, 1);
  if (xa.hi < lambda * xb.lo) return TwoFamilyRegion::InNa;
  if (lambda * xb.hi < xa.lo) return TwoFamilyRegion::InNb;
  if (lambda == 1 && xa.exact && xb.exact && xa.lo == xb.lo && xa.lo > 0)
    return TwoFamilyRegion::InY;
  return TwoFamilyRegion::Undetermined;
}

NMembership nset_membership_n(const CurveSystem& sys, const PairState& state,
                              int family_i, const NSetParams& params) {
  const int n = static_cast<int>(sys.families().size());
  if (n < 3) throw std::invalid_argument("nset_membership_n: at least three families required");
  for (int f = 0; f < n; ++f)
    if (sys.family_curves(f).size() != 1)
      throw std::invalid_argument("nset_membership_n: single-curve families required");
  auto curve = [&](int f) { return sys.family_curves(f)[0]; };
  const int i = family_i;

  bool all_in = true;
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    const Rat mu = params.mu(i, j);
    if (mu <= 0) throw std::invalid_argument("nset_membership_n: mu must be positive");
    // (x, a_i) < mu_ij (x, a_j)
    const IntervalBound& xi = state.by_curve[curve(i)];
    const IntervalBound& xj = state.by_curve[curve(j)];
    if (xi.lo >= mu * xj.hi) return NMembership::NotIn;
    if (!(xi.hi < mu * xj.lo)) all_in = false;
    for (int k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      const Rat lambda = params.lambda(i, j, k);
      if (lambda <= 1) throw std::invalid_argument("nset_membership_n: lambda must exceed 1");
      // (x, a_k) (a_i, a_j) < lambda_ijk (a_i, a_k) (x, a_j)
      const IntervalBound& xk = state.by_curve[curve(k)];
      const Rat gij = make_rat(sys.geom(curve(i), curve(j)));
      const Rat gik = make_rat(sys.geom(curve(i), curve(k)));
      if (xk.lo * gij >= lambda * gik * xj.hi) return NMembership::NotIn;
      if (!(xk.hi * gij < lambda * gik * xj.lo)) all_in = false;
    }
  }
  return all_in ? NMembership::In : NMembership::Undetermined;
}

}  // namespace twistcert
