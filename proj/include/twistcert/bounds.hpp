#pragma once

#include <functional>
#include <span>
#include <vector>

#include "twistcert/curve_system.hpp"
#include "twistcert/rational.hpp"

namespace twistcert {

// Certified enclosure of a geometric intersection number. Always 0 <= lo <= hi;
// exact means lo == hi is known to be the true value.
struct IntervalBound {
  Rat lo;
  Rat hi;
  bool exact = false;

  static IntervalBound exact_value(Rat v);
  // Clamps lo at 0; exact iff the clamped endpoints coincide.
  static IntervalBound enclosure(Rat lo, Rat hi);

  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  friend bool operator==(const IntervalBound&, const IntervalBound&) = default;
};

// Enclosure of (T_a^{+-n}(x), b) from (x,a), (x,b), (a,b); n >= 0 is the
// absolute twisting power. n = 0 yields the exact [xb, xb].
IntervalBound twist_bound(long long n, long long xa, long long xb, long long ab);

// One term of a positive multi-twist: twist power m, (x, a_i), (a_i, b).
struct MultiTwistTerm {
  long long m;
  long long x_ai;
  long long ai_b;
};

// Enclosure of (T_a^n(x), b) for the multi-twist with the given terms; the
// constant is |n| (not |n| - 2).
IntervalBound multitwist_bound(long long n, std::span<const MultiTwistTerm> terms,
                               long long xb);

// Per reference curve of the system: a certified interval for the
// intersection of the current image curve with it.
struct PairState {
  std::vector<IntervalBound> by_curve;  // indexed by global curve index

  // Family totals: sum of the per-curve enclosures over one family.
  IntervalBound family_total(const CurveSystem& sys, int family) const;
};

// One letter of interval propagation: curves of the twisted family keep
// their values exactly, every other reference curve gets the multi-twist
// enclosure evaluated over interval inputs.
PairState apply_letter(const CurveSystem& sys, const PairState& state, const Letter& l);

// Sound enclosures after each prefix of w (rightmost letter applied first);
// result[0] is the seed, result[k] the state after k letters.
std::vector<PairState> propagate(const CurveSystem& sys, const TwistWord& w,
                                 const PairState& seed);

enum class TwoFamilyRegion { InNa, InNb, InY, Undetermined };

// Membership in the two-generator ping-pong sets N_{a,lambda} ((x,a) <
// lambda (x,b)), N_{b,1/lambda}, or the equality locus Y (lambda = 1 only,
// decidable only from exact intervals).
TwoFamilyRegion nset_membership_two(const CurveSystem& sys, const PairState& state,
                                    const Rat& lambda);

// Parameters for the n-generator sets: mu_{ij} with mu_{ji} = 1/mu_{ij}, and
// lambda_{ijk} > 1. Defaults mu = 1, lambda = 2.
struct NSetParams {
  std::function<Rat(int, int)> mu = [](int, int) { return Rat(1); };
  std::function<Rat(int, int, int)> lambda = [](int, int, int) { return Rat(2); };
};

enum class NMembership { In, NotIn, Undetermined };

// Membership in N_{a_i, lambda, mu} for single-curve families a_1..a_n.
NMembership nset_membership_n(const CurveSystem& sys, const PairState& state,
                              int family_i, const NSetParams& params);

}  // namespace twistcert
