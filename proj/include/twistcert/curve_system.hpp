#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistcert/word.hpp"

namespace twistcert {

// A positive multi-twist generator: pairwise disjoint curves with positive
// twist powers.
struct CurveFamily {
  std::string name;
  std::vector<std::string> curves;
  std::vector<long long> powers;
};

// Named curve families plus the symmetric geometric intersection matrix
// over all curves, and optionally the absolute algebraic intersections.
// This is the sole input of every certifier.
class CurveSystem {
 public:
  CurveSystem() = default;
  CurveSystem(std::vector<CurveFamily> families,
              std::vector<std::vector<long long>> geom,
              std::optional<std::vector<std::vector<long long>>> alg_abs = std::nullopt);

  const std::vector<CurveFamily>& families() const { return families_; }
  std::size_t curve_count() const { return curve_names_.size(); }
  const std::vector<std::string>& curve_names() const { return curve_names_; }
  int family_of_curve(int curve) const { return curve_family_[curve]; }
  int curve_index(const std::string& name) const;  // -1 if unknown

  long long geom(int c1, int c2) const { return geom_[c1][c2]; }
  bool has_alg() const { return alg_.has_value(); }
  long long alg_abs(int c1, int c2) const { return (*alg_)[c1][c2]; }

  // Curve indices belonging to family f, and that curve's twist power.
  const std::vector<int>& family_curves(int f) const { return family_curves_[f]; }
  long long power(int curve) const { return powers_by_curve_[curve]; }

  // Sum of geom(c, c') over the curves c' of family f ("(x, a)" totals).
  long long geom_with_family(int curve, int f) const;
  // Total intersection between two families: sum over both curve lists.
  long long family_pair_total(int f1, int f2) const;

 private:
  std::vector<CurveFamily> families_;
  std::vector<std::string> curve_names_;
  std::vector<int> curve_family_;
  std::vector<std::vector<int>> family_curves_;
  std::vector<long long> powers_by_curve_;
  std::vector<std::vector<long long>> geom_;
  std::optional<std::vector<std::vector<long long>>> alg_;
};

// Checks every CurveSystem invariant; each violation names the invariant
// and the offending indices. Empty result means the system is valid.
std::vector<std::string> validate(const CurveSystem& sys);

// Curves occurring in the cyclically reduced core of w, partitioned into
// connected components of the geom > 0 graph.
struct Support {
  std::vector<int> curves;                    // sorted global indices
  std::vector<std::vector<int>> components;   // partition of `curves`
};
Support support(const TwistWord& w, const CurveSystem& sys);

// True iff the geom > 0 graph on all curves of the system is connected.
bool support_connected(const CurveSystem& sys);

}  // namespace twistcert
