#include "twistcert/curve_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace twistcert {

CurveSystem::CurveSystem(std::vector<CurveFamily> families,
                         std::vector<std::vector<long long>> geom,
                         std::optional<std::vector<std::vector<long long>>> alg_abs)
    : families_(std::move(families)), geom_(std::move(geom)), alg_(std::move(alg_abs)) {
  family_curves_.resize(families_.size());
  for (std::size_t f = 0; f < families_.size(); ++f) {
    const CurveFamily& fam = families_[f];
    if (fam.curves.size() != fam.powers.size())
      throw std::invalid_argument("family '" + fam.name + "': curves/powers size mismatch");
    for (std::size_t c = 0; c < fam.curves.size(); ++c) {
      family_curves_[f].push_back(static_cast<int>(curve_names_.size()));
      curve_names_.push_back(fam.curves[c]);
      curve_family_.push_back(static_cast<int>(f));
      powers_by_curve_.push_back(fam.powers[c]);
    }
  }
  const std::size_t n = curve_names_.size();
  if (geom_.size() != n) throw std::invalid_argument("geom matrix size mismatch");
  for (const auto& row : geom_)
    if (row.size() != n) throw std::invalid_argument("geom matrix not square");
  if (alg_) {
    if (alg_->size() != n) throw std::invalid_argument("alg_abs matrix size mismatch");
    for (const auto& row : *alg_)
      if (row.size() != n) throw std::invalid_argument("alg_abs matrix not square");
  }
}

int CurveSystem::curve_index(const std::string& name) const {
  for (std::size_t i = 0; i < curve_names_.size(); ++i)
    if (curve_names_[i] == name) return static_cast<int>(i);
  return -1;
}

long long CurveSystem::geom_with_family(int curve, int f) const {
  long long total = 0;
  for (int c : family_curves_[f]) total += geom_[curve][c];
  return total;
}

long long CurveSystem::family_pair_total(int f1, int f2) const {
  long long total = 0;
  for (int c : family_curves_[f1]) total += geom_with_family(c, f2);
  return total;
}

std::vector<std::string> validate(const CurveSystem& sys) {
  std::vector<std::string> out;
  const auto n = static_cast<int>(sys.curve_count());
  auto name = [&](int c) { return sys.curve_names()[c]; };

  std::set<std::string> seen;
  for (const CurveFamily& fam : sys.families()) {
    for (const std::string& c : fam.curves)
      if (!seen.insert(c).second)
        out.push_back("duplicate curve identifier '" + c + "'");
    for (long long p : fam.powers)
      if (p < 1)
        out.push_back("nonpositive power in family '" + fam.name + "' (positive multi-twist)");
  }

  for (int i = 0; i < n; ++i) {
    if (sys.geom(i, i) != 0)
      out.push_back("geom diagonal violation at '" + name(i) + "'");
    for (int j = 0; j < n; ++j) {
      if (sys.geom(i, j) < 0)
        out.push_back("geom must be nonnegative at (" + name(i) + "," + name(j) + ")");
      if (j > i) {
        if (sys.geom(i, j) != sys.geom(j, i))
          out.push_back("geom symmetry violation at (" + name(i) + "," + name(j) + ")");
        if (sys.family_of_curve(i) == sys.family_of_curve(j) && sys.geom(i, j) != 0)
          out.push_back("same-family curves must be disjoint: (" + name(i) + "," + name(j) + ")");
        if (sys.has_alg()) {
          const long long g = sys.geom(i, j);
          const long long a = sys.alg_abs(i, j);
          if (a < 0 || a > g)
            out.push_back("alg_abs bound violation at (" + name(i) + "," + name(j) + ")");
          if (((g - a) % 2 + 2) % 2 != 0)
            out.push_back("alg_abs parity violation at (" + name(i) + "," + name(j) + ")");
          if (sys.alg_abs(i, j) != sys.alg_abs(j, i))
            out.push_back("alg_abs symmetry violation at (" + name(i) + "," + name(j) + ")");
        }
      }
    }
  }
  return out;
}

namespace {

// Connected components of the geom > 0 graph restricted to `curves`.
std::vector<std::vector<int>> components_of(const CurveSystem& sys,
                                            const std::vector<int>& curves) {
  std::vector<std::vector<int>> comps;
  std::set<int> pending(curves.begin(), curves.end());
  while (!pending.empty()) {
    std::vector<int> comp;
    std::vector<int> queue{*pending.begin()};
    pending.erase(pending.begin());
    while (!queue.empty()) {
      int c = queue.back();
      queue.pop_back();
      comp.push_back(c);
      for (auto it = pending.begin(); it != pending.end();) {
        if (sys.geom(c, *it) > 0) {
          queue.push_back(*it);
          it = pending.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace

Support support(const TwistWord& w, const CurveSystem& sys) {
  Support out;
  const TwistWord core = cyclic_reduce(w).core;
  std::set<int> curves;
  for (const Letter& l : core.letters) {
    if (l.family < 0 || l.family >= static_cast<int>(sys.families().size()))
      throw std::invalid_argument("word references unknown family index");
    for (int c : sys.family_curves(l.family)) curves.insert(c);
  }
  out.curves.assign(curves.begin(), curves.end());
  out.components = components_of(sys, out.curves);
  return out;
}

bool support_connected(const CurveSystem& sys) {
  std::vector<int> all(sys.curve_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  if (all.empty()) return true;
  return components_of(sys, all).size() == 1;
}

}  // namespace twistcert
