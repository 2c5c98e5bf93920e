#pragma once

#include <optional>
#include <vector>

#include "twistcert/bounds.hpp"
#include "twistcert/certificate.hpp"
#include "twistcert/curve_system.hpp"

namespace twistcert {

// One evaluated expression from the nu requirement: which of the five
// expression families it came from and at which auxiliary indices.
struct NuEntry {
  int expression_family;  // 1..5
  int k = -1;
  int l = -1;
  Rat value;
};

// All expressions for an ordered pair (i,j), their maximum, and the minimal
// integer nu with nu >= max.
struct NuBoundReport {
  int i = 0;
  int j = 0;
  std::vector<NuEntry> entries;
  Rat max_value;
  Int nu;
};

// Evaluates the twist-escape requirement T_{a_i}^{+-nu}(N_{a_j}) subset
// N_{a_i} for n >= 3 single-curve families with all pairwise intersections
// positive. Family-3 expressions are evaluated over all k, l outside {i, j}
// including k = l; the extra expressions only raise the max, so the reported
// nu is always sufficient.
NuBoundReport nu_bound(const CurveSystem& sys, int i, int j, const NSetParams& params);

// Freeness certifier for two positive multi-twists. Requires exactly two
// families with total intersection > 0.
Certificate certify_free_two(const CurveSystem& sys);

// Pure / relatively pseudo-Anosov certifier for two positive multi-twists.
Certificate certify_relpa_two(const CurveSystem& sys);

// Freeness certifier for n >= 3 single-curve families, all pairwise
// intersections positive. With all powers 1 checks the generalized ratio
// condition (a_i,a_k)/((a_i,a_j)(a_j,a_k)) <= 1/6; with larger powers checks
// powers_i >= max_j nu_{ij} at the default parameters mu = 1, lambda = 2.
Certificate certify_free_n(const CurveSystem& sys,
                           std::optional<std::vector<long long>> powers = std::nullopt,
                           const NSetParams& params = {});

}  // namespace twistcert
