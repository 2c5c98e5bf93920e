#pragma once

#include <optional>

#include "twistcert/rational.hpp"
#include "twistcert/word.hpp"

namespace twistcert::sl2z {

// Exact 2x2 integer matrix of determinant 1 (the one-holed torus model:
// generator A acts as t = [[1,1],[0,1]], B as s = [[1,0],[-1,1]]).
struct Mat2 {
  Int a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {}; }
  static Mat2 twist_t(const Int& k) { return {1, k, 0, 1}; }
  static Mat2 twist_s(const Int& k) { return {1, 0, -k, 1}; }

  Mat2 operator*(const Mat2& rhs) const;
  Int trace() const { return a + d; }
  Int det() const { return a * d - b * c; }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  bool is_central() const;  // +-identity

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// Substitutes t^m for generator 0 and s^n for generator 1 and multiplies in
// word order.
Mat2 eval_word(const TwistWord& w, long long m, long long n);

enum class MatClass { Periodic, Reducible, Anosov };

// Standard trace trichotomy: |tr| < 2 periodic, |tr| = 2 reducible, |tr| > 2
// Anosov.
MatClass classify_matrix(const Mat2& m);

// Canonical breadth-first search over freely reduced words in t^{+-m},
// s^{+-n} (letter order A < A^-1 < B < B^-1, exponent blocks expanded to
// single letters): the shortest, then lexicographically least, nonempty word
// evaluating to the identity, or nullopt within max_len.
std::optional<TwistWord> find_relation(long long m, long long n, int max_len);

// Geometric intersection of torus classes (p,q), (r,s): |ps - qr|.
Int torus_intersection(const Int& p, const Int& q, const Int& r, const Int& s);

}  // namespace twistcert::sl2z
