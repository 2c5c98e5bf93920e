#include "twistcert/sl2z.hpp"

#include <array>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace twistcert::sl2z {

Mat2 Mat2::operator*(const Mat2& rhs) const {
  return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
          c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
}

bool Mat2::is_central() const {
  return b == 0 && c == 0 && a == d && (a == 1 || a == -1);
}

Mat2 eval_word(const TwistWord& w, long long m, long long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("eval_word: powers must be positive");
  Mat2 acc = Mat2::identity();
  for (const Letter& l : w.letters) {
    switch (l.family) {
      case 0: acc = acc * Mat2::twist_t(make_int(m) * make_int(l.exp)); break;
      case 1: acc = acc * Mat2::twist_s(make_int(n) * make_int(l.exp)); break;
      default: throw std::invalid_argument("eval_word: word must be over two generators");
    }
  }
  return acc;
}

MatClass classify_matrix(const Mat2& m) {
  if (m.det() != 1) throw std::invalid_argument("classify_matrix: determinant must be 1");
  const Int t = abs(m.trace());
  if (t < 2) return MatClass::Periodic;
  if (t == 2) return MatClass::Reducible;
  return MatClass::Anosov;
}

Int torus_intersection(const Int& p, const Int& q, const Int& r, const Int& s) {
  return abs(p * s - q * r);
}

namespace {

struct Mat2LL {
  long long a, b, c, d;
  long long max_abs() const {
    long long m = std::llabs(a);
    m = std::max(m, std::llabs(b));
    m = std::max(m, std::llabs(c));
    return std::max(m, std::llabs(d));
  }
};

Mat2LL mul(const Mat2LL& x, const Mat2LL& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

// Letter alphabet in canonical order A < A^-1 < B < B^-1.
struct Alphabet {
  std::array<Mat2LL, 4> mats;
  // inverse pairs: 0<->1, 2<->3
  static int inverse_of(int i) { return i ^ 1; }
};

// Depth-first over freely reduced words of exactly `len` letters, in
// canonical order; returns letters of the first identity word found.
bool dfs(const Alphabet& al, const std::vector<long long>& growth_bound,
         std::vector<int>& word, Mat2LL acc, int remaining) {
  if (remaining == 0)
    return acc.a == 1 && acc.b == 0 && acc.c == 0 && acc.d == 1 && !word.empty();
  // Each further letter can scale entries by at most the growth factor, so
  // a product too large to shrink back to the identity can be cut.
  if (acc.max_abs() > growth_bound[remaining]) return false;
  for (int letter = 0; letter < 4; ++letter) {
    if (!word.empty() && Alphabet::inverse_of(word.back()) == letter) continue;
    word.push_back(letter);
    if (dfs(al, growth_bound, word, mul(acc, al.mats[letter]), remaining - 1)) return true;
    word.pop_back();
  }
  return false;
}

TwistWord letters_to_word(const std::vector<int>& letters) {
  TwistWord w;
  for (int l : letters) {
    const int family = l < 2 ? 0 : 1;
    const long long e = (l % 2 == 0) ? 1 : -1;
    if (!w.letters.empty() && w.letters.back().family == family)
      w.letters.back().exp += e;
    else
      w.letters.push_back({family, e});
  }
  return w;
}

}  // namespace

std::optional<TwistWord> find_relation(long long m, long long n, int max_len) {
  if (m < 1 || n < 1 || max_len < 1)
    throw std::invalid_argument("find_relation: m, n, max_len must be positive");

  const long long mu = std::max(m, n);
  // Entry magnitudes stay below 2^62 for (2*mu)^max_len; beyond that the
  // fixed-width search would overflow.
  long double bound_check = 1;
  for (int i = 0; i < max_len; ++i) bound_check *= 2.0L * static_cast<long double>(mu);
  if (bound_check > 4.0e18L)
    throw std::invalid_argument("find_relation: search bound too large for exact arithmetic");

  Alphabet al;
  al.mats[0] = {1, m, 0, 1};
  al.mats[1] = {1, -m, 0, 1};
  al.mats[2] = {1, 0, -n, 1};
  al.mats[3] = {1, 0, n, 1};

  std::vector<long long> growth_bound(max_len + 1, 1);
  for (int r = 1; r <= max_len; ++r) {
    long double g = static_cast<long double>(growth_bound[r - 1]) * 2.0L * mu;
    growth_bound[r] = g > 9.0e18L ? (1LL << 62) : growth_bound[r - 1] * 2 * mu;
  }

  for (int len = 1; len <= max_len; ++len) {
    std::vector<int> letters;
    letters.reserve(len);
    if (dfs(al, growth_bound, letters, {1, 0, 0, 1}, len)) {
      TwistWord w = letters_to_word(letters);
      if (!eval_word(w, m, n).is_identity())
        throw std::logic_error("find_relation: witness failed re-check");
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace twistcert::sl2z
