#include "twistcert/word.hpp"

#include <algorithm>

namespace twistcert {

TwistWord TwistWord::inverse() const {
  TwistWord out;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.letters.push_back({it->family, -it->exp});
  return out;
}

TwistWord TwistWord::concat(const TwistWord& rhs) const {
  TwistWord out = *this;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

TwistWord free_reduce(const TwistWord& w) {
  std::vector<Letter> stack;
  for (const Letter& l : w.letters) {
    if (l.exp == 0) continue;
    if (!stack.empty() && stack.back().family == l.family) {
      stack.back().exp += l.exp;
      if (stack.back().exp == 0) stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return TwistWord{std::move(stack)};
}

bool is_freely_reduced(const TwistWord& w) {
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (w.letters[i].exp == 0) return false;
    if (i > 0 && w.letters[i - 1].family == w.letters[i].family) return false;
  }
  return true;
}

bool is_cyclically_reduced(const TwistWord& w) {
  if (!is_freely_reduced(w)) return false;
  if (w.letters.size() <= 1) return true;
  return w.letters.front().family != w.letters.back().family;
}

CyclicReduction cyclic_reduce(const TwistWord& w) {
  CyclicReduction out;
  std::vector<Letter> core = free_reduce(w).letters;
  std::vector<Letter>& conj = out.conjugator.letters;
  auto sgn = [](long long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };

  while (core.size() >= 2 && core.front().family == core.back().family) {
    Letter& first = core.front();
    Letter& last = core.back();
    long long s;
    if (sgn(first.exp) != sgn(last.exp)) {
      // Opposite signs: peel only the part that cancels across the ends.
      s = (std::abs(first.exp) <= std::abs(last.exp)) ? first.exp : -last.exp;
    } else {
      s = first.exp;
    }
    conj.push_back({first.family, s});
    first.exp -= s;
    last.exp += s;
    if (core.back().exp == 0) core.pop_back();
    if (!core.empty() && core.front().exp == 0) core.erase(core.begin());
  }
  out.core = TwistWord{std::move(core)};
  return out;
}

}  // namespace twistcert
