#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace twistcert {

// One syllable of a word in multi-twist generators: generator (family)
// index and a nonzero integer exponent.
struct Letter {
  int family = 0;
  long long exp = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Word in multi-twist generators, leftmost letter outermost. Under the
// right-to-left composition convention the last letter acts first.
struct TwistWord {
  std::vector<Letter> letters;

  TwistWord() = default;
  explicit TwistWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  TwistWord inverse() const;
  TwistWord concat(const TwistWord& rhs) const;

  friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

// Merges adjacent same-family letters and drops zero exponents until the
// word is freely reduced. Idempotent.
TwistWord free_reduce(const TwistWord& w);

bool is_freely_reduced(const TwistWord& w);
bool is_cyclically_reduced(const TwistWord& w);

// Splits a freely reduced w as conjugator * core * conjugator^-1 with the
// core cyclically reduced (distinct first/last families, or length <= 1).
struct CyclicReduction {
  TwistWord core;
  TwistWord conjugator;
};
CyclicReduction cyclic_reduce(const TwistWord& w);

}  // namespace twistcert
