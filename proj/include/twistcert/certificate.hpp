#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistcert/rational.hpp"
#include "twistcert/word.hpp"

namespace twistcert {

enum class Verdict {
  CertifiedFree,
  CertifiedNotFree,
  CertifiedRelPA,
  CertifiedNotRelPA,
  Unknown,
};

std::string to_string(Verdict v);

enum class RelationName {
  Chain6,        // (AB)^6 = T_delta, (a,b) = 1
  Braid,         // ABA = BAB, (a,b) = 1
  Pow2Chain,     // (AB^2)^4 = (AB)^6
  Pow3Chain,     // (AB^3)^3 = (AB)^6
  Lantern,       // AB = T_d1 T_d2 T_d3 T_d4 T_c^-1, (a,b) = 2, alg 0
  TbTaSquared,   // (BA)^2 = T_d1 T_d2 T_gamma^-4 T_gamma'^-4, (a,b) = 2, alg 2
  Torus,         // (T_a1 T_a2 T_b)^4 = T_delta1 T_delta2
};

std::string to_string(RelationName n);

// A cataloged relation: word side, and either a multi-twist side (named
// curves with exponents) or another word (for the word = word entries).
struct RelationInstance {
  RelationName name;
  TwistWord lhs;
  std::vector<std::pair<std::string, long long>> rhs_curves;
  std::optional<TwistWord> rhs_word;
  std::string description;
};

// The tool's only authoritative output: a verdict, the tag of the result it
// rests on, the exact parameters that were checked, and a witness when the
// verdict is negative.
struct Certificate {
  Verdict verdict = Verdict::Unknown;
  std::string basis;
  std::vector<std::pair<std::string, Rat>> parameters;
  std::optional<RelationInstance> witness;
  std::optional<TwistWord> witness_word;
  std::string note;
};

inline Certificate unknown_certificate(std::string note) {
  Certificate c;
  c.verdict = Verdict::Unknown;
  c.note = std::move(note);
  return c;
}

}  // namespace twistcert
