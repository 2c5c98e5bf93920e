#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistcert/certificate.hpp"
#include "twistcert/curve_system.hpp"

namespace twistcert {

enum class WordKind { GeneratorPower, RelPA, MultiTwist, ReducibleNotRelPA, Unknown };

std::string to_string(WordKind k);

struct WordVerdict {
  WordKind kind = WordKind::Unknown;
  std::string basis;
  std::optional<RelationInstance> relation;  // always set for MultiTwist catalog cases
  std::string detail;
};

// Complete classification of <T_a^m, T_b^n> for single curves a, b with
// (a,b) = ab and optional |algebraic| intersection (required for the (a,b)=2
// witness choice).
struct TwoGroupResult {
  bool free = false;
  std::optional<RelationInstance> free_witness;
  bool relpa = false;
  std::optional<RelationInstance> relpa_witness;
  std::optional<TwistWord> relpa_witness_word;  // trace -2 words, in generator letters
  std::string note;
};
TwoGroupResult classify_two_group(long long ab, std::optional<long long> alg_abs,
                                  long long m, long long n);

// Word-level classifier over two single-curve families.
WordVerdict classify_word(const CurveSystem& sys, const TwistWord& w);

enum class RatioCheck { Verified, Inconclusive };

// Independent re-derivation of the (a,b) = 2 word verdict: simulates the
// interval argument over the states {N_{a,1}, N_{b,1}, Y}, chasing the
// equality branches and closing them with the conjugate-twist step that
// certifies the 3p..5p jump. Requires (a,b) = 2 and w cyclically reduced.
RatioCheck ratio_propagation_check(const CurveSystem& sys, const TwistWord& w);

// The seven cataloged relations (families A, B as generic generators).
const std::vector<RelationInstance>& relation_catalog();
const RelationInstance& catalog_entry(RelationName name);

// Which lantern-like relations a two-twist configuration supports, with the
// reason when there are none.
struct LanternLikeAnswer {
  std::vector<RelationInstance> relations;
  std::string reason;
};
LanternLikeAnswer lantern_like_query(long long ab, std::optional<long long> alg_abs);

// Symbolic consistency of the twice-punctured-torus relation: swapping the
// two interior curves (the word's action on the multi-twist side) must fix
// the exponent multiset. Only defined for TbTaSquared-shaped instances.
bool check_conjugation_symmetry(const RelationInstance& rel);

// Evaluates both sides of a relation in the integer-matrix model when that
// model supports it ((a,b) = 1 relations); nullopt when not applicable.
std::optional<bool> relation_holds_in_sl2z(const RelationInstance& rel);

}  // namespace twistcert
