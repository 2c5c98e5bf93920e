#include "twistcert/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "twistcert/sl2z.hpp"

namespace twistcert {

std::string to_string(WordKind k) {
  switch (k) {
    case WordKind::GeneratorPower: return "GeneratorPower";
    case WordKind::RelPA: return "RelPA";
    case WordKind::MultiTwist: return "MultiTwist";
    case WordKind::ReducibleNotRelPA: return "ReducibleNotRelPA";
    case WordKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

TwistWord repeated(const std::vector<Letter>& block, int times) {
  TwistWord w;
  for (int i = 0; i < times; ++i)
    for (const Letter& l : block) w.letters.push_back(l);
  return w;
}

std::vector<RelationInstance> build_catalog() {
  std::vector<RelationInstance> cat;

  RelationInstance chain6;
  chain6.name = RelationName::Chain6;
  chain6.lhs = repeated({{0, 1}, {1, 1}}, 6);
  chain6.rhs_curves = {{"delta", 1}};
  chain6.description = "(AB)^6 = T_delta";
  cat.push_back(std::move(chain6));

  RelationInstance braid;
  braid.name = RelationName::Braid;
  braid.lhs = TwistWord{{{0, 1}, {1, 1}, {0, 1}}};
  braid.rhs_word = TwistWord{{{1, 1}, {0, 1}, {1, 1}}};
  braid.description = "ABA = BAB";
  cat.push_back(std::move(braid));

  RelationInstance pow2;
  pow2.name = RelationName::Pow2Chain;
  pow2.lhs = repeated({{0, 1}, {1, 2}}, 4);
  pow2.rhs_word = repeated({{0, 1}, {1, 1}}, 6);
  pow2.description = "(AB^2)^4 = (AB)^6";
  cat.push_back(std::move(pow2));

  RelationInstance pow3;
  pow3.name = RelationName::Pow3Chain;
  pow3.lhs = repeated({{0, 1}, {1, 3}}, 3);
  pow3.rhs_word = repeated({{0, 1}, {1, 1}}, 6);
  pow3.description = "(AB^3)^3 = (AB)^6";
  cat.push_back(std::move(pow3));

  RelationInstance lantern;
  lantern.name = RelationName::Lantern;
  lantern.lhs = TwistWord{{{0, 1}, {1, 1}}};
  lantern.rhs_curves = {{"d1", 1}, {"d2", 1}, {"d3", 1}, {"d4", 1}, {"c", -1}};
  lantern.description = "AB = T_d1 T_d2 T_d3 T_d4 T_c^-1";
  cat.push_back(std::move(lantern));

  RelationInstance tbta;
  tbta.name = RelationName::TbTaSquared;
  tbta.lhs = TwistWord{{{1, 1}, {0, 1}, {1, 1}, {0, 1}}};
  tbta.rhs_curves = {{"d1", 1}, {"d2", 1}, {"gamma", -4}, {"gamma_prime", -4}};
  tbta.description = "(BA)^2 = T_d1 T_d2 T_gamma^-4 T_gamma_prime^-4";
  cat.push_back(std::move(tbta));

  RelationInstance torus;
  torus.name = RelationName::Torus;
  torus.lhs = repeated({{0, 1}, {1, 1}}, 4);
  torus.rhs_curves = {{"delta1", 1}, {"delta2", 1}};
  torus.description = "(AB)^4 = T_delta1 T_delta2, with A the two-component multi-twist";
  cat.push_back(std::move(torus));

  return cat;
}

}  // namespace

const std::vector<RelationInstance>& relation_catalog() {
  static const std::vector<RelationInstance> cat = build_catalog();
  return cat;
}

const RelationInstance& catalog_entry(RelationName name) {
  for (const RelationInstance& r : relation_catalog())
    if (r.name == name) return r;
  throw std::logic_error("catalog_entry: unreachable");
}

TwoGroupResult classify_two_group(long long ab, std::optional<long long> alg_abs,
                                  long long m, long long n) {
  if (ab < 1 || m < 1 || n < 1)
    throw std::invalid_argument("classify_two_group: ab, m, n must be >= 1");
  if (ab == 2 && alg_abs && *alg_abs != 0 && *alg_abs != 2)
    throw std::invalid_argument("classify_two_group: alg_abs must be 0 or 2 when ab = 2");

  const long long lo = std::min(m, n);
  const long long hi = std::max(m, n);
  const bool swapped = m > n;  // catalog entries are stated with the smaller power on A

  TwoGroupResult r;
  r.free = ab >= 2 || !(lo == 1 && hi <= 3);
  r.relpa = ab >= 3 || (ab == 2 && hi > 1) ||
            (ab == 1 && !(lo == 1 && hi <= 4) && !(lo == 2 && hi == 2));

  if (!r.free) {
    // ab = 1, {m,n} in {{1},{1,2},{1,3}}
    const RelationName names[] = {RelationName::Chain6, RelationName::Pow2Chain,
                                  RelationName::Pow3Chain};
    r.free_witness = catalog_entry(names[hi - 1]);
    if (swapped) r.note = "witness with generator roles swapped (A carries the larger power); ";
  }

  if (!r.relpa) {
    if (ab == 2) {
      if (!alg_abs) {
        r.note += "not relatively pseudo-Anosov in both algebraic cases: "
                  "lantern (alg 0) or tbta_squared (alg 2); no single witness without alg_abs";
      } else {
        r.relpa_witness = catalog_entry(*alg_abs == 0 ? RelationName::Lantern
                                                      : RelationName::TbTaSquared);
      }
    } else if (lo == 1 && hi <= 3) {
      // boundary-twist words: the chain relations exhibit the multi-twist
      r.relpa_witness = r.free_witness;
    } else {
      // {2,2}, {1,4}: T_a^m T_b^n has trace -2 in the torus model
      r.relpa_witness_word = TwistWord{{{0, 1}, {1, 1}}};
      r.note += "witness word evaluates to trace -2 (reducible, not a twist power)";
    }
  }
  return r;
}

namespace {

void require_two_single(const CurveSystem& sys) {
  if (sys.families().size() != 2 || sys.family_curves(0).size() != 1 ||
      sys.family_curves(1).size() != 1)
    throw std::invalid_argument("two single-curve families required");
}

// Folds the family twist powers into the word's exponents: the letter (f, e)
// is the e-th power of T^{m_f}, i.e. T^{m_f * e}.
TwistWord effective_word(const CurveSystem& sys, const TwistWord& w) {
  TwistWord out;
  for (const Letter& l : w.letters) {
    if (l.family < 0 || l.family >= static_cast<int>(sys.families().size()))
      throw std::invalid_argument("word references unknown family index");
    out.letters.push_back({l.family, l.exp * sys.power(sys.family_curves(l.family)[0])});
  }
  return free_reduce(out);
}

long long alg_required(const CurveSystem& sys) {
  if (!sys.has_alg())
    throw std::invalid_argument("alg_abs required when (a,b) = 2");
  const long long a = sys.alg_abs(sys.family_curves(0)[0], sys.family_curves(1)[0]);
  if (a != 0 && a != 2)
    throw std::invalid_argument("alg_abs must be 0 or 2 when (a,b) = 2");
  return a;
}

enum class CorePattern { SameSignAlternation, OppositeSignAlternation, Other };

// For an even-length cyclically reduced word with all exponents +-1: same
// sign everywhere means a power of (BA)^{+-1}, per-family constant but
// opposite signs means a power of (BA^-1)^{+-1}.
CorePattern core_pattern(const TwistWord& core) {
  if (core.letters.size() < 2 || core.letters.size() % 2 != 0) return CorePattern::Other;
  long long sign[2] = {0, 0};
  for (const Letter& l : core.letters) {
    if (l.exp != 1 && l.exp != -1) return CorePattern::Other;
    if (sign[l.family] == 0)
      sign[l.family] = l.exp;
    else if (sign[l.family] != l.exp)
      return CorePattern::Other;
  }
  return sign[0] == sign[1] ? CorePattern::SameSignAlternation
                            : CorePattern::OppositeSignAlternation;
}

}  // namespace

WordVerdict classify_word(const CurveSystem& sys, const TwistWord& w) {
  require_two_single(sys);
  if (w.empty()) throw std::invalid_argument("classify_word: empty word");

  const TwistWord core = cyclic_reduce(effective_word(sys, w)).core;

  WordVerdict v;
  if (core.letters.size() <= 1) {
    v.kind = WordKind::GeneratorPower;
    v.basis = "Def1.1";
    v.detail = core.empty() ? "word reduces to the identity"
                            : "cyclic core is a power of one generator";
    return v;
  }

  const long long ab = sys.family_pair_total(0, 1);
  if (ab == 0)
    throw std::invalid_argument("classify_word: disjoint generators ((a,b) = 0)");

  if (ab >= 3) {
    v.kind = WordKind::RelPA;
    v.basis = "Thm3.7(i)+Lem2.4";
    v.detail = "(a,b) >= 3: every cyclically reduced word is relatively pseudo-Anosov";
    return v;
  }

  if (ab == 2) {
    const long long alg = alg_required(sys);
    switch (core_pattern(core)) {
      case CorePattern::SameSignAlternation: {
        const long long p = static_cast<long long>(core.letters.size()) / 2;
        if (alg == 0) {
          v.kind = WordKind::MultiTwist;
          v.basis = "Prop4.1";
          v.relation = catalog_entry(RelationName::Lantern);
          v.detail = "(T_bT_a)^" + std::to_string(p) +
                     " is a multi-twist power via the lantern relation";
        } else if (p % 2 == 0) {
          v.kind = WordKind::MultiTwist;
          v.basis = "Prop5.1";
          v.relation = catalog_entry(RelationName::TbTaSquared);
          v.detail = "even power of T_bT_a, a multi-twist by the square relation";
        } else {
          v.kind = WordKind::ReducibleNotRelPA;
          v.basis = "Cor5.3";
          v.relation = catalog_entry(RelationName::TbTaSquared);
          v.detail = "odd power of T_bT_a: reducible but not pure; its square is the "
                     "cataloged multi-twist";
        }
        return v;
      }
      case CorePattern::OppositeSignAlternation:
        v.kind = WordKind::RelPA;
        v.basis = alg == 0 ? "Prop4.1" : "Prop5.2";
        v.detail = "power of T_bT_a^-1";
        return v;
      case CorePattern::Other:
        v.kind = WordKind::RelPA;
        v.basis = "Thm3.10";
        v.detail = "cyclic core is not a power of T_bT_a or T_bT_a^-1";
        return v;
    }
  }

  // (a,b) = 1: the torus model decides by trace.
  const sl2z::Mat2 mat = sl2z::eval_word(core, 1, 1);
  const Int tr = mat.trace();
  const Int atr = abs(tr);
  if (atr > 2) {
    v.kind = WordKind::RelPA;
    v.basis = "SL2Z";
    v.detail = "trace " + tr.get_str() + ": Anosov on the torus model";
  } else if (tr == 2) {
    v.kind = WordKind::MultiTwist;
    v.basis = "SL2Z";
    if (mat.is_identity()) {
      v.relation = catalog_entry(RelationName::Chain6);
      v.detail = "identity matrix: central power of the boundary twist";
    } else {
      v.detail = "trace 2 parabolic: a conjugate twist power (no catalog relation applies)";
    }
  } else if (tr == -2) {
    v.kind = WordKind::ReducibleNotRelPA;
    v.basis = "SL2Z";
    v.detail = "trace -2: reducible, not a twist power";
  } else {
    v.kind = WordKind::ReducibleNotRelPA;
    v.basis = "SL2Z";
    v.detail = "trace " + tr.get_str() + ": periodic on the torus model";
  }
  return v;
}

RatioCheck ratio_propagation_check(const CurveSystem& sys, const TwistWord& w) {
  require_two_single(sys);
  if (sys.family_pair_total(0, 1) != 2)
    throw std::invalid_argument("ratio_propagation_check: (a,b) = 2 required");
  if (!is_cyclically_reduced(w))
    throw std::invalid_argument("ratio_propagation_check: word must be cyclically reduced");

  const TwistWord eff = effective_word(sys, w);
  const std::size_t len = eff.letters.size();
  if (len < 2) return RatioCheck::Inconclusive;

  // Starts in N_{a,1} or N_{b,1} keep |exponents| growing structurally; the
  // contested start is the equality locus Y, walked here in application
  // order (rightmost letter first), cyclically, with the two escape rules:
  //   - a letter with |exponent| >= 2 jumps from p to at least 3p,
  //   - the sandwich T_c^e ... T_c^-e two letters apart realizes the
  //     conjugate twist T_{T_c^e(other)} whose self-pairing 4 forces the
  //     3p..5p growth step.
  std::vector<Letter> app(eff.letters.rbegin(), eff.letters.rend());
  for (std::size_t i = 0; i < len + 2; ++i) {
    const Letter& cur = app[i % len];
    if (cur.exp >= 2 || cur.exp <= -2) return RatioCheck::Verified;
    if (i >= 2) {
      const Letter& prev2 = app[(i - 2) % len];
      if (cur.family == prev2.family && cur.exp == -prev2.exp) return RatioCheck::Verified;
    }
  }
  return RatioCheck::Inconclusive;
}

LanternLikeAnswer lantern_like_query(long long ab, std::optional<long long> alg_abs) {
  if (ab < 1) throw std::invalid_argument("lantern_like_query: ab must be >= 1");
  LanternLikeAnswer ans;
  if (ab == 2) {
    if (!alg_abs) throw std::invalid_argument("lantern_like_query: alg_abs required for ab = 2");
    if (*alg_abs == 0)
      ans.relations.push_back(catalog_entry(RelationName::Lantern));
    else if (*alg_abs == 2)
      ans.relations.push_back(catalog_entry(RelationName::TbTaSquared));
    else
      throw std::invalid_argument("lantern_like_query: alg_abs must be 0 or 2 for ab = 2");
  } else if (ab == 1) {
    ans.reason = "RHS multi-twist has < 3 components";
  } else {
    ans.reason = "every nontrivial word is relatively pseudo-Anosov (Thm3.7), "
                 "never a multi-twist";
  }
  return ans;
}

bool check_conjugation_symmetry(const RelationInstance& rel) {
  if (rel.name != RelationName::TbTaSquared)
    throw std::invalid_argument("check_conjugation_symmetry: only defined for tbta_squared");
  std::optional<long long> g, gp;
  for (const auto& [name, e] : rel.rhs_curves) {
    if (name == "gamma") g = e;
    if (name == "gamma_prime") gp = e;
  }
  if (!g || !gp)
    throw std::invalid_argument("check_conjugation_symmetry: gamma / gamma_prime labels missing");
  return *g == *gp;
}

std::optional<bool> relation_holds_in_sl2z(const RelationInstance& rel) {
  switch (rel.name) {
    case RelationName::Chain6:
      // the boundary twist is central and maps to the identity matrix
      return sl2z::eval_word(rel.lhs, 1, 1).is_identity();
    case RelationName::Braid:
    case RelationName::Pow2Chain:
    case RelationName::Pow3Chain:
      if (!rel.rhs_word) return false;
      return sl2z::eval_word(rel.lhs, 1, 1) == sl2z::eval_word(*rel.rhs_word, 1, 1);
    default:
      return std::nullopt;
  }
}

}  // namespace twistcert
