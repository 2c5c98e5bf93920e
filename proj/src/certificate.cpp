#include "twistcert/certificate.hpp"

namespace twistcert {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedFree: return "CertifiedFree";
    case Verdict::CertifiedNotFree: return "CertifiedNotFree";
    case Verdict::CertifiedRelPA: return "CertifiedRelPA";
    case Verdict::CertifiedNotRelPA: return "CertifiedNotRelPA";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(RelationName n) {
  switch (n) {
    case RelationName::Chain6: return "chain6";
    case RelationName::Braid: return "braid";
    case RelationName::Pow2Chain: return "pow2_chain";
    case RelationName::Pow3Chain: return "pow3_chain";
    case RelationName::Lantern: return "lantern";
    case RelationName::TbTaSquared: return "tbta_squared";
    case RelationName::Torus: return "torus";
  }
  return "?";
}

}  // namespace twistcert
