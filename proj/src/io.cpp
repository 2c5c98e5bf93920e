#include "twistcert/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace twistcert::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument(path + ": " + what);
}

long long get_int(const json& v, const std::string& path) {
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_string()) {
    try {
      std::size_t pos = 0;
      const long long out = std::stoll(v.get<std::string>(), &pos);
      if (pos != v.get<std::string>().size()) fail(path, "not an integer");
      return out;
    } catch (const std::invalid_argument&) {
      fail(path, "not an integer");
    } catch (const std::out_of_range&) {
      fail(path, "integer out of range");
    }
  }
  fail(path, "expected an integer (number or decimal string)");
}

std::pair<std::string, std::string> split_pair_key(const std::string& key,
                                                  const std::string& path) {
  const auto bar = key.find('|');
  if (bar == std::string::npos || bar == 0 || bar + 1 == key.size())
    fail(path, "key '" + key + "' must be 'curveA|curveB'");
  return {key.substr(0, bar), key.substr(bar + 1)};
}

std::vector<std::vector<long long>> parse_pair_matrix(const json& obj,
                                                      const CurveSystem& shape,
                                                      const std::string& path) {
  const std::size_t n = shape.curve_count();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  if (!obj.is_object()) fail(path, "expected an object of 'curveA|curveB' keys");
  for (const auto& [key, val] : obj.items()) {
    const auto [c1, c2] = split_pair_key(key, path);
    const int i = shape.curve_index(c1);
    const int j = shape.curve_index(c2);
    if (i < 0) fail(path, "unknown curve '" + c1 + "'");
    if (j < 0) fail(path, "unknown curve '" + c2 + "'");
    const long long v = get_int(val, path + "." + key);
    m[i][j] = v;
    m[j][i] = v;
  }
  return m;
}

}  // namespace

CurveSystem parse_system(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("document: expected an object");
  if (!doc.contains("families") || !doc["families"].is_array())
    throw std::invalid_argument("families: expected an array");

  std::vector<CurveFamily> families;
  int fi = 0;
  for (const json& f : doc["families"]) {
    const std::string path = "families[" + std::to_string(fi++) + "]";
    CurveFamily fam;
    if (!f.is_object() || !f.contains("name") || !f["name"].is_string())
      fail(path, "expected an object with a string 'name'");
    fam.name = f["name"].get<std::string>();
    if (!f.contains("curves") || !f["curves"].is_array()) fail(path, "missing 'curves' array");
    for (const json& c : f["curves"]) {
      if (!c.is_string()) fail(path + ".curves", "expected strings");
      fam.curves.push_back(c.get<std::string>());
    }
    if (!f.contains("powers") || !f["powers"].is_array()) fail(path, "missing 'powers' array");
    for (const json& p : f["powers"]) fam.powers.push_back(get_int(p, path + ".powers"));
    if (fam.curves.size() != fam.powers.size())
      fail(path, "curves and powers must have the same length");
    families.push_back(std::move(fam));
  }

  // shape-only system to resolve curve names for the matrices
  const std::size_t total = [&] {
    std::size_t t = 0;
    for (const auto& f : families) t += f.curves.size();
    return t;
  }();
  const CurveSystem shape(families,
                          std::vector<std::vector<long long>>(
                              total, std::vector<long long>(total, 0)));

  if (!doc.contains("geom")) throw std::invalid_argument("geom: missing");
  auto geom = parse_pair_matrix(doc["geom"], shape, "geom");

  std::optional<std::vector<std::vector<long long>>> alg;
  if (doc.contains("alg_abs")) alg = parse_pair_matrix(doc["alg_abs"], shape, "alg_abs");

  CurveSystem sys(std::move(families), std::move(geom), std::move(alg));
  const auto violations = validate(sys);
  if (!violations.empty()) throw std::invalid_argument(violations.front());
  return sys;
}

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return doc;
}

CurveSystem load_system(const std::string& path) { return parse_system(load_document(path)); }

json system_to_json(const CurveSystem& sys) {
  json doc;
  doc["families"] = json::array();
  for (const CurveFamily& f : sys.families()) {
    json jf;
    jf["name"] = f.name;
    jf["curves"] = f.curves;
    jf["powers"] = f.powers;
    doc["families"].push_back(std::move(jf));
  }
  json geom = json::object();
  const int n = static_cast<int>(sys.curve_count());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      geom[sys.curve_names()[i] + "|" + sys.curve_names()[j]] = sys.geom(i, j);
  doc["geom"] = std::move(geom);
  if (sys.has_alg()) {
    json alg = json::object();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        alg[sys.curve_names()[i] + "|" + sys.curve_names()[j]] = sys.alg_abs(i, j);
    doc["alg_abs"] = std::move(alg);
  }
  return doc;
}

bool document_has_seed(const json& doc) {
  return doc.is_object() && doc.contains("seed");
}

std::vector<long long> parse_seed(const json& doc, const CurveSystem& sys) {
  if (!document_has_seed(doc) || !doc["seed"].is_object())
    throw std::invalid_argument("seed: expected an object of curve: value entries");
  std::vector<long long> out(sys.curve_count(), 0);
  std::vector<bool> set(sys.curve_count(), false);
  for (const auto& [key, val] : doc["seed"].items()) {
    const int c = sys.curve_index(key);
    if (c < 0) throw std::invalid_argument("seed: unknown curve '" + key + "'");
    out[c] = get_int(val, "seed." + key);
    if (out[c] < 0) throw std::invalid_argument("seed: values must be nonnegative");
    set[c] = true;
  }
  for (std::size_t c = 0; c < sys.curve_count(); ++c)
    if (!set[c])
      throw std::invalid_argument("seed: missing value for curve '" + sys.curve_names()[c] + "'");
  return out;
}

traintrack::Chart parse_chart(const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("chart: expected an object");
  traintrack::Chart chart;
  if (!doc.contains("branch_count"))
    throw std::invalid_argument("branch_count: missing");
  chart.branch_count = static_cast<int>(get_int(doc["branch_count"], "branch_count"));
  if (!doc.contains("generators") || !doc["generators"].is_object())
    throw std::invalid_argument("generators: expected an object");
  for (const auto& [name, mat] : doc["generators"].items()) {
    traintrack::ChartGenerator g;
    g.name = name;
    if (!mat.is_array() ||
        static_cast<int>(mat.size()) != chart.branch_count * chart.branch_count)
      throw std::invalid_argument("generators." + name + ": expected " +
                                  std::to_string(chart.branch_count * chart.branch_count) +
                                  " row-major entries");
    g.matrix.assign(chart.branch_count, std::vector<Int>(chart.branch_count));
    for (int i = 0; i < chart.branch_count; ++i)
      for (int j = 0; j < chart.branch_count; ++j)
        g.matrix[i][j] = make_int(get_int(mat[i * chart.branch_count + j], "generators." + name));
    if (doc.contains("det_pm1") && doc["det_pm1"].contains(name))
      g.det_pm1 = doc["det_pm1"][name].get<bool>();
    chart.generators.push_back(std::move(g));
  }
  if (doc.contains("provenance") && doc["provenance"].is_string())
    chart.provenance = doc["provenance"].get<std::string>();
  const auto violations = traintrack::validate(chart);
  if (!violations.empty()) throw std::invalid_argument(violations.front());
  return chart;
}

traintrack::Chart load_chart(const std::string& path) { return parse_chart(load_document(path)); }

TwistWord parse_word(const std::string& text, const std::vector<std::string>& generator_names) {
  TwistWord w;
  std::istringstream in(text);
  std::string term;
  while (in >> term) {
    std::string name = term;
    long long exp = 1;
    const auto caret = term.find('^');
    if (caret != std::string::npos) {
      name = term.substr(0, caret);
      const std::string num = term.substr(caret + 1);
      try {
        std::size_t pos = 0;
        exp = std::stoll(num, &pos);
        if (pos != num.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("word: bad exponent in '" + term + "'");
      }
      if (exp == 0) throw std::invalid_argument("word: zero exponent in '" + term + "'");
    }
    int family = -1;
    for (std::size_t f = 0; f < generator_names.size(); ++f)
      if (generator_names[f] == name) family = static_cast<int>(f);
    if (family < 0) throw std::invalid_argument("word: unknown generator '" + name + "'");
    w.letters.push_back({family, exp});
  }
  return free_reduce(w);
}

std::string word_to_string(const TwistWord& w, const std::vector<std::string>& generator_names) {
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += " ";
    out += generator_names.at(static_cast<std::size_t>(l.family));
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

namespace {

json word_json(const TwistWord& w, const std::vector<std::string>& names) {
  json arr = json::array();
  for (const Letter& l : w.letters)
    arr.push_back(json::array({names.at(static_cast<std::size_t>(l.family)), l.exp}));
  return arr;
}

const std::vector<std::string> kGenericNames = {"A", "B"};

}  // namespace

json relation_to_json(const RelationInstance& rel) {
  json j;
  j["name"] = to_string(rel.name);
  j["lhs"] = word_json(rel.lhs, kGenericNames);
  json rhs = json::array();
  for (const auto& [curve, e] : rel.rhs_curves) rhs.push_back(json::array({curve, e}));
  j["rhs_curves"] = std::move(rhs);
  if (rel.rhs_word) j["rhs_word"] = word_json(*rel.rhs_word, kGenericNames);
  j["description"] = rel.description;
  return j;
}

json certificate_to_json(const Certificate& cert) {
  json j;
  j["verdict"] = to_string(cert.verdict);
  j["basis"] = cert.basis;
  json params = json::object();
  for (const auto& [name, value] : cert.parameters) params[name] = rat_to_string(value);
  j["parameters"] = std::move(params);
  if (cert.witness) j["witness"] = relation_to_json(*cert.witness);
  if (cert.witness_word) j["witness_word"] = word_json(*cert.witness_word, kGenericNames);
  if (!cert.note.empty()) j["note"] = cert.note;
  return j;
}

json word_verdict_to_json(const WordVerdict& v, const std::vector<std::string>&) {
  json j;
  j["kind"] = to_string(v.kind);
  j["basis"] = v.basis;
  if (v.relation) j["relation"] = relation_to_json(*v.relation);
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::CertifiedFree:
    case Verdict::CertifiedRelPA:
      return 0;
    case Verdict::CertifiedNotFree:
    case Verdict::CertifiedNotRelPA:
      return 10;
    case Verdict::Unknown:
      return 20;
  }
  return 20;
}

json int_to_json(const Int& v) {
  static const Int kSafe = Int(1) << 53;
  if (abs(v) < kSafe) return v.get_si();
  return v.get_str();
}

json quadratic_to_json(const traintrack::QuadraticNumber& q) {
  json j;
  j["a"] = rat_to_string(q.a);
  j["b"] = rat_to_string(q.b);
  j["d"] = q.d;
  return j;
}

}  // namespace twistcert::io
