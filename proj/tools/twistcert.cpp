#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "twistcert/bounds.hpp"
#include "twistcert/classify.hpp"
#include "twistcert/io.hpp"
#include "twistcert/pingpong.hpp"
#include "twistcert/sl2z.hpp"
#include "twistcert/traintrack.hpp"

namespace {

using twistcert::io::json;

std::vector<std::string> family_names(const twistcert::CurveSystem& sys) {
  std::vector<std::string> names;
  for (const auto& f : sys.families()) names.push_back(f.name);
  return names;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

twistcert::NSetParams params_override(const std::string& lambda, const std::string& mu) {
  twistcert::NSetParams p;
  if (!lambda.empty()) {
    const twistcert::Rat l = twistcert::parse_rat(lambda);
    p.lambda = [l](int, int, int) { return l; };
  }
  if (!mu.empty()) {
    const twistcert::Rat m = twistcert::parse_rat(mu);
    p.mu = [m](int i, int j) { return i < j ? m : twistcert::Rat(1) / m; };
  }
  return p;
}

twistcert::PairState seed_state(const twistcert::CurveSystem& sys,
                                const std::vector<long long>& values) {
  twistcert::PairState st;
  for (long long v : values)
    st.by_curve.push_back(twistcert::IntervalBound::exact_value(twistcert::make_rat(v)));
  return st;
}

std::vector<long long> parse_seed_flag(const twistcert::CurveSystem& sys,
                                       const std::string& text) {
  std::vector<long long> out(sys.curve_count(), 0);
  std::vector<bool> set(sys.curve_count(), false);
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string entry = text.substr(pos, comma - pos);
    const auto eq = entry.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--seed: expected curve=value entries");
    const std::string curve = entry.substr(0, eq);
    const int c = sys.curve_index(curve);
    if (c < 0) throw std::invalid_argument("--seed: unknown curve '" + curve + "'");
    out[c] = std::stoll(entry.substr(eq + 1));
    if (out[c] < 0) throw std::invalid_argument("--seed: values must be nonnegative");
    set[c] = true;
    pos = comma + 1;
  }
  for (std::size_t c = 0; c < sys.curve_count(); ++c)
    if (!set[c])
      throw std::invalid_argument("--seed: missing value for curve '" +
                                  sys.curve_names()[c] + "'");
  return out;
}

int word_verdict_exit(twistcert::WordKind k) {
  return k == twistcert::WordKind::Unknown ? 20 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twist-cert: exact certification for positive multi-twist groups"};
  app.require_subcommand(1);

  std::string input_path, word_text, lambda_flag, mu_flag, seed_flag;
  long long m_flag = 1, n_flag = 1;
  int max_len = 16;

  auto* certify_free = app.add_subcommand("certify-free", "freeness certificate for a system");
  certify_free->add_option("input", input_path)->required();

  auto* certify_relpa =
      app.add_subcommand("certify-relpa", "relative pseudo-Anosov certificate");
  certify_relpa->add_option("input", input_path)->required();

  auto* classify_word_cmd = app.add_subcommand("classify-word", "classify a word in two twists");
  classify_word_cmd->add_option("input", input_path)->required();
  classify_word_cmd->add_option("--word", word_text)->required();

  app.add_subcommand("relations-list", "print the relation catalog");

  app.add_subcommand("relations-check", "verify the catalog in the supporting models");

  auto* sl2z_classify = app.add_subcommand("sl2z-classify", "trace classification of a word");
  sl2z_classify->add_option("--word", word_text)->required();
  sl2z_classify->add_option("--m", m_flag);
  sl2z_classify->add_option("--n", n_flag);

  auto* sl2z_search = app.add_subcommand("sl2z-search", "shortest identity word search");
  sl2z_search->add_option("--m", m_flag);
  sl2z_search->add_option("--n", n_flag);
  sl2z_search->add_option("--max-len", max_len);

  auto* tt = app.add_subcommand("traintrack-analyze", "analyze a word on a chart");
  tt->add_option("input", input_path)->required();
  tt->add_option("--word", word_text)->required();

  auto* bounds = app.add_subcommand("bounds-propagate", "interval propagation along a word");
  bounds->add_option("input", input_path)->required();
  bounds->add_option("--word", word_text)->required();
  bounds->add_option("--seed", seed_flag, "curve=value,... (overrides the file's seed)");

  certify_free->add_option("--lambda", lambda_flag);
  certify_free->add_option("--mu", mu_flag);

  CLI11_PARSE(app, argc, argv);

  try {
    if (certify_free->parsed() || certify_relpa->parsed()) {
      const twistcert::CurveSystem sys = twistcert::io::load_system(input_path);
      twistcert::Certificate cert;
      if (certify_relpa->parsed()) {
        cert = twistcert::certify_relpa_two(sys);
      } else if (sys.families().size() == 2) {
        cert = twistcert::certify_free_two(sys);
      } else {
        cert = twistcert::certify_free_n(sys, std::nullopt,
                                         params_override(lambda_flag, mu_flag));
      }
      emit(twistcert::io::certificate_to_json(cert));
      return twistcert::io::exit_code(cert.verdict);
    }

    if (classify_word_cmd->parsed()) {
      const twistcert::CurveSystem sys = twistcert::io::load_system(input_path);
      const auto names = family_names(sys);
      const twistcert::TwistWord w = twistcert::io::parse_word(word_text, names);
      if (w.empty()) throw std::invalid_argument("word reduces to the empty word");
      const twistcert::WordVerdict v = twistcert::classify_word(sys, w);
      emit(twistcert::io::word_verdict_to_json(v, names));
      return word_verdict_exit(v.kind);
    }

    if (app.get_subcommand("relations-list")->parsed()) {
      json arr = json::array();
      for (const auto& rel : twistcert::relation_catalog())
        arr.push_back(twistcert::io::relation_to_json(rel));
      emit(arr);
      return 0;
    }

    if (app.get_subcommand("relations-check")->parsed()) {
      json out = json::object();
      bool all_ok = true;
      for (const auto& rel : twistcert::relation_catalog()) {
        json entry;
        const auto model = twistcert::relation_holds_in_sl2z(rel);
        if (model) {
          entry["sl2z"] = *model;
          all_ok = all_ok && *model;
        } else {
          entry["sl2z"] = "not applicable";
        }
        if (rel.name == twistcert::RelationName::TbTaSquared) {
          const bool sym = twistcert::check_conjugation_symmetry(rel);
          entry["conjugation_symmetry"] = sym;
          all_ok = all_ok && sym;
        }
        out[twistcert::to_string(rel.name)] = std::move(entry);
      }
      emit(out);
      return all_ok ? 0 : 10;
    }

    if (sl2z_classify->parsed()) {
      const std::vector<std::string> names = {"A", "B"};
      const twistcert::TwistWord w = twistcert::io::parse_word(word_text, names);
      const twistcert::sl2z::Mat2 mat = twistcert::sl2z::eval_word(w, m_flag, n_flag);
      json j;
      j["matrix"] = {twistcert::io::int_to_json(mat.a), twistcert::io::int_to_json(mat.b),
                     twistcert::io::int_to_json(mat.c), twistcert::io::int_to_json(mat.d)};
      j["trace"] = twistcert::io::int_to_json(mat.trace());
      switch (twistcert::sl2z::classify_matrix(mat)) {
        case twistcert::sl2z::MatClass::Periodic: j["class"] = "Periodic"; break;
        case twistcert::sl2z::MatClass::Reducible: j["class"] = "Reducible"; break;
        case twistcert::sl2z::MatClass::Anosov: j["class"] = "Anosov"; break;
      }
      if (mat.is_central()) j["central"] = true;
      emit(j);
      return 0;
    }

    if (sl2z_search->parsed()) {
      const auto rel = twistcert::sl2z::find_relation(m_flag, n_flag, max_len);
      json j;
      if (rel) {
        j["found"] = true;
        j["word"] = twistcert::io::word_to_string(*rel, {"A", "B"});
        std::size_t len = 0;
        for (const auto& l : rel->letters) len += static_cast<std::size_t>(std::llabs(l.exp));
        j["length"] = len;
        emit(j);
        return 0;
      }
      j["found"] = false;
      j["max_len"] = max_len;
      emit(j);
      return 20;
    }

    if (tt->parsed()) {
      const twistcert::traintrack::Chart chart = twistcert::io::load_chart(input_path);
      std::vector<std::string> names;
      for (const auto& g : chart.generators) names.push_back(g.name);
      const twistcert::TwistWord w = twistcert::io::parse_word(word_text, names);
      const auto mat = twistcert::traintrack::compose(chart, w);
      const auto cp = twistcert::traintrack::char_poly(mat);
      const auto fac = twistcert::traintrack::factor_poly(cp);
      const auto cert = twistcert::traintrack::pa_certificate(mat);
      json j;
      json rows = json::array();
      for (const auto& row : mat) {
        json r = json::array();
        for (const auto& e : row) r.push_back(twistcert::io::int_to_json(e));
        rows.push_back(std::move(r));
      }
      j["matrix"] = std::move(rows);
      j["char_poly"] = twistcert::traintrack::to_string(cp);
      json factors = json::array();
      for (const auto& [f, mult] : fac.factors)
        factors.push_back(
            json{{"factor", twistcert::traintrack::to_string(f)}, {"multiplicity", mult}});
      j["factors"] = std::move(factors);
      j["certified"] = cert.certified;
      if (cert.certified) {
        j["dilatation"] = twistcert::io::quadratic_to_json(cert.dilatation);
        json ev = json::array();
        for (const auto& e : cert.eigenvector)
          ev.push_back(twistcert::io::quadratic_to_json(e));
        j["eigenvector"] = std::move(ev);
        j["primitivity_power"] = cert.primitivity_power;
      } else {
        j["reason"] = cert.reason;
      }
      emit(j);
      return cert.certified ? 0 : 10;
    }

    if (bounds->parsed()) {
      const json doc = twistcert::io::load_document(input_path);
      const twistcert::CurveSystem sys = twistcert::io::parse_system(doc);
      const auto names = family_names(sys);
      const twistcert::TwistWord w = twistcert::io::parse_word(word_text, names);
      std::vector<long long> seed;
      if (!seed_flag.empty())
        seed = parse_seed_flag(sys, seed_flag);
      else if (twistcert::io::document_has_seed(doc))
        seed = twistcert::io::parse_seed(doc, sys);
      else
        throw std::invalid_argument("no seed: give --seed or a \"seed\" object in the file");
      const auto states = twistcert::propagate(sys, w, seed_state(sys, seed));
      json arr = json::array();
      for (const auto& st : states) {
        json obj = json::object();
        for (std::size_t c = 0; c < sys.curve_count(); ++c) {
          obj[sys.curve_names()[c]] =
              json{{"lo", twistcert::rat_to_string(st.by_curve[c].lo)},
                   {"hi", twistcert::rat_to_string(st.by_curve[c].hi)},
                   {"exact", st.by_curve[c].exact}};
        }
        arr.push_back(std::move(obj));
      }
      emit(arr);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  return 1;
}
