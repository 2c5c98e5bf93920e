#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "twistcert/certificate.hpp"
#include "twistcert/classify.hpp"
#include "twistcert/curve_system.hpp"
#include "twistcert/traintrack.hpp"

namespace twistcert::io {

using json = nlohmann::ordered_json;

// Document schema:
//   { "families": [ { "name": str, "curves": [str], "powers": [int] } ],
//     "geom": { "curveA|curveB": int, ... },
//     "alg_abs": optional, same shape,
//     "seed": optional { curve: int, ... } }
// Integers may be JSON numbers or decimal strings (strings are required
// beyond 53-bit safety). Parse failures throw std::invalid_argument with a
// path into the document.
CurveSystem parse_system(const json& doc);
CurveSystem load_system(const std::string& path);
json load_document(const std::string& path);
json system_to_json(const CurveSystem& sys);

// Optional exact seed values from the document's "seed" object.
bool document_has_seed(const json& doc);
std::vector<long long> parse_seed(const json& doc, const CurveSystem& sys);

// Chart schema: { "branch_count": int, "generators": { name: [row-major
// ints] }, "det_pm1": optional { name: bool }, "provenance": str }.
traintrack::Chart parse_chart(const json& doc);
traintrack::Chart load_chart(const std::string& path);

// Word grammar: term+, term := NAME ('^' INTEGER)?, whitespace separated.
// Names resolve against the given generator list. Result is freely reduced.
TwistWord parse_word(const std::string& text, const std::vector<std::string>& generator_names);
std::string word_to_string(const TwistWord& w, const std::vector<std::string>& generator_names);

json relation_to_json(const RelationInstance& rel);
json certificate_to_json(const Certificate& cert);
json word_verdict_to_json(const WordVerdict& v, const std::vector<std::string>& generator_names);

// Exit-code contract: 0 certified positive, 10 certified negative,
// 20 Unknown (input errors are 1, handled by the CLI).
int exit_code(Verdict v);

// Integers emitted as JSON numbers while |v| < 2^53, decimal strings beyond.
json int_to_json(const Int& v);
json quadratic_to_json(const traintrack::QuadraticNumber& q);

}  // namespace twistcert::io
