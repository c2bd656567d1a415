#include "qfrob/io.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qfrob/parse.hpp"
#include "qfrob/version.hpp"

namespace qfrob::io {
namespace {

using Json = nlohmann::ordered_json;

Json parse_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("malformed JSON document");
  return j;
}

FieldKind field_of(const Json& j) {
  if (!j.contains("field") || !j.at("field").is_string())
    throw Error("document needs a \"field\" of \"Q\" or \"Q(q)\"");
  return field_kind_from_name(j.at("field").get<std::string>());
}

std::vector<Scalar> scalar_list(const Json& j, const char* key, FieldKind kind) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw Error(std::string("document needs an array \"") + key + "\"");
  std::vector<Scalar> out;
  out.reserve(j.at(key).size());
  for (const auto& v : j.at(key)) {
    if (!v.is_string()) throw Error(std::string("entries of \"") + key + "\" must be strings");
    out.push_back(Scalar::parse(v.get<std::string>(), kind));
  }
  return out;
}

Json strings_of(const std::vector<Scalar>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.to_string());
  return arr;
}

template <ExactField F>
Json strings_of(const std::vector<F>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.to_string());
  return arr;
}

template <ExactField F>
F parse_scalar_as(const std::string& text);

template <>
Rational parse_scalar_as<Rational>(const std::string& text) {
  return parse_rational(text);
}

template <>
RationalFunction parse_scalar_as<RationalFunction>(const std::string& text) {
  return parse_rational_function(text);
}

template <ExactField F>
F scalar_to(const Scalar& v) {
  if constexpr (std::is_same_v<F, Rational>) {
    return v.as_rational();
  } else {
    return v.as_rational_function();
  }
}

template <ExactField F>
std::vector<F> typed_list(const Json& arr) {
  std::vector<F> out;
  out.reserve(arr.size());
  for (const auto& v : arr) out.push_back(parse_scalar_as<F>(v.get<std::string>()));
  return out;
}

const char* source_name(HandleConditionSource s) {
  switch (s) {
    case HandleConditionSource::Checked: return "checked";
    case HandleConditionSource::ImpliedFalseByEuler: return "implied-by-euler";
    case HandleConditionSource::NotEvaluable: return "not-evaluable";
  }
  return "?";
}

HandleConditionSource source_from_name(const std::string& s) {
  if (s == "checked") return HandleConditionSource::Checked;
  if (s == "implied-by-euler") return HandleConditionSource::ImpliedFalseByEuler;
  if (s == "not-evaluable") return HandleConditionSource::NotEvaluable;
  throw Error("unknown condition_two_source '" + s + "'");
}

Monoidality verdict_from_name(const std::string& s) {
  if (s == "Monoidal") return Monoidality::Monoidal;
  if (s == "NotMonoidal") return Monoidality::NotMonoidal;
  if (s == "InconclusiveNotWide") return Monoidality::InconclusiveNotWide;
  throw Error("unknown verdict '" + s + "'");
}

QuantizationStatus status_from_name(const std::string& s) {
  if (s == "ok") return QuantizationStatus::Ok;
  if (s == "insufficient-data") return QuantizationStatus::InsufficientData;
  if (s == "inconsistent") return QuantizationStatus::Inconsistent;
  throw Error("unknown status '" + s + "'");
}

}  // namespace

SequenceDocument parse_sequence(const std::string& json_text) {
  Json j = parse_text(json_text);
  SequenceDocument doc;
  doc.field = field_of(j);
  doc.values = scalar_list(j, "values", doc.field);
  if (doc.values.empty()) throw Error("sequence document has no values");
  if (j.contains("genus_offset")) doc.genus_offset = j.at("genus_offset").get<long>();
  if (j.contains("notes"))
    for (const auto& n : j.at("notes")) doc.notes.push_back(n.get<std::string>());
  return doc;
}

std::string to_json(const SequenceDocument& doc) {
  Json j;
  j["field"] = field_kind_name(doc.field);
  j["values"] = strings_of(doc.values);
  j["genus_offset"] = doc.genus_offset;
  if (!doc.notes.empty()) j["notes"] = doc.notes;
  return j.dump(2) + "\n";
}

AlgebraDocument parse_algebra(const std::string& json_text) {
  Json j = parse_text(json_text);
  AlgebraDocument doc;
  doc.field = field_of(j);
  if (!j.contains("dim") || !j.at("dim").is_number_unsigned())
    throw Error("algebra document needs a nonnegative \"dim\"");
  doc.dim = j.at("dim").get<std::size_t>();
  doc.handle = scalar_list(j, "T", doc.field);
  doc.unit = scalar_list(j, "eps", doc.field);
  doc.counit = scalar_list(j, "eta", doc.field);
  if (doc.dim == 0 || doc.handle.size() != doc.dim * doc.dim ||
      doc.unit.size() != doc.dim || doc.counit.size() != doc.dim)
    throw Error("algebra document dimensions are inconsistent");
  return doc;
}

std::string to_json(const AlgebraDocument& doc) {
  Json j;
  j["field"] = field_kind_name(doc.field);
  j["dim"] = doc.dim;
  j["T"] = strings_of(doc.handle);
  j["eps"] = strings_of(doc.unit);
  j["eta"] = strings_of(doc.counit);
  return j.dump(2) + "\n";
}

template <ExactField F>
InvariantSequence<F> typed_sequence(const SequenceDocument& doc) {
  InvariantSequence<F> seq;
  seq.genus_offset = doc.genus_offset;
  seq.values.reserve(doc.values.size());
  for (const auto& v : doc.values) seq.values.push_back(scalar_to<F>(v));
  return seq;
}

template <ExactField F>
AlmostFrobenius<F> typed_algebra(const AlgebraDocument& doc) {
  AlmostFrobenius<F> alg;
  alg.dim = doc.dim;
  alg.handle = Matrix<F>(doc.dim, doc.dim);
  for (std::size_t r = 0; r < doc.dim; ++r)
    for (std::size_t c = 0; c < doc.dim; ++c)
      alg.handle.at(r, c) = scalar_to<F>(doc.handle[r * doc.dim + c]);
  for (const auto& v : doc.unit) alg.unit.push_back(scalar_to<F>(v));
  for (const auto& v : doc.counit) alg.counit.push_back(scalar_to<F>(v));
  return alg;
}

template <ExactField F>
std::string report_payload_json(const QuantizationOutcome<F>& outcome) {
  Json j;
  j["field"] = field_name<F>();
  j["status"] = to_string(outcome.status);
  if (!outcome.diagnostic.empty()) j["diagnostic"] = outcome.diagnostic;
  if (outcome.report) {
    const auto& r = *outcome.report;
    j["recurrence"] = Json{{"order", r.recurrence.order},
                           {"coefficients", strings_of(r.recurrence.coefficients)},
                           {"values_consumed", r.recurrence.values_consumed},
                           {"certified", r.recurrence.certified}};
    j["algebra"] = Json{{"dim", r.algebra.dim},
                        {"recurrence", strings_of(r.algebra.recurrence)},
                        {"eta_values", strings_of(r.algebra.eta_values)}};
    Json m;
    m["wide"] = r.monoidality.wide;
    m["gram_nondegenerate"] = r.monoidality.gram_nondegenerate;
    m["condition_two"] = r.monoidality.condition_two;
    m["euler_check"] = r.monoidality.euler_check;
    m["verdict"] = to_string(r.monoidality.verdict);
    m["condition_two_source"] = source_name(r.monoidality.condition_two_source);
    if (r.monoidality.witness) {
      m["witness"] = Json{{"basis_vector", strings_of(r.monoidality.witness->basis_vector)},
                          {"lhs", strings_of(r.monoidality.witness->lhs)},
                          {"rhs", strings_of(r.monoidality.witness->rhs)}};
    }
    j["monoidality"] = std::move(m);
    if (r.chi1) j["chi1"] = r.chi1->to_string();
    if (r.chi1_integer_subring) j["chi1_integer_subring"] = *r.chi1_integer_subring;
    if (r.closed_form) {
      Json blocks = Json::array();
      for (const auto& b : *r.closed_form) {
        blocks.push_back(Json{{"eigenvalue", b.eigenvalue.to_string()},
                              {"multiplicity", b.multiplicity},
                              {"coefficients", strings_of(b.coefficients)}});
      }
      j["closed_form"] = std::move(blocks);
    }
    j["predictions_from_genus"] = r.predictions_from_genus;
    j["predictions"] = strings_of(r.predictions);
    j["almost_quantizable"] = r.almost_quantizable;
    j["strongly_quantizable"] = r.strongly_quantizable;
  }
  return j.dump(2) + "\n";
}

template <ExactField F>
QuantizationOutcome<F> report_payload_from_json(const std::string& json_text) {
  Json j = parse_text(json_text);
  if (field_kind_from_name(j.at("field").get<std::string>()) !=
      (std::is_same_v<F, Rational> ? FieldKind::Rationals : FieldKind::RationalFunctions))
    throw Error("report field does not match the requested type");
  QuantizationOutcome<F> out;
  out.status = status_from_name(j.at("status").get<std::string>());
  if (j.contains("diagnostic")) out.diagnostic = j.at("diagnostic").get<std::string>();
  if (!j.contains("recurrence")) return out;

  QuantizationReport<F> r;
  const Json& rec = j.at("recurrence");
  r.recurrence.order = rec.at("order").get<std::size_t>();
  r.recurrence.coefficients = typed_list<F>(rec.at("coefficients"));
  r.recurrence.values_consumed = rec.at("values_consumed").get<std::size_t>();
  r.recurrence.certified = rec.at("certified").get<bool>();
  const Json& alg = j.at("algebra");
  r.algebra.dim = alg.at("dim").get<std::size_t>();
  r.algebra.recurrence = typed_list<F>(alg.at("recurrence"));
  r.algebra.eta_values = typed_list<F>(alg.at("eta_values"));
  const Json& m = j.at("monoidality");
  r.monoidality.wide = m.at("wide").get<bool>();
  r.monoidality.gram_nondegenerate = m.at("gram_nondegenerate").get<bool>();
  r.monoidality.condition_two = m.at("condition_two").get<bool>();
  r.monoidality.euler_check = m.at("euler_check").get<bool>();
  r.monoidality.verdict = verdict_from_name(m.at("verdict").get<std::string>());
  r.monoidality.condition_two_source =
      source_from_name(m.at("condition_two_source").get<std::string>());
  if (m.contains("witness")) {
    ConditionWitness<F> w;
    w.basis_vector = typed_list<F>(m.at("witness").at("basis_vector"));
    w.lhs = typed_list<F>(m.at("witness").at("lhs"));
    w.rhs = typed_list<F>(m.at("witness").at("rhs"));
    r.monoidality.witness = std::move(w);
  }
  if (j.contains("chi1")) r.chi1 = parse_scalar_as<F>(j.at("chi1").get<std::string>());
  if (j.contains("chi1_integer_subring"))
    r.chi1_integer_subring = j.at("chi1_integer_subring").get<bool>();
  if (j.contains("closed_form")) {
    ClosedForm<F> form;
    for (const auto& b : j.at("closed_form")) {
      ClosedFormBlock<F> block;
      block.eigenvalue = parse_scalar_as<F>(b.at("eigenvalue").get<std::string>());
      block.multiplicity = b.at("multiplicity").get<std::size_t>();
      block.coefficients = typed_list<F>(b.at("coefficients"));
      form.push_back(std::move(block));
    }
    r.closed_form = std::move(form);
  }
  r.predictions_from_genus = j.at("predictions_from_genus").get<long>();
  r.predictions = typed_list<F>(j.at("predictions"));
  r.almost_quantizable = j.at("almost_quantizable").get<bool>();
  r.strongly_quantizable = j.at("strongly_quantizable").get<bool>();
  out.report = std::move(r);
  return out;
}

std::string wrap_report_document(const std::string& payload_json) {
  Json payload = parse_text(payload_json);
  Json doc;
  std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  doc["provenance"] = Json{{"tool", "qfrob"}, {"version", kVersion}, {"generated_at", stamp}};
  doc["report"] = std::move(payload);
  return doc.dump(2) + "\n";
}

std::string payload_of_report_document(const std::string& document_json) {
  Json doc = parse_text(document_json);
  if (!doc.contains("report")) throw Error("not a report document (missing \"report\")");
  return doc.at("report").dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

template InvariantSequence<Rational> typed_sequence<Rational>(const SequenceDocument&);
template InvariantSequence<RationalFunction> typed_sequence<RationalFunction>(
    const SequenceDocument&);
template AlmostFrobenius<Rational> typed_algebra<Rational>(const AlgebraDocument&);
template AlmostFrobenius<RationalFunction> typed_algebra<RationalFunction>(
    const AlgebraDocument&);
template std::string report_payload_json<Rational>(const QuantizationOutcome<Rational>&);
template std::string report_payload_json<RationalFunction>(
    const QuantizationOutcome<RationalFunction>&);
template QuantizationOutcome<Rational> report_payload_from_json<Rational>(const std::string&);
template QuantizationOutcome<RationalFunction> report_payload_from_json<RationalFunction>(
    const std::string&);

}  // namespace qfrob::io
