#pragma once

#include <string>
#include <vector>

#include "qfrob/quantize.hpp"
#include "qfrob/scalar.hpp"

namespace qfrob::io {

/// Sequence document: {"field": "Q" | "Q(q)", "values": [scalar strings],
/// "genus_offset": 0, "notes": [...]}. Scalars use the expression grammar.
struct SequenceDocument {
  FieldKind field = FieldKind::Rationals;
  std::vector<Scalar> values;
  long genus_offset = 0;
  std::vector<std::string> notes;
};

SequenceDocument parse_sequence(const std::string& json_text);
std::string to_json(const SequenceDocument& doc);

/// Algebra document: {"field": ..., "dim": n, "T": [n*n scalar strings,
/// row-major], "eps": [n], "eta": [n]}.
struct AlgebraDocument {
  FieldKind field = FieldKind::Rationals;
  std::size_t dim = 0;
  std::vector<Scalar> handle;  // row-major
  std::vector<Scalar> unit;
  std::vector<Scalar> counit;
};

AlgebraDocument parse_algebra(const std::string& json_text);
std::string to_json(const AlgebraDocument& doc);

template <ExactField F>
InvariantSequence<F> typed_sequence(const SequenceDocument& doc);

template <ExactField F>
AlmostFrobenius<F> typed_algebra(const AlgebraDocument& doc);

/// Deterministic report payload (no timestamps, stable key order), and its
/// inverse. Every payload written by the tool parses back to an identical
/// payload.
template <ExactField F>
std::string report_payload_json(const QuantizationOutcome<F>& outcome);

template <ExactField F>
QuantizationOutcome<F> report_payload_from_json(const std::string& json_text);

/// Full report document: a provenance header (tool, version, timestamp)
/// around the deterministic payload.
std::string wrap_report_document(const std::string& payload_json);
std::string payload_of_report_document(const std::string& document_json);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace qfrob::io
