#pragma once

#include "qfrob/quantize.hpp"

namespace qfrob::sl2 {

/// Embedded virtual classes of the SL2(C) representation varieties over
/// closed orientable surfaces, genus 0 through 11, as elements of Q(q) with
/// q the class of the affine line. Genus 0 is 1 (the variety is a point);
/// genus 11 is derived once from the closed genus formula and cross-checked
/// against the recurrence.
const InvariantSequence<RationalFunction>& dataset();

/// The raw table entries for genus 0..10.
const std::vector<Polynomial>& table_rows();

/// Closed formula for the virtual class at genus g >= 1. The result is
/// asserted to land in Z[q]; NonPolynomialResultError otherwise.
Polynomial closed_genus_formula(unsigned genus);

/// Expected recurrence coefficients a_0..a_5 (a_i multiplies chi_{g+i}) in
/// companion order.
const std::vector<Polynomial>& expected_recurrence();

/// [SL2(C)] = q^3 - q. The extracted handle operator is the point-normalized
/// one; multiplying by this class recovers the unnormalized handle morphism.
Polynomial group_class();

struct PipelineResult {
  QuantizationReport<RationalFunction> report;   // predictions cover genus 0..max_genus
  Matrix<RationalFunction> rescaled_handle;      // (q^3 - q) * companion matrix
};

/// End-to-end reproduction: quantizes the dataset, asserts the recovered
/// order is 6 and the coefficients match the expected list, and cross-checks
/// every prediction for genus 1..max_genus against the closed formula.
/// Any mismatch throws CrossCheckError naming the first offending
/// coefficient or genus. Requires max_genus >= 12.
PipelineResult run_pipeline(unsigned max_genus);

}  // namespace qfrob::sl2

namespace qfrob {

/// The closed genus formula left Z[q]; indicates a wrong constant in the
/// formula rather than bad data.
class NonPolynomialResultError : public Error {
 public:
  explicit NonPolynomialResultError(const std::string& msg) : Error(msg) {}
};

}  // namespace qfrob
