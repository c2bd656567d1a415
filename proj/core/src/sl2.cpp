#include "qfrob/sl2.hpp"

#include "qfrob/parse.hpp"

namespace qfrob::sl2 {
namespace {

#include "sl2_table.inc"

Polynomial two_to(unsigned e) {
  return Polynomial::constant(Rational(pow(BigInt(2), e)));
}

}  // namespace

const std::vector<Polynomial>& table_rows() {
  static const std::vector<Polynomial> rows = [] {
    std::vector<Polynomial> out;
    out.reserve(11);
    for (const char* row : kTableRows) out.push_back(parse_polynomial(row));
    // Row sanity: genus 0 is a point, and the variety dimension fixes the
    // degree at 6g - 3 from genus 2 on.
    if (!out[0].is_one()) throw CrossCheckError("genus-0 entry must be 1");
    for (unsigned g = 2; g <= 10; ++g) {
      if (out[g].degree() != 6L * g - 3 || !out[g].leading().is_one())
        throw CrossCheckError("genus-" + std::to_string(g) +
                              " entry fails the dimension degree check");
    }
    return out;
  }();
  return rows;
}

const std::vector<Polynomial>& expected_recurrence() {
  static const std::vector<Polynomial> coeffs = [] {
    std::vector<Polynomial> out(6);
    for (std::size_t i = 0; i < 6; ++i) out[i] = parse_polynomial(kDisplayCoefficients[5 - i]);
    return out;
  }();
  return coeffs;
}

Polynomial closed_genus_formula(unsigned genus) {
  if (genus < 1) throw std::invalid_argument("closed_genus_formula needs genus >= 1");
  const unsigned e = 2 * genus - 1;
  const Polynomial q = Polynomial::variable();
  const Polynomial one = Polynomial::one();
  const Polynomial q_e = q.pow(e);
  const Polynomial q2m1_e = (q * q - one).pow(e);
  const Rational half(BigInt(1), BigInt(2));

  const Polynomial three = Polynomial::constant(Rational(3));
  Polynomial total = q2m1_e * q_e;                                        // (q^2-1)^e q^e
  total += half * ((q - one).pow(e) * q_e * (q + one) * (two_to(2 * genus) + q - three));
  total += half * ((q + one).pow(e) * q_e * (q - one) * (two_to(2 * genus) + q - one));
  total += q * q2m1_e;
  if (!total.has_integer_coefficients())
    throw NonPolynomialResultError("closed genus formula left Z[q] at genus " +
                                   std::to_string(genus));
  return total;
}

const InvariantSequence<RationalFunction>& dataset() {
  static const InvariantSequence<RationalFunction> seq = [] {
    InvariantSequence<RationalFunction> out;
    out.genus_offset = 0;
    for (const Polynomial& row : table_rows()) out.values.emplace_back(row);
    // Genus 11 by the closed formula, cross-checked against the recurrence
    // applied to genus 5..10. Two independent routes must agree.
    Polynomial g11 = closed_genus_formula(11);
    Polynomial via_recurrence;
    const auto& rec = expected_recurrence();
    for (std::size_t i = 0; i < 6; ++i) via_recurrence += rec[i] * table_rows()[5 + i];
    if (g11 != via_recurrence)
      throw CrossCheckError("genus-11 value: closed formula and recurrence disagree");
    out.values.emplace_back(std::move(g11));
    return out;
  }();
  return seq;
}

Polynomial group_class() {
  return parse_polynomial("q^3 - q");
}

PipelineResult run_pipeline(unsigned max_genus) {
  if (max_genus < 12)
    throw std::invalid_argument("the dataset covers genus 0..11; max_genus must be >= 12");

  QuantizationOutcome<RationalFunction> outcome =
      run_quantization(dataset(), static_cast<long>(max_genus));
  if (outcome.status != QuantizationStatus::Ok || !outcome.report)
    throw CrossCheckError("quantization failed on the embedded dataset: " + outcome.diagnostic);
  PipelineResult result{std::move(*outcome.report), {}};

  const auto& rec = result.report.recurrence;
  if (rec.order != 6)
    throw CrossCheckError("expected recurrence order 6, got " + std::to_string(rec.order));
  const auto& expected = expected_recurrence();
  for (std::size_t i = 0; i < 6; ++i) {
    const RationalFunction got = rec.coefficients[i];
    if (got != RationalFunction(expected[i]))
      throw CrossCheckError("recurrence coefficient a" + std::to_string(i) +
                            " mismatch: expected " + expected[i].to_string() + ", got " +
                            got.to_string());
  }

  // Every prediction must agree with the closed formula; for genus <= 10
  // this re-verifies the table rows themselves.
  for (unsigned g = 1; g <= max_genus; ++g) {
    const RationalFunction& predicted = result.report.predictions[g];
    if (predicted != RationalFunction(closed_genus_formula(g)))
      throw CrossCheckError("prediction at genus " + std::to_string(g) +
                            " disagrees with the closed formula");
  }

  const RationalFunction scale{group_class()};
  Matrix<RationalFunction> companion = companion_algebra(result.report.algebra).handle;
  result.rescaled_handle = scale * companion;
  return result;
}

}  // namespace qfrob::sl2
