#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qfrob/frobenius.hpp"

namespace qfrob {

/// Genus-indexed invariant values chi(Sigma_g) for g = genus_offset,
/// genus_offset + 1, ...
template <ExactField F>
struct InvariantSequence {
  std::vector<F> values;
  long genus_offset = 0;
};

/// Minimal linear recurrence chi_{g+n} = sum_i a_i chi_{g+i} fitted to the
/// whole provided window. A candidate of order n consumes 2n values for its
/// construction; everything beyond is verification, so a successful result is
/// always certified.
template <ExactField F>
struct RecurrenceResult {
  std::size_t order = 0;
  Vector<F> coefficients;  // a_0 ... a_{n-1}
  std::size_t values_consumed = 0;
  bool certified = false;  // values_consumed >= 2 * order
};

/// One Jordan-type block of the closed form
/// chi(Sigma_g) = sum_i sum_j a_{i,j} * C(g, j) * lambda_i^{g-j},
/// valid for g >= max multiplicity.
template <ExactField F>
struct ClosedFormBlock {
  F eigenvalue;
  std::size_t multiplicity = 1;
  Vector<F> coefficients;  // a_{i,0} ... a_{i,m-1}
};

template <ExactField F>
using ClosedForm = std::vector<ClosedFormBlock<F>>;

/// Finds the smallest order n whose recurrence fits every provided value:
/// with the window vectors v_{g,n} = (chi_g, ..., chi_{g+n-1}), it solves
/// v_{n,n} = sum_i a_i v_{i,n} together with every shifted copy the data
/// supports, so the returned coefficients are verified against the entire
/// sequence. Throws ExtractionError when no order with 2n <= length fits
/// (Inconsistent when some window candidate existed but was violated later,
/// InsufficientData otherwise).
///
/// This is incremental Hankel-rank growth, kept in the explicit linear-algebra
/// form for auditability; a minimal-LFSR synthesis algorithm is a drop-in
/// replacement if extraction ever dominates.
template <ExactField F>
RecurrenceResult<F> extract_recurrence(const InvariantSequence<F>& seq) {
  const auto& chi = seq.values;
  const std::size_t len = chi.size();
  if (len < 2)
    throw ExtractionError(ExtractionError::Kind::InsufficientData,
                          "need at least 2 values, got " + std::to_string(len));
  bool window_candidate_violated = false;
  for (std::size_t n = 1; 2 * n <= len; ++n) {
    // All shifts at once: rows r = 0 .. len-n-1 of chi_{n+r} = sum a_i chi_{i+r}.
    const std::size_t rows = len - n;
    Matrix<F> m(rows, n);
    Vector<F> rhs(rows, F::zero());
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t i = 0; i < n; ++i) m.at(r, i) = chi[i + r];
      rhs[r] = chi[n + r];
    }
    if (auto a = solve_linear(m, rhs)) {
      RecurrenceResult<F> out;
      out.order = n;
      out.coefficients = std::move(*a);
      out.values_consumed = len;
      out.certified = len >= 2 * n;
      return out;
    }
    if (!window_candidate_violated) {
      // Would the bare 2n-value window have produced a candidate?
      Matrix<F> sq(n, n);
      Vector<F> sq_rhs(n, F::zero());
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) sq.at(r, i) = chi[i + r];
        sq_rhs[r] = chi[n + r];
      }
      if (solve_linear(sq, sq_rhs)) window_candidate_violated = true;
    }
  }
  if (window_candidate_violated)
    throw ExtractionError(ExtractionError::Kind::Inconsistent,
                          "a window candidate was violated by later values; "
                          "the data certifies no recurrence of order <= " +
                              std::to_string(len / 2));
  throw ExtractionError(ExtractionError::Kind::InsufficientData,
                        "no recurrence of order <= " + std::to_string(len / 2) +
                            " fits the provided values");
}

/// Wide presentation reproducing the sequence: eta(v_g) equals the g-th value
/// by construction.
template <ExactField F>
WideFrobenius<F> build_algebra(const InvariantSequence<F>& seq) {
  RecurrenceResult<F> rec = extract_recurrence(seq);
  WideFrobenius<F> w;
  w.dim = rec.order;
  w.recurrence = std::move(rec.coefficients);
  w.eta_values.assign(seq.values.begin(), seq.values.begin() + rec.order);
  return w;
}

/// Companion-form algebra of a wide presentation: T maps v_g to v_{g+1},
/// eps = v_0 and eta projects onto the eta values.
template <ExactField F>
AlmostFrobenius<F> companion_algebra(const WideFrobenius<F>& w) {
  AlmostFrobenius<F> alg;
  alg.dim = w.dim;
  alg.handle = Matrix<F>(w.dim, w.dim);
  for (std::size_t i = 0; i + 1 < w.dim; ++i) alg.handle.at(i + 1, i) = F::one();
  for (std::size_t i = 0; i < w.dim; ++i) alg.handle.at(i, w.dim - 1) = w.recurrence[i];
  alg.unit = Vector<F>(w.dim, F::zero());
  alg.unit[0] = F::one();
  alg.counit = w.eta_values;
  return alg;
}

/// chi(Sigma_genus) from an already extracted recurrence. Exact echo of the
/// input for in-range genus; recurrence iteration beyond.
template <ExactField F>
F predict(const RecurrenceResult<F>& rec, const InvariantSequence<F>& seq, long genus) {
  const long pos = genus - seq.genus_offset;
  if (pos < 0)
    throw std::invalid_argument("cannot predict below the first provided genus");
  if (pos < static_cast<long>(seq.values.size())) return seq.values[pos];
  Vector<F> window(seq.values.end() - rec.order, seq.values.end());
  long have = static_cast<long>(seq.values.size());
  while (have <= pos) {
    F next = F::zero();
    for (std::size_t i = 0; i < rec.order; ++i) {
      if (!rec.coefficients[i].is_zero()) next = next + rec.coefficients[i] * window[i];
    }
    window.erase(window.begin());
    window.push_back(std::move(next));
    ++have;
  }
  return window.back();
}

template <ExactField F>
F predict(const InvariantSequence<F>& seq, long genus) {
  return predict(extract_recurrence(seq), seq, genus);
}

/// Rational-root factorization of t^n - sum a_i t^i with multiplicities.
/// Returns the closed-form blocks when the characteristic polynomial splits
/// over Q, nullopt otherwise; the recurrence stays authoritative either way.
/// The zero eigenvalue contributes nothing at genus >= max multiplicity, so
/// its block carries zero coefficients.
std::optional<ClosedForm<Rational>> closed_form_rational(
    const RecurrenceResult<Rational>& rec, const InvariantSequence<Rational>& seq);

/// x * n for an arbitrary-precision integer n.
template <ExactField F>
F scale_by_bigint(const F& x, const BigInt& n);

template <>
inline Rational scale_by_bigint<Rational>(const Rational& x, const BigInt& n) {
  return x * Rational(n);
}

template <>
inline RationalFunction scale_by_bigint<RationalFunction>(const RationalFunction& x,
                                                          const BigInt& n) {
  return x * RationalFunction(Rational(n));
}

template <ExactField F>
F field_pow(F base, unsigned long e) {
  F out = F::one();
  while (e > 0) {
    if (e & 1UL) out = out * base;
    e >>= 1UL;
    if (e > 0) base = base * base;
  }
  return out;
}

/// Evaluates the closed form at one genus: sum of a_{i,j} * C(g,j) *
/// lambda_i^{g-j} with the 0^0 = 1 convention. Meaningful for g >= max block
/// multiplicity; below that bound callers must use the recurrence instead.
template <ExactField F>
F evaluate_closed_form(const ClosedForm<F>& form, unsigned long g) {
  F total = F::zero();
  for (const auto& block : form) {
    for (std::size_t j = 0; j < block.multiplicity; ++j) {
      const F& a = block.coefficients[j];
      if (a.is_zero() || j > g) continue;
      if (block.eigenvalue.is_zero()) {
        if (g != j) continue;  // 0^(g-j) vanishes unless g == j
        BigInt binom;
        mpz_bin_uiui(binom.get_mpz_t(), g, static_cast<unsigned long>(j));
        total = total + scale_by_bigint(a, binom);
        continue;
      }
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), g, static_cast<unsigned long>(j));
      F term = a * field_pow(block.eigenvalue, g - static_cast<unsigned long>(j));
      total = total + scale_by_bigint(term, binom);
    }
  }
  return total;
}

enum class QuantizationStatus { Ok, InsufficientData, Inconsistent };

std::string to_string(QuantizationStatus s);

template <ExactField F>
struct QuantizationReport {
  RecurrenceResult<F> recurrence;
  WideFrobenius<F> algebra;
  MonoidalityVerdict<F> monoidality;
  std::optional<F> chi1;                      // genus-1 value, when provided
  std::optional<bool> chi1_integer_subring;   // necessary condition on chi1
  std::optional<ClosedForm<F>> closed_form;   // rational eigenvalues only (Q)
  long predictions_from_genus = 0;
  std::vector<F> predictions;
  bool almost_quantizable = false;  // a certified recurrence exists
  bool strongly_quantizable = false;  // verdict is Monoidal
};

template <ExactField F>
struct QuantizationOutcome {
  QuantizationStatus status = QuantizationStatus::Ok;
  std::string diagnostic;  // set on failure
  std::optional<QuantizationReport<F>> report;
};

/// Aggregates recurrence extraction, the algebra, the monoidality verdict,
/// the integer-subring necessary condition on chi(Sigma_1), the closed form
/// (over Q) and predictions up to predict_to_genus. Failures yield a partial
/// outcome with a diagnostic instead of an exception.
template <ExactField F>
QuantizationOutcome<F> run_quantization(const InvariantSequence<F>& seq,
                                        std::optional<long> predict_to_genus = {}) {
  QuantizationOutcome<F> out;
  RecurrenceResult<F> rec;
  try {
    rec = extract_recurrence(seq);
  } catch (const ExtractionError& e) {
    out.status = e.kind() == ExtractionError::Kind::InsufficientData
                     ? QuantizationStatus::InsufficientData
                     : QuantizationStatus::Inconsistent;
    out.diagnostic = e.what();
    return out;
  }

  QuantizationReport<F> rep;
  rep.recurrence = rec;
  rep.algebra.dim = rec.order;
  rep.algebra.recurrence = rec.coefficients;
  rep.algebra.eta_values.assign(seq.values.begin(), seq.values.begin() + rec.order);
  rep.monoidality = check_monoidality(rep.algebra);

  const long chi1_pos = 1 - seq.genus_offset;
  if (chi1_pos >= 0 && chi1_pos < static_cast<long>(seq.values.size())) {
    rep.chi1 = seq.values[chi1_pos];
    rep.chi1_integer_subring = integer_subring_necessary_check(*rep.chi1);
  }

  if constexpr (std::is_same_v<F, Rational>) {
    rep.closed_form = closed_form_rational(rec, seq);
    if (rep.closed_form && rep.closed_form->empty()) rep.closed_form.reset();
  }

  const long last_given = seq.genus_offset + static_cast<long>(seq.values.size()) - 1;
  const long upto = predict_to_genus.value_or(last_given);
  rep.predictions_from_genus = seq.genus_offset;
  for (long g = seq.genus_offset; g <= upto; ++g)
    rep.predictions.push_back(predict(rec, seq, g));

  rep.almost_quantizable = rec.certified;
  rep.strongly_quantizable = rep.monoidality.verdict == Monoidality::Monoidal;
  out.report = std::move(rep);
  return out;
}

inline std::string to_string(QuantizationStatus s) {
  switch (s) {
    case QuantizationStatus::Ok: return "ok";
    case QuantizationStatus::InsufficientData: return "insufficient-data";
    case QuantizationStatus::Inconsistent: return "inconsistent";
  }
  return "?";
}

}  // namespace qfrob
