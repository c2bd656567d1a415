// Command-line front door: sequence quantization, algebra checking,
// finite-group counting and the SL2 reproduction.
//
// Exit codes: 0 success; 1 input/usage error; 2 the data certifies no
// recurrence (insufficient or inconsistent); 3 an internal cross-check
// failed (always a bug or a broken invariant, by design loud).

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "qfrob/io.hpp"
#include "qfrob/repvar.hpp"
#include "qfrob/sl2.hpp"
#include "qfrob/version.hpp"

namespace {

using namespace qfrob;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNoRecurrence = 2;
constexpr int kExitCrossCheck = 3;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <ExactField F>
std::string first_failing(const MonoidalityVerdict<F>& v) {
  if (!v.wide) return "not wide";
  if (!v.gram_nondegenerate) return "condition 1";
  if (!v.condition_two) {
    return v.condition_two_source == HandleConditionSource::ImpliedFalseByEuler
               ? "euler_check failed"
               : "condition 2";
  }
  if (!v.euler_check) return "euler_check failed";
  return "";
}

template <ExactField F>
std::string eigenvalue_list(const QuantizationReport<F>& rep) {
  if (!rep.closed_form) return "";
  std::string out;
  for (const auto& block : *rep.closed_form) {
    if (block.multiplicity != 1) return "";
    if (!out.empty()) out += ",";
    out += block.eigenvalue.to_string();
  }
  return out;
}

template <ExactField F>
std::string summary_line(const QuantizationReport<F>& rep) {
  std::string line = "n=" + std::to_string(rep.recurrence.order);
  const std::string lambdas = eigenvalue_list(rep);
  if (!lambdas.empty()) line += ", λ=" + lambdas;
  line += ", almost-quantizable: " + yes_no(rep.almost_quantizable);
  line += ", monoidal: " + yes_no(rep.strongly_quantizable);
  if (!rep.strongly_quantizable) line += " (" + first_failing(rep.monoidality) + ")";
  return line;
}

template <ExactField F>
int quantize_typed(const io::SequenceDocument& doc, std::optional<long> predict_to,
                   const std::string& out_path) {
  InvariantSequence<F> seq = io::typed_sequence<F>(doc);
  QuantizationOutcome<F> outcome = run_quantization(seq, predict_to);
  if (!out_path.empty())
    io::write_file(out_path, io::wrap_report_document(io::report_payload_json(outcome)));
  if (outcome.status != QuantizationStatus::Ok) {
    std::cout << "no certified recurrence: " << outcome.diagnostic << "\n";
    return kExitNoRecurrence;
  }
  const auto& rep = *outcome.report;
  std::cout << summary_line(rep) << "\n";
  if (rep.chi1_integer_subring)
    std::cout << "genus-1 value in the integer subring: " << yes_no(*rep.chi1_integer_subring)
              << "\n";
  if (predict_to) {
    for (std::size_t i = 0; i < rep.predictions.size(); ++i) {
      std::cout << "genus " << (rep.predictions_from_genus + static_cast<long>(i)) << ": "
                << rep.predictions[i].to_string() << "\n";
    }
  }
  return kExitOk;
}

int cmd_quantize(const std::string& input, std::optional<long> predict_to,
                 const std::string& out_path, const std::string& field_override) {
  io::SequenceDocument doc = io::parse_sequence(io::read_file(input));
  if (!field_override.empty()) {
    FieldKind wanted = field_kind_from_name(field_override);
    if (wanted != doc.field) {
      // Re-read the values in the requested field.
      io::SequenceDocument redone;
      redone.field = wanted;
      redone.genus_offset = doc.genus_offset;
      redone.notes = doc.notes;
      for (const auto& v : doc.values) redone.values.push_back(Scalar::parse(v.to_string(), wanted));
      doc = std::move(redone);
    }
  }
  if (doc.field == FieldKind::Rationals)
    return quantize_typed<Rational>(doc, predict_to, out_path);
  return quantize_typed<RationalFunction>(doc, predict_to, out_path);
}

template <ExactField F>
int check_monoidal_typed(const io::AlgebraDocument& doc) {
  AlmostFrobenius<F> alg = io::typed_algebra<F>(doc);
  MonoidalityVerdict<F> v = check_almost_frobenius(alg);
  std::cout << "wide: " << yes_no(v.wide) << "\n";
  if (v.verdict == Monoidality::InconclusiveNotWide) {
    std::cout << "pairing non-degenerate (condition 1): not evaluated\n"
              << "handle condition (condition 2): not evaluated\n";
  } else {
    std::cout << "pairing non-degenerate (condition 1): " << yes_no(v.gram_nondegenerate)
              << "\n";
    std::cout << "handle condition (condition 2): " << yes_no(v.condition_two);
    if (v.condition_two_source == HandleConditionSource::ImpliedFalseByEuler)
      std::cout << " (implied by the euler check)";
    std::cout << "\n";
  }
  std::cout << "euler check (genus-1 value equals dimension): " << yes_no(v.euler_check)
            << "\n";
  std::cout << "verdict: " << to_string(v.verdict) << "\n";
  return kExitOk;  // a negative verdict is still a successful run
}

int cmd_check_monoidal(const std::string& algebra_path) {
  io::AlgebraDocument doc = io::parse_algebra(io::read_file(algebra_path));
  if (doc.field == FieldKind::Rationals) return check_monoidal_typed<Rational>(doc);
  return check_monoidal_typed<RationalFunction>(doc);
}

int cmd_repvar(const std::string& group_spec, unsigned genus, std::optional<unsigned> points,
               bool brute_force, std::optional<unsigned> quantize_upto,
               const std::string& out_path) {
  FiniteGroup group = [&] {
    const std::string prefix = "builtin:";
    if (group_spec.rfind(prefix, 0) == 0) return builtin_group(group_spec.substr(prefix.size()));
    return parse_group_file(io::read_file(group_spec));
  }();
  ClassData classes = conjugacy_classes(group);
  std::cout << "group: " << group.name() << " (order " << group.order() << ", classes "
            << classes.count() << ")\n";

  TwistOperator twist = twist_trace(group);
  std::cout << "twist trace: " << twist.trace.get_str() << " = |G| * classes"
            << (twist.identity_based ? " (identity-based; matrix not materialized)" : "")
            << "\n";

  BigInt count = genus_count(group, genus);
  std::cout << "genus " << genus << " count: " << count.get_str() << "\n";
  if (brute_force) {
    BigInt brute = genus_count_brute_force(group, genus);
    std::cout << "brute-force count: " << brute.get_str() << "\n";
    if (brute != count)
      throw CrossCheckError("brute-force count disagrees with the convolution count");
  }
  if (points) {
    BigInt pc = pointed_count(group, genus, *points);
    std::cout << "pointed count (" << *points << " points): " << pc.get_str() << "\n";
  }
  if (quantize_upto) {
    InvariantSequence<Rational> seq = repvar_sequence(group, *quantize_upto);
    QuantizationOutcome<Rational> outcome =
        run_quantization(seq, static_cast<long>(*quantize_upto));
    if (!out_path.empty())
      io::write_file(out_path, io::wrap_report_document(io::report_payload_json(outcome)));
    if (outcome.status != QuantizationStatus::Ok) {
      std::cout << "no certified recurrence: " << outcome.diagnostic << "\n";
      return kExitNoRecurrence;
    }
    std::cout << "quantization of counts up to genus " << *quantize_upto << ": "
              << summary_line(*outcome.report) << "\n";
  }
  return kExitOk;
}

int cmd_sl2(unsigned max_genus) {
  sl2::PipelineResult result = sl2::run_pipeline(max_genus);
  const auto& rep = result.report;
  std::cout << "recovered recurrence order: " << rep.recurrence.order << "\n";
  for (std::size_t i = 0; i < rep.recurrence.coefficients.size(); ++i) {
    std::cout << "a" << i << " (coefficient of chi_{g+" << i
              << "}): " << rep.recurrence.coefficients[i].to_string() << "\n";
  }
  std::cout << summary_line(rep) << "\n";
  std::cout << "handle normalization factor: " << sl2::group_class().to_string() << "\n";
  for (unsigned g = 12; g <= max_genus; ++g)
    std::cout << "genus " << g << ": " << rep.predictions[g].to_string() << "\n";
  std::cout << "closed-formula cross-check: passed for genus 1.." << max_genus << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decision toolkit for quantizing surface invariants"};
  app.set_version_flag("--version", qfrob::kVersion);
  app.require_subcommand(1);

  auto* quantize = app.add_subcommand(
      "quantize", "Extract the minimal recurrence from a sequence file and report "
                  "quantizability. Scalars use +, -, *, /, ^ and the variable q; "
                  "multiplication is always explicit (write 4*q, not 4q).");
  std::string q_input, q_out, q_field;
  long q_predict = -1;
  quantize->add_option("--input", q_input, "sequence JSON file")->required();
  quantize->add_option("--predict", q_predict, "predict values up to this genus");
  quantize->add_option("--out", q_out, "write the report document here");
  quantize->add_option("--field", q_field, "override the field: Q or Qq");

  auto* check = app.add_subcommand("check-monoidal",
                                   "Decide whether an algebra file extends to a full "
                                   "monoidal theory");
  std::string c_algebra;
  check->add_option("--algebra", c_algebra, "algebra JSON file")->required();

  auto* repvar = app.add_subcommand(
      "repvar", "Count homomorphisms from surface groups into a finite group");
  std::string r_group, r_out;
  unsigned r_genus = 1;
  std::optional<unsigned> r_points, r_quantize;
  bool r_brute = false;
  repvar->add_option("--group", r_group, "group file or builtin:NAME (C<n>, D<n>, S3, S4, Q8)")
      ->required();
  repvar->add_option("--genus", r_genus, "surface genus")->required();
  repvar->add_option("--points", r_points, "marked points (>= 1)");
  repvar->add_flag("--brute-force", r_brute, "also enumerate tuples directly and compare");
  repvar->add_option("--quantize-upto", r_quantize,
                     "quantize the counting sequence up to this genus");
  repvar->add_option("--out", r_out, "write the quantization report here");

  auto* sl2cmd = app.add_subcommand(
      "sl2", "Recover the recurrence behind the embedded SL2(C) virtual-class table and "
             "predict higher genera");
  unsigned s_max_genus = 0;
  sl2cmd->add_option("--max-genus", s_max_genus, "predict up to this genus (>= 12)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*quantize) {
      std::optional<long> predict_to;
      if (quantize->count("--predict")) predict_to = q_predict;
      return cmd_quantize(q_input, predict_to, q_out, q_field);
    }
    if (*check) return cmd_check_monoidal(c_algebra);
    if (*repvar) return cmd_repvar(r_group, r_genus, r_points, r_brute, r_quantize, r_out);
    if (*sl2cmd) {
      if (s_max_genus < 12) {
        std::cerr << "error: --max-genus must be at least 12\n";
        return kExitInput;
      }
      return cmd_sl2(s_max_genus);
    }
  } catch (const qfrob::ExtractionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoRecurrence;
  } catch (const qfrob::CrossCheckError& e) {
    std::cerr << "cross-check failure: " << e.what() << "\n";
    return kExitCrossCheck;
  } catch (const qfrob::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
