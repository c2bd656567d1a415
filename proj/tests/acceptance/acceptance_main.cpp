// Acceptance suite: one pass/fail line per criterion. Run through ctest
// (which wires --cli and --data) or directly:
//
//   qfrob_acceptance --cli path/to/qfrob --data path/to/data
//
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <sys/wait.h>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qfrob/io.hpp"
#include "qfrob/repvar.hpp"
#include "qfrob/sl2.hpp"

using namespace qfrob;

namespace {

std::string g_cli;
std::string g_data;

struct CommandResult {
  int exit_code = -1;
  std::string output;
  double seconds = 0.0;
};

CommandResult run_command(const std::string& command) {
  CommandResult result;
  const auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) throw Error("cannot spawn: " + command);
  char buffer[4096];
  while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, n);
  int status = pclose(pipe);
  const auto stop = std::chrono::steady_clock::now();
  result.seconds = std::chrono::duration<double>(stop - start).count();
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

BigInt commuting_pairs_brute(const FiniteGroup& g) {
  BigInt count = 0;
  for (uint32_t a = 0; a < g.order(); ++a)
    for (uint32_t b = 0; b < g.order(); ++b)
      if (g.mul(a, b) == g.mul(b, a)) ++count;
  return count;
}

std::vector<FiniteGroup> builtins() {
  std::vector<FiniteGroup> out;
  for (const char* name : {"C2", "C3", "C5", "D3", "D4", "S3", "S4", "Q8"})
    out.push_back(builtin_group(name));
  return out;
}

Rational rand_rational(std::mt19937_64& rng, long bound = 3) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, 2);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

// ---- criterion 1 -----------------------------------------------------------

void criterion_sl2_recovery() {
  CommandResult run = run_command(g_cli + " sl2 --max-genus 12");
  require(run.exit_code == 0, "sl2 subcommand exited with " + std::to_string(run.exit_code));
  require(run.seconds < 10.0,
          "sl2 subcommand took " + std::to_string(run.seconds) + "s (budget 10s)");
  require(run.output.find("recovered recurrence order: 6") != std::string::npos,
          "order 6 not reported");

  // The six reference coefficient polynomials, byte-for-byte, paired as
  // a_i = reference[5 - i].
  const char* reference[6] = {
      "q^6 + 9*q^4 + 9*q^2 + 1",
      "-11*q^10 - 29*q^8 + 16*q^6 - 29*q^4 - 11*q^2",
      "43*q^14 - 25*q^12 - 18*q^10 - 18*q^8 - 25*q^6 + 43*q^4",
      "-73*q^18 + 198*q^16 - 135*q^14 + 20*q^12 - 135*q^10 + 198*q^8 - 73*q^6",
      "56*q^22 - 280*q^20 + 504*q^18 - 280*q^16 - 280*q^14 + 504*q^12 - 280*q^10 + 56*q^8",
      "-16*q^26 + 128*q^24 - 448*q^22 + 896*q^20 - 1120*q^18 + 896*q^16 - 448*q^14 + 128*q^12 "
      "- 16*q^10",
  };
  auto result = sl2::run_pipeline(12);
  require(result.report.recurrence.order == 6, "library pipeline order is not 6");
  for (std::size_t i = 0; i < 6; ++i) {
    const std::string got = result.report.recurrence.coefficients[i].to_string();
    require(got == reference[5 - i],
            "coefficient a" + std::to_string(i) + " is not byte-identical: " + got);
    require(run.output.find(reference[5 - i]) != std::string::npos,
            "CLI output lacks the reference polynomial " + std::string(reference[5 - i]));
  }
}

// ---- criterion 2 -----------------------------------------------------------

void criterion_sl2_closed_formula() {
  auto result = sl2::run_pipeline(20);
  for (unsigned g = 12; g <= 20; ++g)
    require(result.report.predictions[g] == RationalFunction(sl2::closed_genus_formula(g)),
            "prediction at genus " + std::to_string(g) + " differs from the closed formula");
  const auto& rows = sl2::table_rows();
  for (unsigned g = 1; g <= 10; ++g)
    require(rows[g] == sl2::closed_genus_formula(g),
            "table row at genus " + std::to_string(g) + " differs from the closed formula");
}

// ---- criterion 3 -----------------------------------------------------------

void criterion_worked_examples() {
  InvariantSequence<Rational> seq;
  for (long v : {1, 1, 3, 7, 17}) seq.values.push_back(Rational(v));
  WideFrobenius<Rational> w = build_algebra(seq);
  Matrix<Rational> expected(2, 2,
                            {Rational(1), Rational(1), Rational(1), Rational(3)});
  require(gram_matrix(w) == expected, "pairing of the worked sequence is not [[1,1],[1,3]]");
  require(check_monoidality(w).verdict == Monoidality::NotMonoidal,
          "worked sequence should be NotMonoidal");

  AlmostFrobenius<Rational> narrow;
  narrow.dim = 2;
  narrow.handle = Matrix<Rational>(2, 2);
  narrow.handle.at(0, 0) = Rational(2);
  narrow.handle.at(1, 1) = Rational(2);
  narrow.unit = {Rational(1), Rational(0)};
  narrow.counit = {Rational(1), Rational(0)};
  require(check_almost_frobenius(narrow).verdict == Monoidality::InconclusiveNotWide,
          "doubled identity should be InconclusiveNotWide");

  // The same verdicts through the CLI surface.
  CommandResult worked =
      run_command(g_cli + " check-monoidal --algebra " + g_data + "/worked_algebra.json");
  require(worked.exit_code == 0 && worked.output.find("verdict: NotMonoidal") != std::string::npos,
          "CLI verdict for the worked algebra file is wrong");
  CommandResult narrow_run =
      run_command(g_cli + " check-monoidal --algebra " + g_data + "/non_wide_algebra.json");
  require(narrow_run.exit_code == 0 &&
              narrow_run.output.find("verdict: InconclusiveNotWide") != std::string::npos,
          "CLI verdict for the non-wide algebra file is wrong");
  CommandResult unit_run =
      run_command(g_cli + " check-monoidal --algebra " + g_data + "/unit_algebra.json");
  require(unit_run.exit_code == 0 && unit_run.output.find("verdict: Monoidal") != std::string::npos,
          "CLI verdict for the unit algebra file is wrong");
}

// ---- criterion 4 -----------------------------------------------------------

void criterion_group_identities() {
  for (const auto& g : builtins()) {
    ClassData cd = conjugacy_classes(g);
    TwistOperator twist = twist_trace(g);
    require(twist.trace == BigInt(static_cast<unsigned long>(g.order())) *
                               BigInt(static_cast<unsigned long>(cd.count())),
            g.name() + ": trace != |G| * classes");
    require(commuting_pairs_brute(g) == twist.trace,
            g.name() + ": commuting pairs != twist trace");
    require(twist.op.has_value(), g.name() + ": operator not materialized");
    require(*twist.op * *twist.op ==
                Rational(BigInt(static_cast<unsigned long>(g.order()))) * *twist.op,
            g.name() + ": Theta^2 != |G| * Theta");
  }
  require(commuting_pairs_brute(builtin_group("S3")) == 18, "S3 commuting pairs != 18");
  require(commuting_pairs_brute(builtin_group("C2")) == 4, "C2 commuting pairs != 4");

  const BigInt s3_counted = genus_count(builtin_group("S3"), 2);      // convolution path
  const BigInt s3_brute = genus_count_brute_force(builtin_group("S3"), 2);
  require(s3_counted == 486 && s3_brute == 486, "S3 genus-2 count is not 486 on both paths");
}

// ---- criterion 5 -----------------------------------------------------------

void criterion_split_law() {
  for (const auto& g : builtins()) {
    const BigInt order(static_cast<unsigned long>(g.order()));
    for (unsigned genus = 0; genus <= 3; ++genus) {
      // S4 at genus 3 convolves quickly; the brute oracle inside genus_count
      // only engages at enumerable sizes.
      for (unsigned k = 1; k <= 3; ++k) {
        require(pointed_count(g, genus, k + 1) == order * pointed_count(g, genus, k),
                g.name() + ": split law fails at genus " + std::to_string(genus) +
                    ", points " + std::to_string(k));
      }
    }
  }
}

// ---- criterion 6 -----------------------------------------------------------

void criterion_property_suites() {
  std::mt19937_64 rng(20240811);

  // (a) Recurrence round trip on 200 randomized wide algebras of dim <= 5.
  int done = 0;
  while (done < 200) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    WideFrobenius<Rational> w;
    w.dim = dim(rng);
    for (std::size_t i = 0; i < w.dim; ++i) {
      w.recurrence.push_back(rand_rational(rng));
      w.eta_values.push_back(rand_rational(rng));
    }
    if (matrix_rank(gram_matrix(w)) != w.dim) continue;  // minimal order < dim
    ++done;
    Vector<Rational> eta = eta_extension(w, 5 * w.dim - 1);
    InvariantSequence<Rational> seq;
    seq.values.assign(eta.begin(), eta.begin() + 2 * w.dim);
    RecurrenceResult<Rational> rec = extract_recurrence(seq);
    require(rec.order == w.dim, "extracted order differs from the generating order");
    require(rec.coefficients == w.recurrence, "extracted coefficients differ");
    for (std::size_t g = 2 * w.dim; g < 5 * w.dim; ++g)
      require(predict(rec, seq, static_cast<long>(g)) == eta[g],
              "prediction differs from the generator");
  }

  // (b) Verdict invariance under 50 randomized orthogonal-basis rescalings
  // per test algebra, including fully randomized congruences.
  std::vector<WideFrobenius<Rational>> algebras;
  {
    InvariantSequence<Rational> seq;
    for (long v : {1, 1, 3, 7, 17}) seq.values.push_back(Rational(v));
    algebras.push_back(build_algebra(seq));
    algebras.push_back(WideFrobenius<Rational>{1, {Rational(1)}, {Rational(1)}});
    algebras.push_back(WideFrobenius<Rational>{
        2, {Rational(-6), Rational(5)}, {Rational(BigInt(5), BigInt(6)), Rational(2)}});
    int extra = 0;
    while (extra < 5) {
      std::uniform_int_distribution<std::size_t> dim(2, 4);
      WideFrobenius<Rational> w;
      w.dim = dim(rng);
      for (std::size_t i = 0; i < w.dim; ++i) {
        w.recurrence.push_back(rand_rational(rng));
        w.eta_values.push_back(rand_rational(rng));
      }
      if (matrix_rank(gram_matrix(w)) != w.dim) continue;
      algebras.push_back(w);
      ++extra;
    }
  }
  for (const auto& w : algebras) {
    Matrix<Rational> h = gram_matrix(w);
    auto reference = congruence_diagonalize(h);
    const bool expected =
        !detail::handle_condition_failure(w, reference.basis, reference.diag).has_value();
    require(expected == check_monoidality(w).condition_two,
            "reference handle condition disagrees with the verdict");
    for (int trial = 0; trial < 50; ++trial) {
      Matrix<Rational> basis = reference.basis;
      Vector<Rational> diag = reference.diag;
      for (std::size_t i = 0; i < w.dim; ++i) {
        Rational c;
        while (c.is_zero()) c = rand_rational(rng);
        for (std::size_t r = 0; r < w.dim; ++r) basis.at(r, i) = c * basis.at(r, i);
        diag[i] = c * c * diag[i];
      }
      require(!detail::handle_condition_failure(w, basis, diag).has_value() == expected,
              "handle condition changed under a basis rescaling");
      if (trial % 10 == 0) {
        Matrix<Rational> r(w.dim, w.dim);
        do {
          for (std::size_t i = 0; i < w.dim; ++i)
            for (std::size_t j = 0; j < w.dim; ++j) r.at(i, j) = rand_rational(rng);
        } while (matrix_rank(r) != w.dim);
        auto alt = congruence_diagonalize(r.transpose() * h * r);
        require(!detail::handle_condition_failure(w, r * alt.basis, alt.diag).has_value() ==
                    expected,
                "handle condition changed under a randomized congruence");
      }
    }

    // (c) Pairing identities on all basis triples of every constructed
    // algebra.
    auto pair = [&](const Vector<Rational>& x, const Vector<Rational>& y) {
      Rational acc;
      for (std::size_t i = 0; i < w.dim; ++i)
        for (std::size_t j = 0; j < w.dim; ++j) acc += x[i] * h.at(i, j) * y[j];
      return acc;
    };
    for (std::size_t i = 0; i < w.dim; ++i)
      for (std::size_t j = 0; j < w.dim; ++j)
        for (std::size_t k = 0; k < w.dim; ++k) {
          Vector<Rational> vi = basis_vector(w, i);
          Vector<Rational> vj = basis_vector(w, j);
          Vector<Rational> vk = basis_vector(w, k);
          require(pair(vi, vj) == pair(vj, vi), "pairing is not symmetric");
          require(pair(multiply(w, vi, vj), vk) == pair(vi, multiply(w, vj, vk)),
                  "pairing is not associative-compatible");
        }
  }

  // (d) Congruence diagonalization postconditions on 200 random symmetric
  // matrices including rank-deficient and isotropic-pivot cases.
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<std::size_t> size(1, 6);
    const std::size_t n = size(rng);
    Matrix<Rational> g(n, n);
    if (i % 3 == 0) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) {
          Rational v = rand_rational(rng);
          g.at(r, c) = v;
          g.at(c, r) = v;
        }
    } else if (i % 3 == 1) {
      std::uniform_int_distribution<std::size_t> thin(0, n);
      const std::size_t rank = thin(rng);
      Matrix<Rational> a(rank, n);
      for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t c = 0; c < n; ++c) a.at(r, c) = rand_rational(rng);
      Matrix<Rational> d(rank, rank);
      for (std::size_t r = 0; r < rank; ++r) d.at(r, r) = rand_rational(rng);
      g = a.transpose() * d * a;
    } else {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) {
          Rational v = rand_rational(rng);
          g.at(r, c) = v;
          g.at(c, r) = v;
        }
    }
    auto [c, d] = congruence_diagonalize(g);
    require(determinant(c) != Rational(0), "basis is singular");
    Matrix<Rational> diag = c.transpose() * g * c;
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        if (r == s) {
          require(diag.at(r, s) == d[r], "diagonal entries disagree");
          if (!d[r].is_zero()) ++nonzero;
        } else {
          require(diag.at(r, s).is_zero(), "off-diagonal residue");
        }
      }
    require(nonzero == matrix_rank(g), "nonzero diagonal count != rank");
  }
}

// ---- criterion 7 -----------------------------------------------------------

void criterion_necessary_conditions() {
  require(!in_integer_subring(sl2::dataset().values[1]),
          "the genus-1 virtual class should fail the integer-subring test");
  for (const auto& g : builtins()) {
    InvariantSequence<Rational> seq = repvar_sequence(g, 4);
    for (const auto& v : seq.values)
      require(in_integer_subring(v), g.name() + ": counting values must be integers");
  }

  auto s3 = run_quantization(repvar_sequence(builtin_group("S3"), 6));
  require(s3.status == QuantizationStatus::Ok, "S3 quantization failed");
  require(s3.report->recurrence.order == 2, "S3 order is not 2");
  require(!s3.report->monoidality.euler_check, "S3 euler check should fail (18 != 2)");
  require(!s3.report->strongly_quantizable, "S3 counts are not strongly quantizable unmarked");
  require(s3.report->almost_quantizable, "S3 counts are almost-quantizable");

  InvariantSequence<Rational> trivial;
  trivial.values = {Rational(1), Rational(1), Rational(1)};
  auto report = run_quantization(trivial);
  require(report.report->monoidality.euler_check, "trivial group euler check should pass");
  require(report.report->strongly_quantizable, "trivial group counts are strongly quantizable");
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli") g_cli = argv[i + 1];
    if (flag == "--data") g_data = argv[i + 1];
  }
  if (g_cli.empty() || g_data.empty()) {
    std::cerr << "usage: qfrob_acceptance --cli <path to qfrob binary> --data <path to data dir>\n";
    return 2;
  }

  struct Criterion {
    const char* label;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 recurrence recovery from the embedded table (exact, under 10s)",
       criterion_sl2_recovery},
      {"2 closed-formula agreement for genus 1..20", criterion_sl2_closed_formula},
      {"3 worked two-dimensional examples reproduce their verdicts", criterion_worked_examples},
      {"4 finite-group trace and convolution identities", criterion_group_identities},
      {"5 split law for pointed counts", criterion_split_law},
      {"6 randomized property suites", criterion_property_suites},
      {"7 necessary-condition checks", criterion_necessary_conditions},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    try {
      criterion.run();
      std::cout << "PASS criterion " << criterion.label << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL criterion " << criterion.label << ": " << e.what() << "\n";
    }
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
