#include "qfrob/quantize.hpp"

#include <algorithm>

namespace qfrob {
namespace {

constexpr unsigned long kTrialDivisionBound = 1000000;
constexpr std::size_t kMaxDivisors = 200000;

// Trial division up to the bound, falling back to a primality test for the
// leftover. nullopt when the factorization cannot be completed, in which case
// the caller reports "no rational closed form found" rather than guessing.
std::optional<std::vector<std::pair<BigInt, unsigned>>> factorize(BigInt n) {
  std::vector<std::pair<BigInt, unsigned>> factors;
  if (n < 0) n = -n;
  if (n <= 1) return factors;
  auto strip = [&](const BigInt& p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  };
  strip(2);
  for (unsigned long p = 3; p <= kTrialDivisionBound && n > 1; p += 2) {
    BigInt pp(static_cast<long>(p));
    if (pp * pp > n) break;
    strip(pp);
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) return std::nullopt;
    factors.emplace_back(n, 1);
  }
  return factors;
}

std::optional<std::vector<BigInt>> divisors_of(const BigInt& n) {
  auto factors = factorize(n);
  if (!factors) return std::nullopt;
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [p, e] : *factors) {
    const std::size_t base = divs.size();
    if (base * (e + 1) > kMaxDivisors) return std::nullopt;
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Synthetic division by (t - r); requires r to be a root.
void deflate(std::vector<Rational>& coeffs, const Rational& r) {
  std::vector<Rational> out(coeffs.size() - 1, Rational::zero());
  Rational carry;
  for (std::size_t i = coeffs.size(); i-- > 1;) {
    carry = coeffs[i] + carry * r;
    out[i - 1] = carry;
  }
  coeffs = std::move(out);
}

}  // namespace

std::optional<ClosedForm<Rational>> closed_form_rational(
    const RecurrenceResult<Rational>& rec, const InvariantSequence<Rational>& seq) {
  const std::size_t n = rec.order;
  // p(t) = t^n - a_{n-1} t^{n-1} - ... - a_0, lowest degree first.
  std::vector<Rational> p(n + 1, Rational::zero());
  for (std::size_t i = 0; i < n; ++i) p[i] = -rec.coefficients[i];
  p[n] = Rational::one();

  // Zero eigenvalue: multiplicity is the lowest nonzero coefficient index.
  std::size_t zero_mult = 0;
  while (zero_mult <= n && p[zero_mult].is_zero()) ++zero_mult;
  std::vector<Rational> q(p.begin() + zero_mult, p.end());

  std::vector<std::pair<Rational, std::size_t>> roots;  // nonzero roots
  if (q.size() > 1) {
    // Integerize: candidates are u/v with u | constant term, v | leading term.
    BigInt lcm_den = 1;
    for (const auto& c : q) {
      BigInt g, den = c.denominator();
      mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
      lcm_den = lcm_den / g * den;
    }
    BigInt constant = (q.front() * Rational(lcm_den)).numerator();
    BigInt leading = (q.back() * Rational(lcm_den)).numerator();
    auto num_divs = divisors_of(constant);
    auto den_divs = divisors_of(leading);
    if (!num_divs || !den_divs) return std::nullopt;

    std::vector<Rational> candidates;
    for (const auto& u : *num_divs) {
      for (const auto& v : *den_divs) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
        if (g != 1) continue;
        candidates.push_back(Rational(u, v));
        candidates.push_back(Rational(-u, v));
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& r : candidates) {
      std::size_t mult = 0;
      while (q.size() > 1 && poly_eval(q, r).is_zero()) {
        deflate(q, r);
        ++mult;
      }
      if (mult > 0) roots.emplace_back(r, mult);
      if (q.size() == 1) break;
    }
    if (q.size() > 1) return std::nullopt;  // irreducible factor of degree >= 2 left
  }

  ClosedForm<Rational> form;
  std::size_t max_mult = zero_mult;
  std::size_t unknowns = 0;
  if (zero_mult > 0) {
    ClosedFormBlock<Rational> z;
    z.eigenvalue = Rational::zero();
    z.multiplicity = zero_mult;
    z.coefficients.assign(zero_mult, Rational::zero());
    form.push_back(std::move(z));
  }
  for (const auto& [lambda, mult] : roots) {
    ClosedFormBlock<Rational> b;
    b.eigenvalue = lambda;
    b.multiplicity = mult;
    b.coefficients.assign(mult, Rational::zero());
    form.push_back(std::move(b));
    max_mult = std::max(max_mult, mult);
    unknowns += mult;
  }
  std::sort(form.begin(), form.end(),
            [](const auto& a, const auto& b) { return a.eigenvalue < b.eigenvalue; });

  if (unknowns > 0) {
    // Solve for the a_{i,j} on consecutive genera in actual genus
    // coordinates, starting at max(max multiplicity, first provided genus).
    const long g_start = std::max<long>(static_cast<long>(std::max<std::size_t>(max_mult, 1)),
                                        std::max<long>(seq.genus_offset, 0));
    Matrix<Rational> m(unknowns, unknowns);
    Vector<Rational> rhs(unknowns, Rational::zero());
    for (std::size_t row = 0; row < unknowns; ++row) {
      const unsigned long g = static_cast<unsigned long>(g_start) + row;
      std::size_t col = 0;
      for (const auto& block : form) {
        if (block.eigenvalue.is_zero()) continue;
        for (std::size_t j = 0; j < block.multiplicity; ++j, ++col) {
          BigInt binom;
          mpz_bin_uiui(binom.get_mpz_t(), g, static_cast<unsigned long>(j));
          m.at(row, col) =
              Rational(binom) * field_pow(block.eigenvalue, g - static_cast<unsigned long>(j));
        }
      }
      rhs[row] = predict(rec, seq, static_cast<long>(g));
    }
    auto sol = solve_linear(m, rhs);
    if (!sol) throw CrossCheckError("closed-form coefficient system is singular");
    std::size_t col = 0;
    for (auto& block : form) {
      if (block.eigenvalue.is_zero()) continue;
      for (std::size_t j = 0; j < block.multiplicity; ++j, ++col) block.coefficients[j] = (*sol)[col];
    }
  }

  // The closed form must reproduce every provided value from g0 on.
  const unsigned long g0 = static_cast<unsigned long>(std::max<std::size_t>(max_mult, 1));
  for (std::size_t pos = 0; pos < seq.values.size(); ++pos) {
    const long g = seq.genus_offset + static_cast<long>(pos);
    if (g < static_cast<long>(g0)) continue;
    if (evaluate_closed_form(form, static_cast<unsigned long>(g)) != seq.values[pos])
      throw CrossCheckError("closed form disagrees with the sequence at genus " +
                            std::to_string(g));
  }
  return form;
}

}  // namespace qfrob
