#include "qfrob/polynomial.hpp"

#include <algorithm>
#include <cstddef>

namespace qfrob {
namespace {

// Integer-coefficient view used by the gcd kernel. Scaling a polynomial by a
// nonzero rational does not change its monic gcd, so the computation runs on
// primitive integer polynomials (content removed each step) to keep
// coefficient growth under control.
using ZPoly = std::vector<BigInt>;

ZPoly to_primitive_integer(const Polynomial& p) {
  const auto& c = p.coefficients();
  BigInt lcm_den = 1;
  for (const auto& a : c) {
    BigInt den = a.denominator();
    BigInt g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  ZPoly out(c.size());
  BigInt content = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i] = c[i].numerator() * (lcm_den / c[i].denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  if (content > 1) {
    for (auto& a : out) a /= content;
  }
  return out;
}

void make_primitive(ZPoly& p) {
  BigInt content = 0;
  for (const auto& a : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a.get_mpz_t());
  if (content > 1) {
    for (auto& a : p) a /= content;
  }
}

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Pseudo-remainder of a by b (deg a >= deg b > 0 not required; handles all).
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  ztrim(a);
  const long db = static_cast<long>(b.size()) - 1;
  const BigInt& lb = b.back();
  while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
    const long da = static_cast<long>(a.size()) - 1;
    BigInt la = a.back();
    for (auto& x : a) x *= lb;
    for (long i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    ztrim(a);
  }
  return a;
}

}  // namespace

Polynomial Polynomial::constant(const Rational& a) {
  if (a.is_zero()) return Polynomial();
  return Polynomial(std::vector<Rational>{a});
}

Polynomial Polynomial::variable() {
  return Polynomial(std::vector<Rational>{Rational::zero(), Rational::one()});
}

Polynomial Polynomial::monomial(const Rational& a, std::size_t k) {
  if (a.is_zero()) return Polynomial();
  std::vector<Rational> c(k + 1, Rational::zero());
  c[k] = a;
  return Polynomial(std::move(c));
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& a) { return a.is_integer(); });
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational::zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational::zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational::zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& a, const Polynomial& p) {
  if (a.is_zero()) return Polynomial();
  std::vector<Rational> c(p.c_.size());
  for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] = a * p.c_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(unsigned long k) const {
  Polynomial result = Polynomial::one();
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1UL) result *= base;
    k >>= 1UL;
    if (k > 0) base *= base;
  }
  return result;
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational::zero());
  const Rational lb_inv = b.leading().inverse();
  for (long i = static_cast<long>(rem.size()) - 1;
       i >= static_cast<long>(b.c_.size()) - 1; --i) {
    if (rem[i].is_zero()) continue;
    Rational f = rem[i] * lb_inv;
    const std::size_t shift = i - (b.c_.size() - 1);
    quo[shift] = f;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[shift + j] -= f * b.c_[j];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Polynomial();
  if (a.degree() < b.degree()) return std::nullopt;
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.make_monic();
  if (b.is_zero()) return a.make_monic();
  if (a.is_constant() || b.is_constant()) return Polynomial::one();

  const Polynomial& hi = a.degree() >= b.degree() ? a : b;
  const Polynomial& lo = a.degree() >= b.degree() ? b : a;
  // Divisibility fast path: dominant in elimination workloads, where one
  // operand is an exact factor of the other.
  if (exact_divide(hi, lo)) return lo.make_monic();

  ZPoly u = to_primitive_integer(hi);
  ZPoly v = to_primitive_integer(lo);
  while (true) {
    ZPoly r = pseudo_rem(u, v);
    if (r.empty()) break;
    make_primitive(r);
    u = std::move(v);
    v = std::move(r);
    if (v.size() == 1) return Polynomial::one();
  }
  std::vector<Rational> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]);
  return Polynomial(std::move(c)).make_monic();
}

Polynomial Polynomial::make_monic() const {
  if (is_zero() || is_monic()) return *this;
  return leading().inverse() * *this;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long k = degree(); k >= 0; --k) {
    const Rational& a = c_[k];
    if (a.is_zero()) continue;
    const bool first = out.empty();
    const Rational mag = a.abs();
    if (first) {
      if (a.is_negative()) out += "-";
    } else {
      out += a.is_negative() ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace qfrob
