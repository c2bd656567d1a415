#include "qfrob/repvar.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "qfrob/errors.hpp"

namespace qfrob {
namespace {

constexpr double kBruteForceOracleBound = 1e6;

// Class multiplication constants c_{A,B,C} = #{(a,b) in A x B : a*b = z_C}
// for a fixed z_C; counting pairs with a*b anywhere in C gives |C| * c_{A,B,C},
// which is what the |G|^2 sweep below tallies.
std::vector<std::vector<std::vector<BigInt>>> class_constants(const FiniteGroup& g,
                                                              const ClassData& cd) {
  const std::size_t k = cd.count();
  std::vector<std::vector<std::vector<std::uint64_t>>> tally(
      k, std::vector<std::vector<std::uint64_t>>(k, std::vector<std::uint64_t>(k, 0)));
  for (uint32_t a = 0; a < g.order(); ++a) {
    const uint32_t ca = cd.class_of[a];
    for (uint32_t b = 0; b < g.order(); ++b) {
      ++tally[ca][cd.class_of[b]][cd.class_of[g.mul(a, b)]];
    }
  }
  std::vector<std::vector<std::vector<BigInt>>> out(
      k, std::vector<std::vector<BigInt>>(k, std::vector<BigInt>(k)));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c) {
        const std::uint64_t t = tally[a][b][c];
        const std::uint64_t size = cd.classes[c].size();
        if (t % size != 0)
          throw CrossCheckError("class constant not divisible by the class size");
        out[a][b][c] = BigInt(static_cast<unsigned long>(t / size));
      }
  return out;
}

ClassFunction convolve(const std::vector<std::vector<std::vector<BigInt>>>& cc,
                       const ClassFunction& f, const ClassFunction& h) {
  const std::size_t k = f.size();
  ClassFunction out(k, BigInt(0));
  for (std::size_t a = 0; a < k; ++a) {
    if (f[a] == 0) continue;
    for (std::size_t b = 0; b < k; ++b) {
      if (h[b] == 0) continue;
      const BigInt fh = f[a] * h[b];
      for (std::size_t c = 0; c < k; ++c) {
        if (cc[a][b][c] != 0) out[c] += fh * cc[a][b][c];
      }
    }
  }
  return out;
}

}  // namespace

ClassFunction commutator_distribution(const FiniteGroup& g, const ClassData& cd) {
  const std::size_t n = g.order();
  const std::size_t k = cd.count();

  // The outer loop is split across threads; each worker owns a private tally
  // and the results are summed at the end. Group data is read-only.
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, 8);
  if (n < 64) workers = 1;

  std::vector<std::vector<std::uint64_t>> tallies(workers,
                                                  std::vector<std::uint64_t>(k, 0));
  auto sweep = [&](unsigned w) {
    auto& tally = tallies[w];
    for (uint32_t a = w; a < n; a += workers) {
      const uint32_t a_inv = g.inverse(a);
      for (uint32_t b = 0; b < n; ++b) {
        const uint32_t c = g.mul(g.mul(a, b), g.mul(a_inv, g.inverse(b)));
        ++tally[cd.class_of[c]];
      }
    }
  };
  if (workers == 1) {
    sweep(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(sweep, w);
    for (auto& t : pool) t.join();
  }

  ClassFunction out(k, BigInt(0));
  BigInt mass = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::uint64_t total = 0;
    for (unsigned w = 0; w < workers; ++w) total += tallies[w][c];
    const std::uint64_t size = cd.classes[c].size();
    if (total % size != 0)
      throw CrossCheckError("commutator tally not divisible by the class size");
    out[c] = BigInt(static_cast<unsigned long>(total / size));
    mass += out[c] * BigInt(static_cast<unsigned long>(size));
  }
  if (mass != BigInt(static_cast<unsigned long>(n)) * BigInt(static_cast<unsigned long>(n)))
    throw CrossCheckError("commutator distribution mass is not |G|^2");
  return out;
}

ClassFunction commutator_distribution(const FiniteGroup& g) {
  return commutator_distribution(g, conjugacy_classes(g));
}

BigInt genus_count_brute_force(const FiniteGroup& g, unsigned genus) {
  const std::size_t n = g.order();
  if (genus == 0) return 1;
  // Enumerate G^(2g) as an odometer; track the running product of
  // commutators incrementally per genus slot.
  std::vector<uint32_t> tuple(2 * genus, 0);
  BigInt count = 0;
  while (true) {
    uint32_t x = g.identity();
    for (unsigned i = 0; i < genus; ++i)
      x = g.mul(x, g.commutator(tuple[2 * i], tuple[2 * i + 1]));
    if (x == g.identity()) ++count;
    std::size_t pos = 0;
    while (pos < tuple.size() && ++tuple[pos] == n) tuple[pos++] = 0;
    if (pos == tuple.size()) break;
  }
  return count;
}

BigInt genus_count(const FiniteGroup& g, unsigned genus) {
  if (genus == 0) return 1;
  ClassData cd = conjugacy_classes(g);
  ClassFunction n1 = commutator_distribution(g, cd);
  auto cc = class_constants(g, cd);

  ClassFunction acc = n1;
  for (unsigned i = 1; i < genus; ++i) acc = convolve(cc, acc, n1);
  BigInt result = acc[cd.class_of[g.identity()]];

  // Oracle lock on the convolution weighting, at enumerable sizes.
  const double tuples = std::pow(static_cast<double>(g.order()), 2.0 * genus);
  if (tuples <= kBruteForceOracleBound) {
    BigInt brute = genus_count_brute_force(g, genus);
    if (brute != result)
      throw CrossCheckError("convolution count " + result.get_str() +
                            " disagrees with brute force " + brute.get_str());
  }
  return result;
}

BigInt pointed_count(const FiniteGroup& g, unsigned genus, unsigned points) {
  if (points == 0) throw std::invalid_argument("pointed_count needs points >= 1");
  return pow(BigInt(static_cast<unsigned long>(g.order())),
             static_cast<unsigned long>(points - 1)) *
         genus_count(g, genus);
}

TwistOperator twist_trace(const FiniteGroup& g, std::size_t matrix_cap) {
  const std::size_t n = g.order();
  ClassData cd = conjugacy_classes(g);
  TwistOperator out;
  out.trace = BigInt(static_cast<unsigned long>(n)) *
              BigInt(static_cast<unsigned long>(cd.count()));

  if (n > matrix_cap) {
    out.identity_based = true;
    return out;
  }

  Matrix<Rational> theta(n, n);
  for (uint32_t b = 0; b < n; ++b) {
    const Rational stab(BigInt(static_cast<unsigned long>(cd.centralizer_order[b])));
    for (uint32_t h : cd.classes[cd.class_of[b]]) theta.at(h, b) = stab;
  }

  // The matrix trace must agree with |G| * c.
  Rational tr;
  for (uint32_t i = 0; i < n; ++i) tr += theta.at(i, i);
  if (tr != Rational(out.trace)) throw CrossCheckError("twist trace disagrees with |G|*c");

  // Theta^2 = |G| * Theta, hence every eigenvalue is |G| or 0, and
  // tr(Theta^2)/|G| recovers the commuting-pair count N_1(identity).
  Matrix<Rational> theta_sq = theta * theta;
  if (theta_sq != Rational(BigInt(static_cast<unsigned long>(n))) * theta)
    throw CrossCheckError("twist operator does not satisfy Theta^2 = |G|*Theta");
  Rational tr_sq;
  for (uint32_t i = 0; i < n; ++i) tr_sq += theta_sq.at(i, i);
  ClassFunction n1 = commutator_distribution(g, cd);
  if (tr_sq / Rational(BigInt(static_cast<unsigned long>(n))) !=
      Rational(n1[cd.class_of[g.identity()]]))
    throw CrossCheckError("tr(Theta^2)/|G| disagrees with the commuting-pair count");

  out.op = std::move(theta);
  return out;
}

InvariantSequence<Rational> repvar_sequence(const FiniteGroup& g, unsigned max_genus) {
  if (max_genus < 1) throw std::invalid_argument("repvar_sequence needs max_genus >= 1");
  InvariantSequence<Rational> seq;
  seq.genus_offset = 0;
  seq.values.reserve(max_genus + 1);

  ClassData cd = conjugacy_classes(g);
  ClassFunction n1 = commutator_distribution(g, cd);
  auto cc = class_constants(g, cd);
  const uint32_t id_class = cd.class_of[g.identity()];

  seq.values.push_back(Rational::one());
  ClassFunction acc = n1;
  for (unsigned genus = 1; genus <= max_genus; ++genus) {
    seq.values.push_back(Rational(acc[id_class]));
    if (genus < max_genus) acc = convolve(cc, acc, n1);
  }
  return seq;
}

}  // namespace qfrob
