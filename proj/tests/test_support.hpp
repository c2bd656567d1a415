#pragma once

#include <random>

#include "qfrob/frobenius.hpp"
#include "qfrob/parse.hpp"

namespace qfrob::testing {

inline Rational random_rational(std::mt19937_64& rng, long num_bound = 9, long den_bound = 9) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng) {
  Rational r;
  do {
    r = random_rational(rng);
  } while (r.is_zero());
  return r;
}

inline Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_rational(rng);
  return m;
}

inline Matrix<Rational> random_symmetric(std::mt19937_64& rng, std::size_t n) {
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational v = random_rational(rng);
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  return m;
}

inline Matrix<Rational> random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    Matrix<Rational> m = random_matrix(rng, n, n);
    if (matrix_rank(m) == n) return m;
  }
}

/// The worked two-dimensional algebra: T = [[0,1],[1,2]], eps = (1,0),
/// eta = (x,y) -> x + y. Wide, pairing [[1,1],[1,3]], not monoidal.
inline AlmostFrobenius<Rational> worked_example_algebra() {
  AlmostFrobenius<Rational> alg;
  alg.dim = 2;
  alg.handle = Matrix<Rational>(2, 2);
  alg.handle.at(0, 1) = Rational(1);
  alg.handle.at(1, 0) = Rational(1);
  alg.handle.at(1, 1) = Rational(2);
  alg.unit = {Rational(1), Rational(0)};
  alg.counit = {Rational(1), Rational(1)};
  return alg;
}

/// The non-wide companion: T = 2*I, eps = (1,0), eta = (x,y) -> x.
inline AlmostFrobenius<Rational> non_wide_example_algebra() {
  AlmostFrobenius<Rational> alg;
  alg.dim = 2;
  alg.handle = Matrix<Rational>(2, 2);
  alg.handle.at(0, 0) = Rational(2);
  alg.handle.at(1, 1) = Rational(2);
  alg.unit = {Rational(1), Rational(0)};
  alg.counit = {Rational(1), Rational(0)};
  return alg;
}

inline Vector<Rational> rational_vector(std::initializer_list<long> values) {
  Vector<Rational> out;
  for (long v : values) out.push_back(Rational(v));
  return out;
}

inline Matrix<Rational> rational_matrix(std::size_t rows, std::size_t cols,
                                        std::initializer_list<long> values) {
  std::vector<Rational> entries;
  for (long v : values) entries.push_back(Rational(v));
  return Matrix<Rational>(rows, cols, std::move(entries));
}

}  // namespace qfrob::testing
