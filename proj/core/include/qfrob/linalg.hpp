#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qfrob/field.hpp"

namespace qfrob {

template <ExactField F>
using Vector = std::vector<F>;

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, F::zero()) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const F& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vector<F> column(std::size_t c) const {
    Vector<F> out(rows_, F::zero());
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if (!(at(r, c) == at(c, r))) return false;
    return true;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x.at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < y.cols_; ++j)
          out.at(i, j) = out.at(i, j) + x.at(i, k) * y.at(k, j);
      }
    return out;
  }

  friend Vector<F> operator*(const Matrix& x, const Vector<F>& v) {
    if (x.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector<F> out(x.rows_, F::zero());
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t j = 0; j < x.cols_; ++j) {
        if (!x.at(i, j).is_zero()) out[i] = out[i] + x.at(i, j) * v[j];
      }
    return out;
  }

  friend Matrix operator*(const F& s, const Matrix& x) {
    Matrix out(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = s * x.a_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw std::invalid_argument("matrix difference shape mismatch");
    Matrix out(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] - y.a_[i];
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> a_;
};

namespace detail {

// Fraction-free (Bareiss) row echelon reduction. Pivots are the first nonzero
// entry in column order, so results are deterministic. While pivots land on
// consecutive columns, entries stay equal to minors of the input, which keeps
// denominator-free inputs denominator-free; over the field the division by
// the previous pivot is well-defined in every case.
template <ExactField F>
std::vector<std::pair<std::size_t, std::size_t>> bareiss_echelon(Matrix<F>& m) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  F prev = F::one();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    }
    const F pivot = m.at(row, col);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      const F head = m.at(i, col);
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        m.at(i, j) = (pivot * m.at(i, j) - head * m.at(row, j)) / prev;
      }
      m.at(i, col) = F::zero();
    }
    prev = pivot;
    pivots.emplace_back(row, col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Exact row rank.
template <ExactField F>
std::size_t matrix_rank(Matrix<F> m) {
  return detail::bareiss_echelon(m).size();
}

/// Determinant of a square matrix.
template <ExactField F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return F::one();
  // Track row swaps for the sign; the last Bareiss pivot is the determinant.
  std::size_t swaps = 0;
  F prev = F::one();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) return F::zero();
    if (p != row) {
      ++swaps;
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    }
    const F pivot = m.at(row, col);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      const F head = m.at(i, col);
      for (std::size_t j = col + 1; j < m.cols(); ++j)
        m.at(i, j) = (pivot * m.at(i, j) - head * m.at(row, j)) / prev;
      m.at(i, col) = F::zero();
    }
    prev = pivot;
    ++row;
  }
  F det = m.at(m.rows() - 1, m.cols() - 1);
  return (swaps % 2 == 0) ? det : -det;
}

/// Solves A*x = b exactly. Returns one witness solution with free variables
/// set to zero when the system is underdetermined, nullopt when inconsistent.
template <ExactField F>
std::optional<Vector<F>> solve_linear(const Matrix<F>& a, const Vector<F>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear shape mismatch");
  Matrix<F> m(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
    m.at(r, a.cols()) = b[r];
  }
  auto pivots = detail::bareiss_echelon(m);
  // A pivot landing in the augmented column means 0 = nonzero.
  if (!pivots.empty() && pivots.back().second == a.cols()) return std::nullopt;

  Vector<F> x(a.cols(), F::zero());
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    auto [r, c] = *it;
    F acc = m.at(r, a.cols());
    for (std::size_t j = c + 1; j < a.cols(); ++j) {
      if (!m.at(r, j).is_zero() && !x[j].is_zero()) acc = acc - m.at(r, j) * x[j];
    }
    x[c] = acc / m.at(r, c);
  }
  return x;
}

/// Result of congruence diagonalization: C invertible with C^T * G * C
/// diagonal, the diagonal entries in d. No normalization is applied, so no
/// square roots are needed and everything stays in the field.
template <ExactField F>
struct CongruenceDiagonalization {
  Matrix<F> basis;  // columns are the orthogonal basis vectors
  Vector<F> diag;   // diag[i] = B(b_i, b_i); zero exactly on the radical
};

/// Symmetric Gram-Schmidt over an exact field of characteristic 0.
/// Isotropic pivots (B(v,v) = 0 with the form not yet exhausted) are repaired
/// by adding the first later basis vector with B(v_i, v_j) != 0; if the sum
/// is still isotropic the difference cannot be, so it is used instead.
template <ExactField F>
CongruenceDiagonalization<F> congruence_diagonalize(const Matrix<F>& g) {
  if (!g.is_symmetric()) throw std::invalid_argument("congruence_diagonalize needs a symmetric matrix");
  const std::size_t n = g.rows();
  Matrix<F> w = Matrix<F>::identity(n);  // columns: current basis
  Matrix<F> b = g;                       // b = w^T * g * w, updated in place
  Vector<F> d(n, F::zero());

  auto add_column = [&](std::size_t i, std::size_t j, const F& s) {
    // w_i += s * w_j, with the induced symmetric update of b.
    for (std::size_t r = 0; r < n; ++r) w.at(r, i) = w.at(r, i) + s * w.at(r, j);
    const F bii = b.at(i, i) + s * (b.at(i, j) + b.at(j, i)) + s * s * b.at(j, j);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      F v = b.at(i, k) + s * b.at(j, k);
      b.at(i, k) = v;
      b.at(k, i) = v;
    }
    b.at(i, i) = bii;
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (b.at(i, i).is_zero()) {
      std::size_t j = i + 1;
      while (j < n && b.at(i, j).is_zero()) ++j;
      if (j < n) {
        // 2*B(v_i,v_j) + B(v_j,v_j) and -2*B(v_i,v_j) + B(v_j,v_j) cannot
        // both vanish when B(v_i,v_j) != 0.
        const F two = F::from_int(2);
        F plus = two * b.at(i, j) + b.at(j, j);
        add_column(i, j, plus.is_zero() ? -F::one() : F::one());
      }
    }
    d[i] = b.at(i, i);
    if (d[i].is_zero()) continue;  // radical direction; orthogonal to the rest
    for (std::size_t j = i + 1; j < n; ++j) {
      if (b.at(i, j).is_zero()) continue;
      add_column(j, i, -(b.at(i, j) / d[i]));
    }
  }
  return {std::move(w), std::move(d)};
}

}  // namespace qfrob
