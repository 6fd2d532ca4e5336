#pragma once

#include <optional>
#include <vector>

#include "isopar/scalar.hpp"

namespace isopar {

// Dense exact matrix over a field F (Scalar or CScalar).  Sizes stay tiny at
// desk scale (<= 64), so everything is plain Gaussian elimination with
// deterministic first-nonzero pivoting.
template <class F>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<F> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  F& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const F& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F(Scalar(1));
    return m;
  }

  Mat transpose() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (cols != o.rows) fail(Error::Kind::internal, "matrix shape mismatch");
    Mat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const F& x = at(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.cols; ++j)
          r.at(i, j) = r.at(i, j) + x * o.at(k, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    Mat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
    return r;
  }
  Mat scaled(const F& c) const {
    Mat r(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * c;
    return r;
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  bool is_zero() const {
    for (const auto& x : a)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_symmetric() const {
    for (int i = 0; i < rows; ++i)
      for (int j = i + 1; j < cols; ++j)
        if (!(at(i, j) == at(j, i))) return false;
    return true;
  }
};

template <class F>
F trace(const Mat<F>& m) {
  F t{};
  for (int i = 0; i < m.rows && i < m.cols; ++i) t = t + m.at(i, i);
  return t;
}

// Kronecker product A ⊗ B.
template <class F>
Mat<F> kron(const Mat<F>& a, const Mat<F>& b) {
  Mat<F> r(a.rows * b.rows, a.cols * b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      const F& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (int p = 0; p < b.rows; ++p)
        for (int q = 0; q < b.cols; ++q)
          r.at(i * b.rows + p, j * b.cols + q) = x * b.at(p, q);
    }
  return r;
}

// In-place reduced row echelon form; returns pivot column indices.
template <class F>
std::vector<int> rref(Mat<F>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    F inv = F(Scalar(1)) / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      F f = m.at(i, c);
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int rank(Mat<F> m) {
  return static_cast<int>(rref(m).size());
}

// Basis of the right kernel {x : M x = 0}; deterministic (free columns
// ascending, free variable set to 1).
template <class F>
std::vector<std::vector<F>> kernel_basis(Mat<F> m) {
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<F>> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_piv[c]) continue;
    std::vector<F> v(m.cols);
    v[c] = F(Scalar(1));
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m.at(static_cast<int>(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve M x = b.  Returns particular solution (free variables zero) and the
// nullspace dimension, or nullopt when inconsistent.
template <class F>
std::optional<std::pair<std::vector<F>, int>> solve(const Mat<F>& m,
                                                    const std::vector<F>& b) {
  Mat<F> aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<int> piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  std::vector<F> x(m.cols);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(static_cast<int>(r), m.cols);
  return std::make_pair(std::move(x), m.cols - static_cast<int>(piv.size()));
}

// Orthogonal complement (w.r.t. the standard bilinear form) of the row span
// of `rows` inside the column space dimension n.
template <class F>
std::vector<std::vector<F>> orthogonal_complement(
    const std::vector<std::vector<F>>& rows, int n) {
  Mat<F> m(static_cast<int>(rows.size()), n);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  return kernel_basis(m);
}

using SVec = std::vector<Scalar>;

inline Scalar dot(const SVec& x, const SVec& y) {
  Scalar s(0);
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline SVec mat_vec(const Mat<Scalar>& m, const SVec& v) {
  SVec r(m.rows, Scalar(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

}  // namespace isopar
