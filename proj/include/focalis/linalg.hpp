#pragma once

#include <optional>
#include <string>
#include <vector>

#include "focalis/errors.hpp"
#include "focalis/jet.hpp"

namespace focalis {

/// Dense row-major matrix over a field or an integral domain.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, T(0)) {}
  Matrix(int rows, int cols, std::vector<T> entries) : r_(rows), c_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(rows) * cols) throw Error("ShapeError", "entry count mismatch");
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c) throw Error("ShapeError", "ragged rows");
      for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_cols(const std::vector<std::vector<T>>& cols) { return from_rows(cols).transpose(); }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  std::vector<T> row(int i) const { return {a_.begin() + i * c_, a_.begin() + (i + 1) * c_}; }
  std::vector<T> col(int j) const {
    std::vector<T> v;
    for (int i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  void set_row(int i, const std::vector<T>& v) {
    for (int j = 0; j < c_; ++j) (*this)(i, j) = v[j];
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
    Matrix m(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
    return m;
  }
  template <class Fn>
  auto map(Fn fn) const -> Matrix<decltype(fn(std::declval<T>()))> {
    using S = decltype(fn(std::declval<T>()));
    std::vector<S> v;
    v.reserve(a_.size());
    for (const auto& x : a_) v.push_back(fn(x));
    return Matrix<S>(r_, c_, std::move(v));
  }

  bool is_zero_matrix() const {
    for (const auto& x : a_)
      if (!is_zero(x)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw Error("ShapeError", "product dimension mismatch");
    Matrix m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (int j = 0; j < b.c_; ++j) m(i, j) = m(i, j) + a(i, k) * b(k, j);
      }
    return m;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix m = a;
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = m.a_[i] + b.a_[i];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix m = a;
    for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = m.a_[i] - b.a_[i];
    return m;
  }
  Matrix scaled(const T& s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = x * s;
    return m;
  }
  std::vector<T> apply(const std::vector<T>& x) const {
    std::vector<T> y(r_, T(0));
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) y[i] = y[i] + (*this)(i, j) * x[j];
    return y;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (size_t i = 0; i < a.a_.size(); ++i)
      if (!(a.a_[i] == b.a_[i])) return false;
    return true;
  }

 private:
  int r_ = 0;
  int c_ = 0;
  std::vector<T> a_;
};

template <class T>
using Vec = std::vector<T>;

/// Fraction-free (Bareiss) determinant; pivot = first nonzero entry of the
/// current column.
template <class T>
T det(Matrix<T> m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant of a non-square matrix");
  int n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  bool neg = false;
  for (int k = 0; k < n - 1; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (!is_zero(m(i, k))) {
        p = i;
        break;
      }
    if (p < 0) return T(0);
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      neg = !neg;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return neg ? T(-d) : d;
}

/// Determinant of a jet matrix by multilinearity in the rows.
template <class F>
Jet<F> det_jet(const Matrix<Jet<F>>& m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant of a non-square matrix");
  int n = m.rows();
  auto val = m.map([](const Jet<F>& j) { return j.val; });
  Jet<F> out(det(val));
  for (int r = 0; r < n; ++r) {
    auto mu = val, mv = val;
    for (int j = 0; j < n; ++j) {
      mu(r, j) = m(r, j).du;
      mv(r, j) = m(r, j).dv;
    }
    out.du = out.du + det(mu);
    out.dv = out.dv + det(mv);
  }
  return out;
}

/// Reduced row echelon form over a field; returns pivot columns.
template <class F>
std::vector<int> rref(Matrix<F>& m) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    F inv = F(1) / m(r, c);
    for (int j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class F>
int rank(Matrix<F> m) {
  return static_cast<int>(rref(m).size());
}

/// Rank over an integral domain via fraction-free elimination.
template <class T>
int rank_fraction_free(Matrix<T> m) {
  int r = 0;
  T prev(1);
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (int i = r + 1; i < m.rows(); ++i) {
      for (int j = c + 1; j < m.cols(); ++j) m(i, j) = exact_div(m(i, j) * m(r, c) - m(i, c) * m(r, j), prev);
      m(i, c) = T(0);
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

/// Basis of the right kernel over a field.
template <class F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m0) {
  Matrix<F> m = m0;
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec<F>> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec<F> x(m.cols(), F(0));
    x[f] = F(1);
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -m(static_cast<int>(i), f);
    out.push_back(std::move(x));
  }
  return out;
}

/// Some solution of m x = b over a field (free variables set to 0), or
/// nullopt when the system is inconsistent.
template <class F>
std::optional<Vec<F>> solve_consistent(const Matrix<F>& m, const Vec<F>& b) {
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto piv = rref(aug);
  Vec<F> x(m.cols(), F(0));
  for (size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == m.cols()) return std::nullopt;
    x[piv[i]] = aug(static_cast<int>(i), m.cols());
  }
  return x;
}

/// Next k-subset of {0..n-1} in lexicographic order; false when exhausted.
bool next_subset(std::vector<int>& s, int n);
std::vector<std::vector<int>> subsets(int n, int k);

/// All k x k minors, row subsets outer, column subsets inner, both lex.
template <class T>
std::vector<T> minors_k(const Matrix<T>& m, int k) {
  if (k > m.rows() || k > m.cols()) throw Error("ShapeError", "minor size exceeds matrix");
  std::vector<T> out;
  for (const auto& rs : subsets(m.rows(), k))
    for (const auto& cs : subsets(m.cols(), k)) out.push_back(det(m.submatrix(rs, cs)));
  return out;
}

/// Solves m x = b for square invertible m by Gaussian elimination; pivots
/// are the first `invertible` entry, so jets work when their values do.
template <class T>
Vec<T> solve(Matrix<T> m, Vec<T> b) {
  int n = m.rows();
  if (n != m.cols()) throw NotSquare("solve with a non-square matrix");
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (invertible(m(i, k))) {
        p = i;
        break;
      }
    if (p < 0) throw RankDrop("singular system");
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      std::swap(b[p], b[k]);
    }
    T inv = T(1) / m(k, k);
    for (int j = k; j < n; ++j) m(k, j) = m(k, j) * inv;
    b[k] = b[k] * inv;
    for (int i = 0; i < n; ++i) {
      if (i == k || is_zero(m(i, k))) continue;
      T f = m(i, k);
      for (int j = k; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
      b[i] = b[i] - f * b[k];
    }
  }
  return b;
}

template <class T>
Vec<T> cross3(const Vec<T>& a, const Vec<T>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  T s(0);
  for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

template <class T>
bool is_zero_vec(const Vec<T>& a) {
  for (const auto& x : a)
    if (!is_zero(x)) return false;
  return true;
}

/// Are a and b proportional (including either being zero)?
template <class F>
bool proportional(const Vec<F>& a, const Vec<F>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (!is_zero(a[i] * b[j] - a[j] * b[i])) return false;
  return true;
}

template <class F>
Vec<F> vec_scale(const Vec<F>& a, const F& s) {
  Vec<F> r = a;
  for (auto& x : r) x = x * s;
  return r;
}

template <class F>
Vec<F> vec_add(const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

template <class F>
Vec<F> vec_sub(const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

/// Scales a nonzero vector so that its first nonzero entry is 1.
template <class F>
Vec<F> normalize_first(const Vec<F>& a) {
  for (const auto& x : a)
    if (!is_zero(x)) return vec_scale(a, F(1) / x);
  return a;
}

}  // namespace focalis
