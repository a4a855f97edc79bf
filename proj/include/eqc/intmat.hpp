#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eqc/grading.hpp"

namespace eqc {

using BigInt = boost::multiprecision::cpp_int;

inline Int sadd(Int a, Int b) { return checked_add(a, b); }
inline Int smul(Int a, Int b) { return checked_mul(a, b); }
inline BigInt sadd(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt smul(const BigInt& a, const BigInt& b) { return a * b; }

inline std::string to_str(Int x) { return std::to_string(x); }
inline std::string to_str(const BigInt& x) { return x.str(); }

/** \brief Dense matrix over Int or BigInt, row-major. */
template <class T>
struct MatT {
  int rows = 0, cols = 0;
  std::vector<T> a;

  MatT() = default;
  MatT(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}
  MatT(std::initializer_list<std::initializer_list<T>> init) {
    rows = static_cast<int>(init.size());
    cols = rows ? static_cast<int>(init.begin()->size()) : 0;
    for (auto& r : init) {
      if (static_cast<int>(r.size()) != cols) throw Error("ragged matrix literal");
      a.insert(a.end(), r.begin(), r.end());
    }
  }

  static MatT identity(int n) {
    MatT m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static MatT column(const std::vector<T>& v) {
    MatT m(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
    return m;
  }

  T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const MatT&) const = default;

  MatT operator*(const MatT& o) const {
    if (cols != o.rows) throw Error("matrix shape mismatch in product");
    MatT r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const T& x = (*this)(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.cols; ++j) r(i, j) = sadd(r(i, j), smul(x, o(k, j)));
      }
    return r;
  }
  MatT operator+(const MatT& o) const {
    if (rows != o.rows || cols != o.cols) throw Error("matrix shape mismatch in sum");
    MatT r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = sadd(r.a[i], o.a[i]);
    return r;
  }
  MatT operator-() const {
    MatT r = *this;
    for (auto& x : r.a) x = -x;
    return r;
  }
  MatT operator-(const MatT& o) const { return *this + (-o); }
  MatT operator*(const T& k) const {
    MatT r = *this;
    for (auto& x : r.a) x = smul(x, k);
    return r;
  }

  MatT transpose() const {
    MatT r(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const T& x) { return x == 0; });
  }

  std::vector<T> col(int j) const {
    std::vector<T> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
  }

  void swap_rows(int i, int j) {
    for (int c = 0; c < cols; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  // row_i += k * row_j
  void add_row(int i, int j, const T& k) {
    if (k == 0) return;
    for (int c = 0; c < cols; ++c) (*this)(i, c) = sadd((*this)(i, c), smul(k, (*this)(j, c)));
  }
  void add_col(int i, int j, const T& k) {
    if (k == 0) return;
    for (int r = 0; r < rows; ++r) (*this)(r, i) = sadd((*this)(r, i), smul(k, (*this)(r, j)));
  }
  void neg_row(int i) {
    for (int c = 0; c < cols; ++c) (*this)(i, c) = -(*this)(i, c);
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < rows; ++i) {
      s += i ? ", [" : "[";
      for (int j = 0; j < cols; ++j) s += (j ? "," : "") + to_str((*this)(i, j));
      s += "]";
    }
    return s + "]";
  }
};

using Mat = MatT<Int>;
using BigMat = MatT<BigInt>;

inline BigMat to_big(const Mat& m) {
  BigMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = m.a[i];
  return r;
}

inline Mat to_small(const BigMat& m) {
  Mat r(m.rows, m.cols);
  const BigInt lim = std::numeric_limits<Int>::max();
  for (size_t i = 0; i < m.a.size(); ++i) {
    if (m.a[i] > lim || m.a[i] < -lim) throw Error("integer overflow converting matrix");
    r.a[i] = static_cast<Int>(m.a[i]);
  }
  return r;
}

template <class T>
MatT<T> hstack(const MatT<T>& x, const MatT<T>& y) {
  if (x.rows != y.rows) throw Error("hstack row mismatch");
  MatT<T> r(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
    for (int j = 0; j < y.cols; ++j) r(i, x.cols + j) = y(i, j);
  }
  return r;
}

namespace detail {

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace detail

/** \brief U * A * V = D, D diagonal with d_i | d_{i+1}, U and V unimodular. */
struct SmithForm {
  BigMat U, D, V;
  int rank = 0;
  std::vector<Int> diagonal() const {
    std::vector<Int> d;
    for (int i = 0; i < std::min(D.rows, D.cols); ++i) d.push_back(static_cast<Int>(D(i, i)));
    return d;
  }
};

inline SmithForm smith(const BigMat& A) {
  using detail::babs;
  SmithForm s{BigMat::identity(A.rows), A, BigMat::identity(A.cols), 0};
  BigMat& D = s.D;
  const int m = A.rows, n = A.cols;
  for (int t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      BigInt best = 0;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j) {
          BigInt v = babs(D(i, j));
          if (v != 0 && (best == 0 || v < best)) best = v, pi = i, pj = j;
        }
      if (pi < 0) return s;
      D.swap_rows(t, pi); s.U.swap_rows(t, pi);
      D.swap_cols(t, pj); s.V.swap_cols(t, pj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        BigInt q = detail::floor_div(D(i, t), D(t, t));
        D.add_row(i, t, -q); s.U.add_row(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        BigInt q = detail::floor_div(D(t, j), D(t, t));
        D.add_col(j, t, -q); s.V.add_col(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) { bad = i; break; }
      if (bad < 0) break;
      D.add_row(t, bad, BigInt(1)); s.U.add_row(t, bad, BigInt(1));
    }
    if (D(t, t) < 0) { D.neg_row(t); s.U.neg_row(t); }
    s.rank = t + 1;
  }
  return s;
}

inline SmithForm smith(const Mat& A) { return smith(to_big(A)); }

// Fraction-free determinant.
inline BigInt determinant(BigMat M) {
  const int n = M.rows;
  if (n != M.cols) throw Error("determinant of a non-square matrix");
  if (n == 0) return 1;
  BigInt prev = 1, sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && M(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) { M.swap_rows(k, piv); sign = -sign; }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

// Row-style Hermite normal form of the column lattice of G; canonical generators as columns.
inline BigMat lattice_hnf(const BigMat& G) {
  BigMat H = G.transpose();
  const int m = H.rows, n = H.cols;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    for (;;) {
      int piv = -1;
      BigInt best = 0;
      for (int i = r; i < m; ++i) {
        BigInt v = detail::babs(H(i, c));
        if (v != 0 && (best == 0 || v < best)) best = v, piv = i;
      }
      if (piv < 0) break;
      H.swap_rows(r, piv);
      bool done = true;
      for (int i = r + 1; i < m; ++i) {
        H.add_row(i, r, BigInt(-detail::floor_div(H(i, c), H(r, c))));
        if (H(i, c) != 0) done = false;
      }
      if (done) {
        if (H(r, c) < 0) H.neg_row(r);
        for (int i = 0; i < r; ++i) H.add_row(i, r, BigInt(-detail::floor_div(H(i, c), H(r, c))));
        ++r;
        break;
      }
    }
  }
  BigMat out(r, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = H(i, j);
  return out.transpose();
}

inline Mat lattice_hnf(const Mat& G) { return to_small(lattice_hnf(to_big(G))); }

// Z-basis of {x : A x = 0}, as columns, in Hermite form.
inline Mat kernel(const Mat& A) {
  SmithForm s = smith(A);
  BigMat K(A.cols, A.cols - s.rank);
  for (int j = s.rank; j < A.cols; ++j)
    for (int i = 0; i < A.cols; ++i) K(i, j - s.rank) = s.V(i, j);
  return to_small(lattice_hnf(K));
}

inline bool same_lattice(const Mat& a, const Mat& b) {
  if (a.rows != b.rows) throw Error("lattices live in different ambient ranks");
  return lattice_hnf(to_big(a)) == lattice_hnf(to_big(b));
}

inline Mat empty_cols(int rows) { return Mat(rows, 0); }

inline bool in_lattice(const Mat& G, const std::vector<Int>& v) {
  return same_lattice(G, hstack(G, Mat::column(v)));
}

}  // namespace eqc
