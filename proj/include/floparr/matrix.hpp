#ifndef FLOPARR_MATRIX_HPP
#define FLOPARR_MATRIX_HPP

#include <optional>
#include <vector>

#include "floparr/errors.hpp"
#include "floparr/rational.hpp"

namespace floparr {

// Small dense integer matrix, row major.  All the lattices in play have
// dimension at most 9, so no attempt is made to be clever.
struct Mat {
  int n = 0;
  std::vector<Int> a;

  Mat() = default;
  explicit Mat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  Int at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const Mat& o) const { return n == o.n && a == o.a; }

  Mat transpose() const {
    Mat t(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  std::vector<Int> col(int j) const {
    std::vector<Int> c(n);
    for (int i = 0; i < n; ++i) c[i] = at(i, j);
    return c;
  }

  void set_col(int j, const std::vector<Int>& c) {
    for (int i = 0; i < n; ++i) at(i, j) = c[i];
  }
};

inline Mat operator*(const Mat& x, const Mat& y) {
  Mat z(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      Int v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

template <typename T>
std::vector<T> mat_apply(const Mat& m, const std::vector<T>& v) {
  std::vector<T> w(m.n, T(0));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) w[i] += T(m.at(i, j)) * v[j];
  return w;
}

inline Int det(const Mat& m) {
  // Fraction-free Gaussian elimination (Bareiss).
  int n = m.n;
  std::vector<std::vector<__int128>> b(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = m.at(i, j);
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (b[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (b[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(b[k], b[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        b[i][j] = (b[i][j] * b[k][k] - b[i][k] * b[k][j]) / prev;
    prev = b[k][k];
  }
  return sign * static_cast<Int>(b[n - 1][n - 1]);
}

// Solves m x = rhs exactly over the rationals; nullopt if singular.
inline std::optional<std::vector<Rat>> solve(const Mat& m,
                                             const std::vector<Int>& rhs) {
  int n = m.n;
  std::vector<std::vector<Rat>> b(n, std::vector<Rat>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b[i][j] = Rat(m.at(i, j));
    b[i][n] = Rat(rhs[i]);
  }
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (b[i][k] != Rat(0)) {
        p = i;
        break;
      }
    if (p < 0) return std::nullopt;
    std::swap(b[k], b[p]);
    Rat piv = b[k][k];
    for (int j = k; j <= n; ++j) b[k][j] /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == k || b[i][k] == Rat(0)) continue;
      Rat f = b[i][k];
      for (int j = k; j <= n; ++j) b[i][j] -= f * b[k][j];
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i][n];
  return x;
}

// Inverse of a matrix with det = ±1, via the adjugate (stays integral).
inline Mat inverse_unimodular(const Mat& m) {
  Int d = det(m);
  if (d != 1 && d != -1)
    fail(ErrorCode::Internal, "inverse_unimodular: determinant not ±1");
  int n = m.n;
  Mat inv(n);
  if (n == 1) {
    inv.at(0, 0) = d;
    return inv;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat minor(n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(rr, cc) = m.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = det(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      inv.at(i, j) = d * cof;  // d = 1/det
    }
  return inv;
}

// Primitive integer spanning vector of the kernel of a rank n-1 system of
// covectors in dimension n; nullopt if the kernel is not one dimensional.
inline std::optional<std::vector<Int>> kernel_line(
    const std::vector<std::vector<Int>>& rows, int n) {
  std::vector<std::vector<Rat>> b;
  for (const auto& r : rows) {
    std::vector<Rat> row(n);
    for (int j = 0; j < n; ++j) row[j] = Rat(r[j]);
    b.push_back(row);
  }
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && rank < static_cast<int>(b.size()); ++col) {
    int p = -1;
    for (int i = rank; i < static_cast<int>(b.size()); ++i)
      if (b[i][col] != Rat(0)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(b[rank], b[p]);
    Rat piv = b[rank][col];
    for (int j = 0; j < n; ++j) b[rank][j] /= piv;
    for (int i = 0; i < static_cast<int>(b.size()); ++i) {
      if (i == rank || b[i][col] == Rat(0)) continue;
      Rat f = b[i][col];
      for (int j = 0; j < n; ++j) b[i][j] -= f * b[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank != n - 1) return std::nullopt;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = -1;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) {
      free_col = j;
      break;
    }
  std::vector<Rat> x(n, Rat(0));
  x[free_col] = Rat(1);
  for (int i = 0; i < rank; ++i) x[pivot_col[i]] = -b[i][free_col];
  Int lcm = 1;
  for (const Rat& v : x) lcm = std::lcm(lcm, v.denominator());
  std::vector<Int> out(n);
  for (int j = 0; j < n; ++j)
    out[j] = boost::rational_cast<Int>(x[j] * Rat(lcm));
  canonicalize(out);
  return out;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<Int>& b) {
  T s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * T(b[i]);
  return s;
}

inline Int doti(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace floparr

#endif
