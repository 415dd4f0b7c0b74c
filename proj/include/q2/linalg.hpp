#ifndef Q2_LINALG_HPP
#define Q2_LINALG_HPP

#include "q2/scalar.hpp"

#include <optional>
#include <vector>

namespace q2 {

using Vec = std::vector<Scalar>;

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Scalar& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = Scalar(1);
    return m;
  }

  bool is_zero() const {
    for (const auto& v : a)
      if (!v.is_zero()) return false;
    return true;
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

inline Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::logic_error("mat mul shape mismatch");
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Scalar& v = x.at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Scalar& w = y.at(k, j);
        if (!w.is_zero()) r.at(i, j) += v * w;
      }
    }
  return r;
}

inline Mat operator+(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::logic_error("mat add shape mismatch");
  Mat r = x;
  for (size_t k = 0; k < r.a.size(); ++k) r.a[k] += y.a[k];
  return r;
}

inline Mat operator-(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::logic_error("mat sub shape mismatch");
  Mat r = x;
  for (size_t k = 0; k < r.a.size(); ++k) r.a[k] -= y.a[k];
  return r;
}

inline Mat operator*(const Scalar& s, const Mat& x) {
  Mat r = x;
  for (auto& v : r.a) v = s * v;
  return r;
}

inline Vec operator*(const Mat& m, const Vec& v) {
  if (m.cols != static_cast<int>(v.size()))
    throw std::logic_error("mat vec shape mismatch");
  Vec r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

inline Mat mat_pow(Mat m, int e) {
  if (m.rows != m.cols) throw std::logic_error("mat_pow: square required");
  Mat r = Mat::identity(m.rows);
  for (int k = 0; k < e; ++k) r = r * m;
  return r;
}

inline Mat hstack(const Mat& x, const Mat& y) {
  if (x.rows != y.rows) throw std::logic_error("hstack shape mismatch");
  Mat r(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

inline Mat vstack(const Mat& x, const Mat& y) {
  if (x.cols != y.cols && x.rows != 0 && y.rows != 0)
    throw std::logic_error("vstack shape mismatch");
  Mat r(x.rows + y.rows, x.rows ? x.cols : y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
  return r;
}

inline Mat cols_from(const Mat& m, const std::vector<int>& idx) {
  Mat r(m.rows, static_cast<int>(idx.size()));
  for (int i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < idx.size(); ++j) r.at(i, static_cast<int>(j)) = m.at(i, idx[j]);
  return r;
}

namespace detail {

/// Row echelon via Gauss-Jordan with full pivoting restricted to the first
/// `pivot_cols` columns. Pivots must be units of the scalar ring; rational
/// entries are preferred for speed. Throws ZeroDivisor when only
/// non-invertible nonzero candidates remain.
struct Echelon {
  Mat m;
  std::vector<int> perm;  // perm[j] = original index of working column j
  int rank = 0;
};

inline Echelon reduce(Mat m, int pivot_cols) {
  Echelon e;
  e.perm.resize(m.cols);
  for (int j = 0; j < m.cols; ++j) e.perm[j] = j;
  int k = 0;
  while (k < m.rows && k < pivot_cols) {
    int pr = -1, pc = -1;
    bool saw_nonzero = false;
    // pass 1: rational pivot; pass 2: any unit pivot
    for (int pass = 0; pass < 2 && pr < 0; ++pass) {
      for (int j = k; j < pivot_cols && pr < 0; ++j) {
        for (int i = k; i < m.rows; ++i) {
          const Scalar& v = m.at(i, j);
          if (v.is_zero()) continue;
          saw_nonzero = true;
          if (pass == 0 ? v.is_rational() : scalar_is_unit(v)) {
            pr = i;
            pc = j;
            break;
          }
        }
      }
    }
    if (pr < 0) {
      if (saw_nonzero)
        throw ZeroDivisor("elimination stuck: no unit pivot available");
      break;
    }
    if (pc != k) {
      for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, pc), m.at(i, k));
      std::swap(e.perm[pc], e.perm[k]);
    }
    if (pr != k)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(k, j));
    Scalar inv = scalar_inverse(m.at(k, k));
    for (int j = k; j < m.cols; ++j) m.at(k, j) = inv * m.at(k, j);
    for (int i = 0; i < m.rows; ++i) {
      if (i == k || m.at(i, k).is_zero()) continue;
      Scalar f = m.at(i, k);
      for (int j = k; j < m.cols; ++j) m.at(i, j) -= f * m.at(k, j);
    }
    ++k;
  }
  e.rank = k;
  e.m = std::move(m);
  return e;
}

}  // namespace detail

inline int rank(const Mat& m) { return detail::reduce(m, m.cols).rank; }

/// Basis of { x : m x = 0 }, one Vec per basis vector.
inline std::vector<Vec> kernel_basis(const Mat& m) {
  auto e = detail::reduce(m, m.cols);
  std::vector<Vec> out;
  for (int j = e.rank; j < m.cols; ++j) {
    Vec v(m.cols);
    v[e.perm[j]] = Scalar(1);
    for (int k = 0; k < e.rank; ++k) v[e.perm[k]] = -e.m.at(k, j);
    out.push_back(std::move(v));
  }
  return out;
}

/// Solves A X = B. Returns nullopt when inconsistent; when A does not have
/// full column rank the returned solution sets free variables to zero.
inline std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows != b.rows) throw std::logic_error("solve shape mismatch");
  auto e = detail::reduce(hstack(a, b), a.cols);
  // inconsistent iff some row beyond rank has nonzero B-part
  for (int i = e.rank; i < e.m.rows; ++i)
    for (int j = a.cols; j < e.m.cols; ++j)
      if (!e.m.at(i, j).is_zero()) return std::nullopt;
  Mat x(a.cols, b.cols);
  for (int k = 0; k < e.rank; ++k)
    for (int j = 0; j < b.cols; ++j)
      x.at(e.perm[k], j) = e.m.at(k, a.cols + j);
  return x;
}

inline Mat inverse(const Mat& a) {
  if (a.rows != a.cols) throw std::logic_error("inverse: square required");
  auto x = solve(a, Mat::identity(a.rows));
  if (!x || detail::reduce(a, a.cols).rank != a.rows)
    throw std::logic_error("inverse: singular matrix");
  return *x;
}

inline Mat basis_to_mat(const std::vector<Vec>& vs) {
  if (vs.empty()) return Mat(0, 0);
  Mat m(static_cast<int>(vs[0].size()), static_cast<int>(vs.size()));
  for (size_t j = 0; j < vs.size(); ++j)
    for (size_t i = 0; i < vs[j].size(); ++i)
      m.at(static_cast<int>(i), static_cast<int>(j)) = vs[j][i];
  return m;
}

/// Independent columns of [cur | extra] beyond those of cur, reported as a
/// column-index list into extra. Used by closure searches.
inline std::vector<int> new_independent_cols(const Mat& cur, const Mat& extra) {
  std::vector<int> out;
  Mat acc = cur;
  int r = acc.cols == 0 ? 0 : rank(acc);
  for (int j = 0; j < extra.cols; ++j) {
    Mat cand = hstack(acc, cols_from(extra, {j}));
    int r2 = rank(cand);
    if (r2 > r) {
      out.push_back(j);
      acc = std::move(cand);
      r = r2;
    }
  }
  return out;
}

}  // namespace q2

#endif
