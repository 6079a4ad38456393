#pragma once

// Exact matrices and subspaces over a CoefficientField.
//
// Matrices act on column vectors: (M x)_r = sum_c M[r][c] x[c].
// A subspace is a Mat whose rows are basis vectors, kept in reduced row
// echelon form with zero rows dropped; that form is canonical, so two
// subspaces are equal iff their Mats compare equal.

#include <optional>
#include <vector>

#include "finalg/field.hpp"

namespace finalg {

struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<int> a;  // row-major field element indices

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  std::vector<int> row(int r) const {
    return std::vector<int>(a.begin() + static_cast<size_t>(r) * cols,
                            a.begin() + static_cast<size_t>(r + 1) * cols);
  }
  void set_row(int r, const std::vector<int>& v) {
    for (int c = 0; c < cols; ++c) at(r, c) = v[c];
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool operator<(const Mat& o) const {
    if (rows != o.rows) return rows < o.rows;
    if (cols != o.cols) return cols < o.cols;
    return a < o.a;
  }
};

inline Mat mat_mul(const CoefficientField& F, const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw field_error("matrix dimension mismatch");
  Mat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      int aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
    }
  return C;
}

inline std::vector<int> mat_vec(const CoefficientField& F, const Mat& A,
                                const std::vector<int>& x) {
  if (A.cols != static_cast<int>(x.size()))
    throw field_error("matrix dimension mismatch");
  std::vector<int> y(A.rows, 0);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      if (A.at(i, j) && x[j]) y[i] = F.add(y[i], F.mul(A.at(i, j), x[j]));
  return y;
}

inline Mat mat_add(const CoefficientField& F, const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols)
    throw field_error("matrix dimension mismatch");
  Mat C(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
  return C;
}

inline Mat mat_sub(const CoefficientField& F, const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols)
    throw field_error("matrix dimension mismatch");
  Mat C(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.sub(A.a[i], B.a[i]);
  return C;
}

inline Mat mat_scale(const CoefficientField& F, int s, const Mat& A) {
  Mat C(A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.mul(s, A.a[i]);
  return C;
}

inline Mat mat_pow(const CoefficientField& F, Mat A, long long e) {
  if (A.rows != A.cols) throw field_error("matrix power needs a square matrix");
  Mat R = Mat::identity(A.rows);
  for (; e > 0; e >>= 1) {
    if (e & 1) R = mat_mul(F, R, A);
    A = mat_mul(F, A, A);
  }
  return R;
}

inline Mat transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

/// Reduced row echelon form with zero rows dropped.
inline Mat rref(const CoefficientField& F, Mat M) {
  int lead = 0;
  int r = 0;
  for (; r < M.rows && lead < M.cols; ++lead) {
    int piv = -1;
    for (int i = r; i < M.rows; ++i)
      if (M.at(i, lead)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int c = 0; c < M.cols; ++c) std::swap(M.at(piv, c), M.at(r, c));
    int s = F.inv(M.at(r, lead));
    for (int c = 0; c < M.cols; ++c) M.at(r, c) = F.mul(s, M.at(r, c));
    for (int i = 0; i < M.rows; ++i) {
      if (i == r || M.at(i, lead) == 0) continue;
      int f = M.at(i, lead);
      for (int c = 0; c < M.cols; ++c)
        M.at(i, c) = F.sub(M.at(i, c), F.mul(f, M.at(r, c)));
    }
    ++r;
  }
  Mat out(r, M.cols);
  std::copy(M.a.begin(), M.a.begin() + static_cast<size_t>(r) * M.cols,
            out.a.begin());
  return out;
}

inline int rank(const CoefficientField& F, const Mat& M) {
  return rref(F, M).rows;
}

/// Row basis (in RREF) of the right null space {x : M x = 0}.
inline Mat kernel(const CoefficientField& F, const Mat& M) {
  Mat R = rref(F, M);
  std::vector<int> pivot_col(R.rows);
  std::vector<bool> is_pivot(M.cols, false);
  for (int i = 0; i < R.rows; ++i) {
    int c = 0;
    while (R.at(i, c) == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  Mat K(M.cols - R.rows, M.cols);
  int k = 0;
  for (int free = 0; free < M.cols; ++free) {
    if (is_pivot[free]) continue;
    K.at(k, free) = 1;
    for (int i = 0; i < R.rows; ++i)
      K.at(k, pivot_col[i]) = F.neg(R.at(i, free));
    ++k;
  }
  return rref(F, K);
}

inline Mat stack_rows(const Mat& A, const Mat& B) {
  if (A.rows == 0) return B;
  if (B.rows == 0) return A;
  if (A.cols != B.cols) throw field_error("matrix dimension mismatch");
  Mat S(A.rows + B.rows, A.cols);
  std::copy(A.a.begin(), A.a.end(), S.a.begin());
  std::copy(B.a.begin(), B.a.end(), S.a.begin() + A.a.size());
  return S;
}

inline Mat subspace_span(const CoefficientField& F,
                         const std::vector<std::vector<int>>& vecs, int dim) {
  Mat M(static_cast<int>(vecs.size()), dim);
  for (size_t i = 0; i < vecs.size(); ++i) M.set_row(static_cast<int>(i), vecs[i]);
  return rref(F, M);
}

inline Mat subspace_sum(const CoefficientField& F, const Mat& U, const Mat& W) {
  return rref(F, stack_rows(U, W));
}

/// Intersection via the kernel of the stacked basis: if (c, d) is in the
/// kernel of [U^T | W^T] columns then c.U = -d.W lies in both spaces.
inline Mat subspace_intersect(const CoefficientField& F, const Mat& U,
                              const Mat& W) {
  int cols = U.cols ? U.cols : W.cols;
  if (U.rows == 0 || W.rows == 0) return Mat(0, cols);
  Mat S(cols, U.rows + W.rows);
  for (int i = 0; i < U.rows; ++i)
    for (int c = 0; c < cols; ++c) S.at(c, i) = U.at(i, c);
  for (int i = 0; i < W.rows; ++i)
    for (int c = 0; c < cols; ++c) S.at(c, U.rows + i) = W.at(i, c);
  Mat K = kernel(F, S);
  Mat out(K.rows, cols);
  for (int k = 0; k < K.rows; ++k)
    for (int i = 0; i < U.rows; ++i) {
      int ci = K.at(k, i);
      if (ci == 0) continue;
      for (int c = 0; c < cols; ++c)
        out.at(k, c) = F.add(out.at(k, c), F.mul(ci, U.at(i, c)));
    }
  return rref(F, out);
}

inline bool subspace_contains(const CoefficientField& F, const Mat& U,
                              std::vector<int> v) {
  for (int i = 0; i < U.rows; ++i) {
    int c = 0;
    while (U.at(i, c) == 0) ++c;
    if (v[c] == 0) continue;
    int f = v[c];
    for (int j = 0; j < U.cols; ++j) v[j] = F.sub(v[j], F.mul(f, U.at(i, j)));
  }
  for (int x : v)
    if (x) return false;
  return true;
}

inline bool subspace_leq(const CoefficientField& F, const Mat& U, const Mat& W) {
  for (int i = 0; i < U.rows; ++i)
    if (!subspace_contains(F, W, U.row(i))) return false;
  return true;
}

inline std::optional<Mat> inverse(const CoefficientField& F, const Mat& A) {
  if (A.rows != A.cols) throw field_error("inverse needs a square matrix");
  int n = A.rows;
  Mat W(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) W.at(i, j) = A.at(i, j);
    W.at(i, n + i) = 1;
  }
  Mat R = rref(F, W);
  if (R.rows < n) return std::nullopt;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (R.at(i, j) != (i == j ? 1 : 0)) return std::nullopt;
  Mat Inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Inv.at(i, j) = R.at(i, n + j);
  return Inv;
}

inline int det(const CoefficientField& F, Mat A) {
  if (A.rows != A.cols) throw field_error("determinant needs a square matrix");
  int d = 1;
  for (int c = 0; c < A.cols; ++c) {
    int piv = -1;
    for (int i = c; i < A.rows; ++i)
      if (A.at(i, c)) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(c, j));
      d = F.neg(d);
    }
    d = F.mul(d, A.at(c, c));
    int s = F.inv(A.at(c, c));
    for (int i = c + 1; i < A.rows; ++i) {
      if (A.at(i, c) == 0) continue;
      int f = F.mul(s, A.at(i, c));
      for (int j = c; j < A.cols; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(c, j)));
    }
  }
  return d;
}

}  // namespace finalg
