#pragma once
// Exact integer matrices: the change-of-basis arithmetic everything else
// rides on. Supports the rectangular shapes needed internally (pushforward
// to a smaller wedge, kernel bases); the GL_k(Z) interface is square.

#include <vector>

#include "checked.hpp"

namespace su2b {

class IntMatrix {
  int rows_ = 0, cols_ = 0;
  std::vector<i64> e_;  // row-major

 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, 0) {
    if (rows <= 0 || cols <= 0) throw PreconditionError("matrix dimensions must be positive");
  }
  static IntMatrix identity(int k) {
    IntMatrix m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
  }
  static IntMatrix from_rows(const std::vector<std::vector<i64>>& rows) {
    if (rows.empty() || rows[0].empty()) throw PreconditionError("empty matrix");
    IntMatrix m(int(rows.size()), int(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
      if (int(rows[i].size()) != m.cols_) throw PreconditionError("ragged matrix rows");
      for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  i64& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  i64 at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  bool operator==(const IntMatrix&) const = default;

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  // Products accumulate in 128 bits so that cancelling intermediates never
  // spuriously overflow; only an unrepresentable final entry throws.
  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw PreconditionError("matrix shape mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < o.cols_; ++j) {
        __int128 acc = 0;
        for (int l = 0; l < cols_; ++l) {
          __int128 term;
          if (__builtin_mul_overflow(__int128(at(i, l)), __int128(o.at(l, j)), &term) ||
              __builtin_add_overflow(acc, term, &acc))
            throw OverflowError();
        }
        if (acc > __int128(INT64_MAX) || acc < __int128(INT64_MIN)) throw OverflowError();
        r.at(i, j) = i64(acc);
      }
    return r;
  }

  std::vector<i64> apply(const std::vector<i64>& v) const {
    if (int(v.size()) != cols_) throw PreconditionError("vector length mismatch");
    std::vector<i64> r(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
      __int128 acc = 0;
      for (int j = 0; j < cols_; ++j) {
        __int128 term;
        if (__builtin_mul_overflow(__int128(at(i, j)), __int128(v[j]), &term) ||
            __builtin_add_overflow(acc, term, &acc))
          throw OverflowError();
      }
      if (acc > __int128(INT64_MAX) || acc < __int128(INT64_MIN)) throw OverflowError();
      r[i] = i64(acc);
    }
    return r;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  // Bareiss fraction-free determinant: exact, divisions provably exact.
  // Intermediates are minors of the input, held in 128 bits.
  i64 det() const {
    if (rows_ != cols_) throw PreconditionError("determinant of non-square matrix");
    using detail::i128;
    int n = rows_;
    std::vector<i128> a(e_.begin(), e_.end());
    auto w = [&](int i, int j) -> i128& { return a[size_t(i) * n + j]; };
    i128 sign = 1, prev = 1;
    for (int p = 0; p < n - 1; ++p) {
      if (w(p, p) == 0) {
        int r = -1;
        for (int i = p + 1; i < n; ++i)
          if (w(i, p) != 0) {
            r = i;
            break;
          }
        if (r == -1) return 0;
        for (int j = 0; j < n; ++j) std::swap(w(p, j), w(r, j));
        sign = -sign;
      }
      for (int i = p + 1; i < n; ++i)
        for (int j = p + 1; j < n; ++j) {
          i128 num = detail::add128(detail::mul128(w(i, j), w(p, p)),
                                    -detail::mul128(w(i, p), w(p, j)));
          w(i, j) = num / prev;  // exact by Bareiss
        }
      prev = w(p, p);
    }
    return detail::narrow128(sign * w(n - 1, n - 1));
  }

  bool is_unimodular() const {
    if (rows_ != cols_) return false;
    i64 d = det();
    return d == 1 || d == -1;
  }

  // Inverse of a unimodular matrix via the adjugate; exact because
  // det = +-1. Sizes here are k <= 8 so cofactor minors are cheap.
  IntMatrix inverse_unimodular() const {
    if (rows_ != cols_) throw PreconditionError("inverse of non-square matrix");
    i64 d = det();
    if (d != 1 && d != -1) throw PreconditionError("matrix is not unimodular");
    int n = rows_;
    IntMatrix inv(n, n);
    if (n == 1) {
      inv.at(0, 0) = d;
      return inv;
    }
    IntMatrix minor(n - 1, n - 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int r = 0, mr = 0; r < n; ++r) {
          if (r == i) continue;
          for (int c = 0, mc = 0; c < n; ++c) {
            if (c == j) continue;
            minor.at(mr, mc++) = at(r, c);
          }
          ++mr;
        }
        i64 cof = minor.det();
        if ((i + j) % 2 == 1) cof = checked_neg(cof);
        inv.at(j, i) = checked_mul(cof, d);  // adjugate / det with det = +-1
      }
    return inv;
  }
};

}  // namespace su2b
