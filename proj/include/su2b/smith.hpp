#pragma once
// Smith normal form and the unimodular-completion utilities built on it:
// basis completion for primitive classes, kernel bases of integer
// functionals, and the deterministic random GL_k(Z) test generator.

#include <cstdlib>
#include <random>
#include <vector>

#include "int_matrix.hpp"

namespace su2b {

struct SNF {
  IntMatrix U, D, V;  // U * M * V = D, U and V unimodular, D diagonal
};

namespace detail {
// Quotient with |a - q*b| <= |b|/2: balanced remainders keep elimination
// entries from swelling.
inline i64 div_round(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  if (2 * std::abs(r) > std::abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
  return q;
}

inline i128 div_round128(i128 a, i128 b) {
  i128 q = a / b, r = a % b;
  if (2 * abs128(r) > abs128(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
  return q;
}
}  // namespace detail

namespace detail {

// Alternating Hermite passes with balanced quotients and immediate
// modulo-pivot reduction of every off-pivot entry.  The eager reduction is
// what keeps entries near determinant scale; interleaved row/column clearing
// without it swells doubly exponentially.
inline SNF snf_single_path(const IntMatrix& m) {
  using detail::i128;
  int rows = m.rows(), cols = m.cols();
  std::vector<i128> a(size_t(rows) * cols), u(size_t(rows) * rows, 0), v(size_t(cols) * cols, 0);
  auto A = [&](int i, int j) -> i128& { return a[size_t(i) * cols + j]; };
  auto U = [&](int i, int j) -> i128& { return u[size_t(i) * rows + j]; };
  auto V = [&](int i, int j) -> i128& { return v[size_t(i) * cols + j]; };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A(i, j) = m.at(i, j);
  for (int i = 0; i < rows; ++i) U(i, i) = 1;
  for (int i = 0; i < cols; ++i) V(i, i) = 1;

  auto row_sub = [&](int i, int j, i128 q) {  // row_i -= q * row_j
    for (int c = 0; c < cols; ++c) A(i, c) = detail::add128(A(i, c), -detail::mul128(q, A(j, c)));
    for (int c = 0; c < rows; ++c) U(i, c) = detail::add128(U(i, c), -detail::mul128(q, U(j, c)));
  };
  auto col_sub = [&](int i, int j, i128 q) {  // col_i -= q * col_j
    for (int r = 0; r < rows; ++r) A(r, i) = detail::add128(A(r, i), -detail::mul128(q, A(r, j)));
    for (int r = 0; r < cols; ++r) V(r, i) = detail::add128(V(r, i), -detail::mul128(q, V(r, j)));
  };
  auto row_swap = [&](int i, int j) {
    for (int c = 0; c < cols; ++c) std::swap(A(i, c), A(j, c));
    for (int c = 0; c < rows; ++c) std::swap(U(i, c), U(j, c));
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(A(r, i), A(r, j));
    for (int r = 0; r < cols; ++r) std::swap(V(r, i), V(r, j));
  };

  int steps = std::min(rows, cols);

  // Row ops: zero below each column pivot, make it positive, reduce the
  // entries above it into (-p/2, p/2].
  auto column_echelon = [&]() {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
      bool have_pivot = false;
      for (;;) {
        int i0 = -1;
        for (int i = r; i < rows; ++i)
          if (A(i, c) != 0 && (i0 == -1 || detail::abs128(A(i, c)) < detail::abs128(A(i0, c))))
            i0 = i;
        if (i0 == -1) break;
        have_pivot = true;
        if (i0 != r) row_swap(i0, r);
        bool done = true;
        for (int i = r + 1; i < rows; ++i)
          if (A(i, c) != 0) {
            row_sub(i, r, detail::div_round128(A(i, c), A(r, c)));
            if (A(i, c) != 0) done = false;
          }
        if (done) break;
      }
      if (!have_pivot) continue;
      if (A(r, c) < 0) {
        for (int j = 0; j < cols; ++j) A(r, j) = -A(r, j);
        for (int j = 0; j < rows; ++j) U(r, j) = -U(r, j);
      }
      for (int i = 0; i < r; ++i)
        if (A(i, c) != 0) row_sub(i, r, detail::div_round128(A(i, c), A(r, c)));
      ++r;
    }
  };
  // Column ops: mirror image working along rows.
  auto row_echelon = [&]() {
    int c = 0;
    for (int r = 0; r < rows && c < cols; ++r) {
      bool have_pivot = false;
      for (;;) {
        int j0 = -1;
        for (int j = c; j < cols; ++j)
          if (A(r, j) != 0 && (j0 == -1 || detail::abs128(A(r, j)) < detail::abs128(A(r, j0))))
            j0 = j;
        if (j0 == -1) break;
        have_pivot = true;
        if (j0 != c) col_swap(j0, c);
        bool done = true;
        for (int j = c + 1; j < cols; ++j)
          if (A(r, j) != 0) {
            col_sub(j, c, detail::div_round128(A(r, j), A(r, c)));
            if (A(r, j) != 0) done = false;
          }
        if (done) break;
      }
      if (!have_pivot) continue;
      if (A(r, c) < 0) {
        for (int i = 0; i < rows; ++i) A(i, c) = -A(i, c);
        for (int i = 0; i < cols; ++i) V(i, c) = -V(i, c);
      }
      for (int j = 0; j < c; ++j)
        if (A(r, j) != 0) col_sub(j, c, detail::div_round128(A(r, j), A(r, c)));
      ++c;
    }
  };
  auto is_diagonal = [&]() {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (i != j && A(i, j) != 0) return false;
    return true;
  };

  for (int guard = 0;; ++guard) {
    if (guard > 64 * (rows + cols)) throw OverflowError();  // no convergence: reroute
    column_echelon();
    if (!is_diagonal()) {
      row_echelon();
      continue;
    }
    // Diagonal reached: enforce positive entries and the divisibility chain.
    bool fixed = false;
    for (int t = 0; t + 1 < steps && !fixed; ++t) {
      i128 d0 = A(t, t), d1 = A(t + 1, t + 1);
      if (d0 == 0 && d1 != 0) {
        row_swap(t, t + 1);
        col_swap(t, t + 1);
        fixed = true;
      } else if (d0 != 0 && d1 % d0 != 0) {
        col_sub(t, t + 1, i128(-1));  // col_t += col_{t+1}; next pass gcds them
        fixed = true;
      }
    }
    if (!fixed) break;
  }
  for (int t = 0; t < steps; ++t)
    if (A(t, t) < 0) {
      for (int c = 0; c < cols; ++c) A(t, c) = -A(t, c);
      for (int c = 0; c < rows; ++c) U(t, c) = -U(t, c);
    }

  // Size-reduce the transforms: rows of U over a zero row of D can be added
  // to any other row without disturbing U*M*V = D, and likewise for columns
  // of V over a zero column.  Balanced reduction against these rows pulls
  // the final entries back into 64-bit range.
  int rank = 0;
  while (rank < steps && A(rank, rank) != 0) ++rank;
  for (int z = rank; z < rows; ++z) {
    int p = -1;
    for (int c = 0; c < rows; ++c)
      if (U(z, c) != 0 && (p == -1 || detail::abs128(U(z, c)) < detail::abs128(U(z, p)))) p = c;
    if (p == -1) continue;
    for (int i = 0; i < rows; ++i) {
      if (i == z || U(i, p) == 0) continue;
      i128 q = detail::div_round128(U(i, p), U(z, p));
      if (q == 0) continue;
      for (int c = 0; c < rows; ++c) U(i, c) = detail::add128(U(i, c), -detail::mul128(q, U(z, c)));
    }
  }
  for (int z = rank; z < cols; ++z) {
    int p = -1;
    for (int r = 0; r < cols; ++r)
      if (V(r, z) != 0 && (p == -1 || detail::abs128(V(r, z)) < detail::abs128(V(p, z)))) p = r;
    if (p == -1) continue;
    for (int j = 0; j < cols; ++j) {
      if (j == z || V(p, j) == 0) continue;
      i128 q = detail::div_round128(V(p, j), V(p, z));
      if (q == 0) continue;
      for (int r = 0; r < cols; ++r) V(r, j) = detail::add128(V(r, j), -detail::mul128(q, V(r, z)));
    }
  }

  SNF out{IntMatrix(rows, rows), IntMatrix(rows, cols), IntMatrix(cols, cols)};
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j) out.U.at(i, j) = detail::narrow128(U(i, j));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.D.at(i, j) = detail::narrow128(A(i, j));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) out.V.at(i, j) = detail::narrow128(V(i, j));
  return out;
}

}  // namespace detail

inline IntMatrix random_unimodular(int k, std::uint64_t seed, int move_count);

// Deterministic: attempt 0 runs the plain elimination; each further attempt
// conjugates by fixed small random unimodular matrices to reroute the
// elimination path when entries outgrow 64 bits.  Oversized-but-representable
// transforms also trigger a reroute so downstream exact products stay safe.
inline SNF smith_normal_form(const IntMatrix& m) {
  constexpr int kAttempts = 24;
  constexpr i64 kComfortable = i64(1) << 52;
  auto magnitude = [](const SNF& s) {
    i64 mx = 0;
    for (int i = 0; i < s.U.rows(); ++i)
      for (int j = 0; j < s.U.cols(); ++j) mx = std::max(mx, std::abs(s.U.at(i, j)));
    for (int i = 0; i < s.V.rows(); ++i)
      for (int j = 0; j < s.V.cols(); ++j) mx = std::max(mx, std::abs(s.V.at(i, j)));
    return mx;
  };
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    try {
      SNF out = [&] {
        if (attempt == 0) return detail::snf_single_path(m);
        IntMatrix r = random_unimodular(m.rows(), 0x534e46u + std::uint64_t(attempt), 2 * m.rows());
        IntMatrix s = random_unimodular(m.cols(), 0x534e47u + std::uint64_t(attempt), 2 * m.cols());
        SNF inner = detail::snf_single_path(r * m * s);
        return SNF{inner.U * r, inner.D, s * inner.V};
      }();
      if (magnitude(out) > kComfortable && attempt + 1 < kAttempts) continue;
      return out;
    } catch (const OverflowError&) {
      if (attempt + 1 == kAttempts) throw;
    }
  }
  throw OverflowError();  // unreachable
}

// Unimodular V with (row vector v) * V = (g, 0, ..., 0), g = gcd(v) >= 0.
inline IntMatrix row_gcd_transform(const std::vector<i64>& v_in) {
  int k = int(v_in.size());
  if (k == 0) throw PreconditionError("empty vector");
  std::vector<i64> v = v_in;
  IntMatrix t = IntMatrix::identity(k);
  auto col_sub = [&](int i, int j, i64 q) {  // col_i -= q * col_j
    v[i] = checked_sub(v[i], checked_mul(q, v[j]));
    for (int r = 0; r < k; ++r) t.at(r, i) = checked_sub(t.at(r, i), checked_mul(q, t.at(r, j)));
  };
  for (;;) {
    int m = -1;
    for (int i = 0; i < k; ++i)
      if (v[i] != 0 && (m == -1 || std::abs(v[i]) < std::abs(v[m]))) m = i;
    if (m == -1) return t;  // zero vector: identity works
    bool others = false;
    for (int i = 0; i < k; ++i)
      if (i != m && v[i] != 0) {
        col_sub(i, m, detail::div_round(v[i], v[m]));
        if (v[i] != 0) others = true;
      }
    if (others) continue;
    if (m != 0) {
      std::swap(v[0], v[m]);
      for (int r = 0; r < k; ++r) std::swap(t.at(r, 0), t.at(r, m));
    }
    if (v[0] < 0) {
      v[0] = checked_neg(v[0]);
      for (int r = 0; r < k; ++r) t.at(r, 0) = checked_neg(t.at(r, 0));
    }
    return t;
  }
}

// Basis of the sublattice {c in Z^k : c . w = 0}; k-1 vectors for w != 0.
inline std::vector<std::vector<i64>> kernel_of_functional(const std::vector<i64>& w) {
  int k = int(w.size());
  IntMatrix v = row_gcd_transform(w);
  bool zero = true;
  for (i64 x : w) zero &= (x == 0);
  std::vector<std::vector<i64>> basis;
  for (int j = zero ? 0 : 1; j < k; ++j) {
    std::vector<i64> c(k);
    for (int r = 0; r < k; ++r) c[r] = v.at(r, j);
    basis.push_back(std::move(c));
  }
  return basis;
}

// Unimodular A whose last row is the primitive vector n.
inline IntMatrix complete_primitive_to_basis(const std::vector<i64>& n) {
  int k = int(n.size());
  if (k == 0) throw PreconditionError("empty vector");
  i64 g = 0;
  for (i64 x : n) g = gcd_i64(g, x);
  if (g != 1) throw PreconditionError("vector is not primitive");
  IntMatrix v = row_gcd_transform(n);   // n * v = (1, 0, ..., 0)
  IntMatrix b = v.inverse_unimodular();  // first row of b is n
  IntMatrix a(k, k);
  for (int i = 0; i < k - 1; ++i)
    for (int j = 0; j < k; ++j) a.at(i, j) = b.at(i + 1, j);
  for (int j = 0; j < k; ++j) a.at(k - 1, j) = b.at(0, j);
  return a;
}

// Deterministic product of elementary row moves and sign flips.
inline IntMatrix random_unimodular(int k, std::uint64_t seed, int move_count) {
  if (k < 1) throw PreconditionError("rank must be positive");
  std::mt19937_64 rng(seed);
  IntMatrix a = IntMatrix::identity(k);
  std::uniform_int_distribution<int> kind(0, 2), idx(0, k - 1), coef(-2, 2);
  for (int m = 0; m < move_count; ++m) {
    int what = kind(rng);
    if (what == 0 && k >= 2) {  // row_i += c * row_j
      int i = idx(rng), j = idx(rng);
      while (j == i) j = idx(rng);
      i64 c = coef(rng);
      if (c == 0) c = 1;
      for (int col = 0; col < k; ++col)
        a.at(i, col) = checked_add(a.at(i, col), checked_mul(c, a.at(j, col)));
    } else if (what == 1 && k >= 2) {  // swap
      int i = idx(rng), j = idx(rng);
      while (j == i) j = idx(rng);
      for (int col = 0; col < k; ++col) std::swap(a.at(i, col), a.at(j, col));
    } else {  // sign flip
      int i = idx(rng);
      for (int col = 0; col < k; ++col) a.at(i, col) = checked_neg(a.at(i, col));
    }
  }
  return a;
}

}  // namespace su2b
