#pragma once
// Exact calculus in pi_7 of a wedge of 4-spheres. Elements are
//   L = sum_{i<j} w_ij [a_i, a_j] + sum_i s_i nu_i + sum_i t_i nu'_i
// with w, s over Z and t in Z/12. The pushforward rules are the minimal
// Hilton expansion consistent with [i4,i4] = 2 nu + nu' and
// (-i4) o nu = nu + nu'; the Gram-congruence, stable-linearity, and
// functoriality tests are the oracles that pin them.

#include <utility>
#include <vector>

#include "int_matrix.hpp"
#include "residue.hpp"

namespace su2b {

class Pi7Wedge {
  int k_ = 0;
  std::vector<i64> w_;   // strictly upper triangular, packed by pair_index
  std::vector<i64> s_;   // nu coefficients, exact integers
  std::vector<R12> t_;   // nu' coefficients

 public:
  Pi7Wedge() = default;
  explicit Pi7Wedge(int k)
      : k_(k), w_(size_t(k) * (k - 1) / 2, 0), s_(k, 0), t_(k) {
    if (k < 1) throw PreconditionError("wedge rank must be positive");
  }

  int rank() const { return k_; }
  static size_t pair_index(int i, int j, int k) {
    // i < j; row-major over the strict upper triangle
    return size_t(i) * (2 * k - i - 1) / 2 + (j - i - 1);
  }
  i64 whitehead(int i, int j) const {
    if (i == j) throw PreconditionError("whitehead index must be off-diagonal");
    if (i > j) std::swap(i, j);
    return w_[pair_index(i, j, k_)];
  }
  void set_whitehead(int i, int j, i64 v) {
    if (i == j) throw PreconditionError("whitehead index must be off-diagonal");
    if (i > j) std::swap(i, j);
    w_[pair_index(i, j, k_)] = v;
  }
  i64 nu(int i) const { return s_[i]; }
  void set_nu(int i, i64 v) { s_[i] = v; }
  R12 nu_prime(int i) const { return t_[i]; }
  void set_nu_prime(int i, R12 v) { t_[i] = v; }

  bool operator==(const Pi7Wedge&) const = default;
};

// g_ii = s_i, g_ij = g_ji = w_ij: the intersection form the attaching map
// induces on the 8-complex.
inline IntMatrix gram_of(const Pi7Wedge& l) {
  int k = l.rank();
  IntMatrix g(k, k);
  for (int i = 0; i < k; ++i) {
    g.at(i, i) = l.nu(i);
    for (int j = i + 1; j < k; ++j) g.at(i, j) = g.at(j, i) = l.whitehead(i, j);
  }
  return g;
}

namespace detail {
// Shared expansion core: rows of A (k x m) give a_i = sum_j A_ij a'_j.
// Rules, each exact:
//   w_ij [a_i,a_j] -> sum_{m<n} w_ij (A_im A_jn + A_in A_jm) [a'_m,a'_n]
//                     + sum_m w_ij A_im A_jm (2 nu'_m-free part: 2nu + nu')
//   s_i nu_i       -> s_i A_ij^2 nu_j + s_i C(A_ij,2) nu'_j
//                     + s_i A_ij A_ij' [a'_j, a'_j']   (Hopf invariant 1)
//   t_i nu'_i      -> t_i A_ij nu'_j                   (no cross terms)
inline Pi7Wedge pushforward_rect(const IntMatrix& a, const Pi7Wedge& l) {
  int k = l.rank(), m = a.cols();
  if (a.rows() != k) throw PreconditionError("pushforward matrix rows must match rank");
  Pi7Wedge out(m);
  std::vector<i64> w(size_t(m) * (m - 1) / 2, 0), s(m, 0);
  std::vector<i64> t(m, 0);  // accumulated exactly, reduced mod 12 at the end

  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      i64 wij = l.whitehead(i, j);
      if (wij == 0) continue;
      for (int mm = 0; mm < m; ++mm) {
        i64 aim = a.at(i, mm), ajm = a.at(j, mm);
        if (aim != 0 && ajm != 0) {
          i64 diag = checked_mul(wij, checked_mul(aim, ajm));
          s[mm] = checked_add(s[mm], checked_mul(2, diag));
          t[mm] = checked_add(t[mm], diag);
        }
        for (int nn = mm + 1; nn < m; ++nn) {
          i64 cross = checked_add(checked_mul(aim, a.at(j, nn)),
                                  checked_mul(a.at(i, nn), ajm));
          if (cross != 0)
            w[Pi7Wedge::pair_index(mm, nn, m)] = checked_add(
                w[Pi7Wedge::pair_index(mm, nn, m)], checked_mul(wij, cross));
        }
      }
    }

  for (int i = 0; i < k; ++i) {
    i64 si = l.nu(i);
    if (si == 0) continue;
    for (int j = 0; j < m; ++j) {
      i64 aij = a.at(i, j);
      if (aij == 0) continue;
      s[j] = checked_add(s[j], checked_mul(si, checked_mul(aij, aij)));
      t[j] = checked_add(t[j], checked_mul(si, choose2(aij)));
      for (int j2 = j + 1; j2 < m; ++j2)
        if (a.at(i, j2) != 0)
          w[Pi7Wedge::pair_index(j, j2, m)] =
              checked_add(w[Pi7Wedge::pair_index(j, j2, m)],
                          checked_mul(si, checked_mul(aij, a.at(i, j2))));
    }
  }

  for (int i = 0; i < k; ++i) {
    i64 ti = l.nu_prime(i).value();
    if (ti == 0) continue;
    for (int j = 0; j < m; ++j)
      t[j] = checked_add(t[j], checked_mul(ti, a.at(i, j)));
  }

  for (int i = 0; i < m; ++i) {
    out.set_nu(i, s[i]);
    out.set_nu_prime(i, R12(t[i]));
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      out.set_whitehead(i, j, w[Pi7Wedge::pair_index(i, j, m)]);
  return out;
}
}  // namespace detail

inline Pi7Wedge pushforward(const IntMatrix& a, const Pi7Wedge& l) {
  if (a.rows() != a.cols()) throw PreconditionError("pushforward expects a square matrix");
  return detail::pushforward_rect(a, l);
}

// Stable class: v_i = s_i - 2 t_i mod 24 (nu' stabilizes to -2 nu).
inline std::vector<R24> stable_vector(const Pi7Wedge& l) {
  std::vector<R24> v;
  v.reserve(l.rank());
  for (int i = 0; i < l.rank(); ++i)
    v.emplace_back(checked_sub(l.nu(i), checked_mul(2, l.nu_prime(i).value())));
  return v;
}

// The (nu, nu') coefficients of psi~ o L for psi~ = sum n_i (projection):
// the rank-one pushforward along the column n.
inline std::pair<i64, R12> compose_class(const std::vector<i64>& n, const Pi7Wedge& l) {
  if (int(n.size()) != l.rank()) throw PreconditionError("class length must match rank");
  IntMatrix col(l.rank(), 1);
  for (int i = 0; i < l.rank(); ++i) col.at(i, 0) = n[i];
  Pi7Wedge r = detail::pushforward_rect(col, l);
  return {r.nu(0), r.nu_prime(0)};
}

}  // namespace su2b
