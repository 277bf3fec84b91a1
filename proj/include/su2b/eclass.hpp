#pragma once
// Homotopy classification of the 11-dimensional total spaces: rank-one orbit
// enumeration, connected-sum rewriting, stable invariants, normal forms, and
// the equality decision.
//
// A rank-one factor S4 v S7 u e11 is recorded by the top-cell coefficients
// (lambda, epsilon, delta) over the basis [i4,i7], i7 o nu7, i4 o x, i4 o y
// with x = nu o nu7 (order 24) and y = nu' o nu7 (order 3).  A rank-r space
// is a connected sum of such factors; its attaching map is the sum of the
// factor data plus the Whitehead pairing terms, which stay normalized.

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "su2b/checked.hpp"
#include "su2b/residue.hpp"

namespace su2b {

struct RankOneClass {
  R24 lambda;
  R24 epsilon;
  R3 delta;

  auto operator<=>(const RankOneClass&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const RankOneClass& c) {
  return os << "E(" << c.lambda.value() << "," << c.epsilon.value() << ","
            << c.delta.value() << ")";
}

// Self-equivalences of a single factor.  Move 1 flips the 7-sphere, moves 2
// and 3 reparametrize the 11-cell by i4 o nu resp. i4 o nu'.
inline RankOneClass rank1_move1(const RankOneClass& c) {
  return {-c.lambda, c.epsilon, R3(c.epsilon.value()) - c.delta};
}

inline RankOneClass rank1_move2(const RankOneClass& c, i64 a) {
  return {c.lambda, c.epsilon + a * R24(c.lambda.value() + 2), c.delta};
}

inline RankOneClass rank1_move3(const RankOneClass& c, i64 b) {
  return {c.lambda, c.epsilon + b * R24(-4), c.delta + b * R3(c.lambda.value() + 1)};
}

inline std::set<RankOneClass> rank1_neighbors(const RankOneClass& c) {
  std::set<RankOneClass> out;
  out.insert(rank1_move1(c));
  for (i64 a = 1; a < 24; ++a) {
    out.insert(rank1_move2(c, a));
    out.insert(rank1_move3(c, a));
  }
  return out;
}

namespace detail {

// State index over the 24 x 24 x 3 rank-one data; integer order is the
// lexicographic (lambda, epsilon, delta) order.
inline int r1_index(const RankOneClass& c) {
  return int((c.lambda.value() * 24 + c.epsilon.value()) * 3 + c.delta.value());
}

inline RankOneClass r1_from_index(int idx) {
  return {R24(idx / 72), R24((idx / 3) % 24), R3(idx % 3)};
}

// canon[state] = index of the lexicographically least orbit member whose
// lambda lies in [0,12].  Every orbit meets that range: move 1 pairs lambda
// with -lambda and the other moves fix lambda.
inline const std::array<short, 1728>& rank1_canonical_table() {
  static const std::array<short, 1728> table = [] {
    std::array<short, 1728> canon{};
    std::array<char, 1728> visited{};
    for (int s = 0; s < 1728; ++s) {
      if (visited[s]) continue;
      std::vector<int> orbit;
      std::vector<int> stack{s};
      visited[s] = 1;
      while (!stack.empty()) {
        const int cur = stack.back();
        stack.pop_back();
        orbit.push_back(cur);
        const RankOneClass c = r1_from_index(cur);
        auto push = [&](const RankOneClass& n) {
          const int idx = r1_index(n);
          if (!visited[idx]) {
            visited[idx] = 1;
            stack.push_back(idx);
          }
        };
        push(rank1_move1(c));
        for (i64 a = 1; a < 24; ++a) {
          push(rank1_move2(c, a));
          push(rank1_move3(c, a));
        }
      }
      int best = -1;
      for (int idx : orbit)
        if (idx / 72 <= 12 && (best == -1 || idx < best)) best = idx;
      if (best == -1) throw Error("rank-one orbit misses the [0,12] range");
      for (int idx : orbit) canon[idx] = short(best);
    }
    return canon;
  }();
  return table;
}

}  // namespace detail

inline RankOneClass rank1_canonical(const RankOneClass& c) {
  return detail::r1_from_index(detail::rank1_canonical_table()[detail::r1_index(c)]);
}

// Orbit decomposition of the full rank-one state space, grouped by the
// canonical lambda in [0,12].  The listed representatives prefer delta = 0
// (then least epsilon) over the plain (epsilon, delta)-least member, and each
// row is listed delta-major; this is the convention of the published table.
inline std::map<int, std::vector<RankOneClass>> table1() {
  const auto& canon = detail::rank1_canonical_table();
  std::map<int, std::vector<int>> members;
  for (int s = 0; s < 1728; ++s) members[canon[s]].push_back(s);
  std::map<int, std::vector<RankOneClass>> rows;
  for (const auto& [c, states] : members) {
    const int row = c / 72;
    bool have_d0 = false;
    i64 best_e = 0, lex_e = -1, lex_d = 0;
    for (int s : states) {
      if (s / 72 != row) continue;
      const i64 e = (s / 3) % 24, d = s % 3;
      if (d == 0 && (!have_d0 || e < best_e)) {
        have_d0 = true;
        best_e = e;
      }
      if (lex_e < 0 || std::pair(e, d) < std::pair(lex_e, lex_d)) {
        lex_e = e;
        lex_d = d;
      }
    }
    if (lex_e < 0) throw Error("orbit has no member in its own row");
    rows[row].push_back(have_d0 ? RankOneClass{R24(row), R24(best_e), R3(0)}
                                : RankOneClass{R24(row), R24(lex_e), R3(lex_d)});
  }
  for (auto& [row, list] : rows) {
    (void)row;
    std::sort(list.begin(), list.end(),
              [](const RankOneClass& a, const RankOneClass& b) {
                return std::pair(a.delta.value(), a.epsilon.value()) <
                       std::pair(b.delta.value(), b.epsilon.value());
              });
  }
  return rows;
}

// A connected sum of rank-one factors, encoded factor by factor.
struct EPresentation {
  std::vector<RankOneClass> factors;

  explicit EPresentation(std::vector<RankOneClass> f) : factors(std::move(f)) {
    if (factors.empty() || factors.size() > 64)
      throw InputError("e-presentation: rank must be between 1 and 64");
  }

  int rank() const { return int(factors.size()); }
};

inline EPresentation connected_sum(const EPresentation& a, const EPresentation& b) {
  std::vector<RankOneClass> f = a.factors;
  f.insert(f.end(), b.factors.begin(), b.factors.end());
  return EPresentation(std::move(f));
}

// Stable data: lambda_s generates the subgroup the factor lambdas span in
// Z/24, and eps_s records an odd epsilon coefficient.  For odd lambda_s the
// epsilon term is absorbable, so eps_s normalizes to 0 at every rank; this
// keeps eps_s constant on rank-one orbits (move 2 flips epsilon parity when
// lambda is odd).
struct StableInvariants {
  Div24 lambda_s;
  int eps_s = 0;

  auto operator<=>(const StableInvariants&) const = default;
};

inline StableInvariants stable_invariants(const EPresentation& e) {
  std::vector<R24> ls;
  ls.reserve(e.factors.size());
  for (const auto& f : e.factors) ls.push_back(f.lambda);
  const Div24 g = gcd_with_modulus(ls);
  int eps = 0;
  if (g.is_even())
    for (const auto& f : e.factors)
      if (f.epsilon.is_odd()) eps = 1;
  return {g, eps};
}

namespace detail {

inline i64 choose2(i64 n) { return n * (n - 1) / 2; }

// Base change alpha_dst += n alpha_src on the 4-spheres, compensated on the
// 7-spheres so the Whitehead pairing stays normalized.  The compensation has
// free parameters (p, V, q) subject to one parity constraint; the canonical
// resolution below makes the move deterministic.  Returns false exactly when
// the constraint is unsolvable: n odd, eps_dst odd, lambda_src odd,
// lambda_dst even.
inline bool elementary_move_inplace(std::vector<RankOneClass>& f, int dst, int src,
                                    i64 n_raw) {
  i64 n = mod_floor(n_raw, 24);
  if (n > 12) n -= 24;
  if (n == 0) return true;
  const i64 ld = f[dst].lambda.value(), ls = f[src].lambda.value();
  const i64 ed = f[dst].epsilon.value();
  const bool n_odd = (n & 1) != 0;
  if (n_odd && ed % 2 == 1 && ls % 2 == 1 && ld % 2 == 0) return false;
  i64 V = 0;
  const i64 p = -n * ed;
  if (ls % 2 == 1 && (n * ed) % 2 != 0) V = 1;  // needs ld odd, checked above
  const i64 num = p * (1 + ls) + V * (1 + ld - n * ls) + n * ed;
  if (num % 2 != 0) throw Error("elementary move: parity bookkeeping failed");
  const i64 q = num / 2;
  const RankOneClass dold = f[dst], sold = f[src];
  f[dst].lambda = R24(ld - n * ls);
  f[dst].epsilon = dold.epsilon + R24(ls * V);
  f[src].epsilon = sold.epsilon + R24(n * n * ed + 2 * p * n - 4 * q * n + ld * p);
  f[src].delta =
      sold.delta + R3(choose2(n) * ed + (n + ld) * q + n * dold.delta.value());
  return true;
}

}  // namespace detail

inline std::optional<EPresentation> elementary_move(const EPresentation& e, int dst,
                                                    int src, i64 n) {
  if (dst < 0 || dst >= e.rank() || src < 0 || src >= e.rank() || dst == src)
    throw PreconditionError("elementary move: bad factor indices");
  std::vector<RankOneClass> f = e.factors;
  if (!detail::elementary_move_inplace(f, dst, src, n)) return std::nullopt;
  return EPresentation(std::move(f));
}

inline EPresentation permute_factors(const EPresentation& e, const std::vector<int>& perm) {
  if (int(perm.size()) != e.rank())
    throw PreconditionError("permutation size must match rank");
  std::vector<char> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= e.rank() || seen[p])
      throw PreconditionError("not a permutation");
    seen[p] = 1;
  }
  std::vector<RankOneClass> f(e.factors.size(), RankOneClass{});
  for (size_t i = 0; i < perm.size(); ++i) f[i] = e.factors[perm[i]];
  return EPresentation(std::move(f));
}

// The pair rewrite for 2 | lambda_j: subtracts factor j's lambda from factor
// i and pushes the bookkeeping onto factor j.
inline EPresentation apply_pair_reduction(const EPresentation& e, int i, int j) {
  if (i < 0 || i >= e.rank() || j < 0 || j >= e.rank() || i == j)
    throw PreconditionError("pair reduction: bad factor indices");
  const i64 l1 = e.factors[i].lambda.value(), e1 = e.factors[i].epsilon.value();
  const i64 d1 = e.factors[i].delta.value();
  const i64 l2 = e.factors[j].lambda.value(), e2 = e.factors[j].epsilon.value();
  const i64 d2 = e.factors[j].delta.value();
  if (l2 % 2 != 0) throw PreconditionError("pair reduction needs even lambda_j");
  std::vector<RankOneClass> f = e.factors;
  f[i] = {R24(l1 - l2), R24(e1), R3(d1)};
  f[j] = {R24(l2), R24(e2 + e1 * (2 * l2 - l1 - 1)), R3(d1 + d2 + (1 + l1) * e1 * l2)};
  return EPresentation(std::move(f));
}

// The unit rewrite: for a unit a mod 24 and b = (a^2 - 1)/24, scales factor
// i by a against a trivial factor j.
inline EPresentation apply_unit_scaling(const EPresentation& e, int i, int j, i64 a_raw) {
  if (i < 0 || i >= e.rank() || j < 0 || j >= e.rank() || i == j)
    throw PreconditionError("unit scaling: bad factor indices");
  i64 a = mod_floor(a_raw, 24);
  if (gcd_i64(a, 24) != 1) throw PreconditionError("unit scaling needs a unit mod 24");
  if (a > 12) a -= 24;
  if (e.factors[j] != RankOneClass{R24(0), R24(0), R3(0)})
    throw PreconditionError("unit scaling needs a trivial factor beside it");
  const i64 b = (a * a - 1) / 24;
  const i64 l = e.factors[i].lambda.value(), ep = e.factors[i].epsilon.value();
  const i64 d = e.factors[i].delta.value();
  std::vector<RankOneClass> f = e.factors;
  f[i] = {R24(a * l), R24(a * a * ep), R3(a * d + detail::choose2(a) * ep)};
  f[j] = {R24(0), R24(-b * b * ep - b * l * ep), R3(b * d + detail::choose2(b) * ep)};
  return EPresentation(std::move(f));
}

// The exchange rewrite against a (0,1,0) factor: its epsilon becomes
// 1 + eps_i(-lambda_i - 1) and it picks up factor i's delta.
inline EPresentation apply_e010_exchange(const EPresentation& e, int i, int j) {
  if (i < 0 || i >= e.rank() || j < 0 || j >= e.rank() || i == j)
    throw PreconditionError("exchange: bad factor indices");
  if (e.factors[j] != RankOneClass{R24(0), R24(1), R3(0)})
    throw PreconditionError("exchange needs a (0,1,0) factor");
  const i64 l = e.factors[i].lambda.value(), ep = e.factors[i].epsilon.value();
  std::vector<RankOneClass> f = e.factors;
  f[j] = {R24(0), R24(1 + ep * (-l - 1)), e.factors[i].delta};
  return EPresentation(std::move(f));
}

// Normal form: rank, the stable lambda, the canonical carrier epsilon, and
// the canonical tail.  Equality of these tuples decides homotopy
// equivalence.  The carrier records a leftover (0,1,0) factor where one is a
// genuine invariant; for tail residues whose lambda-preserving rewrites
// include odd shears (divisors 8 and 24) it always canonicalizes to 0.
struct ENormalForm {
  int rank = 1;
  Div24 lambda_s;
  int eps_hat = 0;
  RankOneClass tail;

  auto operator<=>(const ENormalForm&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const ENormalForm& n) {
  return os << "[rank " << n.rank << ", lambda_s " << n.lambda_s.display()
            << ", eps_hat " << n.eps_hat << ", tail " << n.tail << "]";
}

namespace detail {

inline i64 nearest_quotient(i64 x, i64 y) {
  const i64 n0 = x / y;
  i64 best = n0;
  for (i64 n : {n0 - 1, n0 + 1})
    if (std::abs(x - n * y) < std::abs(x - best * y)) best = n;
  return best;
}

// Drives lambda_i to 0 with the gcd content accumulating in slot T.  A
// blocked step always has an even-n neighbor that strictly shrinks the
// balanced remainder, so the loop terminates well inside the guard.
inline void pair_concentrate(std::vector<RankOneClass>& f, int i, int T) {
  auto bal = [](R24 v) {
    const i64 x = v.value();
    return x > 12 ? x - 24 : x;
  };
  for (int guard = 0; guard < 64; ++guard) {
    const i64 a = bal(f[i].lambda), b = bal(f[T].lambda);
    if (a == 0) return;
    if (b == 0) {
      std::swap(f[i], f[T]);
      return;
    }
    const bool reduce_i = std::abs(a) >= std::abs(b);
    const int dst = reduce_i ? i : T, src = reduce_i ? T : i;
    const i64 x = reduce_i ? a : b, y = reduce_i ? b : a;
    const i64 n = nearest_quotient(x, y);
    if (!elementary_move_inplace(f, dst, src, n)) {
      const i64 r1 = x - (n - 1) * y, r2 = x - (n + 1) * y;
      const i64 n2 = std::abs(r1) <= std::abs(r2) ? n - 1 : n + 1;
      if (!elementary_move_inplace(f, dst, src, n2))
        throw Error("lambda concentration: even step blocked");
    }
  }
  throw Error("lambda concentration failed to converge");
}

inline i64 modinv(i64 w, i64 m) {
  w = mod_floor(w, m);
  for (i64 x = 0; x < m; ++x)
    if (mod_floor(w * x, m) == 1 % m) return x;
  throw Error("no modular inverse");
}

// Rescales the concentrated lambda to the positive divisor gcd(lambda_T, 24)
// through a scratch slot z: double into z, multiply T by an odd unit, then
// clear z with an even multiple.  No step can block (the scratch lambda is
// even throughout).
inline void normalize_tail_lambda(std::vector<RankOneClass>& f, int z, int T) {
  const i64 v = f[T].lambda.value();
  if (v == 0) return;
  const i64 g = gcd_i64(v, 24);
  if (v == g) return;
  const i64 m = 24 / g;
  const i64 winv = modinv(v / g, m);
  i64 twist = -1;
  for (i64 t = 0; t < 24 && twist < 0; ++t)
    if (mod_floor(1 + 2 * t - winv, m) == 0) twist = t;
  if (twist < 0) throw Error("unit normalization: no odd unit lift");
  elementary_move_inplace(f, z, T, 2);
  elementary_move_inplace(f, T, z, twist);
  if (f[T].lambda.value() != g) throw Error("unit normalization missed the divisor");
  i64 clear = -1;
  for (i64 t = 0; t < 48 && clear < 0; t += 2)
    if (mod_floor(t + 2 * (v / g), m) == 0) clear = t;
  if (clear < 0) throw Error("unit normalization: no clearing multiple");
  elementary_move_inplace(f, z, T, clear);
  if (!f[z].lambda.is_zero()) throw Error("unit normalization left scratch dirty");
}

// Joint canonical labels for a concentrated pair ((0,e0,d0),(L,e1,d1)): the
// lex-least orbit member under every lambda-preserving rewrite.  Scratch
// slots a longer presentation carries add no further identifications, so one
// table per tail residue decides equality at every rank.
inline const std::array<uint16_t, 5184>& pair_canonical_table(i64 L) {
  static const std::array<std::array<uint16_t, 5184>, 13> tables = [] {
    std::array<std::array<uint16_t, 5184>, 13> all{};
    for (const i64 lam : {0, 1, 2, 3, 4, 6, 8, 12}) {
      auto& tab = all[size_t(lam)];
      const auto pack = [](const RankOneClass& c, const RankOneClass& t) {
        return uint16_t((c.epsilon.value() * 3 + c.delta.value()) * 72 +
                        t.epsilon.value() * 3 + t.delta.value());
      };
      const auto unpack = [&](uint16_t s) {
        const RankOneClass c{R24(0), R24(s / 216), R3((s / 72) % 3)};
        const RankOneClass t{R24(lam), R24((s % 72) / 3), R3(s % 3)};
        return std::pair(c, t);
      };
      std::array<int16_t, 5184> comp{};
      comp.fill(int16_t(-1));
      std::vector<uint16_t> stack, members;
      int ncomp = 0;
      for (int seed = 0; seed < 5184; ++seed) {
        if (comp[size_t(seed)] >= 0) continue;
        const auto cid = int16_t(ncomp++);
        stack.assign(1, uint16_t(seed));
        members.assign(1, uint16_t(seed));
        comp[size_t(seed)] = cid;
        const auto visit = [&](uint16_t s) {
          if (comp[s] >= 0) return;
          comp[s] = cid;
          stack.push_back(s);
          members.push_back(s);
        };
        while (!stack.empty()) {
          const uint16_t cur = stack.back();
          stack.pop_back();
          const auto [c, t] = unpack(cur);
          visit(pack(rank1_move1(c), t));
          visit(pack(rank1_move2(c, 1), t));
          visit(pack(rank1_move3(c, 1), t));
          visit(pack(c, rank1_move2(t, 1)));
          visit(pack(c, rank1_move3(t, 1)));
          if (lam == 0) visit(pack(t, c));
          for (i64 n = -11; n <= 12; ++n) {
            if (n == 0) continue;
            for (const int dst : {0, 1}) {
              std::vector<RankOneClass> f{c, t};
              if (!elementary_move_inplace(f, dst, 1 - dst, n)) continue;
              if (f[0].lambda.value() != 0 || f[1].lambda.value() != lam) continue;
              visit(pack(f[0], f[1]));
            }
          }
        }
        uint16_t least = members.front();
        for (const uint16_t m : members) least = std::min(least, m);
        for (const uint16_t m : members) tab[m] = least;
      }
    }
    return all;
  }();
  return tables[size_t(L)];
}

}  // namespace detail

inline ENormalForm normal_form(const EPresentation& e) {
  const StableInvariants stable = stable_invariants(e);
  const int r = e.rank();
  if (r == 1) return {1, stable.lambda_s, 0, rank1_canonical(e.factors[0])};

  std::vector<RankOneClass> f = e.factors;
  const int T = r - 1;
  for (int i = 0; i < T; ++i) detail::pair_concentrate(f, i, T);
  detail::normalize_tail_lambda(f, 0, T);

  // Clean the zero slots to (0, 0|1, 0), then chain odd epsilons into one.
  for (int i = 0; i < T; ++i) {
    if (!f[i].lambda.is_zero()) throw Error("concentration left a nonzero lambda");
    if (!f[i].delta.is_zero()) f[i] = rank1_move3(f[i], -f[i].delta.value());
    f[i] = rank1_move2(f[i], -(f[i].epsilon.value() / 2));
  }
  std::vector<int> odd;
  for (int i = 0; i < T; ++i)
    if (f[i].epsilon.is_odd()) odd.push_back(i);
  for (size_t t = 0; t + 1 < odd.size(); ++t)
    detail::elementary_move_inplace(f, odd[t + 1], odd[t], 1);
  if (!odd.empty() && odd.back() != T - 1) std::swap(f[odd.back()], f[T - 1]);

  if (f[T].lambda.value() != stable.lambda_s.divisor() % 24)
    throw Error("tail lambda disagrees with the stable gcd");

  // Canonicalize the carrier and tail jointly: the lex-least pair reachable
  // by lambda-preserving rewrites.  For tail residues with odd shears this
  // absorbs the carrier entirely; the table is the arbiter.
  const auto& tab = detail::pair_canonical_table(f[T].lambda.value());
  const auto packed =
      size_t((f[T - 1].epsilon.value() * 3 + f[T - 1].delta.value()) * 72 +
             f[T].epsilon.value() * 3 + f[T].delta.value());
  const uint16_t canon = tab[packed];
  const i64 ce = canon / 216, cd = (canon / 72) % 3;
  if (cd != 0 || ce > 1) throw Error("pair canonicalization left a nontrivial carrier");
  const int eps_hat = int(ce);
  f[T - 1] = {R24(0), R24(ce), R3(0)};
  f[T] = {f[T].lambda, R24((canon % 72) / 3), R3(canon % 3)};

  const StableInvariants out = stable_invariants(EPresentation(f));
  if (out != stable) throw Error("normal form drifted the stable invariants");
  return {r, stable.lambda_s, eps_hat, f[T]};
}

inline EPresentation to_presentation(const ENormalForm& n) {
  std::vector<RankOneClass> f;
  for (int i = 0; i + 2 < n.rank; ++i) f.push_back({R24(0), R24(0), R3(0)});
  if (n.rank >= 2) f.push_back({R24(0), R24(n.eps_hat), R3(0)});
  f.push_back(n.tail);
  return EPresentation(std::move(f));
}

inline bool homotopy_equal(const EPresentation& a, const EPresentation& b) {
  return normal_form(a) == normal_form(b);
}

inline EPresentation e_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("e-presentation: expected a JSON object");
  for (const auto& [key, val] : j.items()) {
    (void)val;
    if (key != "factors") throw InputError("e-presentation: unknown field \"" + key + "\"");
  }
  if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
    throw InputError("e-presentation: field \"factors\" must be a nonempty array");
  std::vector<RankOneClass> fs;
  for (const auto& entry : j["factors"]) {
    if (!entry.is_object()) throw InputError("e-presentation: factors must be objects");
    for (const char* field : {"lambda", "s", "r"})
      if (!entry.contains(field) || !entry[field].is_number_integer())
        throw InputError(std::string("e-presentation: factor field \"") + field +
                         "\" must be an integer");
    for (const auto& [key, val] : entry.items()) {
      (void)val;
      if (key != std::string("lambda") && key != std::string("s") && key != std::string("r"))
        throw InputError("e-presentation: unknown factor field \"" + key + "\"");
    }
    fs.push_back({R24(entry["lambda"].get<i64>()), R24(entry["s"].get<i64>()),
                  R3(entry["r"].get<i64>())});
  }
  return EPresentation(std::move(fs));
}

inline EPresentation e_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open e-presentation file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError("e-presentation: JSON parse error in " + path + ": " + ex.what());
  }
  return e_from_json(j);
}

inline nlohmann::ordered_json e_to_json(const EPresentation& e) {
  nlohmann::ordered_json j;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& f : e.factors) {
    nlohmann::ordered_json o;
    o["lambda"] = f.lambda.value();
    o["s"] = f.epsilon.value();
    o["r"] = f.delta.value();
    arr.push_back(o);
  }
  j["factors"] = arr;
  return j;
}

}  // namespace su2b
