// Presentation-level invariants: parity, sigma, tau, stable triviality, and
// their behavior under unimodular change of basis.  JSON loading is pinned
// including every rejection path.

#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "su2b/manifold.hpp"

using namespace su2b;
using nlohmann::json;

namespace {

ManifoldPresentation diag11_l22() {
  Pi7Wedge l(2);
  l.set_nu(0, 1);
  l.set_nu(1, 1);
  l.set_nu_prime(0, R12(2));
  l.set_nu_prime(1, R12(2));
  return ManifoldPresentation(l);
}

ManifoldPresentation hyperbolic_pair(std::vector<R12> lp) {
  Pi7Wedge l(4);
  l.set_whitehead(0, 1, 1);
  l.set_whitehead(2, 3, 1);
  for (int i = 0; i < 4; ++i) l.set_nu_prime(i, lp[size_t(i)]);
  return ManifoldPresentation(l);
}

Pi7Wedge random_unimodular_attaching(std::mt19937_64& rng, int k) {
  // random block form (hyperbolic pairs and +-1 diagonals) conjugated by a
  // random unimodular matrix, so |det G| = 1 by construction
  Pi7Wedge l(k);
  int i = 0;
  while (i < k) {
    if (i + 1 < k && rng() % 2 == 0) {
      l.set_whitehead(i, i + 1, 1);
      i += 2;
    } else {
      l.set_nu(i, rng() % 2 == 0 ? 1 : -1);
      i += 1;
    }
  }
  std::uniform_int_distribution<i64> d12(0, 11);
  for (int j = 0; j < k; ++j) l.set_nu_prime(j, R12(d12(rng)));
  return pushforward(random_unimodular(k, rng(), 3 * k), l);
}

}  // namespace

TEST(Manifold, ValidationRejectsNonUnimodular) {
  Pi7Wedge l(1);
  l.set_nu(0, 2);  // Gram (2): not a Poincare duality presentation
  EXPECT_THROW(ManifoldPresentation m(l), InputError);
}

TEST(Manifold, ParityExamples) {
  EXPECT_EQ(parity(diag11_l22()), Parity::Odd);
  EXPECT_EQ(parity(hyperbolic_pair({R12(0), R12(0), R12(0), R12(0)})), Parity::Even);
}

TEST(Manifold, SigmaExamples) {
  // diag(1,1), l=(2,2): v = (1-4, 1-4) = (-3,-3), gcd(24,21,21) = 3
  EXPECT_EQ(sigma(diag11_l22()).display(), 3);
  // H + H with l = (1,0,0,0): v = (-2,0,0,0), sigma = 2
  EXPECT_EQ(sigma(hyperbolic_pair({R12(1), R12(0), R12(0), R12(0)})).display(), 2);
  // stably trivial: sigma displays 0
  ManifoldPresentation st = hyperbolic_pair({R12(0), R12(0), R12(0), R12(0)});
  EXPECT_EQ(sigma(st).display(), 0);
  EXPECT_TRUE(is_stably_trivial(st));
  EXPECT_FALSE(is_stably_trivial(diag11_l22()));
}

TEST(Manifold, TauExamples) {
  ManifoldPresentation m = diag11_l22();
  EXPECT_EQ(tau(m, {0, 0}), R24(0));
  EXPECT_EQ(tau(m, {1, 0}), R24(21));  // v1 = -3
  EXPECT_EQ(tau(m, {1, 1}), R24(18));
  EXPECT_EQ(tau(m, {-1, 0}), R24(3));  // linear in the class, not its residue rep
}

TEST(Manifold, ChangeBasisInvariance) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 500; ++trial) {
    int k = 1 + int(rng() % 6);
    ManifoldPresentation m(random_unimodular_attaching(rng, k));
    IntMatrix a = random_unimodular(k, rng(), 4 * k);
    ManifoldPresentation mp = change_basis(m, a);
    EXPECT_EQ(sigma(mp), sigma(m));
    EXPECT_EQ(parity(mp), parity(m));
    EXPECT_EQ(is_stably_trivial(mp), is_stably_trivial(m));
    // tau convention: coordinates transform by n = A n'
    std::uniform_int_distribution<i64> d(-8, 8);
    std::vector<i64> np(k);
    for (auto& x : np) x = d(rng);
    std::vector<i64> n = a.apply(np);
    EXPECT_EQ(tau(mp, np), tau(m, n));
  }
}

TEST(Manifold, ChangeBasisRequiresUnimodular) {
  ManifoldPresentation m = diag11_l22();
  EXPECT_THROW(change_basis(m, IntMatrix::from_rows({{2, 0}, {0, 1}})), PreconditionError);
}

TEST(ManifoldJson, RoundTrip) {
  json j = {{"k", 2}, {"G", {{0, 1}, {1, 0}}}, {"l", {3, 7}}};
  ManifoldPresentation m = manifold_from_json(j);
  EXPECT_EQ(m.k(), 2);
  EXPECT_EQ(m.gram(), IntMatrix::from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(m.attaching_map().nu_prime(0), R12(3));
  EXPECT_EQ(m.attaching_map().nu_prime(1), R12(7));
  json out = manifold_to_json(m);
  EXPECT_EQ(manifold_from_json(out).attaching_map(), m.attaching_map());
}

TEST(ManifoldJson, LReducedMod12) {
  json j = {{"k", 1}, {"G", {{1}}}, {"l", {14}}};
  EXPECT_EQ(manifold_from_json(j).attaching_map().nu_prime(0), R12(2));
}

TEST(ManifoldJson, Rejections) {
  json base = {{"k", 2}, {"G", {{0, 1}, {1, 0}}}, {"l", {0, 0}}};

  json bad = base;
  bad["G"] = {{0, 1}, {2, 0}};  // asymmetric
  EXPECT_THROW(manifold_from_json(bad), InputError);

  bad = base;
  bad["G"] = {{1, 1}, {1, 1}};  // det 0
  EXPECT_THROW(manifold_from_json(bad), InputError);

  bad = base;
  bad["l"] = {0};  // wrong length
  EXPECT_THROW(manifold_from_json(bad), InputError);

  bad = base;
  bad["extra"] = 1;  // unknown field
  EXPECT_THROW(manifold_from_json(bad), InputError);

  bad = base;
  bad["k"] = 3;  // k inconsistent with G
  EXPECT_THROW(manifold_from_json(bad), InputError);

  EXPECT_THROW(manifold_from_json(json{{"k", 1}, {"G", {{2}}}, {"l", {0}}}), InputError);
  EXPECT_THROW(manifold_from_file("/nonexistent/file.json"), InputError);
}

TEST(ManifoldJson, WhiteheadOverride) {
  // The override replaces the Gram-derived off-diagonal Whitehead numbers;
  // the diagonal must match G and the effective form must stay unimodular.
  json j = {{"k", 3},
            {"G", {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}},
            {"l", {0, 0, 0}},
            {"whitehead_override", {{0, 1, 5}, {1, 0, 0}, {5, 0, 1}}}};
  ManifoldPresentation m = manifold_from_json(j);
  EXPECT_EQ(m.attaching_map().whitehead(0, 2), 5);
  EXPECT_EQ(m.attaching_map().nu(2), 1);
  EXPECT_EQ(m.gram(), IntMatrix::from_rows({{0, 1, 5}, {1, 0, 0}, {5, 0, 1}}));

  json bad = j;
  bad["whitehead_override"] = {{1, 1, 5}, {1, 0, 0}, {5, 0, 1}};  // diag mismatch
  EXPECT_THROW(manifold_from_json(bad), InputError);

  // effective form must stay unimodular: diag(1,1,1) with w01 = 2 has det -3
  json sing = {{"k", 3},
               {"G", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
               {"l", {0, 0, 0}},
               {"whitehead_override", {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}}}};
  EXPECT_THROW(manifold_from_json(sing), InputError);

  bad = j;
  bad["whitehead_override"] = {{0, 1, 5}, {1, 0, 0}, {-5, 0, 1}};  // asymmetric
  EXPECT_THROW(manifold_from_json(bad), InputError);
}
