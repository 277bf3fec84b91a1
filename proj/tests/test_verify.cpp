#include <gtest/gtest.h>

#include <algorithm>

#include "su2b/verify.hpp"

using namespace su2b;

namespace {

int count_status(const std::vector<VerificationReport>& reports, VerifyStatus s) {
  int n = 0;
  for (const auto& r : reports) n += r.status == s;
  return n;
}

const VerificationReport& by_id(const std::vector<VerificationReport>& reports,
                                const std::string& id) {
  for (const auto& r : reports)
    if (r.id == id) return r;
  throw std::runtime_error("missing report " + id);
}

bool ids_sorted(const std::vector<VerificationReport>& reports) {
  return std::is_sorted(reports.begin(), reports.end(),
                        [](const auto& a, const auto& b) { return a.id < b.id; });
}

}  // namespace

TEST(VerifyA, RandomExistenceAndBlocker) {
  auto reports = verify_theorem_A(10, 7);
  ASSERT_EQ(reports.size(), 21u);
  EXPECT_EQ(count_status(reports, VerifyStatus::Pass), 21);
  EXPECT_TRUE(ids_sorted(reports));
  const auto& blocker = by_id(reports, "A.3.k2odd");
  EXPECT_EQ(blocker.observed, "no admissible class");
  for (const auto& r : reports) EXPECT_TRUE(r.witness.contains("presentation")) << r.id;
}

TEST(VerifyA, DeterministicPerSeed) {
  auto a = verify_theorem_A(5, 42);
  auto b = verify_theorem_A(5, 42);
  EXPECT_EQ(render_json(a).dump(), render_json(b).dump());
  auto c = verify_theorem_A(5, 43);
  EXPECT_NE(render_json(a).dump(), render_json(c).dump());
}

TEST(VerifyB, StablyTrivialAllZero) {
  auto reports = verify_theorem_B(12, 3);
  ASSERT_EQ(reports.size(), 13u);
  EXPECT_EQ(count_status(reports, VerifyStatus::Pass), 13);
  const auto& s4 = by_id(reports, "B.0.s4xs4");
  EXPECT_NE(s4.observed.find("all lambda = 0"), std::string::npos);
  EXPECT_NE(s4.observed.find("#^1 E(0,0,0)"), std::string::npos);
}

TEST(VerifyD, OddRank5StatusLayout) {
  ManifoldPresentation m(IntMatrix::from_rows({{1, 0, 0, 0, 0},
                                               {0, 1, 0, 0, 0},
                                               {0, 0, 1, 0, 0},
                                               {0, 0, 0, 1, 0},
                                               {0, 0, 0, 0, 1}}),
                         {0, 0, 0, 0, 0});
  auto reports = verify_theorem_D(m);
  ASSERT_EQ(reports.size(), 6u);
  EXPECT_TRUE(ids_sorted(reports));
  EXPECT_EQ(by_id(reports, "D.0").status, VerifyStatus::Pass);
  EXPECT_EQ(by_id(reports, "D.1").status, VerifyStatus::Skipped);  // k < 7
  EXPECT_EQ(by_id(reports, "D.2").status, VerifyStatus::Skipped);  // odd form
  EXPECT_EQ(by_id(reports, "D.3").status, VerifyStatus::Skipped);  // k < 7
  EXPECT_EQ(by_id(reports, "D.4").status, VerifyStatus::Skipped);  // sigma = 1
  EXPECT_EQ(by_id(reports, "D.5").status, VerifyStatus::Skipped);
}

TEST(VerifyD, EvenRank6HypothesisConsistency) {
  // sigma = 2: stable vector (22,0,...), so D.2/D.4/D.5 all apply.
  ManifoldPresentation m(IntMatrix::from_rows({{0, 1, 0, 0, 0, 0},
                                               {1, 0, 0, 0, 0, 0},
                                               {0, 0, 0, 1, 0, 0},
                                               {0, 0, 1, 0, 0, 0},
                                               {0, 0, 0, 0, 0, 1},
                                               {0, 0, 0, 0, 1, 0}}),
                         {1, 0, 0, 0, 0, 0});
  ASSERT_EQ(sigma(m).divisor(), 2);
  auto reports = verify_theorem_D(m);
  EXPECT_EQ(by_id(reports, "D.0").status, VerifyStatus::Pass);
  EXPECT_EQ(by_id(reports, "D.1").status, VerifyStatus::Skipped);  // even form
  EXPECT_EQ(by_id(reports, "D.2").status, VerifyStatus::Pass);
  EXPECT_EQ(by_id(reports, "D.3").status, VerifyStatus::Skipped);  // k < 7
  EXPECT_EQ(by_id(reports, "D.4").status, VerifyStatus::Pass);
  EXPECT_EQ(by_id(reports, "D.5").status, VerifyStatus::Pass);
}

TEST(VerifyD, RankLimit) {
  ManifoldPresentation m(IntMatrix::identity(8), std::vector<i64>(8, 0));
  EXPECT_THROW(verify_theorem_D(m), ResourceLimitError);
}

TEST(VerifyRank2, ExhaustiveObservations) {
  auto reports = verify_rank2_example();
  ASSERT_EQ(reports.size(), 5u);
  EXPECT_EQ(count_status(reports, VerifyStatus::Pass), 5);
  EXPECT_TRUE(ids_sorted(reports));
  // Every observation had qualifying instances to check.
  for (const auto& r : reports)
    EXPECT_NE(r.observed.find(" qualifying l checked"), std::string::npos) << r.id;
}

TEST(VerifySigma, OddSigmaRank5) {
  ManifoldPresentation m(IntMatrix::identity(5), std::vector<i64>(5, 0));
  auto reports = verify_sigma_achievability(m);
  ASSERT_EQ(reports.size(), 4u);
  EXPECT_EQ(by_id(reports, "S.1").status, VerifyStatus::Pass);     // lambda = sigma mod 3
  EXPECT_EQ(by_id(reports, "S.2").status, VerifyStatus::Skipped);  // k < 7
  EXPECT_EQ(by_id(reports, "S.3").status, VerifyStatus::Skipped);  // k < 7
  EXPECT_EQ(by_id(reports, "S.4").status, VerifyStatus::Pass);     // 0,2,4 mod 8
}

TEST(VerifySigma, Preconditions) {
  ManifoldPresentation small(IntMatrix::identity(4), std::vector<i64>(4, 0));
  EXPECT_THROW(verify_sigma_achievability(small), PreconditionError);
  ManifoldPresentation big(IntMatrix::identity(8), std::vector<i64>(8, 0));
  EXPECT_THROW(verify_sigma_achievability(big), ResourceLimitError);
}

TEST(VerifyRender, TextAndJsonShape) {
  auto reports = verify_theorem_A(2, 9);
  std::string text = render_text(reports);
  EXPECT_NE(text.find("PASS"), std::string::npos);
  EXPECT_NE(text.find("pass, 0 fail"), std::string::npos);
  auto doc = render_json(reports);
  EXPECT_EQ(doc["pass"].get<int>(), 5);
  EXPECT_EQ(doc["fail"].get<int>(), 0);
  ASSERT_EQ(doc["reports"].size(), 5u);
  for (const auto& j : doc["reports"]) {
    EXPECT_TRUE(j.contains("id"));
    EXPECT_FALSE(j.contains("elapsed_ms"));
    EXPECT_FALSE(j.contains("skip_reason"));  // no skips in suite A
  }
}
