#include <gtest/gtest.h>

#include <tubealg/builtins.hpp>
#include <tubealg/errors.hpp>

#include "oracles.hpp"

using namespace tubealg;
using oracle::phi;

namespace {

int squares(const std::vector<GeneralisedCharge>& charges) {
  int total = 0;
  for (const auto& u : charges) total += u.total_dim() * u.total_dim();
  return total;
}

const GeneralisedCharge& named(const std::vector<GeneralisedCharge>& charges, const std::string& name) {
  for (const auto& u : charges)
    if (u.name == name) return u;
  throw std::runtime_error("no charge " + name);
}

Complex action(const TubeCategory& t, const GeneralisedCharge& u, const std::string& ref) {
  return u.action[t.find(ref)](0, 0);
}

}  // namespace

TEST(Charges, ShippedChargesVerify) {
  for (const auto& id : builtin_ids()) {
    const auto b = load_builtin(id);
    for (const auto& u : b.charges) {
      const auto rep = verify_charge(b.tube, u);
      EXPECT_TRUE(rep.pass) << id << " " << u.name << " " << rep.detail;
    }
    EXPECT_EQ(squares(b.charges), b.tube.dim()) << id;
  }
}

TEST(Charges, Counts) {
  EXPECT_EQ(load_builtin("fib").charges.size(), 4u);
  EXPECT_EQ(load_builtin("yang-lee").charges.size(), 4u);
  EXPECT_EQ(load_builtin("rep-s3").charges.size(), 8u);
  EXPECT_EQ(load_builtin("2rep-z2z2-z2").charges.size(), 5u);
  for (const auto& [id, n] : {std::pair{"ty:z2:1:+", 2}, std::pair{"ty:z3:1:+", 3}, std::pair{"ty:z2xz2:hyp:+", 4}}) {
    EXPECT_EQ(static_cast<int>(load_builtin(id).charges.size()), n * (n + 7) / 2) << id;
  }
}

TEST(Charges, FibonacciSectorProfiles) {
  const auto b = load_builtin("fib");
  std::multiset<std::vector<int>> profiles;
  for (const auto& u : b.charges) profiles.insert(u.sector_dims);
  EXPECT_EQ(profiles, (std::multiset<std::vector<int>>{{1, 0}, {0, 1}, {0, 1}, {1, 1}}));
}

TEST(Charges, DecompositionMatchesShippedCharges) {
  for (const char* id : {"fib", "rep-s3", "ty:z2:1:+", "ty:z3:1:+", "2rep-z2z2-z2", "pointed:s3:0"}) {
    const auto b = load_builtin(id);
    const auto irreps = decompose_irreps(b.tube);
    ASSERT_EQ(irreps.size(), b.charges.size()) << id;
    EXPECT_EQ(squares(irreps), b.tube.dim()) << id;
    std::vector<int> hits(b.charges.size(), 0);
    for (const auto& v : irreps) {
      EXPECT_TRUE(verify_charge(b.tube, v).pass) << id << " " << v.name;
      int matches = 0;
      for (size_t j = 0; j < b.charges.size(); ++j) {
        if (isomorphic(b.tube, v, b.charges[j])) {
          ++matches;
          ++hits[j];
        }
      }
      EXPECT_EQ(matches, 1) << id << " " << v.name;
      const auto k = identify(b.tube, v, b.charges);
      ASSERT_TRUE(k.has_value()) << id;
      EXPECT_TRUE(isomorphic(b.tube, v, b.charges[*k])) << id;
    }
    for (int h : hits) EXPECT_EQ(h, 1) << id;
  }
}

TEST(Charges, DecompositionIsSeedIndependent) {
  const auto t = load_builtin("rep-s3").tube;
  const auto a = decompose_irreps(t, {}, 1), b = decompose_irreps(t, {}, 99);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    const auto ca = character(t, a[i]), cb = character(t, b[i]);
    for (size_t j = 0; j < ca.size(); ++j) EXPECT_LT(std::abs(ca[j] - cb[j]), 1e-8);
  }
}

TEST(Charges, DecompositionNeedsDagger) {
  const auto t = load_builtin("yang-lee").tube;
  try {
    decompose_irreps(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonUnitaryCategory);
  }
}

TEST(Charges, FibonacciTauChargesDiffer) {
  const auto b = load_builtin("fib");
  const auto& plus = named(b.charges, "U_tau+");
  const auto& minus = named(b.charges, "U_tau-");
  EXPECT_FALSE(isomorphic(b.tube, plus, minus));
  const Complex x = action(b.tube, plus, "tau>tau;tau;1");
  // x solves x^2 + x + phi^-2 = 0
  EXPECT_LT(std::abs(x * x + x + 1.0 / (phi * phi)), 1e-14);
  EXPECT_GT(x.imag(), 0.0);
}

TEST(Charges, PrintedActionValues) {
  {
    const auto b = load_builtin("rep-s3");
    const Complex q = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    for (int n = 0; n < 3; ++n) {
      const auto& u = named(b.charges, "U_pi" + std::to_string(n));
      EXPECT_LT(std::abs(action(b.tube, u, "pi>pi;pi;1") - 0.5 * std::pow(q, n)), 1e-14);
    }
  }
  {
    const auto b = load_builtin("ty:z2:1:+");
    const auto& u = named(b.charges, "U_01");
    const double s = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(action(b.tube, u, "0>1;m").real(), 1.0 / s, 1e-14);  // chi*(0,1) = 1
    EXPECT_NEAR(action(b.tube, u, "1>0;m").real(), 1.0 / s, 1e-14);
  }
  {
    const auto b = load_builtin("2rep-z2z2-z2");
    EXPECT_NEAR(action(b.tube, named(b.charges, "U_1gamma"), "gamma>1;D").real(), std::sqrt(2.0), 1e-15);
  }
}

TEST(Charges, RegularRepresentationDecomposesWithMultiplicity) {
  const auto b = load_builtin("fib");
  const auto reg = regular_representation(b.tube);
  EXPECT_TRUE(verify_charge(b.tube, reg).pass);
  EXPECT_EQ(reg.total_dim(), b.tube.dim());
}

TEST(Charges, GroupoidRepresentativeChoices) {
  for (const char* id : {"pointed:s3:0", "pointed:z2:1", "pointed:z2xz2:011", "2group:v4-z2-mixed", "2group:z4-v4-swap"}) {
    const auto b = load_builtin(id);
    for (int choice : {0, 1}) {
      const auto charges = groupoid_charges(*b.groupoid, b.tube, choice);
      EXPECT_EQ(squares(charges), b.tube.dim()) << id;
      for (const auto& u : charges) EXPECT_TRUE(verify_charge(b.tube, u).pass) << id << " " << u.name << " " << choice;
    }
    // Both choices give isomorphic charges.
    const auto a = groupoid_charges(*b.groupoid, b.tube, 0), c = groupoid_charges(*b.groupoid, b.tube, 1);
    ASSERT_EQ(a.size(), c.size());
    for (size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(isomorphic(b.tube, a[i], c[i])) << id << " " << a[i].name;
  }
}

TEST(Charges, PointedS3HasEightCharges) {
  // Drinfeld double of S3: pairs (conjugacy class, irrep of centraliser).
  const auto b = load_builtin("pointed:s3:0");
  EXPECT_EQ(b.charges.size(), 8u);
  std::multiset<int> dims;
  for (const auto& u : b.charges) dims.insert(u.total_dim());
  EXPECT_EQ(dims, (std::multiset<int>{1, 1, 2, 3, 3, 2, 2, 2}));
}

TEST(Charges, MakeChargeShapeErrors) {
  const auto t = load_builtin("fib").tube;
  ComplexMatrix one(1, 1);
  one << 1.0;
  EXPECT_THROW(make_charge(t, "bad", {{"1", 1}}, {}), Error);  // 1>1;tau missing
  ComplexMatrix wrong(2, 1);
  wrong << 1.0, 0.0;
  EXPECT_THROW(make_charge(t, "bad", {{"1", 1}}, {{"1>1;tau", wrong}}), Error);
}

TEST(Charges, BrokenChargeFailsVerification) {
  const auto b = load_builtin("fib");
  auto u = named(b.charges, "U_1tau");
  u.action[b.tube.find("1>tau;tau")] *= 1.001;
  EXPECT_FALSE(verify_charge(b.tube, u).pass);
}
