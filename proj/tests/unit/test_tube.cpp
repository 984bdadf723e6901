#include <gtest/gtest.h>

#include <tubealg/builtins.hpp>
#include <tubealg/errors.hpp>

#include "oracles.hpp"

using namespace tubealg;
using oracle::phi;

namespace {

Complex coefficient(const TubeCategory& t, const TubeVector& v, const std::string& ref) { return v(t.find(ref)); }

TubeVector compose(const TubeCategory& t, const std::string& g, const std::string& f) {
  return t.compose(t.unit(t.find(g)), t.unit(t.find(f)));
}

// Every coefficient of v except those listed must vanish.
void expect_terms(const TubeCategory& t, const TubeVector& v, const std::vector<std::pair<std::string, Complex>>& want,
                  double tol = 1e-12) {
  TubeVector expected = TubeVector::Zero(t.dim());
  for (const auto& [r, c] : want) expected(t.find(r)) += c;
  EXPECT_LT((v - expected).cwiseAbs().maxCoeff(), tol);
}

double structure_deviation(const TubeCategory& a, const TubeCategory& b) {
  double worst = 0.0;
  for (int g = 0; g < a.dim(); ++g) {
    for (int f = 0; f < a.dim(); ++f) {
      if (!a.composable(g, f)) continue;
      const TubeVector x = a.compose(a.unit(g), a.unit(f));
      const TubeVector y = b.compose(b.unit(b.find(a.ref(g))), b.unit(b.find(a.ref(f))));
      for (int i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(x(i) - y(b.find(a.ref(i)))));
    }
    const TubeVector x = a.dagger(a.unit(g));
    const TubeVector y = b.dagger(b.unit(b.find(a.ref(g))));
    for (int i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(x(i) - y(b.find(a.ref(i)))));
  }
  return worst;
}

}  // namespace

TEST(Tube, Dimensions) {
  EXPECT_EQ(load_builtin("fib").tube.dim(), 7);
  EXPECT_EQ(load_builtin("rep-s3").tube.dim(), 17);
  // x>x;a (4) + x>y;m (4) + m>m;a (2) + m>m;m;b (2)
  EXPECT_EQ(load_builtin("ty:z2:1:+").tube.dim(), 12);
  EXPECT_EQ(load_builtin("2rep-z2z2-z2").tube.dim(), 8);
  EXPECT_EQ(load_builtin("pointed:s3:0").tube.dim(), 36);
}

TEST(Tube, ChannelSpaceDims) {
  const auto rs = build_rep_s3();
  const int pi = rs.label_index("pi");
  EXPECT_EQ(channel_space_dim(rs, pi, pi, pi), 3);
  const auto fib = build_fib();
  EXPECT_EQ(channel_space_dim(fib, 1, 1, 1), 2);
  EXPECT_EQ(channel_space_dim(fib, 1, 0, 0), 1);
  EXPECT_EQ(channel_space_dim(fib, 0, 0, 1), 0);
}

TEST(Tube, FibonacciCompositionEntries) {
  const auto t = load_builtin("fib").tube;
  expect_terms(t, compose(t, "tau>tau;tau;1", "tau>tau;tau;1"),
               {{"tau>tau;1", std::pow(phi, -3.0)}, {"tau>tau;tau;tau", std::pow(phi, -2.0)}});
  expect_terms(t, compose(t, "1>tau;tau", "1>1;tau"), {{"1>tau;tau", -1.0 / phi}});
  expect_terms(t, t.dagger(t.unit(t.find("tau>tau;tau;1"))),
               {{"tau>tau;tau;1", 1.0 / phi}, {"tau>tau;tau;tau", 1.0 / phi}});
}

TEST(Tube, RepS3CompositionEntries) {
  const auto t = load_builtin("rep-s3").tube;
  // The printed table has -1/4 for the second coefficient; associativity and
  // the charges both require -1.
  expect_terms(t, compose(t, "pi>pi;pi;pi", "pi>pi;pi;pi"), {{"pi>pi;pi;1", 1.0}, {"pi>pi;pi;psi", -1.0}});
  expect_terms(t, t.dagger(t.unit(t.find("pi>pi;pi;pi"))), {{"pi>pi;pi;1", 1.0}, {"pi>pi;pi;psi", -1.0}});
}

TEST(Tube, RepS3PrintedEntryIsInconsistent) {
  const auto t = load_builtin("rep-s3").tube;
  const auto rep = verify_against_reference(t, rep_s3_tables_as_printed());
  EXPECT_FALSE(rep.pass);
  EXPECT_NEAR(rep.residual, 0.75, 1e-12);
  EXPECT_NE(rep.detail.find("pi>pi;pi;pi o pi>pi;pi;pi"), std::string::npos);
  // Presented on its own, the printed table is not associative.
  EXPECT_THROW(presented_tube(rep_s3_tables_as_printed()), Error);
}

TEST(Tube, DerivedMatchesReferenceTables) {
  for (const char* id : {"fib", "rep-s3", "yang-lee"}) {
    const auto b = load_builtin(id);
    const auto rep = verify_against_reference(b.tube, *b.reference_tables);
    EXPECT_TRUE(rep.pass) << id << " " << rep.detail;
    EXPECT_LT(rep.residual, 1e-10) << id;
  }
}

TEST(Tube, DerivedEqualsPresentedEverywhere) {
  for (const char* id : {"fib", "rep-s3"}) {
    const auto b = load_builtin(id);
    const TubeCategory presented = presented_tube(*b.reference_tables);
    EXPECT_LT(structure_deviation(b.tube, presented), 1e-10) << id;
    EXPECT_EQ(presented.provenance(), Provenance::Presented);
  }
}

TEST(Tube, TambaraYamagamiMMComposition) {
  const auto b = load_builtin("ty:z2:1:+");
  const auto& t = b.tube;
  const double s = 1.0 / std::sqrt(2.0);
  auto chi = [](int a, int c) { return (a * c) % 2 ? -1.0 : 1.0; };
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) {
      const TubeVector v = compose(t, "m>m;m;" + std::to_string(a), "m>m;m;" + std::to_string(c));
      const int ab = (a + c) % 2;
      for (int d = 0; d < 2; ++d) {
        EXPECT_NEAR(std::abs(coefficient(t, v, "m>m;" + std::to_string(d)) - s / 2.0 * chi(a, c) * chi(ab, d)), 0.0,
                    1e-14);
      }
    }
}

TEST(Tube, PointedDaggerUsesTransgression) {
  const auto b = load_builtin("pointed:z2:1");
  const auto& d = *b.groupoid;
  const auto& t = b.tube;
  for (int x = 0; x < 2; ++x)
    for (int g = 0; g < 2; ++g) {
      const int f = x * 2 + g;
      const TubeVector v = t.dagger(t.unit(f));
      // Abelian: g.x = x and g^-1 = g.
      EXPECT_NEAR(std::abs(v(f) - std::conj(d.theta(x, g, g))), 0.0, 1e-14);
    }
  // tau_1(1,1) = omega(1,1,1) omega(1,1,1) / omega(1,1,1) = -1 for Z2 with p = 1.
  EXPECT_NEAR(d.theta(1, 1, 1).real(), -1.0, 1e-14);
  EXPECT_NEAR(d.theta(0, 1, 1).real(), 1.0, 1e-14);
}

TEST(Tube, StructuralResidualsAllBuiltins) {
  for (const auto& id : builtin_ids()) {
    const auto b = load_builtin(id);
    EXPECT_LT(b.tube.associativity_residual(), 1e-12) << id;
    EXPECT_LT(b.tube.identity_residual(), 1e-12) << id;
    EXPECT_LT(b.tube.dagger_residual(), 1e-12) << id;
    EXPECT_EQ(b.tube.has_dagger(), id != "yang-lee") << id;
    EXPECT_TRUE(regular_representation_faithful(b.tube)) << id;
  }
}

TEST(Tube, DaggerIsAntilinear) {
  const auto t = load_builtin("fib").tube;
  TubeVector v = TubeVector::Zero(t.dim());
  v(t.find("tau>tau;tau;1")) = Complex(0.3, 0.8);
  const TubeVector d = t.dagger(v);
  const TubeVector d1 = t.dagger(t.unit(t.find("tau>tau;tau;1")));
  EXPECT_LT((d - std::conj(Complex(0.3, 0.8)) * d1).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Tube, LookupErrors) {
  const auto t = load_builtin("rep-s3").tube;
  EXPECT_THROW(t.find("pi>pi;pi"), Error);  // three channels, k needed
  EXPECT_THROW(t.find("1>1;sigma"), Error);
  EXPECT_THROW(t.find("garbage"), Error);
  EXPECT_NO_THROW(t.find("1>pi;pi"));
  try {
    compose(t, "1>1;pi", "pi>pi;pi;1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonComposable);
  }
}

TEST(Tube, PerturbedDaggerNamesMorphism) {
  auto tables = reference_tables("fib");
  for (auto& d : *tables.dagger)
    if (d.f == "tau>tau;tau;1") d.terms[0].second += 1e-3;
  try {
    presented_tube(tables);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DaggerViolation);
    EXPECT_NE(std::string(e.what()).find("tau>tau;tau;1"), std::string::npos) << e.what();
  }
}

TEST(Tube, NonUnitaryHasNoDagger) {
  const auto t = derive_tube(build_yang_lee());
  EXPECT_FALSE(t.has_dagger());
  EXPECT_THROW(t.dagger_terms(0), Error);
}

TEST(Tube, TwoRepMorphismSpaces) {
  const auto t = load_builtin("2rep-z2z2-z2").tube;
  const int one = t.object_index("1"), gamma = t.object_index("gamma");
  EXPECT_EQ(t.block(one, one).size(), 3u);
  EXPECT_EQ(t.block(one, gamma).size(), 1u);
  EXPECT_EQ(t.block(gamma, one).size(), 1u);
  EXPECT_EQ(t.block(gamma, gamma).size(), 3u);
  expect_terms(t, t.dagger(t.unit(t.find("gamma>1;D"))), {{"1>gamma;D", 1.0}});
}

TEST(Tube, TwoRepPrintedChargesCannotFixCompositions) {
  const TubePresentation skeleton = two_rep_skeleton();
  const TubeCategory bare = presented_tube(skeleton);
  try {
    reconstruct_from_charges(skeleton, two_rep_charges(bare, true), bare);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonSemisimple);
    EXPECT_NE(std::string(e.what()).find("gamma>gamma"), std::string::npos);
  }
  const TubePresentation fitted = reconstruct_from_charges(skeleton, two_rep_charges(bare, false), bare);
  EXPECT_NO_THROW(presented_tube(fitted));
}

TEST(Tube, PresentationRoundTrip) {
  for (const char* id : {"fib", "ty:z3:1:+", "pointed:s3:0"}) {
    const auto b = load_builtin(id);
    const TubeCategory again = presented_tube(to_presentation(b.tube));
    EXPECT_EQ(again.dim(), b.tube.dim());
    EXPECT_LT(structure_deviation(b.tube, again), 1e-14) << id;
  }
}
