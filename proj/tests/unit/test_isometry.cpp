#include <gtest/gtest.h>

#include <tubealg/builtins.hpp>
#include <tubealg/errors.hpp>

#include "draws.hpp"
#include "oracles.hpp"

using namespace tubealg;
using oracle::phi;

namespace {

const GeneralisedCharge& named(const BuiltinCategory& b, const std::string& name) {
  for (const auto& u : b.charges)
    if (u.name == name) return u;
  throw std::runtime_error("no charge " + name);
}

const ChannelBasis& basis_of(const std::string& id, const std::string& defect, const std::string& source) {
  const auto& p = draws::prepared(id);
  return p.bases.at({defect, p.cat.tube.object_index(source)});
}

std::vector<double> probs(const std::string& id, const std::string& defect, const std::string& source,
                          const std::string& charge) {
  const auto& p = draws::prepared(id);
  const auto& u = named(p.cat, charge);
  const int x = p.cat.tube.object_index(source);
  ComplexVector psi = ComplexVector::Zero(u.sector_dims[x]);
  psi(0) = 1.0;
  std::vector<double> out;
  for (const auto& c : transition_probabilities(u, basis_of(id, defect, source), psi).channels) out.push_back(c.p);
  return out;
}

void expect_near(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << i;
}

std::vector<double> column_magnitudes(const IsometryBlock& iso) {
  std::vector<double> out;
  for (int r = 0; r < iso.matrix.rows(); ++r) out.push_back(std::abs(iso.matrix(r, 0)));
  return out;
}

}  // namespace

TEST(Isometry, EveryBasisSatisfiesKraus) {
  for (const auto& id : draws::unitary_ids()) {
    const auto& p = draws::prepared(id);
    for (const auto& [key, basis] : p.bases) EXPECT_LT(kraus_residual(p.cat.tube, basis), 1e-9) << id << " " << key.first;
  }
}

TEST(Isometry, CanonicalAgreesWithReferenceUpToGauge) {
  const auto b = load_builtin("rep-s3");
  for (const auto& ref : b.reference_bases) {
    const auto canon = canonical_channel_basis(*b.fusion, b.tube, ref.defect, ref.source);
    EXPECT_LT(kraus_residual(b.tube, canon), 1e-10);
    for (const auto& u : b.charges) {
      if (u.sector_dims[ref.source] == 0) continue;
      ComplexVector psi = ComplexVector::Ones(u.sector_dims[ref.source]);
      const auto a = transition_probabilities(u, ref, psi), c = transition_probabilities(u, canon, psi);
      for (const auto& [s, m] : a.marginals) EXPECT_NEAR(m, c.marginals.at(s), 1e-10) << u.name;
    }
  }
}

TEST(Isometry, RepS3Probabilities) {
  expect_near(probs("rep-s3", "pi", "1", "U_1psi"), {0.25, 0.75}, 1e-12);
  expect_near(probs("rep-s3", "pi", "pi", "U_1pi"), {0.5, 0.25, 0.25, 0.0}, 1e-12);
}

TEST(Isometry, RepS3IsometryEntries) {
  const auto& p = draws::prepared("rep-s3");
  const auto a = assemble_isometry(named(p.cat, "U_1psi"), basis_of("rep-s3", "pi", "1"));
  expect_near(column_magnitudes(a), {0.5, std::sqrt(3.0) / 2.0}, 1e-12);
  const auto b = assemble_isometry(named(p.cat, "U_1pi"), basis_of("rep-s3", "pi", "pi"));
  expect_near(column_magnitudes(b), {std::sqrt(0.5), 0.5, 0.5, 0.0}, 1e-12);
}

TEST(Isometry, FibonacciProbabilities) {
  expect_near(probs("fib", "tau", "tau", "U_tau+"), {1.0 / phi, 1.0 / (phi * phi)}, 1e-12);
  expect_near(probs("fib", "tau", "1", "U_1tau"), {std::pow(phi, -4), 1.0 - std::pow(phi, -4)}, 1e-12);
  expect_near(probs("fib", "tau", "tau", "U_1tau"),
              {1.0 - 1.0 / phi - std::pow(phi, -6), 1.0 / phi, std::pow(phi, -6)}, 1e-12);
  const auto& p = draws::prepared("fib");
  const auto iso = assemble_isometry(named(p.cat, "U_1tau"), basis_of("fib", "tau", "tau"));
  const double first = std::abs(std::pow(phi, -1.5) * Complex(1.0, 1.0 / phi));
  expect_near(column_magnitudes(iso), {first, std::pow(phi, -0.5), std::pow(phi, -3)}, 1e-12);
  EXPECT_TRUE(is_isometry(iso.matrix));
}

TEST(Isometry, FibonacciGramIsPositive) {
  const auto& p = draws::prepared("fib");
  const auto& basis = basis_of("fib", "tau", "tau");
  const int tau = p.cat.tube.object_index("tau");
  const auto raw = raw_channels(p.cat.tube, "tau", tau, tau);
  ASSERT_EQ(raw.size(), 2u);
  ComplexMatrix gram = ComplexMatrix::Zero(2, 2);
  for (const auto& c : basis.channels) {
    if (c.target != tau) continue;
    ComplexVector v(2);
    for (int i = 0; i < 2; ++i) v(i) = c.coeffs(raw[i]);
    gram += v.conjugate() * v.transpose();
  }
  const auto [lo, hi] = oracle::hermitian_2x2_eigenvalues(gram);
  EXPECT_GT(lo, -1e-12);
  EXPECT_GT(hi, 0.0);
}

TEST(Isometry, YangLeeIsInfeasible) {
  const auto b = load_builtin("yang-lee");
  SolveOptions opts;
  opts.mode = ConstraintMode::Charges;
  opts.charges = b.charges;
  const SolveResult r = solve_channel_basis(b.tube, "tau", b.tube.object_index("1"), opts);
  ASSERT_TRUE(std::holds_alternative<InfeasibilityCertificate>(r));
  const auto& cert = std::get<InfeasibilityCertificate>(r);
  EXPECT_EQ(cert.witness, InfeasibilityCertificate::Witness::NegativeEigenvalue);
  const double expected = (1.0 - std::pow(phi, 4)) / (phi * (1.0 + phi * phi));
  EXPECT_NEAR(expected, -1.0, 1e-14);
  EXPECT_NEAR(cert.min_eigenvalue, expected, 1e-9);
  EXPECT_TRUE(cert.recheck());
  EXPECT_EQ(cert.charge_names.size(), b.charges.size());
}

TEST(Isometry, YangLeeHasNoDaggerSolve) {
  const auto b = load_builtin("yang-lee");
  EXPECT_THROW(solve_channel_basis(b.tube, "tau", 0), Error);
}

TEST(Isometry, TambaraYamagamiGram) {
  auto z2 = [](int a, int b) { return Complex((a & b) ? -1.0 : 1.0, 0.0); };
  auto add = [](int n, int a, int b) { return (a + b) % n; };
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_LT(oracle::ty_m_gram_residual(2, z2, add, s, ComplexMatrix::Identity(2, 2)), 1e-14);
  EXPECT_GT(oracle::ty_m_gram_residual(2, z2, add, s, 0.5 * ComplexMatrix::Identity(2, 2)), 0.4);

  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  auto z3 = [w](int a, int b) { return std::pow(w, a * b); };
  EXPECT_LT(oracle::ty_m_gram_residual(3, z3, add, 1.0 / std::sqrt(3.0), ComplexMatrix::Identity(3, 3)), 1e-14);

  // The solver lands on the same Gram block.
  const auto b = load_builtin("ty:z2:1:+");
  const int m = b.tube.object_index("m");
  const auto r = solve_channel_basis(b.tube, "m", m);
  ASSERT_TRUE(std::holds_alternative<ChannelBasis>(r));
  EXPECT_LT(kraus_residual(b.tube, std::get<ChannelBasis>(r)), 1e-9);
}

TEST(Isometry, KramersWannierTransfer) {
  expect_near(probs("ty:z2:1:+", "m", "0", "U_01"), {0.0, 1.0}, 1e-12);
  expect_near(probs("ty:z2:1:+", "m", "1", "U_01"), {1.0, 0.0}, 1e-12);
  for (const char* c : {"U_rho0+", "U_rho1-"}) {
    const auto p = probs("ty:z2:1:+", "m", "m", c);
    double total = 0.0;
    for (double v : p) {
      EXPECT_NEAR(v, 0.5, 1e-12) << c;
      total += v;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(Isometry, GaugeInvariance) {
  const auto& p = draws::prepared("rep-s3");
  const auto& basis = basis_of("rep-s3", "pi", "pi");
  const int pi = p.cat.tube.object_index("pi");
  int k = 0;
  for (const auto& c : basis.channels) k += c.target == pi;
  ASSERT_EQ(k, 3);
  const auto rotated = gauge_rotate(basis, pi, draws::random_unitary(3, 7));
  EXPECT_LT(kraus_residual(p.cat.tube, rotated), 1e-10);
  for (const auto& u : p.cat.charges) {
    if (u.sector_dims[pi] == 0) continue;
    ComplexVector psi = ComplexVector::LinSpaced(u.sector_dims[pi], 1.0, 2.0);
    const auto a = transition_probabilities(u, basis, psi), b = transition_probabilities(u, rotated, psi);
    for (const auto& [s, m] : a.marginals) EXPECT_NEAR(m, b.marginals.at(s), 1e-12) << u.name;
    EXPECT_NEAR(b.total, 1.0, 1e-12);
  }
}

TEST(Isometry, ApplyChannelPreservesTrace) {
  const auto& p = draws::prepared("fib");
  const auto& u = named(p.cat, "U_1tau");
  const int tau = p.cat.tube.object_index("tau");
  ComplexMatrix rho(1, 1);
  rho << 0.3;
  double tr = 0.0;
  for (const auto& o : apply_channel(u, basis_of("fib", "tau", "tau"), {tau, rho})) tr += o.block.trace().real();
  EXPECT_NEAR(tr, 0.3, 1e-14);
}

TEST(Isometry, Errors) {
  const auto& p = draws::prepared("rep-s3");
  const auto& basis = basis_of("rep-s3", "pi", "pi");
  const auto& u = named(p.cat, "U_1pi");
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code_of([&] { transition_probabilities(u, basis, ComplexVector::Zero(1)); }), ErrorCode::ZeroState);
  EXPECT_EQ(code_of([&] { transition_probabilities(u, basis, ComplexVector::Ones(3)); }), ErrorCode::SectorMismatch);
  EXPECT_EQ(code_of([&] { gauge_rotate(basis, basis.source, 2.0 * ComplexMatrix::Identity(3, 3)); }),
            ErrorCode::NotUnitary);
  EXPECT_EQ(code_of([&] { gauge_rotate(basis, basis.source, ComplexMatrix::Identity(2, 2)); }), ErrorCode::NotUnitary);
}

TEST(Isometry, PropertyDraws) {
  const auto stats = draws::run_property_draws(60, 2024);
  EXPECT_EQ(stats.draws, 60);
  EXPECT_LT(stats.total_deviation, 1e-9);
  EXPECT_LT(stats.gauge_deviation, 1e-9);
  EXPECT_LT(stats.trace_deviation, 1e-9);
  EXPECT_LT(stats.direct_deviation, 1e-9);
}
