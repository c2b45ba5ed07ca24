#include <gtest/gtest.h>

#include <random>

#include "gaugelat/coupling.hpp"
#include "gaugelat/errors.hpp"
#include "oracles.hpp"

using namespace gaugelat;

TEST(Coupling, ExponentialLaw) {
  const CouplingModel m{2.0, 0.5};
  EXPECT_DOUBLE_EQ(coupling_strength(0.0, m), 2.0);
  EXPECT_NEAR(coupling_strength(1.0, m), 2.0 * std::exp(-2.0), 1e-15);
  EXPECT_THROW((CouplingModel{1.0, 0.0}.validate()), Error);
  EXPECT_THROW((CouplingModel{1.0, 1.0, CutoffPolicy::radius, -1.0}.validate()), Error);
}

TEST(Coupling, PairDistancesMatchSitePositions) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ang(-7, 7), len(0.3, 3.0);
  for (int t = 0; t < 100; ++t) {
    const double a = ang(rng), b = ang(rng), L = len(rng), d = 0.3 * len(rng);
    auto site = [&](double x0, double th, int i) {
      const double s = i == 1 ? -1.0 : 1.0;
      return Eigen::Vector2d(x0 + s * d * std::sin(th), s * d * std::cos(th));
    };
    const auto dist = dimer_pair_distances(a, b, L, d);
    int k = 0;
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) EXPECT_NEAR(dist[k++], (site(0, a, i) - site(L, b, j)).norm(), 1e-12);
  }
}

TEST(Coupling, SaTransformIsHadamardConjugation) {
  const DimerBond b{0.3, -0.7, 1.1, 0.25};
  Eigen::Matrix2d U;
  U << 1, 1, 1, -1;
  U /= std::sqrt(2.0);
  const Eigen::Matrix2d ref = U * b.matrix() * U;
  EXPECT_LT((sa_transform(b).matrix() - ref).norm(), 1e-15);
  const DimerBond back = sa_inverse(sa_transform(b));
  EXPECT_LT((back.matrix() - b.matrix()).norm(), 1e-15);
}

TEST(Coupling, IntraDimerCouplingMapsToPlusMinus) {
  // A lone dimer [[0, D], [D, 0]] becomes diag(+D, -D): index 0 is the +D state.
  const SABond s = sa_transform({0.0, 0.4, 0.4, 0.0});
  EXPECT_NEAR(s.aa, 0.4, 1e-16);
  EXPECT_NEAR(s.ss, -0.4, 1e-16);
  EXPECT_NEAR(s.as, 0.0, 1e-16);
}

// SS coupling at L = lambda: (2 d^2/L^2) cos[omega(2n-1)] Delta_L, up to
// corrections of higher order in d/L.
TEST(Coupling, ClosedFormSSAgreesAtSmallAlpha) {
  const double L = 1.66, lambda = 1.66;
  const CouplingModel m{1.0, lambda};
  const double dL = coupling_strength(L, m);
  double worst_coarse = 0, worst_fine = 0;
  for (double d : {0.05, 0.02}) {
    const double alpha = d / L;
    double& worst = d == 0.05 ? worst_coarse : worst_fine;
    for (int n = 1; n < 40; ++n) {
      const double omega = 2 * oracle::pi * 3 / 200.0;
      const double exact = sa_transform(dimer_bond(omega * (n - 1), omega * n, L, d, m)).ss;
      const double approx = closed_form_SS(n, omega, L, d, lambda, dL);
      EXPECT_NEAR(approx, 2 * alpha * alpha * std::cos(omega * (2 * n - 1)) * dL, 1e-15);
      worst = std::max(worst, std::abs(exact - approx));
    }
    EXPECT_LT(worst, 4.5 * alpha * alpha * alpha * alpha * dL) << "d=" << d;
  }
  // Residual is fourth order: shrinking d by 2.5 shrinks it by 2.5^4.
  EXPECT_NEAR(std::log(worst_coarse / worst_fine) / std::log(2.5), 4.0, 0.05);
  EXPECT_TRUE(small_alpha_regime(1.66, 0.1));
  EXPECT_FALSE(small_alpha_regime(2.9, 1.3));
}

TEST(Coupling, ClosedFormAAConsistentReading) {
  const double L = 2.8, d = 0.35, lambda = 1.0;
  const CouplingModel m{1.0, lambda};
  const double dL = coupling_strength(L, m);
  double worst = 0;
  for (int p : {5, 17, 40})
    for (int n = 1; n < 30; ++n) {
      const double omega = 2 * oracle::pi * p / 200.0;
      const double exact = sa_transform(dimer_bond(omega * (n - 1), omega * n, L, d, m)).aa;
      worst = std::max(worst, std::abs(closed_form_AA(n, omega, L, d, lambda, dL) - exact) / exact);
    }
  EXPECT_LT(worst, 0.01);
  // The as_printed reading is far off at this geometry.
  const double printed = closed_form_AA(3, 0.1, L, d, lambda, dL, AAReading::as_printed);
  const double exact = sa_transform(dimer_bond(0.2, 0.3, L, d, m)).aa;
  EXPECT_GT(std::abs(printed - exact) / exact, 1.0);
}

// Relative modulation of the A-A coupling at L=2.8, d=0.35, lambda=1.
TEST(Coupling, AntisymmetricModulationAmplitude) {
  EXPECT_NEAR(aa_modulation(2.8, 0.35, 1.0, AAReading::consistent), 0.08, 0.0005);
}

TEST(Coupling, PolarRoundTripAndFailures) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int t = 0; t < 200; ++t) {
    const PolarForm f{u(rng) * 2, u(rng), u(rng), std::exp(u(rng))};
    const Eigen::Matrix2d h = polar_reconstruct(f);
    const Eigen::Matrix2d back = polar_reconstruct(polar_parameters(h));
    EXPECT_LT((back - h).norm(), 1e-10 * h.norm());
  }
  Eigen::Matrix2d sing;
  sing << 1, 2, 2, 4;
  EXPECT_THROW(polar_parameters(sing), Error);
  Eigen::Matrix2d neg;
  neg << 1, 0, 0, -1;
  EXPECT_THROW(polar_parameters(neg), Error);
}

TEST(Coupling, GammaPolarDefinition) {
  const DimerBond b{0.5, 0.2, 0.1, 0.3};
  EXPECT_NEAR(gamma_polar(b), (0.2 - 0.1) * (0.2 - 0.1) + (0.5 + 0.3) * (0.5 + 0.3), 1e-15);
}
