#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "gaugelat/errors.hpp"
#include "gaugelat/spectral.hpp"
#include "oracles.hpp"

using namespace gaugelat;

TEST(Spectral, ComplexMatchesEigenSolver) {
  std::mt19937_64 rng(2);
  for (int n : {1, 2, 5, 33, 120}) {
    HermitianOperator H;
    H.entries = oracle::random_hermitian(n, rng);
    const Eigensystem es = eigendecompose(H);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(H.entries);
    EXPECT_LT((es.values - ref.eigenvalues()).cwiseAbs().maxCoeff(), 1e-11 * H.frobenius_norm());
    EXPECT_LT(eigen_residual(H, es), 1e-12 * H.frobenius_norm());
    EXPECT_LT(orthonormality_error(es), 1e-12);
  }
}

TEST(Spectral, RealPathMatchesJacobi) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  Eigen::MatrixXd A(12, 12);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) A(i, j) = g(rng);
  A = 0.5 * (A + A.transpose()).eval();
  HermitianOperator H;
  H.entries = A.cast<cplx>();
  const auto ref = oracle::jacobi_eigenvalues(A);
  const Eigen::VectorXd e = eigenvalues(H);
  for (int i = 0; i < 12; ++i) EXPECT_NEAR(e(i), ref[i], 1e-12);
  // Real input gives real eigenvectors.
  EXPECT_EQ(eigendecompose(H).vectors.imag().cwiseAbs().maxCoeff(), 0.0);
}

TEST(Spectral, EigenvectorPhaseConvention) {
  std::mt19937_64 rng(8);
  HermitianOperator H;
  H.entries = oracle::random_hermitian(20, rng);
  const Eigensystem es = eigendecompose(H);
  for (int k = 0; k < 20; ++k) {
    Eigen::Index i;
    es.vectors.col(k).cwiseAbs().maxCoeff(&i);
    EXPECT_NEAR(es.vectors(i, k).imag(), 0.0, 1e-14);
    EXPECT_GT(es.vectors(i, k).real(), 0.0);
  }
}

TEST(Spectral, RejectsNonHermitian) {
  HermitianOperator H;
  H.entries = Eigen::MatrixXcd::Zero(2, 2);
  H.entries(0, 1) = 1.0;
  try {
    eigendecompose(H);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::contract_violation);
  }
}

TEST(Spectral, ThreadResolution) {
  EXPECT_EQ(resolve_threads(3), 3);
  setenv("GAUGELAT_THREADS", "2", 1);
  EXPECT_EQ(resolve_threads(0), 2);
  setenv("GAUGELAT_THREADS", "garbage", 1);
  EXPECT_GE(resolve_threads(0), 1);
  unsetenv("GAUGELAT_THREADS");
}

TEST(Spectral, ParallelForCoversAndRethrows) {
  std::vector<int> hits(100, 0);
  parallel_for(100, 4, [&](int i) { hits[static_cast<std::size_t>(i)]++; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, 3, [](int i) { if (i == 7) throw std::runtime_error("x"); }), std::runtime_error);
}

TEST(Spectral, BandFilterNames) {
  for (BandFilter f : {BandFilter::all, BandFilter::symmetric, BandFilter::antisymmetric, BandFilter::sector})
    EXPECT_EQ(band_filter_from_string(to_string(f)), f);
  EXPECT_THROW(band_filter_from_string("diagonal"), Error);
}

TEST(Spectral, FluxSweepFilters) {
  DimerChainParams d;
  d.N = 21;
  FluxSweepSpec spec;
  spec.family = d;
  spec.p_values = {0, 3};
  const SpectrumSweep all = flux_sweep(spec);
  spec.filter = BandFilter::symmetric;
  const SpectrumSweep sym = flux_sweep(spec);
  spec.filter = BandFilter::antisymmetric;
  const SpectrumSweep anti = flux_sweep(spec);
  EXPECT_EQ(all.at(3).eigenvalues.size(), 42u);
  EXPECT_EQ(sym.at(3).eigenvalues.size(), 21u);
  EXPECT_EQ(anti.at(3).eigenvalues.size(), 21u);
  // S states sit below A states.
  EXPECT_LT(sym.at(3).eigenvalues.back(), anti.at(3).eigenvalues.front());
  EXPECT_THROW(all.at(5), Error);
  spec.filter = BandFilter::sector;
  EXPECT_THROW(flux_sweep(spec), Error);
  spec.filter = BandFilter::all;
  spec.p_values = {21};
  EXPECT_THROW(flux_sweep(spec), Error);
}

TEST(Spectral, FluxSweepDeterministicAcrossThreads) {
  DimerChainParams d;
  d.N = 31;
  FluxSweepSpec spec;
  spec.family = d;
  spec.filter = BandFilter::symmetric;
  spec.threads = 1;
  const SpectrumSweep a = flux_sweep(spec);
  spec.threads = 3;
  const SpectrumSweep b = flux_sweep(spec);
  ASSERT_EQ(a.records.size(), 31u);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].param, b.records[i].param);
    EXPECT_EQ(a.records[i].eigenvalues, b.records[i].eigenvalues);
  }
}

TEST(Spectral, TrimerSectorSweep) {
  TrimerChainParams t;
  t.N_cells = 5;
  FluxSweepSpec spec;
  spec.family = t;
  spec.filter = BandFilter::sector;
  spec.sector = 3;
  spec.p_values = {1};
  EXPECT_EQ(flux_sweep(spec).records[0].eigenvalues.size(), 15u);
  spec.filter = BandFilter::symmetric;
  EXPECT_THROW(flux_sweep(spec), Error);
}

TEST(Spectral, LocalizationOfImpurityState) {
  // Uniform chain of 40 single sites with one strongly shifted site: the
  // top state is bound to the impurity.
  const PolymerLattice lat = build_square_lattice(40, 1, 1.0);
  HermitianOperator H = assemble(lat, CouplingModel{});
  H.entries(20, 20) = 3.0;
  const LocalizationReport r = localization_report(H, lat);
  EXPECT_EQ(r.eigen_index, 39);
  EXPECT_TRUE(r.localized);
  EXPECT_NEAR(r.centroid.x(), 20.0, 0.05);
  EXPECT_NEAR(r.probability.sum(), 1.0, 1e-12);
  // A bulk state of the clean chain is extended.
  HermitianOperator clean = assemble(lat, CouplingModel{});
  EXPECT_FALSE(localization_report(clean, lat, 20).localized);
  EXPECT_THROW(localization_report(clean, lat, 40), Error);
}

TEST(Spectral, LatticeConstantSweepShapes) {
  HedgehogParams hp;
  hp.n = 4;
  const LatticeConstantSweep s = lattice_constant_sweep(hp, {2.9, 3.5});
  ASSERT_EQ(s.reports.size(), 2u);
  EXPECT_EQ(s.sweep.parameter_name, "L");
  EXPECT_EQ(s.sweep.records[1].eigenvalues.size(), 32u);
}

// Property: the full p sweep of a dimer chain is mirror symmetric.
TEST(SpectralProperty, MirrorSymmetry) {
  for (int N : {11, 17}) {
    DimerChainParams d;
    d.N = N;
    FluxSweepSpec spec;
    spec.family = d;
    const SpectrumSweep s = flux_sweep(spec);
    for (int p = 0; p < N; ++p) {
      const auto& a = s.at(p).eigenvalues;
      const auto& b = s.at(N - 1 - p).eigenvalues;
      for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-10);
    }
  }
}
