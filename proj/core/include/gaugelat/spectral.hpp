#pragma once

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "gaugelat/geometry.hpp"
#include "gaugelat/hamiltonian.hpp"

namespace gaugelat {

struct Eigensystem {
  Eigen::VectorXd values;    // ascending
  Eigen::MatrixXcd vectors;  // columns; largest-magnitude component real positive
};

// LAPACK divide and conquer (zheevd, or dsyevd when H is real).
Eigensystem eigendecompose(const HermitianOperator& H, double hermitian_tol = 1e-12);
Eigen::VectorXd eigenvalues(const HermitianOperator& H, double hermitian_tol = 1e-12);
Eigen::VectorXd eigenvalues(const Eigen::MatrixXcd& H, double hermitian_tol = 1e-12);

// max_k |H v_k - lambda_k v_k|_2 and max |V^dagger V - 1|.
double eigen_residual(const HermitianOperator& H, const Eigensystem& es);
double orthonormality_error(const Eigensystem& es);

// requested > 0 wins, then GAUGELAT_THREADS, then hardware concurrency.
int resolve_threads(int requested);
// Runs fn(i) for i in [0, count) on up to `threads` workers. The first
// exception thrown by any task is rethrown.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

enum class BandFilter { all, symmetric, antisymmetric, sector };

std::string to_string(BandFilter filter);
BandFilter band_filter_from_string(const std::string& name);

struct DimerChainParams {
  int N = 201;
  double L = 1.66;
  double d = 0.1;
  double lambda = 1.66;
  double delta0 = 1.0;
  Boundary boundary = Boundary::open;
};

struct TrimerChainParams {
  int N_cells = 101;
  double R_cell = TrimerChainDefaults::R_cell;
  double r_trimer = TrimerChainDefaults::r_trimer;
  double d = TrimerChainDefaults::d;
  TrimerCellShape shape;
  double lambda = 1.0;
  double delta0 = 1.0;
  double onsite = 0.0;
  Boundary boundary = Boundary::open;
};

using ChainFamily = std::variant<DimerChainParams, TrimerChainParams>;

struct FluxSweepSpec {
  ChainFamily family = DimerChainParams{};
  BandFilter filter = BandFilter::all;
  int sector = 3;            // C3 sector label for BandFilter::sector
  std::vector<int> p_values; // empty: every p in [0, N-1]
  int threads = 0;
};

struct SpectrumRecord {
  double param = 0;
  std::vector<double> eigenvalues;  // ascending
};

struct SpectrumSweep {
  std::string parameter_name = "p";
  std::vector<SpectrumRecord> records;
  std::vector<std::pair<std::string, std::string>> metadata;

  const SpectrumRecord& at(double param) const;
};

int chain_length(const ChainFamily& family);
std::vector<std::pair<std::string, std::string>> describe(const ChainFamily& family);

// The operator whose spectrum forms the record for turn number p.
HermitianOperator flux_operator(const FluxSweepSpec& spec, int p);
SpectrumSweep flux_sweep(const FluxSweepSpec& spec);

struct LocalizationThresholds {
  double ipr_factor = 10.0;     // flagged when IPR > ipr_factor / dimension
  double gap_fraction = 0.02;   // and gap > gap_fraction * bandwidth
};

struct LocalizationReport {
  int eigen_index = 0;
  double energy = 0;
  double ipr = 0;
  Vec2 centroid = Vec2::Zero();
  double gap = 0;
  double bandwidth = 0;
  bool localized = false;
  Eigen::VectorXd probability;  // per site
};

// index < 0 selects the top state.
LocalizationReport localization_report(const HermitianOperator& H, const PolymerLattice& lattice,
                                       int index = -1, const LocalizationThresholds& thr = {});
LocalizationReport localization_report(const Eigensystem& es, const PolymerLattice& lattice,
                                       int index = -1, const LocalizationThresholds& thr = {});

struct HedgehogParams {
  int n = 20;
  double L = 2.9;
  double d = 1.3;
  double lambda = 1.0;
  double delta0 = 1.0;
};

struct LatticeConstantSweep {
  SpectrumSweep sweep;
  std::vector<LocalizationReport> reports;
};

LatticeConstantSweep lattice_constant_sweep(const HedgehogParams& base, const std::vector<double>& L_values,
                                            const LocalizationThresholds& thr = {}, int threads = 0);

}  // namespace gaugelat
