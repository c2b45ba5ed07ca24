#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gaugelat/coupling.hpp"
#include "gaugelat/geometry.hpp"
#include "gaugelat/hamiltonian.hpp"

namespace gaugelat {

struct GaugeTransform {
  std::vector<Eigen::MatrixXcd> U;  // one per polymer
  double g = 1.0;

  void validate(int internal_dim, double tol = 1e-12) const;
};

// exp(i phi) times the identity on each polymer.
GaugeTransform random_u1_transform(int polymers, std::mt19937_64& rng, int internal_dim = 1);
GaugeTransform random_su2_transform(int polymers, std::mt19937_64& rng);

// Block (a, b) becomes U(a)^dagger H_ab U(b).
HermitianOperator apply_gauge_transform(const HermitianOperator& H, const GaugeTransform& G);

// Bond phases a_i . A(N) on a polymer grid; direction 0 is e_1, 1 is e_2.
// The sample at N belongs to the bond (N - e_i, N).
struct VectorPotentialSamples {
  int nx = 0;
  int ny = 0;
  std::vector<std::array<double, 2>> phase;

  static VectorPotentialSamples zero(int nx, int ny);
};

// a_2 . A(N) = B * ix (ix 0-based), a_1 . A = 0. Plaquette flux is +B.
VectorPotentialSamples landau_gauge(int nx, int ny, double B);

// a_i . A(N) += Phi(N - e_i) - Phi(N), neighbours wrapped periodically.
VectorPotentialSamples pure_gauge_shift(const VectorPotentialSamples& A, const std::vector<double>& Phi);

// Assembles the lattice, then sets every grid bond block to
// |block| exp(-i g a_i . A(N)) with magnitudes taken entrywise.
HermitianOperator peierls_phase_field(const PolymerLattice& lattice, const CouplingModel& model,
                                      Boundary boundary, const VectorPotentialSamples& A,
                                      double g = 1.0);

using PauliVector = std::array<cplx, 4>;

// Principal logarithm: block = exp(Phi0 1 + Phi . sigma). Throws
// extraction_error for singular blocks or eigenvalues on the negative axis.
PauliVector extract_bond_log(const Eigen::Matrix2cd& block, const std::string& label = {});
Eigen::Matrix2cd pauli_exp(const PauliVector& phi);

struct PauliSample {
  PauliVector c{};
  bool valid = false;
};

using PauliGrid = std::vector<PauliSample>;  // indexed by polymer index

struct PortraitOptions {
  // Divide each block by sqrt|det| before the logarithm.
  bool normalize_modulus = true;
  // Work with Hadamard-conjugated (S/A basis) blocks.
  bool sa_basis = true;
};

struct BondLogField {
  int nx = 0, ny = 0;
  std::array<PauliGrid, 2> phi;  // phi[i][N]: bond (N - e_i, N)
};

struct VectorPotentialField {
  int nx = 0, ny = 0;
  std::array<PauliGrid, 2> A;  // A[i][N] = phi[i][N] - phi[i][N - e_i]
};

struct FieldStrength {
  int nx = 0, ny = 0;
  PauliGrid curl;        // d_y A_x - d_x A_y, forward differences
  PauliGrid commutator;  // -i [A_x, A_y]
  PauliGrid total;
};

BondLogField bond_log_field(const HermitianOperator& H, const PolymerLattice& lattice,
                            const PortraitOptions& options = {});
VectorPotentialField vector_potential(const BondLogField& field);
FieldStrength field_strength_bz(const VectorPotentialField& A);

struct NontrivialFieldReport {
  bool nontrivial = false;
  int plaquettes = 0;
  int skipped_singular = 0;
  // U(1): largest |plaquette phase|; otherwise largest m - |tr W| of the
  // det-normalised Wilson loop.
  double max_deviation = 0;
  std::vector<double> plaquette_values;  // phase (U(1)) or |tr W| per plaquette
};

NontrivialFieldReport nontrivial_field_test(const HermitianOperator& H, const PolymerLattice& lattice,
                                            double tol = 1e-9);

}  // namespace gaugelat
