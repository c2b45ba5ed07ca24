#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Core>

#include "gaugelat/coupling.hpp"
#include "gaugelat/geometry.hpp"

namespace gaugelat {

using cplx = std::complex<double>;

enum class Basis { site, dimer_sa, trimer_c3 };

struct HermitianOperator {
  Eigen::MatrixXcd entries;
  int internal_dim = 1;
  Basis basis = Basis::site;

  int dimension() const { return static_cast<int>(entries.rows()); }
  int polymer_count() const { return dimension() / internal_dim; }
  // <a|H|b> as an internal_dim x internal_dim block.
  Eigen::MatrixXcd block(int a, int b) const;
  bool is_real(double tol = 0.0) const;
  double frobenius_norm() const { return entries.norm(); }
  // Throws contract_violation when |H - H^dagger| exceeds tol * max|H|.
  void require_hermitian(double tol = 1e-14) const;
};

enum class Boundary { open, periodic, periodic_y };

// Bond between polymers `from` and `to`; to = from + e_direction on the grid
// (direction 0 along a1, 1 along a2, -1 for radius-cutoff pairs). `shift` is
// added to the positions of `to` for wrap-around bonds.
struct PolymerBond {
  int from = 0;
  int to = 0;
  int direction = 0;
  Vec2 shift = Vec2::Zero();
};

std::vector<PolymerBond> polymer_bonds(const PolymerLattice& lattice,
                                       const CouplingModel& model, Boundary boundary);

// Site-basis tight-binding operator. Every pair of sites inside a polymer is
// coupled by the distance law, as is every site pair across a bond.
HermitianOperator assemble(const PolymerLattice& lattice, const CouplingModel& model,
                           Boundary boundary = Boundary::open, double onsite = 0.0);

// 2x2 Hadamard conjugation applied to every polymer block. Index 0 of each
// polymer becomes the A state (+Delta), index 1 the S state (-Delta).
HermitianOperator dimer_basis_transform(const HermitianOperator& H);

struct BlockDecomposition {
  HermitianOperator H_A;
  HermitianOperator H_S;
  Eigen::MatrixXcd delta_AS;  // rows: A states, columns: S states
  std::vector<int> permutation;  // new position k holds old index permutation[k]
};

BlockDecomposition reorganize_sa(const HermitianOperator& H1);
HermitianOperator reassemble_sa(const BlockDecomposition& blocks);

struct DecouplingReport {
  double delta_max = 0;
  double hs_max = 0;
  double ratio = 0;
  bool decoupled = false;
};

// Decoupled when max|delta_AS| < threshold * max|H_S|.
DecouplingReport sa_decoupling(const BlockDecomposition& blocks, double threshold = 0.05);

// Pauli components (c0, c1, c2, c3) of a 2x2 block: Tr(M sigma_mu)/2.
std::array<cplx, 4> pauli_components(const Eigen::Matrix2cd& m);
Eigen::Matrix2cd from_pauli(const std::array<cplx, 4>& c);

struct BondFluctuation {
  PolymerBond bond;
  std::array<cplx, 4> delta{};  // Pauli components of block - Delta(L)(1 + sigma1)
};

struct Su2Form {
  HermitianOperator site;          // assembled site-basis operator
  HermitianOperator transformed;   // A block then S block, built from the fluctuations
  std::vector<BondFluctuation> fluctuations;
  double delta_L = 0;              // Delta(L), center-to-center coupling
  double delta_intra = 0;          // Delta(2d)
};

Su2Form su2_square_hamiltonian(const PolymerLattice& lattice, const CouplingModel& model,
                               Boundary boundary = Boundary::open);

// (U)_{pq} = exp(i 2 pi (2+p) q / 3)/sqrt(3), p, q = 1..3.
Eigen::Matrix3cd c3_unitary();

struct TrimerSectorForm {
  HermitianOperator H;
  std::vector<int> permutation;
  // Sector labels in block order: 3 (uniform), 1, 2.
  std::array<int, 3> sector_order{3, 1, 2};
  int sector_size = 0;

  Eigen::MatrixXcd sector_block(int q) const;
};

TrimerSectorForm trimer_basis_transform(const HermitianOperator& H);

}  // namespace gaugelat
