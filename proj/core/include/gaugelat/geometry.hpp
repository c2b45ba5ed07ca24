#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace gaugelat {

using Vec2 = Eigen::Vector2d;

struct Polymer {
  Vec2 center = Vec2::Zero();
  std::vector<Vec2> site_offsets;
  double theta = 0.0;
};

enum class Family { dimer_chain, hedgehog, trimer_chain, square, custom };

std::string to_string(Family family);

// Polymers are stored row-major on an nx by ny grid: index = ix + nx*iy.
// Chains have ny == 1. a1 and a2 are the translations between grid
// neighbours, used for periodic wrap-around bonds.
struct PolymerLattice {
  Family family = Family::custom;
  std::vector<Polymer> polymers;
  int dimensionality = 1;
  double L = 1.0;
  double d = 0.0;
  int nx = 0;
  int ny = 1;
  Vec2 a1 = Vec2(1.0, 0.0);
  Vec2 a2 = Vec2(0.0, 1.0);

  int polymer_count() const { return static_cast<int>(polymers.size()); }
  int sites_per_polymer() const;
  int site_count() const { return polymer_count() * sites_per_polymer(); }
  int polymer_index(int ix, int iy) const { return ix + nx * iy; }
  Vec2 site(int polymer, int internal) const;
  Vec2 site(int global) const;
  std::vector<Vec2> sites() const;
  // Throws invalid_parameter if any invariant of the type is broken.
  void validate() const;
};

// theta_n = 2 pi p (n-1)/(N-1), n is 1-based.
double chain_angle(int n, int p, int N);

PolymerLattice build_dimer_chain(int N, int p, double L, double d);

// n even, n >= 4. Polymer (nx, ny) with 1-based indices sits at
// ((nx-1)L, -(ny-1)L).
PolymerLattice build_hedgehog_lattice(int n, double L, double d);

struct TrimerCellShape {
  std::array<double, 3> angles{0.0, 0.0, 0.0};
  // Angular shift of site 1 of every internal trimer; 0 keeps them equilateral.
  double deformation = 0.0;
};

struct TrimerChainDefaults {
  static constexpr double R_cell = 6.0;
  static constexpr double r_trimer = 2.0;
  static constexpr double d = 0.2;
};

// One polymer per cell with 9 sites ordered (trimer A, B, C) x (site 1, 2, 3).
PolymerLattice build_trimer_chain(int N_cells, int p, double R_cell,
                                  double r_trimer, double d,
                                  const TrimerCellShape& shape = {});

// Square lattice of single-site polymers at (ix L, iy L).
PolymerLattice build_square_lattice(int nx, int ny, double L);

// Minimum distance between sites of distinct polymers.
double min_inter_polymer_distance(const PolymerLattice& lattice);

}  // namespace gaugelat
