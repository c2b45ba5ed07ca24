#include "gaugelat/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gaugelat/errors.hpp"

namespace gaugelat {

Eigen::MatrixXcd HermitianOperator::block(int a, int b) const {
  const int m = internal_dim;
  return entries.block(a * m, b * m, m, m);
}

bool HermitianOperator::is_real(double tol) const {
  return entries.imag().cwiseAbs().maxCoeff() <= tol;
}

void HermitianOperator::require_hermitian(double tol) const {
  if (entries.rows() != entries.cols())
    throw Error(ErrorKind::contract_violation, "operator is not square");
  if (entries.size() == 0) return;
  const double scale = entries.cwiseAbs().maxCoeff();
  const double dev = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol * std::max(scale, 1e-300))
    throw Error(ErrorKind::contract_violation,
                "operator is not Hermitian (deviation " + std::to_string(dev) + ")");
}

std::vector<PolymerBond> polymer_bonds(const PolymerLattice& lattice,
                                       const CouplingModel& model, Boundary boundary) {
  std::vector<PolymerBond> bonds;
  const int nx = lattice.nx;
  const int ny = lattice.ny;
  if (model.cutoff == CutoffPolicy::radius) {
    if (boundary != Boundary::open)
      throw Error(ErrorKind::invalid_parameter, "radius cutoff supports open boundaries only");
    const int np = lattice.polymer_count();
    for (int a = 0; a < np; ++a)
      for (int b = a + 1; b < np; ++b) {
        const double r = (lattice.polymers[static_cast<std::size_t>(a)].center -
                          lattice.polymers[static_cast<std::size_t>(b)].center)
                             .norm();
        if (r <= model.radius) bonds.push_back({a, b, -1, Vec2::Zero()});
      }
    return bonds;
  }

  const bool wrap_x = boundary == Boundary::periodic;
  const bool wrap_y = (boundary == Boundary::periodic || boundary == Boundary::periodic_y) && ny > 1;
  if (boundary == Boundary::periodic_y && ny < 2)
    throw Error(ErrorKind::invalid_parameter, "periodic_y needs a 2D lattice");
  if ((wrap_x && nx < 3) || (wrap_y && ny < 3))
    throw Error(ErrorKind::invalid_parameter, "periodic direction needs at least 3 polymers");

  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const int a = lattice.polymer_index(ix, iy);
      if (ix + 1 < nx)
        bonds.push_back({a, lattice.polymer_index(ix + 1, iy), 0, Vec2::Zero()});
      else if (wrap_x)
        bonds.push_back({a, lattice.polymer_index(0, iy), 0, static_cast<double>(nx) * lattice.a1});
      if (ny > 1) {
        if (iy + 1 < ny)
          bonds.push_back({a, lattice.polymer_index(ix, iy + 1), 1, Vec2::Zero()});
        else if (wrap_y)
          bonds.push_back({a, lattice.polymer_index(ix, 0), 1, static_cast<double>(ny) * lattice.a2});
      }
    }
  }
  return bonds;
}

HermitianOperator assemble(const PolymerLattice& lattice, const CouplingModel& model,
                           Boundary boundary, double onsite) {
  lattice.validate();
  model.validate();
  const int m = lattice.sites_per_polymer();
  const int np = lattice.polymer_count();
  HermitianOperator H;
  H.internal_dim = m;
  H.basis = Basis::site;
  H.entries = Eigen::MatrixXcd::Zero(np * m, np * m);

  for (int a = 0; a < np; ++a) {
    for (int i = 0; i < m; ++i) {
      H.entries(a * m + i, a * m + i) = onsite;
      for (int j = i + 1; j < m; ++j) {
        const double v = coupling_strength((lattice.site(a, i) - lattice.site(a, j)).norm(), model);
        H.entries(a * m + i, a * m + j) = v;
        H.entries(a * m + j, a * m + i) = v;
      }
    }
  }
  for (const PolymerBond& b : polymer_bonds(lattice, model, boundary)) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const Vec2 rj = lattice.site(b.to, j) + b.shift;
        const double v = coupling_strength((lattice.site(b.from, i) - rj).norm(), model);
        H.entries(b.from * m + i, b.to * m + j) += v;
        H.entries(b.to * m + j, b.from * m + i) += v;
      }
  }
  return H;
}

namespace {

// U M U for the real symmetric Hadamard U = [[1, 1], [1, -1]]/sqrt(2).
Eigen::Matrix2cd hadamard_conj(const Eigen::Matrix2cd& M) {
  Eigen::Matrix2cd out;
  out(0, 0) = 0.5 * (M(0, 0) + M(0, 1) + M(1, 0) + M(1, 1));
  out(0, 1) = 0.5 * (M(0, 0) - M(0, 1) + M(1, 0) - M(1, 1));
  out(1, 0) = 0.5 * (M(0, 0) + M(0, 1) - M(1, 0) - M(1, 1));
  out(1, 1) = 0.5 * (M(0, 0) - M(0, 1) - M(1, 0) + M(1, 1));
  return out;
}

Eigen::MatrixXcd permute_symmetric(const Eigen::MatrixXcd& M, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  Eigen::MatrixXcd out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out(r, c) = M(perm[static_cast<std::size_t>(r)], perm[static_cast<std::size_t>(c)]);
  return out;
}

}  // namespace

HermitianOperator dimer_basis_transform(const HermitianOperator& H) {
  if (H.internal_dim != 2)
    throw Error(ErrorKind::basis_mismatch, "dimer transform needs internal dimension 2");
  if (H.basis != Basis::site)
    throw Error(ErrorKind::basis_mismatch, "dimer transform expects a site-basis operator");
  HermitianOperator out = H;
  out.basis = Basis::dimer_sa;
  const int np = H.polymer_count();
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b) {
      const Eigen::Matrix2cd blk = H.entries.block<2, 2>(2 * a, 2 * b);
      if (blk.cwiseAbs().maxCoeff() == 0.0) continue;
      out.entries.block<2, 2>(2 * a, 2 * b) = hadamard_conj(blk);
    }
  return out;
}

BlockDecomposition reorganize_sa(const HermitianOperator& H1) {
  if (H1.internal_dim != 2 || H1.basis != Basis::dimer_sa)
    throw Error(ErrorKind::basis_mismatch, "reorganize_sa expects a dimer S/A operator");
  const int np = H1.polymer_count();
  BlockDecomposition out;
  out.permutation.resize(static_cast<std::size_t>(2 * np));
  for (int a = 0; a < np; ++a) {
    out.permutation[static_cast<std::size_t>(a)] = 2 * a;
    out.permutation[static_cast<std::size_t>(np + a)] = 2 * a + 1;
  }
  const Eigen::MatrixXcd P = permute_symmetric(H1.entries, out.permutation);
  out.H_A.entries = P.topLeftCorner(np, np);
  out.H_S.entries = P.bottomRightCorner(np, np);
  out.H_A.basis = out.H_S.basis = Basis::dimer_sa;
  out.delta_AS = P.topRightCorner(np, np);
  return out;
}

HermitianOperator reassemble_sa(const BlockDecomposition& blocks) {
  const int np = blocks.H_A.dimension();
  Eigen::MatrixXcd P(2 * np, 2 * np);
  P.topLeftCorner(np, np) = blocks.H_A.entries;
  P.bottomRightCorner(np, np) = blocks.H_S.entries;
  P.topRightCorner(np, np) = blocks.delta_AS;
  P.bottomLeftCorner(np, np) = blocks.delta_AS.adjoint();
  HermitianOperator out;
  out.internal_dim = 2;
  out.basis = Basis::dimer_sa;
  out.entries.resize(2 * np, 2 * np);
  for (int r = 0; r < 2 * np; ++r)
    for (int c = 0; c < 2 * np; ++c)
      out.entries(blocks.permutation[static_cast<std::size_t>(r)],
                  blocks.permutation[static_cast<std::size_t>(c)]) = P(r, c);
  return out;
}

DecouplingReport sa_decoupling(const BlockDecomposition& blocks, double threshold) {
  DecouplingReport r;
  r.delta_max = blocks.delta_AS.size() ? blocks.delta_AS.cwiseAbs().maxCoeff() : 0.0;
  r.hs_max = blocks.H_S.entries.size() ? blocks.H_S.entries.cwiseAbs().maxCoeff() : 0.0;
  r.ratio = r.hs_max > 0.0 ? r.delta_max / r.hs_max : 0.0;
  r.decoupled = r.delta_max < threshold * r.hs_max;
  return r;
}

std::array<cplx, 4> pauli_components(const Eigen::Matrix2cd& m) {
  const cplx I(0.0, 1.0);
  return {0.5 * (m(0, 0) + m(1, 1)), 0.5 * (m(0, 1) + m(1, 0)),
          0.5 * I * (m(0, 1) - m(1, 0)), 0.5 * (m(0, 0) - m(1, 1))};
}

Eigen::Matrix2cd from_pauli(const std::array<cplx, 4>& c) {
  const cplx I(0.0, 1.0);
  Eigen::Matrix2cd m;
  m << c[0] + c[3], c[1] - I * c[2], c[1] + I * c[2], c[0] - c[3];
  return m;
}

Su2Form su2_square_hamiltonian(const PolymerLattice& lattice, const CouplingModel& model,
                               Boundary boundary) {
  if (lattice.sites_per_polymer() != 2 || lattice.dimensionality != 2)
    throw Error(ErrorKind::basis_mismatch, "su2_square_hamiltonian needs a 2D dimer lattice");
  Su2Form out;
  out.site = assemble(lattice, model, boundary);
  out.delta_L = coupling_strength(lattice.L, model);
  out.delta_intra = coupling_strength(2.0 * lattice.d, model);

  Eigen::Matrix2cd base;
  base << out.delta_L, out.delta_L, out.delta_L, out.delta_L;
  for (const PolymerBond& b : polymer_bonds(lattice, model, boundary)) {
    BondFluctuation f;
    f.bond = b;
    f.delta = pauli_components(out.site.entries.block<2, 2>(2 * b.from, 2 * b.to) - base);
    out.fluctuations.push_back(f);
  }

  // Block form built from (Delta(L)(1 + sigma1) + delta . sigma) per bond and
  // Delta(2d) sigma1 per dimer, after diagonalising sigma1.
  const int np = lattice.polymer_count();
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(2 * np, 2 * np);
  auto put = [&](int a, int b, const Eigen::Matrix2cd& m) {
    // SA-basis entries (alpha, beta) of polymers a, b go to A block / S block.
    T(a, b) += m(0, 0);
    T(a, np + b) += m(0, 1);
    T(np + a, b) += m(1, 0);
    T(np + a, np + b) += m(1, 1);
  };
  for (const BondFluctuation& f : out.fluctuations) {
    std::array<cplx, 4> c = f.delta;
    c[0] += out.delta_L;
    c[1] += out.delta_L;
    // sigma1 -> sigma3, sigma2 -> -sigma2, sigma3 -> sigma1 under the Hadamard.
    const Eigen::Matrix2cd m = from_pauli({c[0], c[3], -c[2], c[1]});
    put(f.bond.from, f.bond.to, m);
    put(f.bond.to, f.bond.from, m.adjoint());
  }
  for (int a = 0; a < np; ++a) {
    T(a, a) += out.delta_intra;
    T(np + a, np + a) -= out.delta_intra;
  }
  out.transformed.entries = T;
  out.transformed.internal_dim = 1;
  out.transformed.basis = Basis::dimer_sa;
  return out;
}

Eigen::Matrix3cd c3_unitary() {
  Eigen::Matrix3cd U;
  const double s = 1.0 / std::sqrt(3.0);
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      U(p - 1, q - 1) = s * std::polar(1.0, 2.0 * std::numbers::pi * (2 + p) * q / 3.0);
  return U;
}

Eigen::MatrixXcd TrimerSectorForm::sector_block(int q) const {
  for (int k = 0; k < 3; ++k)
    if (sector_order[static_cast<std::size_t>(k)] == q)
      return H.entries.block(k * sector_size, k * sector_size, sector_size, sector_size);
  throw Error(ErrorKind::lookup_error, "unknown C3 sector " + std::to_string(q));
}

TrimerSectorForm trimer_basis_transform(const HermitianOperator& H) {
  if (H.internal_dim != 9)
    throw Error(ErrorKind::basis_mismatch, "trimer transform needs internal dimension 9");
  if (H.basis != Basis::site)
    throw Error(ErrorKind::basis_mismatch, "trimer transform expects a site-basis operator");
  const int nc = H.polymer_count();
  Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(9, 9);
  const Eigen::Matrix3cd U = c3_unitary();
  for (int m = 0; m < 3; ++m) V.block<3, 3>(3 * m, 3 * m) = U;

  Eigen::MatrixXcd Ht(9 * nc, 9 * nc);
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b) {
      const Eigen::MatrixXcd blk = H.entries.block(9 * a, 9 * b, 9, 9);
      if (blk.cwiseAbs().maxCoeff() == 0.0)
        Ht.block(9 * a, 9 * b, 9, 9).setZero();
      else
        Ht.block(9 * a, 9 * b, 9, 9) = V.adjoint() * blk * V;
    }

  TrimerSectorForm out;
  out.sector_size = 3 * nc;
  // Transformed index inside a cell: 3*m + (q-1). Order by sector, then cell, then trimer.
  for (int q : out.sector_order)
    for (int n = 0; n < nc; ++n)
      for (int m = 0; m < 3; ++m) out.permutation.push_back(9 * n + 3 * m + (q - 1));
  out.H.entries = permute_symmetric(Ht, out.permutation);
  out.H.internal_dim = 1;
  out.H.basis = Basis::trimer_c3;
  return out;
}

}  // namespace gaugelat
