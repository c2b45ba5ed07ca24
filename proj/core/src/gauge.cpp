#include "gaugelat/gauge.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/SVD>
#include <Eigen/LU>

#include "gaugelat/errors.hpp"

namespace gaugelat {

void GaugeTransform::validate(int internal_dim, double tol) const {
  for (std::size_t a = 0; a < U.size(); ++a) {
    const Eigen::MatrixXcd& u = U[a];
    if (u.rows() != internal_dim || u.cols() != internal_dim)
      throw Error(ErrorKind::invalid_transform,
                  "gauge matrix " + std::to_string(a) + " has the wrong dimension");
    const double dev =
        (u.adjoint() * u - Eigen::MatrixXcd::Identity(internal_dim, internal_dim)).cwiseAbs().maxCoeff();
    if (dev > tol)
      throw Error(ErrorKind::invalid_transform, "gauge matrix " + std::to_string(a) + " is not unitary");
  }
}

GaugeTransform random_u1_transform(int polymers, std::mt19937_64& rng, int internal_dim) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  GaugeTransform G;
  G.U.reserve(static_cast<std::size_t>(polymers));
  for (int a = 0; a < polymers; ++a) {
    G.U.push_back(std::polar(1.0, angle(rng)) * Eigen::MatrixXcd::Identity(internal_dim, internal_dim));
  }
  return G;
}

GaugeTransform random_su2_transform(int polymers, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  GaugeTransform G;
  G.U.reserve(static_cast<std::size_t>(polymers));
  for (int a = 0; a < polymers; ++a) {
    Eigen::Vector4d q(normal(rng), normal(rng), normal(rng), normal(rng));
    q.normalize();
    Eigen::MatrixXcd u(2, 2);
    u << cplx(q(0), q(1)), cplx(q(2), q(3)), cplx(-q(2), q(3)), cplx(q(0), -q(1));
    G.U.push_back(u);
  }
  return G;
}

HermitianOperator apply_gauge_transform(const HermitianOperator& H, const GaugeTransform& G) {
  const int m = H.internal_dim;
  const int np = H.polymer_count();
  if (static_cast<int>(G.U.size()) != np)
    throw Error(ErrorKind::invalid_transform, "gauge transform does not match polymer count");
  G.validate(m);
  HermitianOperator out = H;
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < np; ++b) {
      const Eigen::MatrixXcd blk = H.entries.block(a * m, b * m, m, m);
      if (blk.cwiseAbs().maxCoeff() == 0.0) continue;
      out.entries.block(a * m, b * m, m, m) =
          G.U[static_cast<std::size_t>(a)].adjoint() * blk * G.U[static_cast<std::size_t>(b)];
    }
  return out;
}

VectorPotentialSamples VectorPotentialSamples::zero(int nx, int ny) {
  VectorPotentialSamples A;
  A.nx = nx;
  A.ny = ny;
  A.phase.assign(static_cast<std::size_t>(nx * ny), {0.0, 0.0});
  return A;
}

VectorPotentialSamples landau_gauge(int nx, int ny, double B) {
  VectorPotentialSamples A = VectorPotentialSamples::zero(nx, ny);
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) A.phase[static_cast<std::size_t>(ix + nx * iy)][1] = B * ix;
  return A;
}

VectorPotentialSamples pure_gauge_shift(const VectorPotentialSamples& A, const std::vector<double>& Phi) {
  if (static_cast<int>(Phi.size()) != A.nx * A.ny)
    throw Error(ErrorKind::invalid_parameter, "gauge function does not match the grid");
  VectorPotentialSamples out = A;
  for (int iy = 0; iy < A.ny; ++iy)
    for (int ix = 0; ix < A.nx; ++ix) {
      const int N = ix + A.nx * iy;
      const int back_x = (ix - 1 + A.nx) % A.nx + A.nx * iy;
      const int back_y = ix + A.nx * ((iy - 1 + A.ny) % A.ny);
      auto& ph = out.phase[static_cast<std::size_t>(N)];
      ph[0] += Phi[static_cast<std::size_t>(back_x)] - Phi[static_cast<std::size_t>(N)];
      ph[1] += Phi[static_cast<std::size_t>(back_y)] - Phi[static_cast<std::size_t>(N)];
    }
  return out;
}

HermitianOperator peierls_phase_field(const PolymerLattice& lattice, const CouplingModel& model,
                                      Boundary boundary, const VectorPotentialSamples& A, double g) {
  if (A.nx != lattice.nx || A.ny != lattice.ny)
    throw Error(ErrorKind::invalid_parameter, "vector potential does not match the lattice grid");
  HermitianOperator H = assemble(lattice, model, boundary);
  const int m = H.internal_dim;
  for (const PolymerBond& b : polymer_bonds(lattice, model, boundary)) {
    if (b.direction < 0)
      throw Error(ErrorKind::invalid_parameter, "Peierls phases need grid bonds (adjacent cutoff)");
    const double phase = A.phase[static_cast<std::size_t>(b.to)][static_cast<std::size_t>(b.direction)];
    const cplx f = std::polar(1.0, -g * phase);
    const Eigen::MatrixXcd blk = H.entries.block(b.from * m, b.to * m, m, m).cwiseAbs().cast<cplx>() * f;
    H.entries.block(b.from * m, b.to * m, m, m) = blk;
    H.entries.block(b.to * m, b.from * m, m, m) = blk.adjoint();
  }
  return H;
}

PauliVector extract_bond_log(const Eigen::Matrix2cd& M, const std::string& label) {
  const std::string where = label.empty() ? std::string("bond block") : "bond " + label;
  const PauliVector a = pauli_components(M);
  const cplx s = std::sqrt(a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
  const cplx mu_p = a[0] + s;
  const cplx mu_m = a[0] - s;
  const double scale = M.cwiseAbs().maxCoeff();
  for (const cplx mu : {mu_p, mu_m}) {
    if (!(std::abs(mu) > 1e-14 * scale))
      throw Error(ErrorKind::extraction_error, where + " is singular");
    if (mu.real() < 0.0 && std::abs(mu.imag()) <= 1e-14 * std::abs(mu))
      throw Error(ErrorKind::extraction_error, where + " has an eigenvalue on the negative real axis");
  }
  const cplx lp = std::log(mu_p);
  const cplx lm = std::log(mu_m);
  cplx ratio;
  if (std::abs(s) < 1e-6 * std::abs(a[0]))
    ratio = 1.0 / a[0] + s * s / (3.0 * a[0] * a[0] * a[0]);
  else
    ratio = (lp - lm) / (2.0 * s);
  return {0.5 * (lp + lm), a[1] * ratio, a[2] * ratio, a[3] * ratio};
}

Eigen::Matrix2cd pauli_exp(const PauliVector& phi) {
  const cplx r = std::sqrt(phi[1] * phi[1] + phi[2] * phi[2] + phi[3] * phi[3]);
  const cplx sinc = std::abs(r) < 1e-8 ? cplx(1.0) + r * r / 6.0 : std::sinh(r) / r;
  const cplx e0 = std::exp(phi[0]);
  return from_pauli({e0 * std::cosh(r), e0 * sinc * phi[1], e0 * sinc * phi[2], e0 * sinc * phi[3]});
}

namespace {

PauliVector sub(const PauliVector& x, const PauliVector& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}

PauliVector add(const PauliVector& x, const PauliVector& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

}  // namespace

BondLogField bond_log_field(const HermitianOperator& H, const PolymerLattice& lattice,
                            const PortraitOptions& options) {
  if (H.internal_dim != 2 || lattice.sites_per_polymer() != 2 || lattice.dimensionality != 2)
    throw Error(ErrorKind::basis_mismatch, "bond logs need a 2D dimer lattice operator");
  if (H.basis != Basis::site)
    throw Error(ErrorKind::basis_mismatch, "bond logs are taken from the site-basis operator");
  BondLogField f;
  f.nx = lattice.nx;
  f.ny = lattice.ny;
  for (auto& g : f.phi) g.assign(static_cast<std::size_t>(f.nx * f.ny), {});
  for (int iy = 0; iy < f.ny; ++iy)
    for (int ix = 0; ix < f.nx; ++ix) {
      const int N = lattice.polymer_index(ix, iy);
      for (int dir = 0; dir < 2; ++dir) {
        const int bx = dir == 0 ? ix - 1 : ix;
        const int by = dir == 1 ? iy - 1 : iy;
        if (bx < 0 || by < 0) continue;
        const int back = lattice.polymer_index(bx, by);
        Eigen::Matrix2cd blk = H.entries.block<2, 2>(2 * back, 2 * N);
        if (options.sa_basis) {
          Eigen::Matrix2cd Uh;
          Uh << 1.0, 1.0, 1.0, -1.0;
          blk = 0.5 * Uh * blk * Uh;
        }
        if (options.normalize_modulus) {
          const double mod = std::sqrt(std::abs(blk.determinant()));
          if (!(mod > 0.0))
            throw Error(ErrorKind::extraction_error, "singular bond block at (" + std::to_string(ix) + "," +
                                                         std::to_string(iy) + ")");
          blk /= mod;
        }
        const std::string label = "(" + std::to_string(ix) + "," + std::to_string(iy) + ") dir " +
                                  std::to_string(dir + 1);
        PauliSample& s = f.phi[static_cast<std::size_t>(dir)][static_cast<std::size_t>(N)];
        s.c = extract_bond_log(blk, label);
        s.valid = true;
      }
    }
  return f;
}

VectorPotentialField vector_potential(const BondLogField& field) {
  VectorPotentialField out;
  out.nx = field.nx;
  out.ny = field.ny;
  for (int dir = 0; dir < 2; ++dir) {
    auto& A = out.A[static_cast<std::size_t>(dir)];
    const auto& phi = field.phi[static_cast<std::size_t>(dir)];
    A.assign(phi.size(), {});
    for (int iy = 0; iy < field.ny; ++iy)
      for (int ix = 0; ix < field.nx; ++ix) {
        const int bx = dir == 0 ? ix - 1 : ix;
        const int by = dir == 1 ? iy - 1 : iy;
        if (bx < 0 || by < 0) continue;
        const auto& here = phi[static_cast<std::size_t>(ix + field.nx * iy)];
        const auto& back = phi[static_cast<std::size_t>(bx + field.nx * by)];
        if (!here.valid || !back.valid) continue;
        auto& s = A[static_cast<std::size_t>(ix + field.nx * iy)];
        s.c = sub(here.c, back.c);
        s.valid = true;
      }
  }
  return out;
}

FieldStrength field_strength_bz(const VectorPotentialField& A) {
  FieldStrength out;
  out.nx = A.nx;
  out.ny = A.ny;
  const std::size_t n = static_cast<std::size_t>(A.nx * A.ny);
  out.curl.assign(n, {});
  out.commutator.assign(n, {});
  out.total.assign(n, {});
  const auto& Ax = A.A[0];
  const auto& Ay = A.A[1];
  const cplx I(0.0, 1.0);
  for (int iy = 0; iy + 1 < A.ny; ++iy)
    for (int ix = 0; ix + 1 < A.nx; ++ix) {
      const std::size_t N = static_cast<std::size_t>(ix + A.nx * iy);
      const std::size_t Ny = static_cast<std::size_t>(ix + A.nx * (iy + 1));
      const std::size_t Nx = static_cast<std::size_t>(ix + 1 + A.nx * iy);
      if (!Ax[N].valid || !Ax[Ny].valid || !Ay[N].valid || !Ay[Nx].valid) continue;
      const PauliVector curl = sub(sub(Ax[Ny].c, Ax[N].c), sub(Ay[Nx].c, Ay[N].c));
      const Eigen::Matrix2cd mx = from_pauli(Ax[N].c);
      const Eigen::Matrix2cd my = from_pauli(Ay[N].c);
      const PauliVector comm = pauli_components(-I * (mx * my - my * mx));
      out.curl[N] = {curl, true};
      out.commutator[N] = {comm, true};
      out.total[N] = {add(curl, comm), true};
    }
  return out;
}

NontrivialFieldReport nontrivial_field_test(const HermitianOperator& H, const PolymerLattice& lattice,
                                            double tol) {
  const int m = H.internal_dim;
  if (H.polymer_count() != lattice.polymer_count())
    throw Error(ErrorKind::invalid_parameter, "operator does not match lattice");
  NontrivialFieldReport rep;
  auto link = [&](int to, int from, bool& singular) -> Eigen::MatrixXcd {
    const Eigen::MatrixXcd M = H.entries.block(to * m, from * m, m, m);
    if (m == 1) {
      singular = std::abs(M(0, 0)) <= 1e-14 * std::max(1.0, H.entries.cwiseAbs().maxCoeff());
      return singular ? M : Eigen::MatrixXcd(M / std::abs(M(0, 0)));
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    singular = !(sv(m - 1) > 1e-12 * sv(0));
    return svd.matrixU() * svd.matrixV().adjoint();
  };
  for (int iy = 0; iy + 1 < lattice.ny; ++iy)
    for (int ix = 0; ix + 1 < lattice.nx; ++ix) {
      const int a = lattice.polymer_index(ix, iy);
      const int b = lattice.polymer_index(ix + 1, iy);
      const int c = lattice.polymer_index(ix + 1, iy + 1);
      const int d = lattice.polymer_index(ix, iy + 1);
      bool s1 = false, s2 = false, s3 = false, s4 = false;
      const Eigen::MatrixXcd W = link(a, d, s4) * link(d, c, s3) * link(c, b, s2) * link(b, a, s1);
      if (s1 || s2 || s3 || s4) {
        ++rep.skipped_singular;
        continue;
      }
      ++rep.plaquettes;
      if (m == 1) {
        const double phase = std::arg(W(0, 0));
        rep.plaquette_values.push_back(phase);
        rep.max_deviation = std::max(rep.max_deviation, std::abs(phase));
      } else {
        const cplx det = W.determinant();
        const cplx norm = std::pow(det, 1.0 / m);
        const double tr = std::abs(W.trace() / norm);
        rep.plaquette_values.push_back(tr);
        rep.max_deviation = std::max(rep.max_deviation, m - tr);
      }
    }
  rep.nontrivial = rep.max_deviation > tol;
  return rep;
}

}  // namespace gaugelat
