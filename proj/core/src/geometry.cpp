#include "gaugelat/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gaugelat/errors.hpp"

namespace gaugelat {

namespace {

constexpr double pi = std::numbers::pi;

void require_finite_nonneg(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0)
    throw Error(ErrorKind::invalid_parameter,
                std::string(name) + " must be finite and non-negative");
}

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0)
    throw Error(ErrorKind::invalid_parameter,
                std::string(name) + " must be finite and positive");
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::dimer_chain: return "dimer-chain";
    case Family::hedgehog: return "hedgehog";
    case Family::trimer_chain: return "trimer-chain";
    case Family::square: return "square";
    case Family::custom: return "custom";
  }
  return "custom";
}

int PolymerLattice::sites_per_polymer() const {
  return polymers.empty() ? 0 : static_cast<int>(polymers.front().site_offsets.size());
}

Vec2 PolymerLattice::site(int polymer, int internal) const {
  const Polymer& poly = polymers.at(static_cast<std::size_t>(polymer));
  return poly.center + poly.site_offsets.at(static_cast<std::size_t>(internal));
}

Vec2 PolymerLattice::site(int global) const {
  const int m = sites_per_polymer();
  return site(global / m, global % m);
}

std::vector<Vec2> PolymerLattice::sites() const {
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(site_count()));
  for (const Polymer& poly : polymers)
    for (const Vec2& off : poly.site_offsets) out.push_back(poly.center + off);
  return out;
}

void PolymerLattice::validate() const {
  if (polymers.empty())
    throw Error(ErrorKind::invalid_parameter, "lattice has no polymers");
  if (nx * ny != polymer_count())
    throw Error(ErrorKind::invalid_parameter, "grid shape does not match polymer count");
  const int m = sites_per_polymer();
  if (m < 1) throw Error(ErrorKind::invalid_parameter, "polymer without sites");
  for (const Polymer& poly : polymers) {
    if (static_cast<int>(poly.site_offsets.size()) != m)
      throw Error(ErrorKind::invalid_parameter, "polymers differ in site count");
    if (!poly.center.allFinite() || !std::isfinite(poly.theta))
      throw Error(ErrorKind::invalid_parameter, "non-finite polymer data");
    for (const Vec2& off : poly.site_offsets)
      if (!off.allFinite())
        throw Error(ErrorKind::invalid_parameter, "non-finite site offset");
  }
}

double chain_angle(int n, int p, int N) {
  return 2.0 * pi * static_cast<double>(p) * static_cast<double>(n - 1) /
         static_cast<double>(N - 1);
}

PolymerLattice build_dimer_chain(int N, int p, double L, double d) {
  if (N < 2) throw Error(ErrorKind::invalid_chain, "dimer chain needs N >= 2");
  require_positive(L, "L");
  require_finite_nonneg(d, "d");
  if (p < 0 || p > N - 1)
    throw Error(ErrorKind::invalid_parameter, "p must lie in [0, N-1]");

  PolymerLattice lat;
  lat.family = Family::dimer_chain;
  lat.dimensionality = 1;
  lat.L = L;
  lat.d = d;
  lat.nx = N;
  lat.ny = 1;
  lat.a1 = Vec2(L, 0.0);
  lat.a2 = Vec2(0.0, 0.0);
  lat.polymers.reserve(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) {
    const double th = chain_angle(n, p, N);
    const Vec2 u(std::sin(th), std::cos(th));
    Polymer poly;
    poly.center = Vec2((n - 1) * L, 0.0);
    poly.theta = th;
    // site i at (-1)^i d (sin th, cos th)
    poly.site_offsets = {-d * u, d * u};
    lat.polymers.push_back(std::move(poly));
  }
  return lat;
}

PolymerLattice build_hedgehog_lattice(int n, double L, double d) {
  if (n < 4 || n % 2 != 0)
    throw Error(ErrorKind::unsupported_geometry,
                "hedgehog lattice needs an even side length n >= 4");
  require_positive(L, "L");
  require_finite_nonneg(d, "d");

  PolymerLattice lat;
  lat.family = Family::hedgehog;
  lat.dimensionality = 2;
  lat.L = L;
  lat.d = d;
  lat.nx = n;
  lat.ny = n;
  lat.a1 = Vec2(L, 0.0);
  lat.a2 = Vec2(0.0, -L);
  lat.polymers.reserve(static_cast<std::size_t>(n * n));
  const double slope = pi / (2.0 * (n - 2));
  for (int ny = 1; ny <= n; ++ny) {
    for (int nx = 1; nx <= n; ++nx) {
      const double a = pi / 4.0 + slope * (ny - nx);
      Polymer poly;
      poly.center = Vec2((nx - 1) * L, -(ny - 1) * L);
      poly.theta = a;
      poly.site_offsets = {Vec2(-d * std::sin(a), -d * std::cos(a)),
                           Vec2(-d * std::sin(a + pi), -d * std::cos(a + pi))};
      lat.polymers.push_back(std::move(poly));
    }
  }
  return lat;
}

PolymerLattice build_trimer_chain(int N_cells, int p, double R_cell,
                                  double r_trimer, double d,
                                  const TrimerCellShape& shape) {
  if (N_cells < 2) throw Error(ErrorKind::invalid_chain, "trimer chain needs N_cells >= 2");
  require_positive(R_cell, "R_cell");
  require_positive(r_trimer, "r_trimer");
  require_positive(d, "d");
  if (p < 0 || p > N_cells - 1)
    throw Error(ErrorKind::invalid_parameter, "p must lie in [0, N_cells-1]");
  for (double a : shape.angles)
    if (!std::isfinite(a)) throw Error(ErrorKind::invalid_parameter, "non-finite trimer angle");
  if (!std::isfinite(shape.deformation))
    throw Error(ErrorKind::invalid_parameter, "non-finite deformation");

  PolymerLattice lat;
  lat.family = Family::trimer_chain;
  lat.dimensionality = 1;
  lat.L = R_cell;
  lat.d = d;
  lat.nx = N_cells;
  lat.ny = 1;
  lat.a1 = Vec2(R_cell, 0.0);
  lat.a2 = Vec2(0.0, 0.0);
  lat.polymers.reserve(static_cast<std::size_t>(N_cells));
  for (int n = 1; n <= N_cells; ++n) {
    const double big = chain_angle(n, p, N_cells);
    Polymer poly;
    poly.center = Vec2((n - 1) * R_cell, 0.0);
    poly.theta = big;
    poly.site_offsets.reserve(9);
    for (int k = 0; k < 3; ++k) {
      const double phi = big + pi / 2.0 + 2.0 * pi * k / 3.0;
      const Vec2 tc = r_trimer * Vec2(std::cos(phi), std::sin(phi));
      for (int l = 0; l < 3; ++l) {
        const double a = phi + shape.angles[static_cast<std::size_t>(k)] +
                         2.0 * pi * l / 3.0 + (l == 0 ? shape.deformation : 0.0);
        poly.site_offsets.push_back(tc + d * Vec2(std::cos(a), std::sin(a)));
      }
    }
    lat.polymers.push_back(std::move(poly));
  }
  return lat;
}

PolymerLattice build_square_lattice(int nx, int ny, double L) {
  if (nx < 1 || ny < 1 || nx * ny < 2)
    throw Error(ErrorKind::invalid_parameter, "square lattice needs at least two polymers");
  require_positive(L, "L");
  PolymerLattice lat;
  lat.family = Family::square;
  lat.dimensionality = ny > 1 ? 2 : 1;
  lat.L = L;
  lat.d = 0.0;
  lat.nx = nx;
  lat.ny = ny;
  lat.a1 = Vec2(L, 0.0);
  lat.a2 = Vec2(0.0, L);
  lat.polymers.reserve(static_cast<std::size_t>(nx * ny));
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      Polymer poly;
      poly.center = Vec2(ix * L, iy * L);
      poly.site_offsets = {Vec2::Zero()};
      lat.polymers.push_back(std::move(poly));
    }
  return lat;
}

double min_inter_polymer_distance(const PolymerLattice& lattice) {
  double best = std::numeric_limits<double>::infinity();
  const int np = lattice.polymer_count();
  const int m = lattice.sites_per_polymer();
  for (int a = 0; a < np; ++a)
    for (int b = a + 1; b < np; ++b)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          best = std::min(best, (lattice.site(a, i) - lattice.site(b, j)).norm());
  return best;
}

}  // namespace gaugelat
