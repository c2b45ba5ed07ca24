#include "gaugelat/coupling.hpp"

#include <cmath>
#include <string>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "gaugelat/errors.hpp"

namespace gaugelat {

void CouplingModel::validate() const {
  if (!(delta0 > 0.0) || !std::isfinite(delta0))
    throw Error(ErrorKind::invalid_parameter, "Delta0 must be positive");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw Error(ErrorKind::invalid_parameter, "lambda must be positive");
  if (cutoff == CutoffPolicy::radius && !(radius > 0.0))
    throw Error(ErrorKind::invalid_parameter, "radius cutoff needs a positive radius");
}

double coupling_strength(double distance, const CouplingModel& model) {
  if (!(distance >= 0.0))
    throw Error(ErrorKind::invalid_parameter, "negative distance");
  return model.delta0 * std::exp(-distance / model.lambda);
}

Eigen::Matrix2d DimerBond::matrix() const {
  Eigen::Matrix2d m;
  m << d11, d12, d21, d22;
  return m;
}

Eigen::Matrix2d SABond::matrix() const {
  Eigen::Matrix2d m;
  m << aa, as, sa, ss;
  return m;
}

std::array<double, 4> dimer_pair_distances(double theta_n, double theta_np1,
                                           double L, double d) {
  if (!(L > 0.0)) throw Error(ErrorKind::invalid_parameter, "L must be positive");
  if (!(d >= 0.0)) throw Error(ErrorKind::invalid_parameter, "d must be non-negative");
  const double alpha = d / L;
  std::array<double, 4> out{};
  int k = 0;
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const double si = (i % 2 == 0) ? 1.0 : -1.0;
      const double sj = (j % 2 == 0) ? 1.0 : -1.0;
      const double A = 1.0 - si * sj * std::cos(theta_n - theta_np1);
      const double B = si * std::sin(theta_n) - sj * std::sin(theta_np1);
      const double q = 1.0 + 2.0 * alpha * alpha * A - 2.0 * alpha * B;
      out[static_cast<std::size_t>(k++)] = L * std::sqrt(std::max(q, 0.0));
    }
  }
  return out;
}

DimerBond dimer_bond(double theta_n, double theta_np1, double L, double d,
                     const CouplingModel& model) {
  const auto r = dimer_pair_distances(theta_n, theta_np1, L, d);
  return {coupling_strength(r[0], model), coupling_strength(r[1], model),
          coupling_strength(r[2], model), coupling_strength(r[3], model)};
}

SABond sa_transform(const DimerBond& b) {
  return {0.5 * (b.d11 + b.d12 + b.d21 + b.d22),
          0.5 * (b.d11 - b.d12 + b.d21 - b.d22),
          0.5 * (b.d11 + b.d12 - b.d21 - b.d22),
          0.5 * (b.d11 - b.d12 - b.d21 + b.d22)};
}

DimerBond sa_inverse(const SABond& s) {
  // The Hadamard conjugation is its own inverse; the same combinations apply.
  return {0.5 * (s.aa + s.as + s.sa + s.ss),
          0.5 * (s.aa - s.as + s.sa - s.ss),
          0.5 * (s.aa + s.as - s.sa - s.ss),
          0.5 * (s.aa - s.as - s.sa + s.ss)};
}

bool small_alpha_regime(double L, double d) { return d / L <= 0.1; }

double closed_form_SS(int n, double omega, double L, double d, double lambda,
                      double delta_L) {
  const double tn = omega * (n - 1);
  const double tn1 = omega * n;
  return 2.0 * d * d / (lambda * L) *
         (std::cos(tn) * std::cos(tn1) - (L / lambda) * std::sin(tn) * std::sin(tn1)) *
         delta_L;
}

namespace {

struct AASymbols {
  double alpha, beta, prefactor;
};

AASymbols aa_symbols(double L, double d, double lambda, AAReading reading) {
  if (reading == AAReading::as_printed) {
    if (!(d > 0.0))
      throw Error(ErrorKind::invalid_parameter, "as-printed AA reading needs d > 0");
    return {L / d, d / lambda, 2.0};
  }
  return {d / L, L / lambda, 1.0};
}

}  // namespace

double gamma_AA(double L, double d, double lambda, AAReading reading) {
  const auto s = aa_symbols(L, d, lambda, reading);
  return 2.0 + s.beta * s.alpha * s.alpha * (s.beta - 1.0);
}

double aa_modulation(double L, double d, double lambda, AAReading reading) {
  const auto s = aa_symbols(L, d, lambda, reading);
  return s.beta * s.alpha * s.alpha * (s.beta + 1.0) / gamma_AA(L, d, lambda, reading);
}

double closed_form_AA(int n, double omega, double L, double d, double lambda,
                      double delta_L, AAReading reading) {
  const auto s = aa_symbols(L, d, lambda, reading);
  const double g = gamma_AA(L, d, lambda, reading);
  const double m = aa_modulation(L, d, lambda, reading);
  return s.prefactor * g *
         (1.0 - m * std::cos(omega) * std::cos(omega * (2 * n - 1))) * delta_L;
}

PolarForm polar_parameters(const Eigen::Matrix2d& h) {
  const double det = h.determinant();
  const double norm = h.norm();
  if (!(norm > 0.0) || !std::isfinite(norm) || std::abs(det) <= 1e-14 * norm * norm)
    throw Error(ErrorKind::decomposition_failure, "singular bond block");
  if (det < 0.0)
    throw Error(ErrorKind::decomposition_failure,
                "bond block has negative determinant; no rotation-times-boost form");
  PolarForm out;
  out.scale = std::sqrt(det);
  const Eigen::Matrix2d hn = h / out.scale;
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(hn, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Matrix2d V = svd.matrixV();
  const Eigen::Matrix2d R = svd.matrixU() * V.transpose();
  const Eigen::Matrix2d P = V * svd.singularValues().asDiagonal() * V.transpose();
  out.phi = std::atan2(R(0, 1), R(0, 0));
  out.chi = std::asinh(0.5 * (P(0, 1) + P(1, 0)));
  out.theta = 0.5 * std::log(P(0, 0) / P(1, 1));
  return out;
}

Eigen::Matrix2d polar_reconstruct(const PolarForm& f) {
  Eigen::Matrix2d R;
  R << std::cos(f.phi), std::sin(f.phi), -std::sin(f.phi), std::cos(f.phi);
  Eigen::Matrix2d P;
  P << std::exp(f.theta) * std::cosh(f.chi), std::sinh(f.chi), std::sinh(f.chi),
      std::exp(-f.theta) * std::cosh(f.chi);
  return f.scale * R * P;
}

double gamma_polar(const DimerBond& b) {
  const double x = b.d12 - b.d21;
  const double y = b.d11 + b.d22;
  return x * x + y * y;
}

}  // namespace gaugelat
