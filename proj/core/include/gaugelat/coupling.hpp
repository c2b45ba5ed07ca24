#pragma once

#include <array>

#include <Eigen/Core>

namespace gaugelat {

enum class CutoffPolicy { adjacent, radius };

// Delta0 exp(-r/lambda). With the radius policy every polymer pair whose
// centers lie within `radius` is coupled (open boundaries only).
struct CouplingModel {
  double delta0 = 1.0;
  double lambda = 1.0;
  CutoffPolicy cutoff = CutoffPolicy::adjacent;
  double radius = 0.0;

  void validate() const;
};

double coupling_strength(double distance, const CouplingModel& model);

// Site-to-site couplings of the bond between dimer n (row i) and n+1 (column j).
struct DimerBond {
  double d11 = 0, d12 = 0, d21 = 0, d22 = 0;
  Eigen::Matrix2d matrix() const;
};

struct SABond {
  double aa = 0, as = 0, sa = 0, ss = 0;
  Eigen::Matrix2d matrix() const;
};

// Distances in the order 11, 12, 21, 22.
std::array<double, 4> dimer_pair_distances(double theta_n, double theta_np1,
                                           double L, double d);

DimerBond dimer_bond(double theta_n, double theta_np1, double L, double d,
                     const CouplingModel& model);

SABond sa_transform(const DimerBond& bond);
DimerBond sa_inverse(const SABond& bond);

// Second-order expansion in alpha = d/L; trustworthy when this returns true.
bool small_alpha_regime(double L, double d);

// theta_n = omega (n-1), theta_{n+1} = omega n. Reduces to
// (2d^2/L^2) cos[omega(2n-1)] Delta_L when L == lambda.
double closed_form_SS(int n, double omega, double L, double d, double lambda,
                      double delta_L);

// Which symbol assignment to use for the printed AA formula. `consistent`
// uses beta = L/lambda, alpha = d/L with prefactor gamma, which is what
// the second-order expansion of the exact AA coupling gives. `as_printed`
// uses beta = d/lambda, alpha = L/d with prefactor 2 gamma.
enum class AAReading { consistent, as_printed };

double gamma_AA(double L, double d, double lambda, AAReading reading);
// Relative modulation amplitude: beta alpha^2 (beta+1) / gamma.
double aa_modulation(double L, double d, double lambda, AAReading reading);
double closed_form_AA(int n, double omega, double L, double d, double lambda,
                      double delta_L, AAReading reading = AAReading::consistent);

// h = s R(phi) P(theta, chi) with R = [[c, s], [-s, c]] and
// P = [[e^theta cosh chi, sinh chi], [sinh chi, e^-theta cosh chi]].
struct PolarForm {
  double phi = 0, theta = 0, chi = 0;
  double scale = 1;
};

PolarForm polar_parameters(const Eigen::Matrix2d& h);
Eigen::Matrix2d polar_reconstruct(const PolarForm& form);

// (Delta12 - Delta21)^2 + (Delta11 + Delta22)^2
double gamma_polar(const DimerBond& bond);

}  // namespace gaugelat
