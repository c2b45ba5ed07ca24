#pragma once

#include <vector>

#include <Eigen/Core>

#include "gaugelat/hamiltonian.hpp"

namespace gaugelat {

// Sites are numbered n = 1..N; the on-site term is 2 Lambda cos(omega n + nu).
struct AmoParameters {
  double Lambda = 1.0;
  double omega = 0.0;
  double nu = 0.0;
  int N = 2;
  Boundary boundary = Boundary::open;

  void validate() const;
};

HermitianOperator amo_matrix(const AmoParameters& params);

enum class ChiBranch { plus, minus };

// sqrt(1 + Lambda^2 + 2 Lambda cos(omega n +/- chi))
double coupling_magnitude(int n, double Lambda, double omega, double chi,
                          ChiBranch branch = ChiBranch::plus);
// First-order form 1 + Lambda cos(omega n +/- chi).
double small_lambda_coupling(int n, double Lambda, double omega, double chi,
                             ChiBranch branch = ChiBranch::plus);

// Zero diagonal; bond n joins sites n and n+1 (n = N joins N and 1 when periodic).
HermitianOperator variable_coupling_chain(int N, double Lambda, double omega, double chi = 0.0,
                                          ChiBranch branch = ChiBranch::plus,
                                          Boundary boundary = Boundary::open);

// Hausdorff distance between the two spectra.
double isospectral_distance(const HermitianOperator& H1, const HermitianOperator& H2);
double hausdorff_distance(const std::vector<double>& a, const std::vector<double>& b);

struct LambdaFit {
  double lambda = 0;
  double chi = 0;
  double baseline = 0;
  double rms_residual = 0;
  double condition = 0;
};

// Least-squares fit |Delta_n| = baseline (1 + Lambda cos(Omega n + chi)) for
// n = first_index, first_index + 1, ... Throws fit_failure when the cosine and
// sine columns are (nearly) dependent, e.g. Omega = 0 mod pi.
LambdaFit effective_lambda_estimate(const std::vector<double>& couplings, double Omega,
                                    int first_index = 1);

}  // namespace gaugelat
