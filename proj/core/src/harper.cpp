#include "gaugelat/harper.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "gaugelat/errors.hpp"
#include "gaugelat/spectral.hpp"

namespace gaugelat {

void AmoParameters::validate() const {
  if (N < 2) throw Error(ErrorKind::invalid_parameter, "AMO needs N >= 2");
  if (!std::isfinite(Lambda) || !std::isfinite(omega) || !std::isfinite(nu))
    throw Error(ErrorKind::invalid_parameter, "non-finite AMO parameter");
  if (boundary == Boundary::periodic_y)
    throw Error(ErrorKind::invalid_parameter, "AMO chains are open or periodic");
  if (boundary == Boundary::periodic && N < 3)
    throw Error(ErrorKind::invalid_parameter, "periodic AMO needs N >= 3");
}

HermitianOperator amo_matrix(const AmoParameters& p) {
  p.validate();
  HermitianOperator H;
  H.entries = Eigen::MatrixXcd::Zero(p.N, p.N);
  for (int n = 1; n <= p.N; ++n) {
    H.entries(n - 1, n - 1) = 2.0 * p.Lambda * std::cos(p.omega * n + p.nu);
    if (n < p.N) H.entries(n - 1, n) = H.entries(n, n - 1) = 1.0;
  }
  if (p.boundary == Boundary::periodic) H.entries(0, p.N - 1) = H.entries(p.N - 1, 0) = 1.0;
  return H;
}

double coupling_magnitude(int n, double Lambda, double omega, double chi, ChiBranch branch) {
  const double s = branch == ChiBranch::plus ? 1.0 : -1.0;
  const double q = 1.0 + Lambda * Lambda + 2.0 * Lambda * std::cos(omega * n + s * chi);
  return std::sqrt(std::max(q, 0.0));
}

double small_lambda_coupling(int n, double Lambda, double omega, double chi, ChiBranch branch) {
  const double s = branch == ChiBranch::plus ? 1.0 : -1.0;
  return 1.0 + Lambda * std::cos(omega * n + s * chi);
}

HermitianOperator variable_coupling_chain(int N, double Lambda, double omega, double chi,
                                          ChiBranch branch, Boundary boundary) {
  AmoParameters{Lambda, omega, chi, N, boundary}.validate();
  HermitianOperator H;
  H.entries = Eigen::MatrixXcd::Zero(N, N);
  for (int n = 1; n < N; ++n)
    H.entries(n - 1, n) = H.entries(n, n - 1) = coupling_magnitude(n, Lambda, omega, chi, branch);
  if (boundary == Boundary::periodic)
    H.entries(N - 1, 0) = H.entries(0, N - 1) = coupling_magnitude(N, Lambda, omega, chi, branch);
  return H;
}

double hausdorff_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::invalid_parameter, "empty spectrum");
  auto one_way = [](const std::vector<double>& from, const std::vector<double>& sorted_to) {
    double worst = 0.0;
    for (double x : from) {
      auto it = std::lower_bound(sorted_to.begin(), sorted_to.end(), x);
      double best = std::numeric_limits<double>::infinity();
      if (it != sorted_to.end()) best = std::min(best, *it - x);
      if (it != sorted_to.begin()) best = std::min(best, x - *std::prev(it));
      worst = std::max(worst, best);
    }
    return worst;
  };
  std::vector<double> sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return std::max(one_way(sa, sb), one_way(sb, sa));
}

double isospectral_distance(const HermitianOperator& H1, const HermitianOperator& H2) {
  if (H1.dimension() != H2.dimension())
    throw Error(ErrorKind::invalid_parameter, "isospectral_distance needs equal dimensions");
  const Eigen::VectorXd e1 = eigenvalues(H1);
  const Eigen::VectorXd e2 = eigenvalues(H2);
  return hausdorff_distance(std::vector<double>(e1.data(), e1.data() + e1.size()),
                            std::vector<double>(e2.data(), e2.data() + e2.size()));
}

LambdaFit effective_lambda_estimate(const std::vector<double>& couplings, double Omega,
                                    int first_index) {
  const int m = static_cast<int>(couplings.size());
  if (m < 3) throw Error(ErrorKind::fit_failure, "need at least 3 bonds to fit Lambda");
  Eigen::MatrixXd X(m, 3);
  Eigen::VectorXd y(m);
  for (int k = 0; k < m; ++k) {
    const double n = first_index + k;
    X(k, 0) = 1.0;
    X(k, 1) = std::cos(Omega * n);
    X(k, 2) = std::sin(Omega * n);
    y(k) = std::abs(couplings[static_cast<std::size_t>(k)]);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  LambdaFit fit;
  fit.condition = sv(2) > 0.0 ? sv(0) / sv(2) : std::numeric_limits<double>::infinity();
  if (!(fit.condition < 1e8))
    throw Error(ErrorKind::fit_failure,
                "degenerate Lambda fit (condition " + std::to_string(fit.condition) + ")");
  const Eigen::Vector3d c = svd.solve(y);
  if (c(0) == 0.0) throw Error(ErrorKind::fit_failure, "zero baseline in Lambda fit");
  fit.baseline = c(0);
  fit.lambda = std::hypot(c(1), c(2)) / std::abs(c(0));
  fit.chi = std::atan2(-c(2), c(1));
  fit.rms_residual = std::sqrt((X * c - y).squaredNorm() / m);
  return fit;
}

}  // namespace gaugelat
