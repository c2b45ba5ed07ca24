#pragma once
// Reference implementations written directly from the model definitions,
// without going through the library's builders or assemblers.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Mat = Eigen::MatrixXcd;
constexpr double pi = std::numbers::pi;

struct Site {
  double x, y;
  int polymer;
};

// Rotating dimer chain: centre ((n-1)L, 0), angle 2 pi p (n-1)/(N-1),
// site i = 1, 2 at (-1)^i d (sin, cos).
inline std::vector<Site> dimer_chain_sites(int N, int p, double L, double d) {
  std::vector<Site> s;
  for (int n = 1; n <= N; ++n) {
    const double th = 2.0 * pi * p * (n - 1) / (N - 1);
    for (int i = 1; i <= 2; ++i) {
      const double sg = (i % 2 == 0) ? 1.0 : -1.0;
      s.push_back({(n - 1) * L + sg * d * std::sin(th), sg * d * std::cos(th), n - 1});
    }
  }
  return s;
}

// Couples every pair of sites whose polymers are equal or chain neighbours.
inline Mat chain_hamiltonian(const std::vector<Site>& s, double delta0, double lambda) {
  const int n = static_cast<int>(s.size());
  Mat H = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || std::abs(s[a].polymer - s[b].polymer) > 1) continue;
      H(a, b) = delta0 * std::exp(-std::hypot(s[a].x - s[b].x, s[a].y - s[b].y) / lambda);
    }
  return H;
}

// Jacobi eigenvalue iteration for real symmetric matrices; slow but
// independent of LAPACK.
inline std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd A) {
  const int n = static_cast<int>(A.rows());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += A(i, j) * A(i, j);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(A(p, q)) < 1e-300) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * A(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), sn = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - sn * akq;
          A(k, q) = sn * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - sn * aqk;
          A(q, k) = sn * apk + c * aqk;
        }
      }
  }
  std::vector<double> e(n);
  for (int i = 0; i < n; ++i) e[i] = A(i, i);
  std::sort(e.begin(), e.end());
  return e;
}

inline Mat random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = {g(rng), g(rng)};
  return 0.5 * (M + M.adjoint());
}

}  // namespace oracle
