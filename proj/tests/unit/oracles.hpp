#pragma once

// Brute-force reference values used as independent oracles in the tests.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;
using rvec = Eigen::VectorXd;

inline double wnorm(const cvec& v, const rvec& w, double p) {
  if (std::isinf(p)) return v.cwiseAbs().maxCoeff();
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += w(i) * std::pow(std::abs(v(i)), p);
  return std::pow(s, 1.0 / p);
}

inline double seqnorm(const std::vector<double>& v, double q) {
  if (std::isinf(q)) {
    double m = 0.0;
    for (double x : v) m = std::max(m, x);
    return m;
  }
  double s = 0.0;
  for (double x : v) s += std::pow(x, q);
  return std::pow(s, 1.0 / q);
}

// || max_i |x_i| ||_p
inline double lattice(const cmat& X, const rvec& w, double p) {
  return wnorm(X.cwiseAbs().rowwise().maxCoeff().cast<cplx>(), w, p);
}

// sup over all labelled assignments of points to tuple indices of
// (sum_i ||chi_{X_i} x_i||^q)^{1/q}
inline double standard_q(const cmat& X, const rvec& w, double p, double q) {
  const int m = static_cast<int>(X.rows());
  const int n = static_cast<int>(X.cols());
  std::vector<int> a(m, 0);
  double best = 0.0;
  while (true) {
    std::vector<double> parts(n, 0.0);
    for (int i = 0; i < n; ++i) {
      cvec v = cvec::Zero(m);
      for (int k = 0; k < m; ++k)
        if (a[k] == i) v(k) = X(k, i);
      parts[i] = wnorm(v, w, p);
    }
    best = std::max(best, seqnorm(parts, q));
    int k = 0;
    while (k < m && ++a[k] == n) a[k++] = 0;
    if (k == m) break;
  }
  return best;
}

// Real data, unit weights, l^1 base: mu_1 = max over signs ||sum e_i x_i||_1.
inline double mu1_signs(const Eigen::MatrixXd& X) {
  const int n = static_cast<int>(X.cols());
  double best = 0.0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Eigen::VectorXd s = Eigen::VectorXd::Zero(X.rows());
    for (int i = 0; i < n; ++i) s += ((mask >> i) & 1 ? -1.0 : 1.0) * X.col(i);
    best = std::max(best, s.cwiseAbs().sum());
  }
  return best;
}

// Real matrix l^inf_n -> l^1_m (unit weights) by sign enumeration.
inline double inf_to_one(const Eigen::MatrixXd& A) { return mu1_signs(A); }

// Cayley table associativity.
inline bool associative(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

inline Eigen::MatrixXd random_real(std::mt19937_64& rng, int m, int n) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd X(m, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) X(i, j) = g(rng);
  return X;
}

inline cmat random_complex(std::mt19937_64& rng, int m, int n) {
  std::normal_distribution<double> g;
  cmat X(m, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) X(i, j) = cplx(g(rng), g(rng));
  return X;
}

}  // namespace oracle
