#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multinorm/budget.hpp"
#include "multinorm/space.hpp"

namespace multinorm {

struct CheckReport {
  std::string name;
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
  // rhs - lhs for inequalities, |lhs - rhs| for equalities
  double slack = 0.0;
  double tolerance = 0.0;
  bool equality = false;
  std::uint64_t seed = 0;
  std::string config;
};

CheckReport inequality_report(std::string name, double lhs, double rhs, double tol, std::uint64_t seed,
                              std::string config);
CheckReport equality_report(std::string name, double lhs, double rhs, double tol, std::uint64_t seed,
                            std::string config);

// F[i][j] in L^p(Omega); C is the max over all sign vectors d of
// (sum_j ||sum_i d_i F(i,j)||^p)^{1/p}. Checks sum_j ||F(j,j)||^p <= C^p.
CheckReport rademacher_check(const std::vector<std::vector<LpVector>>& F, int sign_cap = 20);

// A linear map R : B(L^1, L^p) -> L^p on |Omega| x |Omega| matrices, given
// by R(U) = sum_b R[b] U(:, b).
struct JFunctional {
  std::vector<cmat> cols;
  cvec apply(const cmat& U) const;
};

// Operator norm of U : L^1(Omega) -> L^p(Omega), column formula.
double j_operator_norm(const cmat& U, const Space& omega, const Exponent& p);
// Upper bound of ||R|| from per-column Riesz-Thorin bounds.
double j_functional_norm_upper(const JFunctional& R, const Space& omega, const Exponent& p);

// X, Y: point -> part index. Checks
// (sum_i ||chi_{X_i} R(chi_{Y_i} U)||^p)^{1/p} <= C <= ||R|| ||U||,
// with C the sign-vector maximum of ||R(sum_i d_i chi_{Y_i} U)||.
CheckReport projection_inequality_check(const JFunctional& R, const cmat& U, const Space& omega, const Exponent& p,
                                        const std::vector<int>& X, const std::vector<int>& Y, int sign_cap = 20);

// T(a) = sum_i <Ua, f_i> x_i with disjointly supported f_i (in L^{p'}) and
// x_i (in L^p). Checks ||T|| <= ||U|| max_i ||f_i|| ||x_i||.
CheckReport disjoint_rank_bound_check(const cmat& U, const Space& omega, const Exponent& p,
                                      const std::vector<cvec>& f, const std::vector<cvec>& x);

struct SuiteConfig {
  int dims = 4;  // largest base dimension
  std::vector<Exponent> exponents = {Exponent(1), Exponent(3, 2), Exponent(2), Exponent(3)};
  int trials = 10;
  std::uint64_t seed = 42;
  Budget budget;
};

// Cross-module identities; one report per identity per random instance.
std::vector<CheckReport> identity_suite(const SuiteConfig& cfg);

// The three inequality checks on `trials` seeded random instances each.
std::vector<CheckReport> inequality_suite(int trials, std::uint64_t seed, int max_n = 6, int max_omega = 6);

std::string reports_to_csv(const std::vector<CheckReport>& reports);

}  // namespace multinorm
