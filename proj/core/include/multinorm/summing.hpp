#pragma once

#include <optional>

#include "multinorm/ascent.hpp"
#include "multinorm/linear_map.hpp"

namespace multinorm {

struct SummingEstimate {
  double value = 0.0;
  bool certified = false;
  std::string method;
  // mu: the maximizing dual functional (one column). pi: the maximizing tuple.
  cmat witness;
  // mu only: dual tuple psi with Re sum_i <x_i, psi_i> = value.
  cmat support;
  int tuple_length = 0;
};

// Weak p-summing norm through the operator l^{p'}_n -> E, delta_i -> x_i.
SummingEstimate mu(const Exponent& p, const VectorTuple& t, const Budget& budget);
// Supremum over the dual unit ball, evaluated directly.
SummingEstimate mu_literal(const Exponent& p, const VectorTuple& t, const Budget& budget);
// Tuple of functionals in L^s; supremum over the unit ball of the predual L^{s'}.
SummingEstimate mu_via_predual(const Exponent& p, const VectorTuple& dual_tuple, const Budget& budget);
// (sum_i |<x_i, lambda>|^p)^{1/p} / ||lambda||.
double evaluate_mu_witness(const Exponent& p, const VectorTuple& t, const cvec& lambda);

SummingEstimate pi_estimate(const Exponent& q, const Exponent& p, const LinearMap& T, int tuple_len_cap,
                            const Budget& budget);

// Upper-triangular all-ones l^1_n -> l^inf_n: column j is sum_{i<=j} delta_i.
LinearMap kp_operator(int n);

namespace detail {

// mu_{p,n} of the columns of X in L^r(w).
SummingEstimate mu_raw(const cmat& X, const rvec& w, const Exponent& r, const Exponent& p, const Budget& budget);

// Extreme points z_k of the dual unit ball of L^r(w), when finitely many
// suffice: point masses for r = inf, sign vectors for r = 1 over the reals.
std::optional<cmat> dual_ball_vertices(const rvec& w, const Exponent& r, bool real, const Budget& budget);

// mu_{p,n} via vertices; s > 0 gives the l^s aggregate over vertices (an
// upper bound of mu), s <= 0 the exact maximum.
Eval mu_vertices(const cmat& X, const rvec& w, const cmat& Z, const Exponent& p, double s);
// Real maximizer of sum G(t,i) lambda(t,i) over the unit ball of mu_{p,n}
// described by the vertices Z (log-barrier Newton method). The returned point
// lies in the ball and is optimal up to a relative gap rel_gap.
rmat mu_ball_lmo(const rmat& G, const rvec& w, const rmat& Z, const Exponent& p, double rel_gap);
// argmax <G, lambda> over real lambda (m x n) with mu_1(lambda) <= 1 in L^s(w),
// 1 < s < inf: the ball is the intersection over sign vectors e of
// ||lambda e||_s <= 1. Needs n <= 16.
rmat sign_ball_lmo(const rmat& G, const rvec& w, const Exponent& s, double rel_gap);
// argmax <G, lambda> over real lambda in L^s(w)^n with mu_p(lambda) <= 1,
// 1 < p < inf, by cutting planes: each cut phi in the unit ball of L^{s'}(w)
// imposes sum_j |<lambda_j, phi>|^p <= 1 and the witness of mu_p supplies the
// next cut. The result is scaled into the ball with the estimated mu_p. Cuts
// stay valid for any G, so a pool can be carried between calls.
rmat cut_ball_lmo(const rmat& G, const rvec& w, const Exponent& s, const Exponent& p, double rel_gap,
                  const Budget& budget, std::vector<rvec>* pool = nullptr);

}  // namespace detail

}  // namespace multinorm
