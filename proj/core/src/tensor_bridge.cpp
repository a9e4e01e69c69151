#include "multinorm/tensor_bridge.hpp"

#include <algorithm>
#include <cmath>

#include "multinorm/error.hpp"
#include "multinorm/linear_map.hpp"

namespace multinorm {

TensorElement::TensorElement(int n_trunc, Space s, Exponent e) : N(n_trunc), space(std::move(s)), p(e) {
  require(N >= 1, ErrorKind::InvalidInput, "tensor: N must be >= 1");
}

void TensorElement::add(cvec ai, cvec xi) {
  require(ai.size() == N, ErrorKind::InvalidInput, "tensor: a has wrong length");
  require(xi.size() == space.size(), ErrorKind::InvalidInput, "tensor: x has wrong length");
  a.push_back(std::move(ai));
  x.push_back(std::move(xi));
}

cmat TensorElement::coordinates() const {
  cmat Y = cmat::Zero(space.size(), N);
  for (std::size_t i = 0; i < a.size(); ++i) Y += x[i] * a[i].transpose();
  return Y;
}

LevelNormResult multinorm_tensor_norm(const MultiNormSpec& spec, const TensorElement& tau, const Budget& budget) {
  return multi_norm(spec, tau.as_tuple(), budget);
}

LevelNormResult injective_tensor_norm(const TensorElement& tau, const Budget& budget) {
  const NormEstimate e =
      operator_norm(tau.coordinates(), rvec::Ones(tau.N), Exponent(1), tau.space.weights(), tau.p, budget);
  LevelNormResult out;
  out.value = e.value;
  out.certified = e.certified;
  out.method = "operator/" + e.method;
  return out;
}

namespace {

double decomposition_cost(const std::vector<cvec>& a, const std::vector<cvec>& x, const rvec& w, const Exponent& r) {
  double c = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) c += a[i].cwiseAbs().maxCoeff() * lp::norm(x[i], w, r);
  return c;
}

}  // namespace

ProjectiveBound projective_upper_bound(const TensorElement& tau, const Budget& budget) {
  cmat Y = tau.coordinates();
  {
    // every cost below is invariant under a global phase; fixing it makes the
    // refinement independent of the phase of tau
    Eigen::Index i = 0, j = 0;
    if (Y.size() > 0 && Y.cwiseAbs().maxCoeff(&i, &j) > 0.0) Y /= Y(i, j) / std::abs(Y(i, j));
  }
  // and work at unit scale; costs are multiplied back at the end
  const double scale = Y.norm();
  if (scale > 0.0) Y /= scale;
  const double unscale = scale > 0.0 ? scale : 1.0;
  const rvec& w = tau.space.weights();
  const Exponent& r = tau.p;
  const Eigen::Index m = Y.rows();
  const int N = tau.N;
  ProjectiveBound out;

  double best = std::numeric_limits<double>::infinity();
  std::string how;
  if (!tau.a.empty()) {
    best = decomposition_cost(tau.a, tau.x, w, r) / unscale;
    how = "summands";
  }
  double rows = 0.0;
  for (int j = 0; j < N; ++j) rows += lp::norm(Y.col(j), w, r);
  if (rows < best) {
    best = rows;
    how = "rows";
  }
  double cols = 0.0;
  for (Eigen::Index t = 0; t < m; ++t) cols += Y.row(t).cwiseAbs().maxCoeff() * std::pow(w(t), r.reciprocal());
  if (cols < best) {
    best = cols;
    how = "columns";
  }

  // convex refinement: atoms with sup norm 1, residual carried by delta_j atoms
  std::vector<cvec> atoms;
  for (Eigen::Index t = 0; t < m; ++t) {
    const double mx = Y.row(t).cwiseAbs().maxCoeff();
    if (mx > 0.0) atoms.push_back(Y.row(t).transpose() / mx);
  }
  if (N <= 10) {
    for_each_sign(N, [&](const rvec& eps) { atoms.push_back(eps.cast<cplx>()); });
  }
  Rng rng = make_rng(budget.seed, 0x7e45);
  const bool real = real_field(budget, is_real(Y));
  for (int k = 0; k < 16; ++k) {
    cvec v = random_matrix(rng, N, 1, real).col(0);
    for (int j = 0; j < N; ++j) v(j) = std::abs(v(j)) > 0.0 ? v(j) / std::abs(v(j)) : cplx(1.0);
    atoms.push_back(v);
  }
  const Eigen::Index K = static_cast<Eigen::Index>(atoms.size());
  cmat A(N, K);
  for (Eigen::Index k = 0; k < K; ++k) A.col(k) = atoms[static_cast<std::size_t>(k)];

  auto cost = [&](const cmat& X, cmat* grad) {
    // X: m x K coefficients; residual R = Y - X A^T
    const cmat R = Y - X * A.transpose();
    double c = 0.0;
    cmat psiR(m, N);
    for (int j = 0; j < N; ++j) {
      c += lp::norm(R.col(j), w, r);
      psiR.col(j) = lp::norming(R.col(j), w, r);
    }
    cmat psiX(m, K);
    for (Eigen::Index k = 0; k < K; ++k) {
      c += lp::norm(X.col(k), w, r);
      psiX.col(k) = lp::norming(X.col(k), w, r);
    }
    if (grad) {
      cmat g = (psiX - psiR * A).conjugate();
      *grad = w.asDiagonal() * g;
      if (real) *grad = grad->real().cast<cplx>();
    }
    return c;
  };

  // start from the columns decomposition (its atoms come first)
  cmat X = cmat::Zero(m, K);
  {
    Eigen::Index k = 0;
    for (Eigen::Index t = 0; t < m; ++t) {
      const double mx = Y.row(t).cwiseAbs().maxCoeff();
      if (mx > 0.0) X(t, k++) = mx;
    }
  }
  cmat G;
  double cur = cost(X, &G);
  cmat bestX = X;
  double bestc = cur;
  const int iters = std::max(200, budget.iters * 4);
  for (int it = 0; it < iters; ++it) {
    const double gn = G.norm();
    if (!(gn > 0.0)) break;
    const double step = 0.2 / std::sqrt(static_cast<double>(it) + 1.0);
    X -= (step / gn) * G;
    cur = cost(X, &G);
    if (cur < bestc) {
      bestc = cur;
      bestX = X;
    }
  }
  if (bestc < best) {
    best = bestc;
    how = "refined";
  }
  out.value = best * unscale;
  out.method = how;
  const LevelNormResult lb = multi_norm(MultiNormSpec::max(), tau.as_tuple(), budget);
  out.lower = lb.value;
  out.certified = lb.certified && out.value <= lb.value * (1.0 + 1e-9) + 1e-12;
  return out;
}

AmplificationResult amplification_check(const MultiNormSpec& spec, const rmat& T, const VectorTuple& t,
                                        const Budget& budget) {
  require(T.cols() == t.length(), ErrorKind::InvalidInput, "amplification_check: shape mismatch");
  AmplificationResult out;
  const cmat Y = t.entries * T.transpose().cast<cplx>();
  const LevelNormResult l = multi_norm(spec, VectorTuple(t.space, t.p, Y), budget);
  const LevelNormResult r = multi_norm(spec, t, budget);
  out.norm_T = T.cwiseAbs().rowwise().sum().maxCoeff();
  out.lhs = l.value;
  out.rhs = out.norm_T * r.value;
  const double slack = (l.certified && r.certified) ? 1e-10 : 5e-3;
  out.pass = out.lhs <= out.rhs + slack * std::max(1.0, out.rhs);
  return out;
}

}  // namespace multinorm
