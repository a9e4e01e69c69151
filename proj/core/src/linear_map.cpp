#include "multinorm/linear_map.hpp"

#include <algorithm>
#include <cmath>

#include "multinorm/error.hpp"

namespace multinorm {

LinearMap::LinearMap(Space d, Exponent da, Space c, Exponent cb, cmat m)
    : dom(std::move(d)), a(da), cod(std::move(c)), b(cb), matrix(std::move(m)) {
  require(matrix.rows() == cod.size() && matrix.cols() == dom.size(), ErrorKind::InvalidInput,
          "linear map: matrix shape does not match spaces");
}

LpVector LinearMap::apply(const LpVector& v) const {
  require(v.space == dom, ErrorKind::InvalidInput, "apply: vector not in domain");
  return LpVector(cod, b, matrix * v.coords);
}

cmat adjoint_matrix(const cmat& A, const rvec& wdom, const rvec& wcod) {
  return wdom.cwiseInverse().asDiagonal() * A.transpose() * wcod.asDiagonal();
}

LinearMap LinearMap::adjoint() const {
  return LinearMap(cod, b.conjugate(), dom, a.conjugate(), adjoint_matrix(matrix, dom.weights(), cod.weights()));
}

namespace {

NormEstimate power_method(const cmat& A, const rvec& wd, const Exponent& a, const rvec& wc, const Exponent& b,
                          const Budget& budget, bool real) {
  const Eigen::Index m = A.cols();
  const cmat At = adjoint_matrix(A, wd, wc);
  const Exponent ac = a.conjugate();
  Rng rng = make_rng(budget.seed, 0x6f70);

  NormEstimate best;
  best.method = "power";
  best.argmax = cvec::Zero(m);

  auto run = [&](cvec x) {
    const double nx = lp::norm(x, wd, a);
    if (nx == 0.0) return;
    x /= nx;
    double val = lp::norm(A * x, wc, b);
    for (int it = 0; it < budget.iters; ++it) {
      const cvec psi = lp::norming(A * x, wc, b);
      const cvec g = At * psi;
      cvec xn = lp::norming(g, wd, ac);
      if (xn.squaredNorm() == 0.0) break;
      const double vn = lp::norm(A * xn, wc, b);
      if (vn <= val * (1.0 + budget.tol)) {
        if (vn > val) {
          val = vn;
          x = xn;
        }
        break;
      }
      val = vn;
      x = xn;
    }
    if (val > best.value) {
      best.value = val;
      best.argmax = x;
    }
  };

  for (Eigen::Index j = 0; j < m && j < budget.restarts; ++j) run(cvec::Unit(m, j));
  run(cvec::Ones(m));
  const int randoms = std::max(1, budget.restarts - static_cast<int>(m) - 1);
  for (int r = 0; r < randoms; ++r) run(random_matrix(rng, m, 1, real).col(0));
  return best;
}

// Real two-dimensional domain: the unit sphere is a curve, so a fine angle
// grid followed by golden-section refinement finds the global maximum.
NormEstimate circle_search(const cmat& A, const rvec& wd, const Exponent& a, const rvec& wc, const Exponent& b) {
  constexpr int kGrid = 2048;
  const double pi = std::acos(-1.0);
  auto ratio = [&](double th) {
    cvec x(2);
    x << std::cos(th), std::sin(th);
    return lp::norm(A * x, wc, b) / lp::norm(x, wd, a);
  };
  std::vector<double> v(kGrid);
  const double h = pi / kGrid;
  for (int i = 0; i < kGrid; ++i) v[static_cast<std::size_t>(i)] = ratio(i * h);
  NormEstimate out;
  out.method = "circle";
  double best_th = 0.0;
  out.value = -1.0;
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int i = 0; i < kGrid; ++i) {
    const double here = v[static_cast<std::size_t>(i)];
    if (here < v[static_cast<std::size_t>((i + kGrid - 1) % kGrid)] || here < v[static_cast<std::size_t>((i + 1) % kGrid)])
      continue;
    double lo = (i - 1) * h, hi = (i + 1) * h;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = ratio(x1), f2 = ratio(x2);
    for (int it = 0; it < 60; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + phi * (hi - lo);
        f2 = ratio(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - phi * (hi - lo);
        f1 = ratio(x1);
      }
    }
    const double th = f1 > f2 ? x1 : x2;
    const double val = std::max({f1, f2, here});
    if (val > out.value) {
      out.value = val;
      best_th = val == here ? i * h : th;
    }
  }
  cvec x(2);
  x << std::cos(best_th), std::sin(best_th);
  out.argmax = x / lp::norm(x, wd, a);
  return out;
}

}  // namespace

NormEstimate operator_norm(const cmat& A, const rvec& wd, const Exponent& a, const rvec& wc, const Exponent& b,
                           const Budget& budget) {
  require(A.cols() == wd.size() && A.rows() == wc.size(), ErrorKind::InvalidInput,
          "operator_norm: dimension mismatch");
  const Eigen::Index m = A.cols();
  const Eigen::Index k = A.rows();
  NormEstimate out;
  out.argmax = cvec::Zero(m);
  if (m == 0 || k == 0 || A.cwiseAbs().maxCoeff() == 0.0) {
    out.certified = true;
    out.method = "zero";
    if (m > 0) out.argmax(0) = 1.0 / std::pow(wd(0), a.reciprocal());
    return out;
  }
  const bool real = real_field(budget, is_real(A));

  if (a.is_one()) {
    out.method = "columns";
    out.certified = true;
    out.value = -1.0;
    for (Eigen::Index j = 0; j < m; ++j) {
      const double v = lp::norm(A.col(j), wc, b) / wd(j);
      if (v > out.value) {
        out.value = v;
        out.argmax = cvec::Unit(m, j) / wd(j);
      }
    }
    return out;
  }
  if (b.is_inf()) {
    out.method = "rows";
    out.certified = true;
    out.value = -1.0;
    const Exponent ac = a.conjugate();
    for (Eigen::Index i = 0; i < k; ++i) {
      const cvec r = A.row(i).transpose().cwiseQuotient(wd.cast<cplx>());
      const double v = lp::norm(r, wd, ac);
      if (v > out.value) {
        out.value = v;
        out.argmax = lp::norming(r, wd, ac);
      }
    }
    return out;
  }
  if (a.is_two() && b.is_two()) {
    const rvec sd = wd.cwiseSqrt();
    const cmat B = wc.cwiseSqrt().asDiagonal() * A * sd.cwiseInverse().asDiagonal();
    Eigen::JacobiSVD<cmat> svd(B, Eigen::ComputeThinV);
    out.method = "svd";
    out.certified = true;
    out.value = svd.singularValues()(0);
    out.argmax = sd.cwiseInverse().asDiagonal() * svd.matrixV().col(0);
    return out;
  }
  if (real && a.is_inf() && m <= budget.sign_cap) {
    out.method = "signs";
    out.certified = true;
    for_each_sign(static_cast<int>(m), [&](const rvec& eps) {
      const double v = lp::norm(A * eps.cast<cplx>(), wc, b);
      if (v > out.value) {
        out.value = v;
        out.argmax = eps.cast<cplx>();
      }
    });
    return out;
  }
  if (real && b.is_one() && k <= budget.sign_cap) {
    out.method = "dual-signs";
    out.certified = true;
    const cmat At = adjoint_matrix(A, wd, wc);
    const Exponent ac = a.conjugate();
    for_each_sign(static_cast<int>(k), [&](const rvec& eps) {
      const cvec g = At * eps.cast<cplx>();
      const double v = lp::norm(g, wd, ac);
      if (v > out.value) {
        out.value = v;
        out.argmax = lp::norming(g, wd, ac);
      }
    });
    return out;
  }
  if (real && m == 2) return circle_search(A, wd, a, wc, b);
  return power_method(A, wd, a, wc, b, budget, real);
}

NormEstimate operator_norm(const LinearMap& T, const Budget& budget) {
  return operator_norm(T.matrix, T.dom.weights(), T.a, T.cod.weights(), T.b, budget);
}

double operator_norm_upper(const cmat& A, const rvec& wd, const Exponent& a, const rvec& wc, const Exponent& b,
                           const Budget& budget) {
  const bool exact_path = a.is_one() || b.is_inf() || (a.is_two() && b.is_two()) ||
                          (real_field(budget, is_real(A)) &&
                           ((a.is_inf() && A.cols() <= budget.sign_cap) || (b.is_one() && A.rows() <= budget.sign_cap)));
  if (exact_path) return operator_norm(A, wd, a, wc, b, budget).value;
  const Exponent ac = a.conjugate();
  // each row as a functional on L^a(dom)
  rvec rows(A.rows());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    rows(i) = lp::norm(A.row(i).transpose().cwiseQuotient(wd.cast<cplx>()), wd, ac);
  const double by_rows = lp::norm(rows, wc, b);
  // Hoelder against the column norms
  rvec cols(A.cols());
  for (Eigen::Index j = 0; j < A.cols(); ++j) cols(j) = lp::norm(A.col(j), wc, b) / wd(j);
  const double by_cols = lp::norm(cols, wd, ac);
  return std::min(by_rows, by_cols);
}

}  // namespace multinorm
