#include "multinorm/summing.hpp"

#include <algorithm>
#include <cmath>

#include "multinorm/error.hpp"

namespace multinorm {

namespace detail {

SummingEstimate mu_raw(const cmat& X, const rvec& w, const Exponent& r, const Exponent& p, const Budget& budget) {
  require(X.cols() >= 1, ErrorKind::InvalidInput, "mu: empty tuple");
  require(!p.is_inf(), ErrorKind::InvalidInput, "mu: p must be finite");
  const Eigen::Index n = X.cols();
  const NormEstimate op = operator_norm(X, rvec::Ones(n), p.conjugate(), w, r, budget);

  SummingEstimate out;
  out.method = "operator/" + op.method;
  out.certified = op.certified;
  const cvec lambda = lp::norming(X * op.argmax, w, r);
  cvec s(n);
  for (Eigen::Index i = 0; i < n; ++i) s(i) = lp::pair(X.col(i), lambda, w);
  out.value = std::max(lp::seq_norm(s, p), op.value);
  out.witness = lambda;
  const cvec c = lp::seq_norming(s, p);
  out.support = lambda * c.transpose();
  return out;
}

std::optional<cmat> dual_ball_vertices(const rvec& w, const Exponent& r, bool real, const Budget& budget) {
  const int m = static_cast<int>(w.size());
  if (r.is_inf()) return cmat(w.cwiseInverse().cast<cplx>().asDiagonal());
  if (r.is_one() && real && m <= std::min(budget.sign_cap, 15)) {
    cmat Z(m, Eigen::Index{1} << (m - 1));
    Eigen::Index k = 0;
    for_each_sign(m, [&](const rvec& eps) { Z.col(k++) = eps.cast<cplx>(); });
    return Z;
  }
  return std::nullopt;
}

Eval mu_vertices(const cmat& X, const rvec& w, const cmat& Z, const Exponent& p, double s) {
  const cmat V = Z.transpose() * w.asDiagonal() * X;
  const Eigen::Index K = V.rows();
  rvec phi(K);
  for (Eigen::Index k = 0; k < K; ++k) phi(k) = lp::seq_norm(V.row(k).transpose(), p);
  Eval out;
  const double top = phi.maxCoeff();
  cmat theta_c = cmat::Zero(K, X.cols());
  if (top <= 0.0) {
    out.support = cmat::Zero(X.rows(), X.cols());
    return out;
  }
  if (s <= 0.0) {
    Eigen::Index k = 0;
    phi.maxCoeff(&k);
    out.value = top;
    theta_c.row(k) = lp::seq_norming(V.row(k).transpose(), p).transpose();
  } else {
    const rvec ratio = phi / top;
    const rvec pw = ratio.array().pow(s);
    const double agg = std::pow(pw.sum(), 1.0 / s);
    out.value = top * agg;
    for (Eigen::Index k = 0; k < K; ++k) {
      if (phi(k) == 0.0) continue;
      const double theta = std::pow(ratio(k) / agg, s - 1.0);
      theta_c.row(k) = theta * lp::seq_norming(V.row(k).transpose(), p).transpose();
    }
  }
  out.support = Z * theta_c;
  return out;
}

double powi(double x, double e) {
  if (e == 0.0) return 1.0;
  if (e == 1.0) return x;
  if (e == 2.0) return x * x;
  return std::pow(x, e);
}

// Epigraph form: t(k,i) >= |<z_k, lambda_i>|, sum_i t(k,i)^p <= 1. The t
// block of each vertex is diagonal plus rank one, so it is eliminated in
// closed form and Newton runs on lambda alone.
rmat mu_ball_lmo(const rmat& G, const rvec& w, const rmat& Z, const Exponent& p, double rel_gap) {
  const Eigen::Index m = G.rows(), n = G.cols(), K = Z.cols(), N = m * n;
  const double pv = p.value();
  const rmat U = w.asDiagonal() * Z;
  rmat lam = rmat::Zero(m, n);
  if (G.cwiseAbs().maxCoeff() == 0.0) return lam;
  rmat t = rmat::Constant(K, n, 0.5 * std::pow(static_cast<double>(n), -1.0 / pv));
  const double nu = static_cast<double>(2 * K * n + K);
  double tau = nu / G.norm();

  auto barrier = [&](const rmat& L, const rmat& T, double& F) {
    const rmat V = U.transpose() * L;
    double f = -tau * (G.array() * L.array()).sum();
    for (Eigen::Index k = 0; k < K; ++k) {
      double S = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double a = T(k, i) - V(k, i), b = T(k, i) + V(k, i);
        if (!(a > 0.0) || !(b > 0.0)) return false;
        f -= std::log(a) + std::log(b);
        S += powi(T(k, i), pv);
      }
      if (!(S < 1.0)) return false;
      f -= std::log1p(-S);
    }
    F = f;
    return true;
  };

  rmat H(N, N), Minv(n, n), gt(K, n), ee(K, n), Ad(K, n), gg(K, n), Sall(n * n, K), P(m * m, K);
  for (Eigen::Index k = 0; k < K; ++k) {
    const rmat uu = U.col(k) * U.col(k).transpose();
    P.col(k) = Eigen::Map<const rvec>(uu.data(), m * m);
  }
  rvec gam(K);
  for (int outer = 0; outer < 60; ++outer) {
    for (int it = 0; it < 80; ++it) {
      const rmat V = U.transpose() * lam;
      rmat gradL = -tau * G;
      for (Eigen::Index k = 0; k < K; ++k) {
        double S = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) S += powi(t(k, i), pv);
        const double s1 = 1.0 - S;
        rvec d(n), gv(n);
        for (Eigen::Index i = 0; i < n; ++i) {
          const double a = t(k, i) - V(k, i), b = t(k, i) + V(k, i);
          const double ia2 = 1.0 / (a * a), ib2 = 1.0 / (b * b);
          const double tp1 = powi(t(k, i), pv - 1.0);
          d(i) = ia2 + ib2;
          ee(k, i) = ib2 - ia2;
          gv(i) = 1.0 / a - 1.0 / b;
          gg(k, i) = pv * tp1 / s1;
          gt(k, i) = -1.0 / a - 1.0 / b + gg(k, i);
          Ad(k, i) = d(i) + (pv > 1.0 ? pv * (pv - 1.0) * powi(t(k, i), pv - 2.0) / s1 : 0.0);
        }
        // Htt^{-1} = A^{-1} - (A^{-1}g)(A^{-1}g)^T / (1 + g^T A^{-1} g)
        const rvec Ag = gg.row(k).transpose().cwiseQuotient(Ad.row(k).transpose());
        gam(k) = 1.0 + gg.row(k).dot(Ag.transpose());
        Minv = rmat(Ad.row(k).transpose().cwiseInverse().asDiagonal()) - Ag * Ag.transpose() / gam(k);
        const rvec e = ee.row(k).transpose();
        const rmat Sk = rmat(d.asDiagonal()) - e.asDiagonal() * Minv * e.asDiagonal();
        const rvec rk = gv - e.cwiseProduct(Minv * gt.row(k).transpose());
        Sall.col(k) = Eigen::Map<const rvec>(Sk.data(), n * n);
        gradL.noalias() += U.col(k) * rk.transpose();
      }
      // H block (i,j) = sum_k S_k(i,j) u_k u_k^T, as one product
      const rmat Hc = Sall * P.transpose();
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
          for (Eigen::Index b = 0; b < m; ++b)
            for (Eigen::Index a = 0; a < m; ++a) H(i * m + a, j * m + b) = Hc(i + n * j, a + m * b);
      H.diagonal().array() += 1e-14 * H.diagonal().maxCoeff();
      const Eigen::Map<const rvec> gvec(gradL.data(), N);
      const rvec dl = -H.ldlt().solve(gvec);
      const rmat dL = Eigen::Map<const rmat>(dl.data(), m, n);
      const rmat dV = U.transpose() * dL;
      rmat dT(K, n);
      for (Eigen::Index k = 0; k < K; ++k) {
        const rvec y = -gt.row(k).transpose() - ee.row(k).transpose().cwiseProduct(dV.row(k).transpose());
        const rvec Ay = y.cwiseQuotient(Ad.row(k).transpose());
        const rvec Ag = gg.row(k).transpose().cwiseQuotient(Ad.row(k).transpose());
        dT.row(k) = (Ay - Ag * (gg.row(k).dot(Ay.transpose()) / gam(k))).transpose();
      }
      // full gradient . step (the lambda gradient above is already reduced)
      rmat gV(K, n);
      for (Eigen::Index k = 0; k < K; ++k)
        for (Eigen::Index i = 0; i < n; ++i) {
          const double a = t(k, i) - V(k, i), b = t(k, i) + V(k, i);
          gV(k, i) = 1.0 / a - 1.0 / b;
        }
      const rmat gradFull = -tau * G + U * gV;
      const double slope = (gradFull.array() * dL.array()).sum() + (gt.array() * dT.array()).sum();
      if (!(slope < 0.0) || -slope < 1e-6) break;
      double F0 = 0.0;
      barrier(lam, t, F0);
      double step = 1.0, F1 = 0.0;
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls, step *= 0.5) {
        const rmat L1 = lam + step * dL, T1 = t + step * dT;
        if (barrier(L1, T1, F1) && F1 <= F0 + 0.25 * step * slope) {
          lam = L1;
          t = T1;
          moved = true;
          break;
        }
      }
      // a collapsed step means F can no longer be resolved: centered enough
      if (!moved || step < 1e-3) break;
    }
    const double obj = (G.array() * lam.array()).sum();
    if (nu / tau <= rel_gap * std::max(std::abs(obj), 1e-300)) break;
    tau *= 20.0;
  }
  return lam;
}

// Log barrier on f_e(lambda) = sum_t w_t h((lambda e)_t) <= 1 with the
// smoothing h(v) = (v^2 + d^2)^{s/2} >= |v|^s, so iterates stay feasible for
// the true ball.
rmat sign_ball_lmo(const rmat& G, const rvec& w, const Exponent& s, double rel_gap) {
  const Eigen::Index m = G.rows(), n = G.cols(), N = m * n;
  require(n >= 1 && n <= 16, ErrorKind::CapExceeded, "sign_ball_lmo: needs 1 <= n <= 16");
  require(!s.is_inf() && !s.is_one(), ErrorKind::InvalidInput, "sign_ball_lmo: needs 1 < s < inf");
  rmat lam = rmat::Zero(m, n);
  if (G.cwiseAbs().maxCoeff() == 0.0) return lam;
  const double sv = s.value();
  const Eigen::Index K = Eigen::Index(1) << (n - 1);
  rmat E(n, K);  // first sign fixed to +1
  for (Eigen::Index k = 0; k < K; ++k) {
    E(0, k) = 1.0;
    for (Eigen::Index i = 1; i < n; ++i) E(i, k) = ((k >> (i - 1)) & 1) ? -1.0 : 1.0;
  }
  const double d = 1e-9 * w.array().pow(-1.0 / sv).maxCoeff();
  const double d2 = d * d;
  const double nu = static_cast<double>(K);
  double tau = nu / G.norm();

  auto fvals = [&](const rmat& L, rvec& f) {
    const rmat V = L * E;
    f.resize(K);
    for (Eigen::Index k = 0; k < K; ++k) {
      double acc = 0.0;
      for (Eigen::Index t = 0; t < m; ++t) acc += w(t) * std::pow(V(t, k) * V(t, k) + d2, 0.5 * sv);
      f(k) = acc;
    }
  };
  auto barrier = [&](const rmat& L, double& F) {
    rvec f;
    fvals(L, f);
    double acc = -tau * (G.array() * L.array()).sum();
    for (Eigen::Index k = 0; k < K; ++k) {
      if (!(f(k) < 1.0)) return false;
      acc -= std::log1p(-f(k));
    }
    F = acc;
    return true;
  };

  rmat H(N, N);
  rvec g(N);
  for (int outer = 0; outer < 60; ++outer) {
    for (int it = 0; it < 60; ++it) {
      const rmat V = lam * E;
      rmat grad = -tau * G;
      H.setZero();
      for (Eigen::Index k = 0; k < K; ++k) {
        double f = 0.0;
        rvec h1(m), h2(m);
        for (Eigen::Index t = 0; t < m; ++t) {
          const double v = V(t, k), q = v * v + d2;
          const double qs = std::pow(q, 0.5 * sv - 2.0);
          f += w(t) * qs * q * q;
          h1(t) = w(t) * sv * v * qs * q;
          h2(t) = w(t) * sv * qs * ((sv - 1.0) * v * v + d2);
        }
        const double c = 1.0 / (1.0 - f);
        const rvec e = E.col(k);
        // gradient of f_e is h1 e^T
        grad.noalias() += c * h1 * e.transpose();
        for (Eigen::Index i = 0; i < n; ++i)
          for (Eigen::Index j = 0; j < n; ++j) {
            const double eij = c * e(i) * e(j);
            for (Eigen::Index t = 0; t < m; ++t) H(i * m + t, j * m + t) += eij * h2(t);
          }
        for (Eigen::Index i = 0; i < n; ++i) g.segment(i * m, m) = e(i) * h1;
        H.noalias() += (c * c) * g * g.transpose();
      }
      H.diagonal().array() += 1e-14 * H.diagonal().maxCoeff();
      const Eigen::Map<const rvec> gv(grad.data(), N);
      const rvec dl = -H.ldlt().solve(gv);
      const double slope = gv.dot(dl);
      if (!(slope < 0.0) || -slope < 1e-9) break;
      const rmat dL = Eigen::Map<const rmat>(dl.data(), m, n);
      double F0 = 0.0, F1 = 0.0, step = 1.0;
      barrier(lam, F0);
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls, step *= 0.5) {
        const rmat L1 = lam + step * dL;
        if (barrier(L1, F1) && F1 <= F0 + 0.25 * step * slope) {
          lam = L1;
          moved = true;
          break;
        }
      }
      if (!moved || step < 1e-3) break;
    }
    const double obj = (G.array() * lam.array()).sum();
    if (nu / tau <= rel_gap * std::max(std::abs(obj), 1e-300)) break;
    tau *= 20.0;
  }
  return lam;
}

namespace {

// Barrier Newton for max <G, lambda> subject to sum_j h((lambda^T a_k)_j) <= 1,
// a_k the columns of A, h(v) = (v^2 + d^2)^{p/2}.
rmat cut_barrier(const rmat& G, const rmat& A, double pv, double d, double rel_gap) {
  const Eigen::Index m = G.rows(), n = G.cols(), N = m * n, K = A.cols();
  const double d2 = d * d;
  const bool quadratic = pv == 2.0 && d == 0.0;
  const double nu = static_cast<double>(K);
  double tau = nu / G.norm();
  rmat lam = rmat::Zero(m, n);
  auto barrier = [&](const rmat& L, double& F) {
    const rmat U = A.transpose() * L;  // K x n
    double acc = -tau * (G.array() * L.array()).sum();
    for (Eigen::Index k = 0; k < K; ++k) {
      double f = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) f += std::pow(U(k, j) * U(k, j) + d2, 0.5 * pv);
      if (!(f < 1.0)) return false;
      acc -= std::log1p(-f);
    }
    F = acc;
    return true;
  };
  rmat H(N, N);
  rvec g(N);
  for (int outer = 0; outer < 60; ++outer) {
    for (int it = 0; it < 60; ++it) {
      const rmat U = A.transpose() * lam;
      rmat grad = -tau * G;
      H.setZero();
      for (Eigen::Index k = 0; k < K; ++k) {
        double f = 0.0;
        rvec h1(n), h2(n);
        for (Eigen::Index j = 0; j < n; ++j) {
          const double v = U(k, j);
          if (quadratic) {
            f += v * v;
            h1(j) = 2.0 * v;
            h2(j) = 2.0;
            continue;
          }
          const double q = v * v + d2;
          const double qs = std::pow(q, 0.5 * pv - 2.0);
          f += qs * q * q;
          h1(j) = pv * v * qs * q;
          h2(j) = pv * qs * ((pv - 1.0) * v * v + d2);
        }
        const double c = 1.0 / (1.0 - f);
        const rvec a = A.col(k);
        grad.noalias() += c * a * h1.transpose();
        const rmat aa = a * a.transpose();
        for (Eigen::Index j = 0; j < n; ++j) H.block(j * m, j * m, m, m) += (c * h2(j)) * aa;
        for (Eigen::Index j = 0; j < n; ++j) g.segment(j * m, m) = h1(j) * a;
        H.noalias() += (c * c) * g * g.transpose();
      }
      H.diagonal().array() += 1e-14 * H.diagonal().maxCoeff();
      const Eigen::Map<const rvec> gv(grad.data(), N);
      const rvec dl = -H.ldlt().solve(gv);
      const double slope = gv.dot(dl);
      if (!(slope < 0.0) || -slope < 1e-9) break;
      const rmat dL = Eigen::Map<const rmat>(dl.data(), m, n);
      double F0 = 0.0, F1 = 0.0, step = 1.0;
      barrier(lam, F0);
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls, step *= 0.5) {
        const rmat L1 = lam + step * dL;
        if (barrier(L1, F1) && F1 <= F0 + 0.25 * step * slope) {
          lam = L1;
          moved = true;
          break;
        }
      }
      if (!moved || step < 1e-3) break;
    }
    const double obj = (G.array() * lam.array()).sum();
    if (nu / tau <= rel_gap * std::max(std::abs(obj), 1e-300)) break;
    tau *= 20.0;
  }
  return lam;
}

}  // namespace

rmat cut_ball_lmo(const rmat& G, const rvec& w, const Exponent& s, const Exponent& p, double rel_gap,
                  const Budget& budget, std::vector<rvec>* pool) {
  const Eigen::Index m = G.rows(), n = G.cols();
  require(!p.is_inf() && !p.is_one(), ErrorKind::InvalidInput, "cut_ball_lmo: needs 1 < p < inf");
  if (G.cwiseAbs().maxCoeff() == 0.0) return rmat::Zero(m, n);
  const Exponent sc = s.conjugate();
  const double pv = p.value();
  // coordinate functionals bound every entry; the normalised columns of G are
  // often active
  std::vector<rvec> local;
  std::vector<rvec>& cuts = pool ? *pool : local;
  const bool fresh = cuts.empty();
  for (Eigen::Index t = 0; t < m && fresh; ++t) {
    rvec phi = rvec::Zero(m);
    phi(t) = 1.0 / lp::norm(rvec::Unit(m, t), w, sc);
    cuts.push_back(w.cwiseProduct(phi));
  }
  for (Eigen::Index j = 0; j < n && fresh; ++j) {
    const rvec gj = G.col(j).cwiseQuotient(w);
    const double nj = lp::norm(gj, w, sc);
    if (nj > 0.0) cuts.push_back(w.cwiseProduct(gj / nj));
  }
  const double d = pv == 2.0 ? 0.0 : 1e-9 * w.array().pow(-1.0 / s.value()).maxCoeff();
  Budget inner = budget;
  inner.restarts = std::min(inner.restarts, 8);
  inner.iters = std::min(inner.iters, 100);
  rmat best = rmat::Zero(m, n);
  double best_obj = 0.0;
  for (int round = 0; round < 40; ++round) {
    rmat A(m, static_cast<Eigen::Index>(cuts.size()));
    for (std::size_t k = 0; k < cuts.size(); ++k) A.col(static_cast<Eigen::Index>(k)) = cuts[k];
    const rmat lam = cut_barrier(G, A, pv, d, rel_gap);
    const SummingEstimate est = mu_raw(lam.cast<cplx>(), w, s, p, inner);
    if (!(est.value > 0.0)) break;
    const double scale = std::max(est.value, 1.0);
    const double obj = (G.array() * lam.array()).sum() / scale;
    if (obj > best_obj) {
      best_obj = obj;
      best = lam / scale;
    }
    if (est.value <= 1.0 + 1e-3) break;
    cuts.push_back(w.cwiseProduct(est.witness.real()));
  }
  return best;
}

}  // namespace detail

SummingEstimate mu(const Exponent& p, const VectorTuple& t, const Budget& budget) {
  return detail::mu_raw(t.entries, t.space.weights(), t.p, p, budget);
}

double evaluate_mu_witness(const Exponent& p, const VectorTuple& t, const cvec& lambda) {
  const rvec& w = t.space.weights();
  const double nl = lp::norm(lambda, w, t.p.conjugate());
  if (nl == 0.0) return 0.0;
  cvec s(t.length());
  for (int i = 0; i < t.length(); ++i) s(i) = lp::pair(t.entries.col(i), lambda, w);
  return lp::seq_norm(s, p) / nl;
}

namespace {

// sup over the unit ball of L^{r'}(w) of ||(<x_i, z>)_i||_p, as an operator norm.
SummingEstimate literal_sup(const Exponent& p, const cmat& X, const rvec& w, const Exponent& r,
                            const Budget& budget) {
  require(X.cols() >= 1, ErrorKind::InvalidInput, "mu: empty tuple");
  const cmat S = X.transpose() * w.asDiagonal();
  const NormEstimate op = operator_norm(S, w, r.conjugate(), rvec::Ones(X.cols()), p, budget);
  SummingEstimate out;
  out.value = op.value;
  out.certified = op.certified;
  out.method = "literal/" + op.method;
  out.witness = op.argmax;
  return out;
}

}  // namespace

SummingEstimate mu_literal(const Exponent& p, const VectorTuple& t, const Budget& budget) {
  require(!p.is_inf(), ErrorKind::InvalidInput, "mu: p must be finite");
  return literal_sup(p, t.entries, t.space.weights(), t.p, budget);
}

SummingEstimate mu_via_predual(const Exponent& p, const VectorTuple& dual_tuple, const Budget& budget) {
  require(!p.is_inf(), ErrorKind::InvalidInput, "mu: p must be finite");
  // the predual of L^s is L^{s'}; its dual ball is the unit ball of L^s itself,
  // so the supremum runs over x in L^{s'} with the functionals lambda_i
  SummingEstimate out = literal_sup(p, dual_tuple.entries, dual_tuple.space.weights(), dual_tuple.p, budget);
  out.method = "predual/" + out.method.substr(out.method.find('/') + 1);
  return out;
}

SummingEstimate pi_estimate(const Exponent& q, const Exponent& p, const LinearMap& T, int tuple_len_cap,
                            const Budget& budget) {
  require(!q.is_inf() && !p.is_inf(), ErrorKind::InvalidInput, "pi_estimate: exponents must be finite");
  require(p <= q, ErrorKind::InvalidInput, "pi_estimate: requires p <= q");
  require(tuple_len_cap >= 1, ErrorKind::InvalidInput, "pi_estimate: tuple cap must be >= 1");
  const rvec& wd = T.dom.weights();
  const rvec& wc = T.cod.weights();
  const Eigen::Index m = T.dom.size();
  const cmat& A = T.matrix;
  const cmat At = adjoint_matrix(A, wd, wc);
  const bool real = real_field(budget, is_real(A));
  const auto vertices = detail::dual_ball_vertices(wd, T.a, real, budget);

  SummingEstimate best;
  best.method = "ratio-ascent";
  best.witness = cmat::Zero(m, 1);
  if (A.cwiseAbs().maxCoeff() == 0.0) {
    best.tuple_length = 1;
    return best;
  }

  Objective f = [&](const cmat& X) {
    const cmat Y = A * X;
    const Eigen::Index n = X.cols();
    cmat phi(Y.rows(), n);
    cvec norms(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      phi.col(i) = lp::norming(Y.col(i), wc, T.b);
      norms(i) = lp::norm(Y.col(i), wc, T.b);
    }
    const cvec c = lp::seq_norming(norms, q);
    Eval e;
    e.value = lp::seq_norm(norms, q);
    e.support = At * phi * c.asDiagonal();
    return e;
  };
  SmoothObjective g = [&](const cmat& X, double s) {
    if (vertices) return detail::mu_vertices(X, wd, *vertices, p, s);
    const SummingEstimate me = detail::mu_raw(X, wd, T.a, p, budget);
    return Eval{me.value, me.support};
  };

  cmat prev;
  for (int n = 1; n <= tuple_len_cap; ++n) {
    AscentProblem prob;
    prob.f = f;
    prob.g = g;
    prob.weights = wd;
    prob.real = real;
    prob.salt = 0x7069ULL * 1000003ULL + static_cast<std::uint64_t>(n);
    if (vertices) prob.ladder = {8.0, 32.0, 128.0};
    // point-mass tuples
    cmat pm = cmat::Zero(m, n);
    for (int i = 0; i < n; ++i) pm(i % m, i) = 1.0 / std::pow(wd(i % m), T.a.reciprocal());
    prob.seeds.push_back(pm);
    if (n > 1) {
      cmat pm2 = cmat::Zero(m, n);
      for (int i = 0; i < n; ++i) pm2((i + 1) % m, i) = 1.0;
      prob.seeds.push_back(pm2);
    }
    if (prev.size() > 0) {
      for (Eigen::Index j = 0; j < std::min<Eigen::Index>(m, 4); ++j) {
        cmat ext(m, n);
        ext.leftCols(n - 1) = prev;
        ext.col(n - 1) = cvec::Unit(m, j) * (prev.norm() / std::sqrt(double(n)));
        prob.seeds.push_back(ext);
      }
    }
    const AscentResult res = ratio_ascent(prob, budget);
    prev = res.arg;
    if (res.ratio > best.value) {
      best.value = res.ratio;
      best.witness = res.arg;
      best.tuple_length = n;
    }
  }
  return best;
}

LinearMap kp_operator(int n) {
  require(n >= 1, ErrorKind::InvalidInput, "kp_operator: n must be >= 1");
  cmat M = cmat::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i) M(i, j) = 1.0;
  return LinearMap(Space::uniform(n), Exponent(1), Space::uniform(n), Exponent::inf(), M);
}

}  // namespace multinorm
