#include "multinorm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "multinorm/error.hpp"
#include "multinorm/linear_map.hpp"
#include "multinorm/multibound.hpp"
#include "multinorm/multinorms.hpp"
#include "multinorm/semigroup.hpp"
#include "multinorm/summing.hpp"
#include "multinorm/tensor_bridge.hpp"

namespace multinorm {

CheckReport inequality_report(std::string name, double lhs, double rhs, double tol, std::uint64_t seed,
                              std::string config) {
  CheckReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tolerance = tol;
  r.pass = lhs <= rhs + tol;
  r.seed = seed;
  r.config = std::move(config);
  return r;
}

CheckReport equality_report(std::string name, double lhs, double rhs, double tol, std::uint64_t seed,
                            std::string config) {
  CheckReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = std::abs(lhs - rhs);
  r.tolerance = tol;
  r.equality = true;
  r.pass = r.slack <= tol;
  r.seed = seed;
  r.config = std::move(config);
  return r;
}

namespace {

double pth_power_sum(const std::vector<cvec>& xs, const rvec& w, const Exponent& p) {
  double acc = 0.0;
  for (const cvec& x : xs) acc += std::pow(lp::norm(x, w, p), p.value());
  return acc;
}

double column_formula(const cmat& U, const rvec& w, const Exponent& p) {
  double best = 0.0;
  for (Eigen::Index t = 0; t < U.cols(); ++t) best = std::max(best, lp::norm(U.col(t), w, p) / w(t));
  return best;
}

}  // namespace

CheckReport rademacher_check(const std::vector<std::vector<LpVector>>& F, int sign_cap) {
  const int n = static_cast<int>(F.size());
  require(n >= 1, ErrorKind::InvalidInput, "rademacher_check: empty array");
  require(n <= sign_cap, ErrorKind::CapExceeded, "rademacher_check: n exceeds the sign enumeration cap");
  const Space& sp = F[0][0].space;
  const Exponent p = F[0][0].p;
  require(!p.is_inf(), ErrorKind::InvalidInput, "rademacher_check: p must be finite");
  for (const auto& row : F) {
    require(static_cast<int>(row.size()) == n, ErrorKind::InvalidInput, "rademacher_check: F must be n x n");
    for (const auto& v : row)
      require(v.space == sp && v.p == p, ErrorKind::InvalidInput, "rademacher_check: entries must share a space");
  }
  const rvec& w = sp.weights();
  std::vector<cvec> diag;
  for (int j = 0; j < n; ++j) diag.push_back(F[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)].coords);
  const double lhs = pth_power_sum(diag, w, p);
  double cp = 0.0;
  for_each_sign(n, [&](const rvec& d) {
    std::vector<cvec> cols;
    for (int j = 0; j < n; ++j) {
      cvec acc = cvec::Zero(sp.size());
      for (int i = 0; i < n; ++i) acc += d(i) * F[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].coords;
      cols.push_back(acc);
    }
    cp = std::max(cp, pth_power_sum(cols, w, p));
  });
  std::ostringstream cfg;
  cfg << "n=" << n << " omega=" << sp.size() << " p=" << p.str();
  return inequality_report("rademacher", lhs, cp, 1e-12 * std::max(1.0, cp), 0, cfg.str());
}

cvec JFunctional::apply(const cmat& U) const {
  require(static_cast<Eigen::Index>(cols.size()) == U.cols(), ErrorKind::InvalidInput, "JFunctional: shape mismatch");
  cvec out = cvec::Zero(cols.empty() ? 0 : cols[0].rows());
  for (std::size_t b = 0; b < cols.size(); ++b) out += cols[b] * U.col(static_cast<Eigen::Index>(b));
  return out;
}

double j_operator_norm(const cmat& U, const Space& omega, const Exponent& p) {
  return column_formula(U, omega.weights(), p);
}

double j_functional_norm_upper(const JFunctional& R, const Space& omega, const Exponent& p) {
  const rvec& w = omega.weights();
  Budget b;
  double acc = 0.0;
  for (std::size_t k = 0; k < R.cols.size(); ++k) {
    const cmat& Rb = R.cols[k];
    const double one = operator_norm(Rb, w, Exponent(1), w, Exponent(1), b).value;
    const double inf = operator_norm(Rb, w, Exponent::inf(), w, Exponent::inf(), b).value;
    const double rt = std::pow(one, p.reciprocal()) * std::pow(inf, 1.0 - p.reciprocal());
    const double direct = operator_norm_upper(Rb, w, p, w, p, b);
    acc += w(static_cast<Eigen::Index>(k)) * std::min(rt, direct);
  }
  return acc;
}

CheckReport projection_inequality_check(const JFunctional& R, const cmat& U, const Space& omega, const Exponent& p,
                                        const std::vector<int>& X, const std::vector<int>& Y, int sign_cap) {
  const int m = omega.size();
  require(U.rows() == m && U.cols() == m, ErrorKind::InvalidInput, "projection_check: U must be |Omega| x |Omega|");
  require(static_cast<int>(R.cols.size()) == m, ErrorKind::InvalidInput, "projection_check: R has wrong shape");
  for (const auto& c : R.cols)
    require(c.rows() == m && c.cols() == m, ErrorKind::InvalidInput, "projection_check: R has wrong shape");
  require(static_cast<int>(X.size()) == m && static_cast<int>(Y.size()) == m, ErrorKind::InvalidInput,
          "projection_check: partitions must label every point");
  require(!p.is_inf(), ErrorKind::InvalidInput, "projection_check: p must be finite");
  int n = 1;
  for (int v : X) {
    require(v >= 0, ErrorKind::InvalidInput, "projection_check: negative part index");
    n = std::max(n, v + 1);
  }
  for (int v : Y) {
    require(v >= 0, ErrorKind::InvalidInput, "projection_check: negative part index");
    n = std::max(n, v + 1);
  }
  require(n <= sign_cap, ErrorKind::CapExceeded, "projection_check: too many parts for sign enumeration");
  const rvec& w = omega.weights();

  std::vector<cvec> pieces;
  for (int i = 0; i < n; ++i) {
    cmat Ui = cmat::Zero(m, m);
    for (int s = 0; s < m; ++s)
      if (Y[static_cast<std::size_t>(s)] == i) Ui.row(s) = U.row(s);
    cvec v = R.apply(Ui);
    for (int s = 0; s < m; ++s)
      if (X[static_cast<std::size_t>(s)] != i) v(s) = 0.0;
    pieces.push_back(v);
  }
  const double lhs = std::pow(pth_power_sum(pieces, w, p), p.reciprocal());

  double C = 0.0;
  for_each_sign(n, [&](const rvec& d) {
    cmat Ud = U;
    for (int s = 0; s < m; ++s) Ud.row(s) *= d(Y[static_cast<std::size_t>(s)]);
    C = std::max(C, lp::norm(R.apply(Ud), w, p));
  });
  const double rhs = j_functional_norm_upper(R, omega, p) * j_operator_norm(U, omega, p);
  const double tol = 1e-12 * std::max(1.0, rhs);
  std::ostringstream cfg;
  cfg << "n=" << n << " omega=" << m << " p=" << p.str() << " C=" << C;
  CheckReport r = inequality_report("projection", lhs, rhs, tol, 0, cfg.str());
  r.pass = lhs <= C + tol && C <= rhs + tol;
  return r;
}

CheckReport disjoint_rank_bound_check(const cmat& U, const Space& omega, const Exponent& p,
                                      const std::vector<cvec>& f, const std::vector<cvec>& x) {
  const int m = omega.size();
  require(U.rows() == m && U.cols() == m, ErrorKind::InvalidInput, "disjoint_rank: U must be |Omega| x |Omega|");
  require(!f.empty() && f.size() == x.size(), ErrorKind::InvalidInput, "disjoint_rank: need matching nonempty families");
  auto check_disjoint = [&](const std::vector<cvec>& fam, const char* what) {
    std::vector<int> owner(static_cast<std::size_t>(m), -1);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      require(fam[i].size() == m, ErrorKind::InvalidInput, "disjoint_rank: vector length mismatch");
      for (int s = 0; s < m; ++s) {
        if (fam[i](s) == cplx(0.0)) continue;
        require(owner[static_cast<std::size_t>(s)] < 0, ErrorKind::InvalidInput,
                std::string("disjoint_rank: overlapping supports in ") + what);
        owner[static_cast<std::size_t>(s)] = static_cast<int>(i);
      }
    }
  };
  check_disjoint(f, "f");
  check_disjoint(x, "x");
  const rvec& w = omega.weights();
  const Exponent q = p.conjugate();
  cmat T = cmat::Zero(m, m);
  double c = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    T += x[i] * (f[i].cwiseProduct(w.cast<cplx>())).transpose() * U;
    c = std::max(c, lp::norm(f[i], w, q) * lp::norm(x[i], w, p));
  }
  const double lhs = column_formula(T, w, p);
  const double rhs = column_formula(U, w, p) * c;
  std::ostringstream cfg;
  cfg << "n=" << f.size() << " omega=" << m << " p=" << p.str();
  return inequality_report("disjoint_rank", lhs, rhs, 1e-12 * std::max(1.0, rhs), 0, cfg.str());
}

// ------------------------------------------------------------------ suites

namespace {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Space random_space(Rng& rng, int m) {
  std::uniform_real_distribution<double> u(0.5, 2.0);
  std::vector<double> w(static_cast<std::size_t>(m));
  for (auto& v : w) v = u(rng);
  return Space(w);
}

cmat random_disjoint(Rng& rng, int m, int n, bool real) {
  cmat out = cmat::Zero(m, n);
  const cmat vals = random_matrix(rng, m, 1, real);
  for (int s = 0; s < m; ++s) {
    const int owner = uniform_int(rng, -1, n - 1);
    if (owner >= 0) out(s, owner) = vals(s, 0);
  }
  return out;
}

std::vector<int> random_labels(Rng& rng, int m, int n) {
  std::vector<int> a(static_cast<std::size_t>(m));
  for (auto& v : a) v = uniform_int(rng, 0, n - 1);
  return a;
}

std::string describe(int m, int n, const Exponent& p, const std::string& extra = {}) {
  std::ostringstream s;
  s << "m=" << m << " n=" << n << " p=" << p.str();
  if (!extra.empty()) s << " " << extra;
  return s.str();
}

double rel(double tol, double v) { return tol * std::max(1.0, std::abs(v)); }

struct SuiteBuilder {
  const SuiteConfig& cfg;
  std::vector<CheckReport> out;
  std::uint64_t counter = 0;

  Rng next(std::uint64_t& seed_out) {
    seed_out = cfg.seed * 1000003ULL + (++counter);
    return make_rng(seed_out);
  }
  void add(CheckReport r, std::uint64_t seed) {
    r.seed = seed;
    out.push_back(std::move(r));
  }
};

std::vector<Exponent> finite(const std::vector<Exponent>& ex) {
  std::vector<Exponent> o;
  for (const auto& e : ex)
    if (!e.is_inf()) o.push_back(e);
  if (o.empty()) o.push_back(Exponent(2));
  return o;
}

FiniteSemigroup pick_semigroup(int k) {
  switch (k % 6) {
    case 0: return FiniteSemigroup::cyclic(3);
    case 1: return FiniteSemigroup::dihedral(3);
    case 2: return FiniteSemigroup::left_zero(2);
    case 3: return FiniteSemigroup::right_zero(3);
    case 4: return FiniteSemigroup::rectangular_band(2, 2);
    default: return FiniteSemigroup::symmetric(3);
  }
}

FiniteSemigroup pick_group(int k) {
  switch (k % 3) {
    case 0: return FiniteSemigroup::cyclic(2);
    case 1: return FiniteSemigroup::cyclic(3);
    default: return FiniteSemigroup::symmetric(3);
  }
}

}  // namespace

std::vector<CheckReport> identity_suite(const SuiteConfig& cfg) {
  require(cfg.dims >= 1 && cfg.trials >= 0, ErrorKind::InvalidInput, "identity_suite: bad config");
  SuiteBuilder sb{cfg, {}, 0};
  const Budget& B = cfg.budget;
  const auto exps = finite(cfg.exponents);
  const int D = cfg.dims;
  const int Dsmall = std::min(D, 3);
  std::uint64_t seed = 0;

  for (int trial = 0; trial < cfg.trials; ++trial) {
    const Exponent pe = exps[static_cast<std::size_t>(trial) % exps.size()];
    {
      // Max = Std:1 = Lattice on l^1
      Rng rng = sb.next(seed);
      const int m = uniform_int(rng, 1, D), n = uniform_int(rng, 1, 4);
      const VectorTuple t(random_space(rng, m), Exponent(1), random_matrix(rng, m, n, trial % 2 == 0));
      const double mx = multi_norm(MultiNormSpec::max(), t, B).value;
      const double s1 = multi_norm(MultiNormSpec::standard(Exponent(1)), t, B).value;
      const double la = multi_norm(MultiNormSpec::lattice(), t, B).value;
      sb.add(equality_report("max_eq_std1", mx, s1, rel(1e-12, mx), 0, describe(m, n, Exponent(1))), seed);
      sb.add(equality_report("std1_eq_lattice", s1, la, rel(1e-12, la), 0, describe(m, n, Exponent(1))), seed);
    }
    {
      // Std:p = Lattice on l^p
      Rng rng = sb.next(seed);
      const int m = uniform_int(rng, 1, D), n = uniform_int(rng, 1, 4);
      const VectorTuple t(random_space(rng, m), pe, random_matrix(rng, m, n, true));
      const double s = multi_norm(MultiNormSpec::standard(pe), t, B).value;
      const double la = multi_norm(MultiNormSpec::lattice(), t, B).value;
      sb.add(equality_report("stdp_eq_lattice", s, la, rel(1e-12, la), 0, describe(m, n, pe)), seed);
    }
    {
      // (1,1) optimizer vs certified max on l^1
      Rng rng = sb.next(seed);
      const int m = uniform_int(rng, 2, D), n = uniform_int(rng, 2, 4);
      const VectorTuple t(random_space(rng, m), Exponent(1), random_matrix(rng, m, n, true));
      const double mx = multi_norm(MultiNormSpec::max(), t, B).value;
      const double pq = pq_norm_ascent(Exponent(1), Exponent(1), t, B).value;
      sb.add(equality_report("pq11_eq_max", pq, mx, 0.02 * mx, 0, describe(m, n, Exponent(1))), seed);
    }
    {
      // Min <= spec <= Max on l^1
      Rng rng = sb.next(seed);
      const int m = uniform_int(rng, 1, D), n = uniform_int(rng, 1, 4);
      const VectorTuple t(random_space(rng, m), Exponent(1), random_matrix(rng, m, n, true));
      const MultiNormSpec specs[] = {MultiNormSpec::lattice(), MultiNormSpec::standard(Exponent(2)),
                                     MultiNormSpec::pq(Exponent(1), Exponent(2)),
                                     MultiNormSpec::pq(Exponent(2), Exponent(2))};
      const MultiNormSpec& spec = specs[trial % 4];
      const double lo = multi_norm(MultiNormSpec::min(), t, B).value;
      const double hi = multi_norm(MultiNormSpec::max(), t, B).value;
      const double v = multi_norm(spec, t, B).value;
      const std::string c = describe(m, n, Exponent(1), "spec=" + spec.str());
      sb.add(inequality_report("sandwich_lower", lo, v, rel(5e-3, v), 0, c), seed);
      sb.add(inequality_report("sandwich_upper", v, hi, rel(5e-3, hi), 0, c), seed);
    }
    {
      // PQ monotonicity on l^1
      Rng rng = sb.next(seed);
      const int m = uniform_int(rng, 2, D), n = uniform_int(rng, 2, 4);
      const VectorTuple t(random_space(rng, m), Exponent(1), random_matrix(rng, m, n, true));
      const double v11 = multi_norm(MultiNormSpec::pq(Exponent(1), Exponent(1)), t, B).value;
      const double v12 = multi_norm(MultiNormSpec::pq(Exponent(1), Exponent(2)), t, B).value;
      const double v22 = multi_norm(MultiNormSpec::pq(Exponent(2), Exponent(2)), t, B).value;
      sb.add(inequality_report("pq_monotone_q", v12, v11, rel(5e-3, v11), 0, describe(m, n, Exponent(1))), seed);
      sb.add(inequality_report("pq_monotone_p", v12, v22, rel(5e-3, v22), 0, describe(m, n, Exponent(1))), seed);
    }
    {
      // dual of the dual multi-norm restricted to the space
      Rng rng = sb.next(seed);
      const int m = uniform_int(rng, 1, Dsmall), n = uniform_int(rng, 1, 3);
      const VectorTuple t(random_space(rng, m), pe, random_matrix(rng, m, n, true));
      const double direct = multi_norm(MultiNormSpec::lattice(), t, B).value;
      const double dd = dual_level_norm(MultiNormSpec::dual(MultiNormSpec::lattice()), t, B).value;
      sb.add(equality_report("dual_dual_restriction", dd, direct, rel(5e-3, direct), 0,
                             describe(m, n, pe, "spec=lattice")),
             seed);
    }
    {
      // mu of a dual tuple through the predual agrees with direct evaluation
      Rng rng = sb.next(seed);
      const int m = uniform_int(rng, 1, D), n = uniform_int(rng, 1, 4);
      const Exponent s = pe.conjugate();
      const Exponent pm = exps[static_cast<std::size_t>(trial + 1) % exps.size()];
      const VectorTuple t(random_space(rng, m), s, random_matrix(rng, m, n, true));
      const double direct = mu(pm, t, B).value;
      const double pre = mu_via_predual(pm, t, B).value;
      sb.add(equality_report("mu_predual", pre, direct, rel(5e-3, direct), 0, describe(m, n, s, "mu_p=" + pm.str())),
             seed);
    }
    {
      // ||Tx|| <= ||T|| ||x|| across levels
      Rng rng = sb.next(seed);
      const int m = uniform_int(rng, 1, D), n = uniform_int(rng, 1, 4), k = uniform_int(rng, 1, 4);
      const MultiNormSpec specs[] = {MultiNormSpec::min(), MultiNormSpec::lattice(),
                                     MultiNormSpec::standard(Exponent(2)), MultiNormSpec::max()};
      const MultiNormSpec& spec = specs[trial % 4];
      const Exponent base = spec.kind == MultiNormSpec::Kind::Max ? Exponent(1) : pe;
      const VectorTuple t(random_space(rng, m), base, random_matrix(rng, m, n, true));
      const rmat T = random_matrix(rng, k, n, true).real();
      const AmplificationResult a = amplification_check(spec, T, t, B);
      CheckReport r = inequality_report("linking_levels", a.lhs, a.rhs, rel(a.pass ? 5e-3 : 0.0, a.rhs), 0,
                                        describe(m, n, base, "spec=" + spec.str()));
      r.pass = a.pass;
      sb.add(r, seed);
    }
    {
      // tensor bridge: bracketing, cross norm, min = injective
      Rng rng = sb.next(seed);
      const int m = uniform_int(rng, 1, Dsmall), N = uniform_int(rng, 1, 3), terms = uniform_int(rng, 1, 3);
      TensorElement tau(N, random_space(rng, m), Exponent(1));
      for (int i = 0; i < terms; ++i)
        tau.add(random_matrix(rng, N, 1, true).col(0), random_matrix(rng, m, 1, true).col(0));
      const LevelNormResult inj = injective_tensor_norm(tau, B);
      const LevelNormResult mn = multinorm_tensor_norm(MultiNormSpec::min(), tau, B);
      const LevelNormResult la = multinorm_tensor_norm(MultiNormSpec::lattice(), tau, B);
      const ProjectiveBound pb = projective_upper_bound(tau, B);
      const std::string c = describe(m, N, Exponent(1), "terms=" + std::to_string(terms));
      sb.add(equality_report("min_eq_injective", mn.value, inj.value, rel(1e-9, inj.value), 0, c), seed);
      sb.add(inequality_report("injective_le_lattice", inj.value, la.value, rel(1e-9, la.value), 0, c), seed);
      sb.add(inequality_report("lattice_le_projective", la.value, pb.value, rel(1e-9, pb.value), 0, c), seed);

      TensorElement single(N, tau.space, pe);
      const cvec a = random_matrix(rng, N, 1, false).col(0);
      const cvec x = random_matrix(rng, m, 1, false).col(0);
      single.add(a, x);
      const MultiNormSpec cs[] = {MultiNormSpec::min(), MultiNormSpec::lattice(), MultiNormSpec::standard(pe)};
      const MultiNormSpec& spec = cs[trial % 3];
      const double lhs = multinorm_tensor_norm(spec, single, B).value;
      const double rhs = a.cwiseAbs().maxCoeff() * lp::norm(x, single.space.weights(), pe);
      sb.add(equality_report("cross_norm", lhs, rhs, rel(1e-9, rhs), 0, describe(m, N, pe, "spec=" + spec.str())),
             seed);
    }
    {
      // multi-bound of a finite set collapses to its distinct elements
      Rng rng = sb.next(seed);
      const int m = uniform_int(rng, 1, Dsmall), size = uniform_int(rng, 1, 3);
      const Space sp = random_space(rng, m);
      std::vector<LpVector> Bset;
      for (int i = 0; i < size; ++i) Bset.emplace_back(sp, Exponent(1), random_matrix(rng, m, 1, true).col(0));
      const int K = std::min(2 * size, size + 1);
      const MultiNormSpec specs[] = {MultiNormSpec::lattice(), MultiNormSpec::standard(Exponent(1)),
                                     MultiNormSpec::max()};
      const MultiNormSpec& spec = specs[trial % 3];
      const double dv = multi_bound_set(spec, Bset, B).value;
      const double bf = multi_bound_bruteforce(spec, Bset, K, B);
      sb.add(equality_report("multibound_collapse", bf, dv, rel(1e-9, dv), 0,
                             describe(m, size, Exponent(1), "K=" + std::to_string(K) + " spec=" + spec.str())),
             seed);
    }
    {
      // alpha_{p,q}(T) = pi_{q,p}(T'): the estimate never exceeds alpha
      Rng rng = sb.next(seed);
      const int m = uniform_int(rng, 1, Dsmall);
      const bool l2 = trial % 3 == 2;
      const Exponent p = l2 ? Exponent(2) : Exponent(1);
      const Exponent q = l2 ? Exponent(2) : (trial % 3 == 0 ? Exponent(1) : Exponent(2));
      const Space dom = Space::uniform(m), cod = Space::uniform(m);
      const LinearMap T(dom, Exponent(1), cod, l2 ? Exponent(2) : Exponent(1), random_matrix(rng, m, m, true));
      const double a = alpha(p, q, T, B).value;
      const double pi = pi_estimate(q, p, T.adjoint(), m, B).value;
      sb.add(inequality_report("summing_duality", pi, a, 1e-9, 0,
                               describe(m, m, T.b, "pq=" + p.str() + "," + q.str())),
             seed);
    }
    {
      // multi-bounded norm from l^1 with the minimum multi-norm is alpha
      Rng rng = sb.next(seed);
      const int m = uniform_int(rng, 1, 2);
      const Space dom = Space::uniform(m), cod = Space::uniform(m);
      const LinearMap T(dom, Exponent(1), cod, Exponent(1), random_matrix(rng, m, m, true));
      const Exponent q = trial % 2 ? Exponent(2) : Exponent(1);
      Budget b = B;
      b.restarts = std::min(B.restarts, 16);
      b.iters = std::min(B.iters, 200);
      const double a = alpha(Exponent(1), q, T, B).value;
      const double mb =
          mb_operator_norm(MultiNormSpec::min(), MultiNormSpec::pq(Exponent(1), q), T, m, b).value;
      sb.add(equality_report("mb_from_l1_eq_alpha", mb, a, rel(5e-3, a), 0, describe(m, m, Exponent(1), "q=" + q.str())),
             seed);
    }
    {
      // translations of functionals on semigroups
      Rng rng = sb.next(seed);
      const FiniteSemigroup S = pick_semigroup(trial);
      const int n = S.size();
      const cvec L = random_matrix(rng, n, 1, trial % 2 == 0).col(0);
      const CancellativityReport cr = cancellativity_report(S);
      double mass = 0.0, iso = 0.0;
      for (int s = 0; s < n; ++s) {
        const cvec sl = dual_translate(S, s, L);
        mass = std::max(mass, std::abs(sl.sum() - L.sum()));
        iso = std::max(iso, std::abs(sl.cwiseAbs().sum() - L.cwiseAbs().sum()));
      }
      const std::string c = "S=" + std::to_string(n) + (cr.left_cancellative ? " left-cancellative" : "");
      sb.add(equality_report("translate_preserves_mass", mass, 0.0, 1e-12 * std::max(1.0, L.cwiseAbs().sum()), 0, c),
             seed);
      if (cr.left_cancellative)
        sb.add(equality_report("translate_isometry", iso, 0.0, 1e-12 * std::max(1.0, L.cwiseAbs().sum()), 0, c), seed);
    }
    {
      // isometry fails without left cancellation
      const FiniteSemigroup S = FiniteSemigroup::left_zero(2);
      cvec L(2);
      L << 0.5, -0.5;
      const double dev = std::abs(dual_translate(S, 0, L).cwiseAbs().sum() - 1.0);
      sb.next(seed);
      sb.add(inequality_report("translate_isometry_fails_left_zero", 0.5, dev, 0.0, 0, "S=left_zero:2"), seed);
    }
    {
      // group identities
      Rng rng = sb.next(seed);
      const FiniteSemigroup G = pick_group(trial);
      const int n = G.size();
      const cvec L = random_matrix(rng, n, 1, false).col(0);
      double mod = 0.0;
      for (int s = 0; s < n; ++s)
        mod = std::max(mod, (dual_translate(G, s, L).cwiseAbs() - dual_translate(G, s, L.cwiseAbs().cast<cplx>()).real())
                                .cwiseAbs()
                                .maxCoeff());
      const std::string c = "G=" + std::to_string(n);
      sb.add(equality_report("modulus_commutes_with_translation", mod, 0.0, 1e-12, 0, c), seed);

      const cvec pos = random_matrix(rng, n, 1, true).col(0).cwiseAbs().cast<cplx>();
      const double defect = invariance_defect(G, lattice_sup_mean(G, pos));
      sb.add(equality_report("lattice_sup_mean_invariant", defect, 0.0, 1e-12, 0, c), seed);

      const cvec f = random_matrix(rng, n, 1, false).col(0), g = random_matrix(rng, n, 1, false).col(0);
      const cmat U = random_matrix(rng, n, n, false);
      const double assoc = (j_action(G, f, j_action(G, g, U)) - j_action(G, convolve(G, f, g), U)).cwiseAbs().maxCoeff();
      sb.add(equality_report("j_action_associative", assoc, 0.0, 1e-12, 0, c), seed);
      const double morph = (j_action(G, f, pi_tilde(G, g)) - pi_tilde(G, convolve(G, f, g))).cwiseAbs().maxCoeff();
      sb.add(equality_report("pi_tilde_morphism", morph, 0.0, 1e-12, 0, c), seed);
      const int s = uniform_int(rng, 0, n - 1);
      const double tensor_err = translate_tensor_check(G, f, g, s).max_err;
      sb.add(equality_report("translate_tensor_identity", tensor_err, 0.0, 1e-12, 0, c), seed);
      double inter = 0.0;
      for (int t = 0; t < n; ++t)
        for (int u = 0; u < n; ++u) {
          const int st = G.mul(u, t);
          const cvec lhs = qt_map(G, t, convolve(G, f, cvec::Unit(n, st)));
          const cvec rhs = convolve(G, f, qt_map(G, t, cvec::Unit(n, st)));
          inter = std::max(inter, (lhs - rhs).cwiseAbs().maxCoeff());
        }
      sb.add(equality_report("qt_intertwining", inter, 0.0, 1e-12, 0, c), seed);
      const double anti =
          (theta_twist(G, convolve(G, f, g)) - convolve(G, theta_twist(G, g), theta_twist(G, f))).cwiseAbs().maxCoeff();
      sb.add(equality_report("theta_anti_homomorphism", anti, 0.0, 1e-12, 0, c), seed);
    }
    {
      // j_action norm bound with the uniform constant
      Rng rng = sb.next(seed);
      const FiniteSemigroup S = pick_semigroup(trial + 1);
      const int n = S.size();
      const CancellativityReport cr = cancellativity_report(S);
      const cvec f = random_matrix(rng, n, 1, false).col(0);
      const cmat U = random_matrix(rng, n, n, false);
      const double C = cr.uniform_constant;
      const double lhs = j_norm(j_action(S, f, U), pe);
      const double rhs = std::pow(C, 1.0 + 1.0 - pe.reciprocal()) * f.cwiseAbs().sum() * j_norm(U, pe);
      sb.add(inequality_report("j_action_bound", lhs, rhs, rel(1e-12, rhs), 0,
                               "S=" + std::to_string(n) + " C=" + std::to_string(cr.uniform_constant) + " p=" + pe.str()),
             seed);
    }
    {
      // multi-invariance bounds are monotone like the (p,q) norms
      Rng rng = sb.next(seed);
      const FiniteSemigroup G = pick_group(trial);
      const int n = G.size();
      cvec L = random_matrix(rng, n, 1, true).col(0).cwiseAbs().cast<cplx>();
      L /= L.sum();
      const double v11 = multi_invariance_bound(G, Exponent(1), Exponent(1), L, B).value;
      const double v12 = multi_invariance_bound(G, Exponent(1), Exponent(2), L, B).value;
      const double v22 = multi_invariance_bound(G, Exponent(2), Exponent(2), L, B).value;
      const std::string c = "G=" + std::to_string(n);
      sb.add(inequality_report("invariance_bound_monotone_q", v12, v11, rel(5e-3, v11), 0, c), seed);
      sb.add(inequality_report("invariance_bound_monotone_p", v12, v22, rel(5e-3, v22), 0, c), seed);
      sb.add(inequality_report("invariance_bound_at_least_one", 1.0, v12, 1e-9, 0, c), seed);
    }
  }
  return sb.out;
}

std::vector<CheckReport> inequality_suite(int trials, std::uint64_t seed, int max_n, int max_omega) {
  require(trials >= 0 && max_n >= 1 && max_omega >= 1, ErrorKind::InvalidInput, "inequality_suite: bad config");
  std::vector<CheckReport> out;
  const Exponent ps[] = {Exponent(3, 2), Exponent(2), Exponent(3), Exponent(4)};
  for (int trial = 0; trial < trials; ++trial) {
    const Exponent p = ps[trial % 4];
    {
      const std::uint64_t s = seed * 1000003ULL + 0x100000ULL + static_cast<std::uint64_t>(trial);
      Rng rng = make_rng(s);
      const int n = uniform_int(rng, 1, max_n), m = uniform_int(rng, 1, max_omega);
      const Space sp = random_space(rng, m);
      std::vector<std::vector<LpVector>> F(static_cast<std::size_t>(n));
      for (auto& row : F)
        for (int j = 0; j < n; ++j) row.emplace_back(sp, p, random_matrix(rng, m, 1, trial % 2 == 0).col(0));
      CheckReport r = rademacher_check(F);
      r.seed = s;
      out.push_back(r);
    }
    {
      const std::uint64_t s = seed * 1000003ULL + 0x200000ULL + static_cast<std::uint64_t>(trial);
      Rng rng = make_rng(s);
      const int m = uniform_int(rng, 1, max_omega), n = uniform_int(rng, 1, std::min(max_n, m));
      const Space sp = random_space(rng, m);
      JFunctional R;
      for (int b = 0; b < m; ++b) R.cols.push_back(random_matrix(rng, m, m, trial % 2 == 0));
      const cmat U = random_matrix(rng, m, m, trial % 2 == 0);
      CheckReport r = projection_inequality_check(R, U, sp, p, random_labels(rng, m, n), random_labels(rng, m, n));
      r.seed = s;
      out.push_back(r);
    }
    {
      const std::uint64_t s = seed * 1000003ULL + 0x300000ULL + static_cast<std::uint64_t>(trial);
      Rng rng = make_rng(s);
      const int m = uniform_int(rng, 1, max_omega), n = uniform_int(rng, 1, std::min(max_n, m));
      const Space sp = random_space(rng, m);
      const cmat U = random_matrix(rng, m, m, trial % 2 == 0);
      const cmat Fm = random_disjoint(rng, m, n, trial % 2 == 0);
      const cmat Xm = random_disjoint(rng, m, n, trial % 2 == 0);
      std::vector<cvec> f, x;
      for (int i = 0; i < n; ++i) {
        f.push_back(Fm.col(i));
        x.push_back(Xm.col(i));
      }
      CheckReport r = disjoint_rank_bound_check(U, sp, p, f, x);
      r.seed = s;
      out.push_back(r);
    }
  }
  return out;
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream s;
  s.precision(17);
  s << "name,pass,lhs,rhs,slack,tolerance,equality,seed,config\n";
  for (const auto& r : reports) {
    s << r.name << ',' << (r.pass ? "true" : "false") << ',' << r.lhs << ',' << r.rhs << ',' << r.slack << ','
      << r.tolerance << ',' << (r.equality ? "true" : "false") << ',' << r.seed << ",\"" << r.config << "\"\n";
  }
  return s.str();
}

}  // namespace multinorm
