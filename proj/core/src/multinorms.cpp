#include "multinorm/multinorms.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "multinorm/ascent.hpp"
#include "multinorm/error.hpp"
#include "multinorm/linear_map.hpp"
#include "multinorm/summing.hpp"

namespace multinorm {

// ---------------------------------------------------------------- spec

MultiNormSpec MultiNormSpec::min() { return MultiNormSpec{}; }

MultiNormSpec MultiNormSpec::max() {
  MultiNormSpec s;
  s.kind = Kind::Max;
  return s;
}

MultiNormSpec MultiNormSpec::lattice() {
  MultiNormSpec s;
  s.kind = Kind::Lattice;
  return s;
}

MultiNormSpec MultiNormSpec::standard(Exponent q) {
  require(!q.is_inf(), ErrorKind::SpecMismatch, "std:q requires q < inf");
  MultiNormSpec s;
  s.kind = Kind::StandardQ;
  s.q = q;
  return s;
}

MultiNormSpec MultiNormSpec::pq(Exponent p, Exponent q) {
  require(!q.is_inf() && p <= q, ErrorKind::SpecMismatch, "pq:p,q requires 1 <= p <= q < inf");
  MultiNormSpec s;
  s.kind = Kind::PQ;
  s.p = p;
  s.q = q;
  return s;
}

MultiNormSpec MultiNormSpec::extension(Exponent q, Exponent target_p, int target_size) {
  require(!q.is_inf() && target_p <= q, ErrorKind::SpecMismatch, "ext:q,p,size requires 1 <= p <= q < inf");
  require(target_size >= 1, ErrorKind::SpecMismatch, "ext: target size must be >= 1");
  MultiNormSpec s;
  s.kind = Kind::Extension;
  s.q = q;
  s.p = target_p;
  s.target_size = target_size;
  return s;
}

MultiNormSpec MultiNormSpec::dual(MultiNormSpec inner) {
  MultiNormSpec s;
  s.kind = Kind::Dual;
  s.inner = std::make_shared<const MultiNormSpec>(std::move(inner));
  return s;
}

namespace {

std::vector<std::string> split_args(std::string_view body) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

MultiNormSpec MultiNormSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(c)));
  if (s == "min") return min();
  if (s == "max") return max();
  if (s == "lattice") return lattice();
  if (s.rfind("dual(", 0) == 0 && s.back() == ')') return dual(parse(s.substr(5, s.size() - 6)));
  const auto colon = s.find(':');
  require(colon != std::string::npos, ErrorKind::InvalidInput, "unknown spec '" + s + "'");
  const std::string head = s.substr(0, colon);
  const auto args = split_args(std::string_view(s).substr(colon + 1));
  if (head == "std") {
    require(args.size() == 1, ErrorKind::InvalidInput, "std:<q> takes one exponent");
    return standard(Exponent::parse(args[0]));
  }
  if (head == "pq") {
    require(args.size() == 2, ErrorKind::InvalidInput, "pq:<p>,<q> takes two exponents");
    return pq(Exponent::parse(args[0]), Exponent::parse(args[1]));
  }
  if (head == "ext") {
    require(args.size() == 3, ErrorKind::InvalidInput, "ext:<q>,<p>,<size> takes three arguments");
    int size = 0;
    try {
      size = std::stoi(args[2]);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "ext: bad size '" + args[2] + "'");
    }
    return extension(Exponent::parse(args[0]), Exponent::parse(args[1]), size);
  }
  throw Error(ErrorKind::InvalidInput, "unknown spec '" + s + "'");
}

std::string MultiNormSpec::str() const {
  switch (kind) {
    case Kind::Min: return "min";
    case Kind::Max: return "max";
    case Kind::Lattice: return "lattice";
    case Kind::StandardQ: return "std:" + q.str();
    case Kind::PQ: return "pq:" + p.str() + "," + q.str();
    case Kind::Extension: return "ext:" + q.str() + "," + p.str() + "," + std::to_string(target_size);
    case Kind::Dual: return "dual(" + inner->str() + ")";
  }
  return "?";
}

// ---------------------------------------------------------------- helpers

namespace {

cplx phase_conj(cplx z) {
  const double a = std::abs(z);
  return a == 0.0 ? cplx(0.0) : std::conj(z) / a;
}

Budget inner_budget(const Budget& b) {
  Budget out = b;
  out.restarts = std::max(4, b.restarts / 8);
  out.iters = std::min(b.iters, 200);
  return out;
}

LevelNormResult min_norm(const cmat& X, const rvec& w, const Exponent& r) {
  LevelNormResult out;
  out.method = "closed:min";
  out.certified = true;
  out.support = cmat::Zero(X.rows(), X.cols());
  Eigen::Index best = 0;
  out.value = -1.0;
  for (Eigen::Index i = 0; i < X.cols(); ++i) {
    const double v = lp::norm(X.col(i), w, r);
    if (v > out.value) {
      out.value = v;
      best = i;
    }
  }
  out.support.col(best) = lp::norming(X.col(best), w, r);
  return out;
}

// argmax index per point, lowest index on ties
std::vector<int> greedy_assignment(const cmat& X) {
  std::vector<int> a(static_cast<std::size_t>(X.rows()), 0);
  for (Eigen::Index t = 0; t < X.rows(); ++t) {
    double best = -1.0;
    for (Eigen::Index i = 0; i < X.cols(); ++i) {
      const double v = std::abs(X(t, i));
      if (v > best) {
        best = v;
        a[static_cast<std::size_t>(t)] = static_cast<int>(i);
      }
    }
  }
  return a;
}

LevelNormResult lattice_norm(const cmat& X, const rvec& w, const Exponent& r) {
  LevelNormResult out;
  out.method = "closed:lattice";
  out.certified = true;
  const rvec v = X.cwiseAbs().rowwise().maxCoeff();
  out.value = lp::norm(v, w, r);
  const cvec h = lp::norming(v.cast<cplx>(), w, r);
  const auto arg = greedy_assignment(X);
  out.support = cmat::Zero(X.rows(), X.cols());
  for (Eigen::Index t = 0; t < X.rows(); ++t) {
    const int i = arg[static_cast<std::size_t>(t)];
    out.support(t, i) = h(t) * phase_conj(X(t, i));
  }
  return out;
}

double assignment_value(const cmat& X, const rvec& w, const Exponent& r, const Exponent& q,
                        const std::vector<int>& a) {
  const Eigen::Index n = X.cols();
  rvec parts(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    cvec masked = cvec::Zero(X.rows());
    for (Eigen::Index t = 0; t < X.rows(); ++t)
      if (a[static_cast<std::size_t>(t)] == i) masked(t) = X(t, i);
    parts(i) = lp::norm(masked, w, r);
  }
  return lp::seq_norm(parts, q);
}

cmat assignment_support(const cmat& X, const rvec& w, const Exponent& r, const Exponent& q,
                        const std::vector<int>& a) {
  const Eigen::Index n = X.cols();
  cmat masked = cmat::Zero(X.rows(), n);
  for (Eigen::Index t = 0; t < X.rows(); ++t) {
    const int i = a[static_cast<std::size_t>(t)];
    masked(t, i) = X(t, i);
  }
  cvec parts(n);
  for (Eigen::Index i = 0; i < n; ++i) parts(i) = lp::norm(masked.col(i), w, r);
  const cvec beta = lp::seq_norming(parts, q);
  cmat psi(X.rows(), n);
  for (Eigen::Index i = 0; i < n; ++i) psi.col(i) = beta(i) * lp::norming(masked.col(i), w, r);
  return psi;
}

// Dual tuple for (1,q) on L^1 attaining the assignment value: unimodular
// on each part, zero elsewhere, scaled by the l^{q'} weights.
cmat assignment_lambda(const cmat& X, const std::vector<int>& a) {
  cmat lam = cmat::Zero(X.rows(), X.cols());
  for (Eigen::Index t = 0; t < X.rows(); ++t) {
    const int i = a[static_cast<std::size_t>(t)];
    lam(t, i) = phase_conj(X(t, i));
    if (lam(t, i) == cplx(0.0)) lam(t, i) = 1.0;
  }
  return lam;
}

struct Enumerated {
  std::vector<int> best;
  double value = 0.0;
  bool exhaustive = false;
};

Enumerated enumerate_assignments(const cmat& X, const rvec& w, const Exponent& r, const Exponent& q,
                                 std::int64_t cap) {
  const Eigen::Index m = X.rows();
  const Eigen::Index n = X.cols();
  Enumerated out;
  double count = std::pow(static_cast<double>(n), static_cast<double>(m));
  if (count <= static_cast<double>(cap)) {
    out.exhaustive = true;
    const double rv = r.value();
    const double qr = q.value() / rv;
    rmat a(m, n);
    for (Eigen::Index t = 0; t < m; ++t)
      for (Eigen::Index i = 0; i < n; ++i) a(t, i) = std::pow(std::abs(X(t, i)), rv) * w(t);
    std::vector<int> cur(static_cast<std::size_t>(m), 0);
    rvec sums(n);
    double best = -1.0;
    while (true) {
      sums.setZero();
      for (Eigen::Index t = 0; t < m; ++t) sums(cur[static_cast<std::size_t>(t)]) += a(t, cur[static_cast<std::size_t>(t)]);
      double v = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) v += std::pow(sums(i), qr);
      if (v > best) {
        best = v;
        out.best = cur;
      }
      Eigen::Index k = 0;
      while (k < m && ++cur[static_cast<std::size_t>(k)] == n) cur[static_cast<std::size_t>(k++)] = 0;
      if (k == m) break;
    }
    out.value = assignment_value(X, w, r, q, out.best);
    return out;
  }
  // greedy start, then single-point moves until no improvement
  out.best = greedy_assignment(X);
  out.value = assignment_value(X, w, r, q, out.best);
  bool improved = true;
  while (improved) {
    improved = false;
    for (Eigen::Index t = 0; t < m; ++t) {
      for (int i = 0; i < n; ++i) {
        const int old = out.best[static_cast<std::size_t>(t)];
        if (i == old) continue;
        out.best[static_cast<std::size_t>(t)] = i;
        const double v = assignment_value(X, w, r, q, out.best);
        if (v > out.value * (1.0 + 1e-14)) {
          out.value = v;
          improved = true;
        } else {
          out.best[static_cast<std::size_t>(t)] = old;
        }
      }
    }
  }
  return out;
}

LevelNormResult standard_raw(const cmat& X, const rvec& w, const Exponent& r, const Exponent& q,
                             const Budget& budget) {
  require(!q.is_inf(), ErrorKind::SpecMismatch, "std:q requires q < inf");
  require(r <= q, ErrorKind::SpecMismatch, "std:q requires base exponent <= q");
  LevelNormResult out;
  const Enumerated e = enumerate_assignments(X, w, r, q, budget.enum_cap);
  out.value = e.value;
  out.certified = e.exhaustive;
  out.method = e.exhaustive ? "enumeration" : "greedy+local-search";
  out.partition = e.best;
  out.support = assignment_support(X, w, r, q, e.best);
  if (q == r) {
    const double g = assignment_value(X, w, r, q, greedy_assignment(X));
    out.greedy_matches = std::abs(g - out.value) <= 1e-12 * std::max(1.0, out.value);
  }
  return out;
}

// ---- (p,q) machinery

struct PqContext {
  const cmat& X;
  const rvec& w;
  Exponent r, rc, p, q;
  const Budget& budget;
};

// value f(lambda)/mu(lambda) and the associated support
LevelNormResult pq_from_lambda(const PqContext& c, const cmat& lambda, const std::string& method) {
  LevelNormResult out;
  out.method = method;
  const SummingEstimate me = detail::mu_raw(lambda, c.w, c.rc, c.p, c.budget);
  const Eigen::Index n = c.X.cols();
  cvec s(n);
  for (Eigen::Index i = 0; i < n; ++i) s(i) = lp::pair(c.X.col(i), lambda.col(i), c.w);
  const double f = lp::seq_norm(s, c.q);
  if (!(me.value > 0.0)) {
    out.lambda = cmat::Zero(lambda.rows(), n);
    out.support = out.lambda;
    return out;
  }
  out.value = f / me.value;
  out.lambda = lambda / me.value;
  const cvec beta = lp::seq_norming(s, c.q);
  out.support = out.lambda * beta.asDiagonal();
  return out;
}

double pq_objective(const PqContext& c, const cmat& lambda) {
  const Eigen::Index n = c.X.cols();
  cvec s(n);
  for (Eigen::Index i = 0; i < n; ++i) s(i) = lp::pair(c.X.col(i), lambda.col(i), c.w);
  return lp::seq_norm(s, c.q);
}

std::vector<cvec> beta_starts(Eigen::Index n, const Exponent& q, Rng& rng, int randoms, bool real) {
  std::vector<cvec> out;
  out.push_back(cvec::Ones(n) / lp::seq_norm(cvec::Ones(n), q.conjugate()));
  for (Eigen::Index k = 0; k < n; ++k) out.push_back(cvec::Unit(n, k));
  for (int r = 0; r < randoms; ++r) {
    cvec b = random_matrix(rng, n, 1, real).col(0);
    out.push_back(b / lp::seq_norm(b, q.conjugate()));
  }
  return out;
}

// Alternating maximization of Re sum_i beta_i <x_i, lambda_i> over the l^{q'}
// ball and the mu_{p,n} ball, when the lambda step has a closed form.
template <class LambdaStep>
LevelNormResult pq_alternating(const PqContext& c, LambdaStep step, const std::string& method) {
  const Eigen::Index n = c.X.cols();
  const bool real = real_field(c.budget, is_real(c.X));
  Rng rng = make_rng(c.budget.seed, 0xa17);
  const auto starts = beta_starts(n, c.q, rng, std::max(0, c.budget.restarts / 4), real);
  cmat best_lambda;
  double best = -1.0;
  for (const cvec& b0 : starts) {
    cvec beta = b0;
    cmat lambda = step(beta);
    double val = pq_objective(c, lambda);
    for (int it = 0; it < c.budget.iters; ++it) {
      cvec s(n);
      for (Eigen::Index i = 0; i < n; ++i) s(i) = lp::pair(c.X.col(i), lambda.col(i), c.w);
      beta = lp::seq_norming(s, c.q);
      if (beta.squaredNorm() == 0.0) break;
      const cmat nl = step(beta);
      const double nv = pq_objective(c, nl);
      const bool done = nv <= val * (1.0 + c.budget.tol);
      if (nv > val) {
        val = nv;
        lambda = nl;
      }
      if (done) break;
    }
    if (val > best) {
      best = val;
      best_lambda = lambda;
    }
  }
  return pq_from_lambda(c, best_lambda, method);
}

LevelNormResult pq_alternating_l1(const PqContext& c) {
  const Exponent pc = c.p.conjugate();
  auto step = [&](const cvec& beta) {
    cmat lam(c.X.rows(), c.X.cols());
    for (Eigen::Index t = 0; t < c.X.rows(); ++t) {
      const cvec u = c.X.row(t).transpose().cwiseProduct(beta);
      lam.row(t) = lp::seq_norming(u, pc).transpose();
    }
    return lam;
  };
  return pq_alternating(c, step, "alternating:l1");
}

LevelNormResult pq_alternating_l2(const PqContext& c) {
  const rvec sw = c.w.cwiseSqrt();
  const bool real = real_field(c.budget, is_real(c.X));
  auto step = [&](const cvec& beta) {
    const cmat Y = sw.asDiagonal() * c.X * beta.asDiagonal();
    cmat polar;
    if (real && is_real(Y)) {
      Eigen::JacobiSVD<rmat> svd(Y.real(), Eigen::ComputeThinU | Eigen::ComputeThinV);
      polar = (svd.matrixU() * svd.matrixV().transpose()).cast<cplx>();
    } else {
      Eigen::JacobiSVD<cmat> svd(Y, Eigen::ComputeThinU | Eigen::ComputeThinV);
      polar = (svd.matrixU() * svd.matrixV().adjoint()).conjugate();
    }
    return cmat(sw.cwiseInverse().asDiagonal() * polar);
  };
  return pq_alternating(c, step, "alternating:l2-polar");
}

LevelNormResult pq_generic(const PqContext& c, std::vector<cmat> extra_seeds) {
  const Eigen::Index m = c.X.rows();
  const Eigen::Index n = c.X.cols();
  const bool real = real_field(c.budget, is_real(c.X));
  const auto vertices = detail::dual_ball_vertices(c.w, c.rc, real, c.budget);

  AscentProblem prob;
  prob.weights = c.w;
  prob.real = real;
  prob.salt = 0x7071;
  prob.f = [&](const cmat& lam) {
    cvec s(n);
    for (Eigen::Index i = 0; i < n; ++i) s(i) = lp::pair(c.X.col(i), lam.col(i), c.w);
    const cvec beta = lp::seq_norming(s, c.q);
    return Eval{lp::seq_norm(s, c.q), c.X * beta.asDiagonal()};
  };
  // Inner estimates only steer the ascent; pq_from_lambda re-evaluates at the full budget.
  Budget inner = c.budget;
  inner.restarts = std::min(inner.restarts, 6);
  inner.iters = std::min(inner.iters, 60);
  prob.g = [&](const cmat& lam, double s) {
    if (vertices) return detail::mu_vertices(lam, c.w, *vertices, c.p, s);
    const SummingEstimate me = detail::mu_raw(lam, c.w, c.rc, c.p, inner);
    return Eval{me.value, me.support};
  };
  if (vertices) prob.ladder = {8.0, 32.0, 128.0};

  cmat norming_cols(m, n);
  for (Eigen::Index i = 0; i < n; ++i) norming_cols.col(i) = lp::norming(c.X.col(i), c.w, c.r);
  prob.seeds.push_back(norming_cols);
  prob.seeds.push_back(lattice_norm(c.X, c.w, c.r).support);
  for (Eigen::Index k = 0; k < n && k < 4; ++k) {
    cmat one = cmat::Zero(m, n);
    one.col(k) = norming_cols.col(k);
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != k) one.col(i) = 0.05 * norming_cols.col(i);
    prob.seeds.push_back(one);
  }
  for (auto& s : extra_seeds) prob.seeds.push_back(std::move(s));
  if (real)
    for (auto& s : prob.seeds) s = s.real().cast<cplx>();

  const AscentResult res = ratio_ascent(prob, c.budget);
  return pq_from_lambda(c, res.arg, "ratio-ascent");
}

// Real data over a base whose dual ball has finitely many vertices: the
// lambda step is a convex program solved by detail::mu_ball_lmo.
LevelNormResult pq_alternating_vertices(const PqContext& c, const rmat& Z) {
  const rmat Xr = c.X.real();
  auto step = [&](const cvec& beta) {
    const rmat G = c.w.asDiagonal() * Xr * beta.real().asDiagonal();
    return cmat(detail::mu_ball_lmo(G, c.w, Z, c.p, 1e-6).cast<cplx>());
  };
  return pq_alternating(c, step, "alternating:vertex-lmo");
}

// Real data with p = 1: the mu_1 ball is cut out by one constraint per sign vector.
LevelNormResult pq_alternating_signs(const PqContext& c) {
  const rmat Xr = c.X.real();
  auto step = [&](const cvec& beta) {
    const rmat G = c.w.asDiagonal() * Xr * beta.real().asDiagonal();
    return cmat(detail::sign_ball_lmo(G, c.w, c.rc, 1e-6).cast<cplx>());
  };
  return pq_alternating(c, step, "alternating:sign-lmo");
}

// p > 1 without a finite description of the ball: cutting planes.
LevelNormResult pq_alternating_cuts(const PqContext& c) {
  const rmat Xr = c.X.real();
  std::vector<rvec> pool;
  auto step = [&](const cvec& beta) {
    const rmat G = c.w.asDiagonal() * Xr * beta.real().asDiagonal();
    return cmat(detail::cut_ball_lmo(G, c.w, c.rc, c.p, 1e-5, c.budget, &pool).cast<cplx>());
  };
  return pq_alternating(c, step, "alternating:cut-lmo");
}

constexpr Eigen::Index kSignLmoMaxLength = 10;

// Best optimizer available for the base; never a closed form.
LevelNormResult pq_optimizer(const PqContext& c) {
  if (c.r.is_one()) return pq_alternating_l1(c);
  if (c.r.is_two() && c.p.is_two()) return pq_alternating_l2(c);
  const bool real = real_field(c.budget, is_real(c.X));
  const auto vertices = real ? detail::dual_ball_vertices(c.w, c.rc, real, c.budget) : std::nullopt;
  const bool signs = real && !vertices && c.p.is_one() && c.X.cols() <= kSignLmoMaxLength;
  const bool cuts = real && !vertices && !c.p.is_one() && !c.rc.is_inf();
  if (!vertices && !signs && !cuts) return pq_generic(c, {});
  LevelNormResult alt = vertices ? pq_alternating_vertices(c, vertices->real())
                        : signs  ? pq_alternating_signs(c)
                                 : pq_alternating_cuts(c);
  Budget polish = c.budget;
  polish.restarts = std::max(2, c.budget.restarts / 16);
  const PqContext cp{c.X, c.w, c.r, c.rc, c.p, c.q, polish};
  LevelNormResult gen = pq_generic(cp, {alt.lambda});
  // the polish normalised with its own, smaller budget
  gen = pq_from_lambda(c, gen.lambda, gen.method);
  return gen.value > alt.value ? gen : alt;
}

LevelNormResult level_one(const cmat& X, const rvec& w, const Exponent& r) {
  LevelNormResult out = min_norm(X, w, r);
  out.method = "level-1";
  out.lambda = out.support;
  return out;
}

LevelNormResult pq_raw(const cmat& X, const rvec& w, const Exponent& r, const Exponent& p, const Exponent& q,
                       const Budget& budget) {
  require(!q.is_inf() && p <= q, ErrorKind::SpecMismatch, "pq:p,q requires 1 <= p <= q < inf");
  if (X.cols() == 1) return level_one(X, w, r);
  const PqContext c{X, w, r, r.conjugate(), p, q, budget};
  if (r.is_one() && p.is_one() && q.is_one()) {
    // the maximum multi-norm; on L^1 it is the lattice norm
    LevelNormResult out = pq_from_lambda(c, assignment_lambda(X, greedy_assignment(X)), "closed:l1-lattice");
    out.value = lattice_norm(X, w, r).value;
    out.certified = true;
    return out;
  }
  if (r.is_one() && p.is_one()) {
    // on L^1 the (1,q) norm is the standard q-multi-norm
    const Enumerated e = enumerate_assignments(X, w, r, q, budget.enum_cap);
    LevelNormResult out = pq_from_lambda(c, assignment_lambda(X, e.best), e.exhaustive ? "closed:l1-partition" : "l1-partition-local");
    out.certified = e.exhaustive;
    out.partition = e.best;
    return out;
  }
  return pq_optimizer(c);
}

LevelNormResult multi_norm_raw(const MultiNormSpec& spec, const cmat& X, const rvec& w, const Exponent& r,
                               const Budget& budget);

LevelNormResult dual_level_raw(const MultiNormSpec& spec, const cmat& L, const rvec& w, const Exponent& s,
                               const Budget& budget);

LevelNormResult extension_raw(const Exponent& q, const Exponent& P, int N, const cmat& X, const rvec& w,
                              const Exponent& r, const Budget& budget);

LevelNormResult multi_norm_raw(const MultiNormSpec& spec, const cmat& X, const rvec& w, const Exponent& r,
                               const Budget& budget) {
  require(X.cols() >= 1, ErrorKind::InvalidInput, "multi_norm: empty tuple");
  using K = MultiNormSpec::Kind;
  switch (spec.kind) {
    case K::Min: return min_norm(X, w, r);
    case K::Lattice: return lattice_norm(X, w, r);
    case K::StandardQ: return standard_raw(X, w, r, spec.q, budget);
    case K::Max: {
      if (r.is_one()) {
        // on L^1 the maximum is the lattice norm; witness is the greedy unimodular tuple
        const PqContext c{X, w, r, r.conjugate(), Exponent(1), Exponent(1), budget};
        const auto a = greedy_assignment(X);
        LevelNormResult out = pq_from_lambda(c, assignment_lambda(X, a), "closed:l1-lattice");
        out.value = lattice_norm(X, w, r).value;
        out.certified = true;
        return out;
      }
      LevelNormResult out = pq_raw(X, w, r, Exponent(1), Exponent(1), budget);
      return out;
    }
    case K::PQ: return pq_raw(X, w, r, spec.p, spec.q, budget);
    case K::Extension: return extension_raw(spec.q, spec.p, spec.target_size, X, w, r, budget);
    case K::Dual: return dual_level_raw(*spec.inner, X, w, r, budget);
  }
  throw Error(ErrorKind::SpecMismatch, "unknown spec");
}

LevelNormResult dual_level_raw(const MultiNormSpec& spec, const cmat& L, const rvec& w, const Exponent& s,
                               const Budget& budget) {
  require(L.cols() >= 1, ErrorKind::InvalidInput, "dual_level_norm: empty tuple");
  using K = MultiNormSpec::Kind;
  const Exponent r = s.conjugate();  // exponent of the predual carrying the inner norm
  const Eigen::Index m = L.rows();
  const Eigen::Index n = L.cols();
  LevelNormResult out;
  // supports here are tuples in the predual L^r
  if (spec.kind == K::Min) {
    out.method = "closed:sum";
    out.certified = true;
    out.support = cmat(m, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      out.value += lp::norm(L.col(i), w, s);
      out.support.col(i) = lp::norming(L.col(i), w, s);
    }
    return out;
  }
  if (spec.kind == K::Max) {
    const SummingEstimate me = detail::mu_raw(L, w, s, Exponent(1), budget);
    out.method = "closed:mu1/" + me.method;
    out.certified = me.certified;
    out.value = me.value;
    out.support = me.support;
    return out;
  }
  if (spec.kind == K::Lattice) {
    const rvec h = L.cwiseAbs().rowwise().sum();
    const cvec g = lp::norming(h.cast<cplx>(), w, s);
    out.method = "closed:sum-of-moduli";
    out.certified = true;
    out.value = lp::norm(h, w, s);
    out.support = cmat(m, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index t = 0; t < m; ++t) out.support(t, i) = g(t) * phase_conj(L(t, i));
    return out;
  }
  // generic: maximize |sum <x_i, lambda_i>| / ||x||_spec over x in (L^r)^n
  const bool real = real_field(budget, is_real(L));
  const Budget inner = inner_budget(budget);
  AscentProblem prob;
  prob.weights = w;
  prob.real = real;
  prob.salt = 0xd0a1;
  prob.f = [&](const cmat& Z) {
    cplx acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) acc += lp::pair(Z.col(i), L.col(i), w);
    return Eval{std::abs(acc), phase_conj(acc) * L};
  };
  prob.g = [&](const cmat& Z, double) {
    const LevelNormResult gr = multi_norm_raw(spec, Z, w, r, inner);
    return Eval{gr.value, gr.support};
  };
  cmat seed(m, n);
  for (Eigen::Index i = 0; i < n; ++i) seed.col(i) = lp::norming(L.col(i), w, s);
  prob.seeds.push_back(seed);
  prob.seeds.push_back(lattice_norm(L, w, s).support);
  Budget outer = budget;
  outer.restarts = std::max(4, budget.restarts / 4);
  const AscentResult res = ratio_ascent(prob, outer);
  const LevelNormResult gr = multi_norm_raw(spec, res.arg, w, r, inner);
  out.method = "ratio-ascent";
  out.certified = false;
  cplx acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) acc += lp::pair(res.arg.col(i), L.col(i), w);
  out.value = gr.value > 0.0 ? std::abs(acc) / gr.value : 0.0;
  out.support = gr.value > 0.0 ? cmat(phase_conj(acc) * res.arg / gr.value) : cmat::Zero(m, n);
  return out;
}

cmat apply_rows(const cmat& T, const cmat& X, const rvec& w) { return T * w.asDiagonal() * X; }

LevelNormResult extension_raw(const Exponent& q, const Exponent& P, int N, const cmat& X, const rvec& w,
                              const Exponent& r, const Budget& budget) {
  const Eigen::Index n = X.cols();
  const Eigen::Index m = X.rows();
  require(N >= n, ErrorKind::InvalidInput, "extension_norm: target size must be >= tuple length");
  require(!q.is_inf() && P <= q, ErrorKind::SpecMismatch, "extension_norm: requires target p <= q < inf");
  const rvec ones = rvec::Ones(N);
  LevelNormResult out;
  out.method = "extension";

  // operators are stored as row functionals: (Tx)_k = <x, row_k> = sum_t T(k,t) x(t) w(t)
  auto route_value = [&](const cmat& rowsT, double& opn) {
    const cmat matrix = rowsT * w.asDiagonal();
    opn = operator_norm_upper(matrix, w, r, ones, P, budget);
    if (!(opn > 0.0)) return 0.0;
    const cmat Y = apply_rows(rowsT, X, w);
    return standard_raw(Y, ones, P, q, budget).value / opn;
  };

  // witness from the (P,q) norm: rows are the maximizing functionals
  const LevelNormResult base = pq_raw(X, w, r, P, q, budget);
  cmat W = cmat::Zero(N, m);
  W.topRows(n) = base.lambda.transpose();
  // the witness maps x to (<x, lambda_i>)_i on disjoint unit atoms, so its norm
  // is mu_P of its rows, the same estimate that normalised the (P,q) value
  double wn = detail::mu_raw(base.lambda, w, r.conjugate(), P, budget).value;
  if (wn > 0.0) out.witness_route = standard_raw(apply_rows(W, X, w), ones, P, q, budget).value / wn;
  out.value = out.witness_route;
  out.op = W;
  out.op_norm = wn;

  Rng rng = make_rng(budget.seed, 0xe47);
  const bool real = real_field(budget, is_real(X));
  for (int k = 0; k < 32; ++k) {
    const cmat R = random_matrix(rng, N, m, real);
    double rn = 0.0;
    const double v = route_value(R, rn);
    out.random_route = std::max(out.random_route, v);
    if (v > out.value) {
      out.value = v;
      out.op = R;
      out.op_norm = rn;
    }
  }
  // support through the best operator: psi_i = T'(phi_i)
  const cmat Y = apply_rows(out.op, X, w);
  const LevelNormResult sr = standard_raw(Y, ones, P, q, budget);
  out.support = out.op.transpose() * sr.support / out.op_norm;
  out.certified = false;
  return out;
}

}  // namespace

// ---------------------------------------------------------------- public

LevelNormResult multi_norm(const MultiNormSpec& spec, const VectorTuple& t, const Budget& budget) {
  return multi_norm_raw(spec, t.entries, t.space.weights(), t.p, budget);
}

LevelNormResult standard_q_norm(const Exponent& q, const VectorTuple& t, const Budget& budget) {
  return standard_raw(t.entries, t.space.weights(), t.p, q, budget);
}

LevelNormResult dual_level_norm(const MultiNormSpec& spec, const VectorTuple& dual_tuple, const Budget& budget) {
  return dual_level_raw(spec, dual_tuple.entries, dual_tuple.space.weights(), dual_tuple.p, budget);
}

LevelNormResult extension_norm(const Exponent& q, const Exponent& target_p, int target_size, const VectorTuple& t,
                               const Budget& budget) {
  return extension_raw(q, target_p, target_size, t.entries, t.space.weights(), t.p, budget);
}

LevelNormResult pq_norm_ascent(const Exponent& p, const Exponent& q, const VectorTuple& t, const Budget& budget) {
  require(!q.is_inf() && p <= q, ErrorKind::SpecMismatch, "pq:p,q requires 1 <= p <= q < inf");
  const PqContext c{t.entries, t.space.weights(), t.p, t.p.conjugate(), p, q, budget};
  if (t.length() == 1) return level_one(c.X, c.w, c.r);
  return pq_optimizer(c);
}

LevelNormResult max_norm_ascent(const VectorTuple& t, const Budget& budget) {
  return pq_norm_ascent(Exponent(1), Exponent(1), t, budget);
}

double partition_value(const Exponent& q, const VectorTuple& t, const std::vector<int>& assignment) {
  require(static_cast<int>(assignment.size()) == t.dim(), ErrorKind::InvalidInput, "partition: wrong length");
  for (int a : assignment)
    require(a >= 0 && a < t.length(), ErrorKind::InvalidInput, "partition: part index out of range");
  return assignment_value(t.entries, t.space.weights(), t.p, q, assignment);
}

double reevaluate(const MultiNormSpec& spec, const VectorTuple& t, const LevelNormResult& r, const Budget& budget) {
  using K = MultiNormSpec::Kind;
  const cmat& X = t.entries;
  const rvec& w = t.space.weights();
  if (spec.kind == K::StandardQ && !r.partition.empty()) return partition_value(spec.q, t, r.partition);
  if ((spec.kind == K::PQ || spec.kind == K::Max) && r.lambda.size() > 0) {
    const Exponent p = spec.kind == K::Max ? Exponent(1) : spec.p;
    const Exponent q = spec.kind == K::Max ? Exponent(1) : spec.q;
    const PqContext c{X, w, t.p, t.p.conjugate(), p, q, budget};
    return pq_from_lambda(c, r.lambda, "").value;
  }
  if (spec.kind == K::Extension && r.op.size() > 0) {
    const rvec ones = rvec::Ones(spec.target_size);
    const cmat Y = apply_rows(r.op, X, w);
    return standard_raw(Y, ones, spec.p, spec.q, budget).value / r.op_norm;
  }
  double acc = 0.0;
  for (int i = 0; i < t.length(); ++i) acc += lp::pair(X.col(i), r.support.col(i), w).real();
  if (spec.kind == K::Dual) return std::abs(acc);
  return acc;
}

bool AxiomReport::pass() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.pass; });
}

AxiomReport axiom_report(const MultiNormSpec& spec, const Space& base, const Exponent& base_p, int trials,
                         std::uint64_t seed, const Budget& budget, int max_n) {
  require(trials >= 1, ErrorKind::InvalidInput, "axiom_report: trials must be >= 1");
  AxiomReport rep;
  rep.spec = spec.str();
  const bool dual = spec.is_dual();
  std::vector<AxiomResult> ax(4);
  ax[0].axiom = "A1";
  ax[1].axiom = "A2";
  ax[2].axiom = "A3";
  ax[3].axiom = dual ? "B4" : "A4";
  bool all_certified = true;
  Rng rng = make_rng(seed, 0xa110);
  std::uniform_int_distribution<int> pick_n(2, std::max(2, max_n));
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const rvec& w = base.weights();

  auto eval = [&](const cmat& X) {
    const LevelNormResult r = multi_norm_raw(spec, X, w, base_p, budget);
    all_certified = all_certified && r.certified;
    return r.value;
  };
  auto rel = [](double lhs, double rhs) { return (lhs - rhs) / std::max(1.0, std::abs(rhs)); };

  for (int trial = 0; trial < trials; ++trial) {
    const int n = pick_n(rng);
    const cmat X = random_matrix(rng, base.size(), n, true);
    const double v = eval(X);

    // A1
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    cmat Xp(X.rows(), n);
    for (int i = 0; i < n; ++i) Xp.col(i) = X.col(perm[static_cast<std::size_t>(i)]);
    ax[0].worst_slack = std::max(ax[0].worst_slack, std::abs(rel(eval(Xp), v)));

    // A2
    rvec alpha(n);
    for (int i = 0; i < n; ++i) alpha(i) = unit(rng);
    const double amax = alpha.cwiseAbs().maxCoeff();
    const cmat Xa = X * alpha.cast<cplx>().asDiagonal();
    ax[1].worst_slack = std::max(ax[1].worst_slack, rel(eval(Xa), amax * v));

    // A3: appended zero
    const cmat Xs = X.leftCols(n - 1);
    const double vs = eval(Xs);
    cmat Xz(X.rows(), n);
    Xz << Xs, cmat::Zero(X.rows(), 1);
    ax[2].worst_slack = std::max(ax[2].worst_slack, std::abs(rel(eval(Xz), vs)));

    // A4 / B4: duplicate the last entry of Xs
    cmat Xd(X.rows(), n);
    Xd << Xs, Xs.col(n - 2);
    if (!dual) {
      ax[3].worst_slack = std::max(ax[3].worst_slack, std::abs(rel(eval(Xd), vs)));
    } else {
      cmat Xt = Xs;
      Xt.col(n - 2) *= 2.0;
      ax[3].worst_slack = std::max(ax[3].worst_slack, std::abs(rel(eval(Xd), eval(Xt))));
    }
  }
  const double tol = all_certified ? 1e-10 : 5e-3;
  for (auto& a : ax) {
    a.tolerance = tol;
    a.worst_slack = std::max(a.worst_slack, 0.0);
    a.pass = a.worst_slack < tol;
  }
  rep.axioms = std::move(ax);
  return rep;
}

}  // namespace multinorm
