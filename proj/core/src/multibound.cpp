#include "multinorm/multibound.hpp"

#include <algorithm>
#include <cmath>

#include "multinorm/ascent.hpp"
#include "multinorm/error.hpp"

namespace multinorm {

MultiBoundResult multi_bound_set(const MultiNormSpec& spec, const std::vector<LpVector>& B, const Budget& budget) {
  require(!B.empty(), ErrorKind::InvalidInput, "multi_bound_set: empty set");
  std::vector<LpVector> distinct;
  for (const auto& b : B) {
    require(b.space == B[0].space && b.p == B[0].p, ErrorKind::InvalidInput,
            "multi_bound_set: elements must share a space");
    const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                  [&](const LpVector& d) { return d.coords == b.coords; });
    if (!seen) distinct.push_back(b);
  }
  MultiBoundResult out;
  out.level = multi_norm(spec, VectorTuple::from_vectors(distinct), budget);
  out.value = out.level.value;
  out.certified = out.level.certified;
  out.collapse_length = static_cast<int>(distinct.size());
  out.method = "distinct-tuple/" + out.level.method;
  return out;
}

double multi_bound_bruteforce(const MultiNormSpec& spec, const std::vector<LpVector>& B, int K,
                              const Budget& budget) {
  require(!B.empty() && K >= 1, ErrorKind::InvalidInput, "multi_bound_bruteforce: bad arguments");
  const int m = static_cast<int>(B.size());
  std::vector<int> idx(static_cast<std::size_t>(K), 0);
  double best = 0.0;
  while (true) {
    std::vector<LpVector> tup;
    for (int i : idx) tup.push_back(B[static_cast<std::size_t>(i)]);
    best = std::max(best, multi_norm(spec, VectorTuple::from_vectors(tup), budget).value);
    int k = 0;
    while (k < K && ++idx[static_cast<std::size_t>(k)] == m) idx[static_cast<std::size_t>(k++)] = 0;
    if (k == K) break;
  }
  return best;
}

namespace {

bool has_closed_dual(const MultiNormSpec& s) {
  using K = MultiNormSpec::Kind;
  return s.kind == K::Min || s.kind == K::Max || s.kind == K::Lattice;
}

}  // namespace

MultiBoundResult mb_operator_norm(const MultiNormSpec& spec_dom, const MultiNormSpec& spec_cod, const LinearMap& T,
                                  int k_max, const Budget& budget) {
  require(k_max >= 1, ErrorKind::InvalidInput, "mb_operator_norm: k_max must be >= 1");
  const Eigen::Index m = T.dom.size();
  const rvec& wd = T.dom.weights();
  const cmat& A = T.matrix;
  const cmat At = adjoint_matrix(A, wd, T.cod.weights());
  const bool real = real_field(budget, is_real(A));

  MultiBoundResult out;
  out.witness = cmat::Zero(m, 1);
  out.collapse_length = 1;
  if (A.cwiseAbs().maxCoeff() == 0.0) {
    out.method = "zero";
    out.certified = true;
    return out;
  }

  auto cod_eval = [&](const cmat& X) {
    return multi_norm(spec_cod, VectorTuple(T.cod, T.b, A * X), budget);
  };
  auto dom_eval = [&](const cmat& X) { return multi_norm(spec_dom, VectorTuple(T.dom, T.a, X), budget); };

  cmat prev;
  for (int k = 1; k <= k_max; ++k) {
    Rng rng = make_rng(budget.seed, 0x6d62ULL * 131ULL + static_cast<std::uint64_t>(k));
    std::vector<cmat> seeds;
    for (Eigen::Index j = 0; j < m && static_cast<int>(seeds.size()) < 8; ++j) {
      cmat s = cmat::Zero(m, k);
      for (int i = 0; i < k; ++i) s((j + i) % m, i) = 1.0;
      seeds.push_back(s);
    }
    if (prev.size() > 0) {
      for (Eigen::Index j = 0; j < std::min<Eigen::Index>(m, 4); ++j) {
        cmat s(m, k);
        s.leftCols(k - 1) = prev;
        s.col(k - 1) = cvec::Unit(m, j);
        seeds.push_back(s);
      }
    }
    double best = 0.0;
    cmat best_x;
    if (has_closed_dual(spec_dom)) {
      // generalized power iteration: codomain support, then the domain LMO
      const int randoms = std::max(1, budget.restarts / 2);
      for (int r = 0; r < randoms; ++r) seeds.push_back(random_matrix(rng, m, k, real));
      for (const cmat& s0 : seeds) {
        const LevelNormResult d0 = dom_eval(s0);
        if (!(d0.value > 0.0)) continue;
        cmat x = s0 / d0.value;
        double val = cod_eval(x).value;
        for (int it = 0; it < budget.iters; ++it) {
          const LevelNormResult c = cod_eval(x);
          const cmat g = At * c.support;
          const LevelNormResult lmo = dual_level_norm(spec_dom, VectorTuple(T.dom, T.a.conjugate(), g), budget);
          const cmat xn = lmo.support;
          const double dn = dom_eval(xn).value;
          if (!(dn > 0.0)) break;
          const double vn = cod_eval(xn).value / dn;
          const bool done = vn <= val * (1.0 + budget.tol);
          if (vn > val) {
            val = vn;
            x = xn / dn;
          }
          if (done) break;
        }
        if (val > best) {
          best = val;
          best_x = x;
        }
      }
      out.method = "power";
    }
    {
      // ratio ascent (always run for other domains; also polishes)
      AscentProblem prob;
      prob.weights = wd;
      prob.real = real;
      prob.salt = 0x6d63ULL * 131ULL + static_cast<std::uint64_t>(k);
      prob.f = [&](const cmat& X) {
        const LevelNormResult c = cod_eval(X);
        return Eval{c.value, At * c.support};
      };
      prob.g = [&](const cmat& X, double) {
        const LevelNormResult d = dom_eval(X);
        return Eval{d.value, d.support};
      };
      prob.seeds = seeds;
      if (best_x.size() > 0) prob.seeds.insert(prob.seeds.begin(), best_x);
      Budget b = budget;
      if (has_closed_dual(spec_dom)) b.restarts = std::max(2, budget.restarts / 8);
      const AscentResult res = ratio_ascent(prob, b);
      if (res.ratio > best) {
        best = res.ratio;
        best_x = res.arg;
      }
      if (!has_closed_dual(spec_dom)) out.method = "ratio-ascent";
    }
    prev = best_x;
    if (best > out.value) {
      out.value = best;
      out.witness = best_x;
      out.collapse_length = k;
    }
  }
  out.certified = false;
  return out;
}

MultiBoundResult alpha(const Exponent& p, const Exponent& q, const LinearMap& T, const Budget& budget) {
  require(T.a.is_one(), ErrorKind::InvalidInput, "alpha: domain exponent must be 1");
  std::vector<LpVector> cols;
  for (Eigen::Index j = 0; j < T.matrix.cols(); ++j)
    cols.emplace_back(T.cod, T.b, cvec(T.matrix.col(j) / T.dom.weights()(j)));
  return multi_bound_set(MultiNormSpec::pq(p, q), cols, budget);
}

}  // namespace multinorm
