#include "multinorm/ascent.hpp"

#include <algorithm>
#include <cmath>

namespace multinorm {

namespace {

struct Point {
  cmat z;
  Eval f, g;
  double ratio = 0.0;
};

bool evaluate(const AscentProblem& prob, const cmat& z, double s, Point& out) {
  out.g = prob.g(z, s);
  if (!(out.g.value > 0.0) || !std::isfinite(out.g.value)) return false;
  out.z = z / out.g.value;
  out.f = prob.f(out.z);
  out.g.value = 1.0;
  out.ratio = out.f.value;
  return std::isfinite(out.ratio);
}

cmat direction(const AscentProblem& prob, const Point& pt) {
  cmat d = (pt.f.support - pt.ratio * pt.g.support).conjugate();
  d = prob.weights.asDiagonal() * d;
  if (prob.real) d = d.real().cast<cplx>();
  return d;
}

Point climb(const AscentProblem& prob, Point pt, double s, const Budget& budget) {
  double eta = 0.25;
  for (int it = 0; it < budget.iters; ++it) {
    const cmat d = direction(prob, pt);
    const double nd = d.norm();
    if (!(nd > 1e-300)) break;
    const double scale = pt.z.norm() / nd;
    Point cand;
    if (evaluate(prob, pt.z + (eta * scale) * d, s, cand) && cand.ratio > pt.ratio) {
      const bool tiny = cand.ratio - pt.ratio <= budget.tol * std::max(1.0, pt.ratio) && eta < 1e-6;
      pt = std::move(cand);
      eta = std::min(eta * 1.5, 4.0);
      if (tiny) break;
    } else {
      eta *= 0.5;
      if (eta < budget.tol) break;
    }
  }
  return pt;
}

}  // namespace

AscentResult ratio_ascent(const AscentProblem& prob, const Budget& budget) {
  AscentResult best;
  Rng rng = make_rng(budget.seed, 0xa5c3 + prob.salt);
  Eigen::Index rows = 0, cols = 0;
  if (!prob.seeds.empty()) {
    rows = prob.seeds[0].rows();
    cols = prob.seeds[0].cols();
  }

  auto run = [&](const cmat& z0) {
    Point pt;
    bool ok = false;
    cmat z = z0;
    for (double s : prob.ladder) {
      if (!evaluate(prob, z, s, pt)) break;
      pt = climb(prob, pt, s, budget);
      z = pt.z;
    }
    ok = evaluate(prob, z, 0.0, pt);
    if (!ok) return;
    pt = climb(prob, pt, 0.0, budget);
    // ratio under the exact g
    Point exact;
    if (!evaluate(prob, pt.z, 0.0, exact)) return;
    if (exact.ratio > best.ratio || best.arg.size() == 0) {
      best.ratio = exact.ratio;
      best.arg = exact.z;
    }
  };

  int used = 0;
  for (const cmat& s : prob.seeds) {
    run(s);
    ++used;
  }
  const int total = std::max(budget.restarts, used + 1);
  const int perturb = std::max(1, total / 8);
  for (; used < total - perturb; ++used) run(random_matrix(rng, rows, cols, prob.real));
  for (int k = 0; k < perturb && best.arg.size() > 0; ++k) {
    const double amp = 0.3 * std::pow(0.5, k % 4);
    cmat noise = random_matrix(rng, rows, cols, prob.real);
    run(best.arg + amp * (best.arg.norm() / std::max(noise.norm(), 1e-300)) * noise);
  }
  return best;
}

}  // namespace multinorm
