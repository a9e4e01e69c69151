#pragma once

#include <functional>
#include <vector>

#include "multinorm/budget.hpp"

namespace multinorm {

// Value of a 1-homogeneous convex function together with a support element:
// Re sum_{t,i} z(t,i) support(t,i) w(t) = value.
struct Eval {
  double value = 0.0;
  cmat support;
};

using Objective = std::function<Eval(const cmat&)>;
// Smoothed objective family; s <= 0 requests the exact function.
using SmoothObjective = std::function<Eval(const cmat&, double s)>;

struct AscentProblem {
  Objective f;
  SmoothObjective g;
  rvec weights;                 // pairing weights on rows of z
  std::vector<cmat> seeds;
  std::vector<double> ladder;   // smoothing levels, empty when g has no smoothing
  bool real = true;
  std::uint64_t salt = 0;
};

struct AscentResult {
  double ratio = 0.0;
  cmat arg;  // normalized so that g(arg) = 1
};

// Maximizes f/g by normalized gradient steps with backtracking, from the
// seeds, then random starts, then perturbations of the incumbent.
AscentResult ratio_ascent(const AscentProblem& prob, const Budget& budget);

}  // namespace multinorm
