#pragma once

#include <vector>

#include "multinorm/linear_map.hpp"
#include "multinorm/multinorms.hpp"

namespace multinorm {

struct MultiBoundResult {
  double value = 0.0;
  bool certified = false;
  int collapse_length = 0;  // length of the tuple at which the sup is attained
  std::string method;
  LevelNormResult level;   // evaluation at the collapsed tuple (multi_bound_set, alpha)
  cmat witness;            // maximizing tuple (mb_operator_norm)
};

// Multi-bound of a finite set: the level norm of its distinct elements.
MultiBoundResult multi_bound_set(const MultiNormSpec& spec, const std::vector<LpVector>& B, const Budget& budget);

// Sup over k <= k_max of the level-k amplification norms of T.
MultiBoundResult mb_operator_norm(const MultiNormSpec& spec_dom, const MultiNormSpec& spec_cod, const LinearMap& T,
                                  int k_max, const Budget& budget);

// (p,q)-multi-bound of the images T(delta_j / mu(j)) for T on an L^1 domain.
MultiBoundResult alpha(const Exponent& p, const Exponent& q, const LinearMap& T, const Budget& budget);

// Brute force: sup of the level-K norm over all K-tuples drawn from B (K^|B| tuples up to symmetry).
double multi_bound_bruteforce(const MultiNormSpec& spec, const std::vector<LpVector>& B, int K, const Budget& budget);

}  // namespace multinorm
