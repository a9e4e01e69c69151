#pragma once

#include <vector>

#include "multinorm/multinorms.hpp"

namespace multinorm {

// sum_i a_i (x) x_i in l^inf_N (x) L^p(space)
struct TensorElement {
  int N = 0;
  Space space;
  Exponent p;
  std::vector<cvec> a;
  std::vector<cvec> x;

  TensorElement() = default;
  TensorElement(int n_trunc, Space s, Exponent e);
  void add(cvec ai, cvec xi);
  // y_j = sum_i a_i(j) x_i, as the columns of an |space| x N matrix
  cmat coordinates() const;
  VectorTuple as_tuple() const { return VectorTuple(space, p, coordinates()); }
};

LevelNormResult multinorm_tensor_norm(const MultiNormSpec& spec, const TensorElement& tau, const Budget& budget);
LevelNormResult injective_tensor_norm(const TensorElement& tau, const Budget& budget = {});

struct ProjectiveBound {
  double value = 0.0;
  bool certified = false;
  double lower = 0.0;  // max multi-norm lower bound
  std::string method;
};

ProjectiveBound projective_upper_bound(const TensorElement& tau, const Budget& budget);

struct AmplificationResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double norm_T = 0.0;
  bool pass = false;
};

AmplificationResult amplification_check(const MultiNormSpec& spec, const rmat& T, const VectorTuple& t,
                                        const Budget& budget);

}  // namespace multinorm
