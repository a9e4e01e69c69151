#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "multinorm/exponent.hpp"

namespace multinorm {

using cplx = std::complex<double>;
using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;
using rvec = Eigen::VectorXd;
using rmat = Eigen::MatrixXd;

// Finite atomic measure space: labelled points with strictly positive masses.
class Space {
 public:
  Space() = default;
  explicit Space(std::vector<double> weights);
  Space(std::vector<std::string> labels, std::vector<double> weights);
  static Space uniform(int size);

  int size() const { return static_cast<int>(weights_.size()); }
  const rvec& weights() const { return weights_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool unit_weights() const;

  friend bool operator==(const Space& a, const Space& b) {
    return a.labels_ == b.labels_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<std::string> labels_;
  rvec weights_;
};

struct LpVector {
  Space space;
  Exponent p;
  cvec coords;

  LpVector() = default;
  LpVector(Space s, Exponent e, cvec v);
  int size() const { return space.size(); }
};

// x_1..x_n stored as the columns of an m x n matrix.
struct VectorTuple {
  Space space;
  Exponent p;
  cmat entries;

  VectorTuple() = default;
  VectorTuple(Space s, Exponent e, cmat columns);
  static VectorTuple from_vectors(const std::vector<LpVector>& xs);

  int length() const { return static_cast<int>(entries.cols()); }
  int dim() const { return static_cast<int>(entries.rows()); }
  LpVector at(int i) const { return LpVector(space, p, entries.col(i)); }
};

Exponent conjugate_exponent(const Exponent& p);
double lp_norm(const LpVector& v);
// Bilinear pairing sum_t f(t) lambda(t) mu(t); lambda must carry the conjugate exponent.
cplx pairing(const LpVector& f, const LpVector& lambda);
LpVector lattice_sup(const VectorTuple& t);
bool is_real(const cmat& m);

// Coordinate-level kernels shared by every module.
namespace lp {

double norm(const Eigen::Ref<const cvec>& v, const rvec& w, const Exponent& p);
double norm(const Eigen::Ref<const rvec>& v, const rvec& w, const Exponent& p);
// Unweighted l^p norm.
double seq_norm(const Eigen::Ref<const cvec>& v, const Exponent& p);
double seq_norm(const Eigen::Ref<const rvec>& v, const Exponent& p);
cplx pair(const Eigen::Ref<const cvec>& f, const Eigen::Ref<const cvec>& g, const rvec& w);
// psi in L^{p'}(w) with pair(v, psi) = norm(v) and norm_{p'}(psi) <= 1.
cvec norming(const Eigen::Ref<const cvec>& v, const rvec& w, const Exponent& p);
// Same for unweighted sequences.
cvec seq_norming(const Eigen::Ref<const cvec>& v, const Exponent& p);

}  // namespace lp

}  // namespace multinorm
