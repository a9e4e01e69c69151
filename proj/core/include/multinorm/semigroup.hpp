#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multinorm/multibound.hpp"

namespace multinorm {

class FiniteSemigroup {
 public:
  // table[s][t] = index of st. Throws ErrorKind::Algebra when not associative.
  FiniteSemigroup(std::vector<std::string> elements, std::vector<std::vector<int>> table,
                  std::optional<int> identity = std::nullopt);

  static FiniteSemigroup cyclic(int n);
  static FiniteSemigroup dihedral(int n);  // order 2n
  static FiniteSemigroup left_zero(int n);
  static FiniteSemigroup right_zero(int n);
  static FiniteSemigroup rectangular_band(int m, int n);
  static FiniteSemigroup symmetric(int n);  // n <= 5
  static FiniteSemigroup product(const FiniteSemigroup& a, const FiniteSemigroup& b);
  // "cyclic:6", "dihedral:4", "left_zero:2", "right_zero:3", "band:2,3", "symmetric:3"
  static FiniteSemigroup from_generator(const std::string& text);

  int size() const { return static_cast<int>(elements_.size()); }
  int mul(int s, int t) const { return table_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]; }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  std::optional<int> identity() const { return identity_; }
  const std::optional<std::vector<int>>& inverse() const { return inverse_; }
  bool is_group() const { return inverse_.has_value(); }
  int index_of(const std::string& label) const;
  int inv(int s) const;  // requires a group

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<int>> table_;
  std::optional<int> identity_;
  std::optional<std::vector<int>> inverse_;
};

struct CancellativityReport {
  bool left_cancellative = false;
  bool right_cancellative = false;
  bool cancellative = false;
  bool weakly_left_cancellative = true;
  int uniform_constant = 0;  // max_{s,t} |{u : su = t}|
  bool has_right_identity = false;
  bool has_left_identity = false;
  bool is_group = false;
};

CancellativityReport cancellativity_report(const FiniteSemigroup& S);

// (f * g)(s) = sum_{tu = s} f(t) g(u)
cvec convolve(const FiniteSemigroup& S, const cvec& f, const cvec& g);
// s . Lambda = delta_s * Lambda
cvec dual_translate(const FiniteSemigroup& S, int s, const cvec& Lambda);
// (lambda . s)(r) = lambda(sr); satisfies <lambda, s.Lambda> = <lambda.s, Lambda>
cvec right_translate_functional(const FiniteSemigroup& S, const cvec& lambda, int s);
// (s . x)(t) = x(s^{-1} t) on a group
cvec group_translate(const FiniteSemigroup& S, int s, const cvec& x);

struct MeanCheck {
  bool is_mean = false;
  double norm = 0.0;
  cplx unit_pairing = 0.0;
};

MeanCheck mean_check(const cvec& Lambda, double tol = 1e-12);
double invariance_defect(const FiniteSemigroup& S, const cvec& Lambda);
MultiBoundResult multi_invariance_bound(const FiniteSemigroup& S, const Exponent& p, const Exponent& q,
                                        const cvec& Lambda, const Budget& budget);
cvec abs_normalize(const cvec& Lambda);
cvec lattice_sup_mean(const FiniteSemigroup& S, const cvec& Lambda);
cvec theta_twist(const FiniteSemigroup& S, const cvec& f);

// Elements of l^{inf,p}(S) are |S| x |S| matrices U(s,t).
double j_norm(const cmat& U, const Exponent& p);
cmat j_action(const FiniteSemigroup& S, const cvec& f, const cmat& U);
cmat pi_tilde(const FiniteSemigroup& S, const cvec& g);

struct TranslateTensorResult {
  cmat lhs, rhs;
  double max_err = 0.0;
};

TranslateTensorResult translate_tensor_check(const FiniteSemigroup& S, const cvec& lambda, const cvec& x, int s);
// Q_t(f)(s) = f(st)
cvec qt_map(const FiniteSemigroup& S, int t, const cvec& f);

}  // namespace multinorm
