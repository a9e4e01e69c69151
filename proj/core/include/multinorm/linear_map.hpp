#pragma once

#include "multinorm/budget.hpp"
#include "multinorm/space.hpp"

namespace multinorm {

// Matrix of a map L^a(dom) -> L^b(cod); rows index codomain points.
struct LinearMap {
  Space dom;
  Exponent a;
  Space cod;
  Exponent b;
  cmat matrix;

  LinearMap() = default;
  LinearMap(Space d, Exponent da, Space c, Exponent cb, cmat m);

  LpVector apply(const LpVector& v) const;
  // Bilinear adjoint L^{b'}(cod) -> L^{a'}(dom): <Tx, y> = <x, T'y>.
  LinearMap adjoint() const;
};

// Matrix of the bilinear adjoint with respect to weighted pairings.
cmat adjoint_matrix(const cmat& A, const rvec& wdom, const rvec& wcod);

NormEstimate operator_norm(const LinearMap& T, const Budget& budget);

// Coordinate-level engine. Exact for a = 1, b = inf, a = b = 2, and, over the
// reals, for a = inf or b = 1 within the sign cap; otherwise a multi-start
// power iteration lower bound.
NormEstimate operator_norm(const cmat& A, const rvec& wdom, const Exponent& a, const rvec& wcod,
                           const Exponent& b, const Budget& budget);

// Rigorous upper bound (equals the certified value when one is available).
double operator_norm_upper(const cmat& A, const rvec& wdom, const Exponent& a, const rvec& wcod,
                           const Exponent& b, const Budget& budget);

// Calls f(eps) for every eps in {+1,-1}^m with eps(0) = +1.
template <class F>
void for_each_sign(int m, F&& f) {
  rvec eps = rvec::Ones(m);
  const std::uint64_t total = m == 0 ? 1 : (std::uint64_t{1} << (m - 1));
  for (std::uint64_t code = 0; code < total; ++code) {
    for (int i = 1; i < m; ++i) eps(i) = ((code >> (i - 1)) & 1U) ? -1.0 : 1.0;
    f(static_cast<const rvec&>(eps));
  }
}

}  // namespace multinorm
