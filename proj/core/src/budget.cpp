#include "multinorm/budget.hpp"

namespace multinorm {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t salt) { return Rng(splitmix(seed ^ splitmix(salt + 1))); }

cmat random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, bool real) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  cmat m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = gauss(rng);
      const double im = real ? 0.0 : gauss(rng);
      m(i, j) = cplx(re, im);
    }
  return m;
}

bool real_field(const Budget& b, bool data_real) { return b.field == Field::Auto && data_real; }

}  // namespace multinorm
