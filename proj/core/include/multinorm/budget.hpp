#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "multinorm/space.hpp"

namespace multinorm {

// Auto treats real input as living over the reals (extreme points are sign
// vectors); Complex forces complex search even on real data.
enum class Field { Auto, Complex };

struct Budget {
  int restarts = 64;
  int iters = 500;
  double tol = 1e-10;
  std::uint64_t seed = 42;
  Field field = Field::Auto;
  std::int64_t enum_cap = 1'000'000;  // labelled assignments for partitions
  int sign_cap = 20;                  // max dimension for sign-vector enumeration
};

struct NormEstimate {
  double value = 0.0;
  bool certified = false;
  std::string method;
  cvec argmax;  // a unit vector attaining (or lower-bounding) value
};

using Rng = std::mt19937_64;

// Independent stream derived from a seed and a salt.
Rng make_rng(std::uint64_t seed, std::uint64_t salt = 0);
cmat random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, bool real);
bool real_field(const Budget& b, bool data_real);

}  // namespace multinorm
