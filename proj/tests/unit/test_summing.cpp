#include "doctest.h"
#include "multinorm/error.hpp"
#include "multinorm/summing.hpp"
#include "oracles.hpp"

using namespace multinorm;

TEST_SUITE("summing") {
  TEST_CASE("mu of a single vector is its norm") {
    std::mt19937_64 rng(1);
    const Space s({1.0, 2.0, 0.5});
    for (auto r : {Exponent(1), Exponent(3, 2), Exponent(2), Exponent::inf()}) {
      const cmat X = oracle::random_complex(rng, 3, 1);
      for (auto p : {Exponent(1), Exponent(2), Exponent(3)}) {
        const SummingEstimate e = mu(p, VectorTuple(s, r, X), Budget{});
        CHECK(e.value == doctest::Approx(oracle::wnorm(X.col(0), s.weights(), r.value())));
      }
    }
  }

  TEST_CASE("basis vectors") {
    const VectorTuple d1(Space::uniform(2), Exponent(1), cmat::Identity(2, 2));
    CHECK(mu(Exponent(1), d1, Budget{}).value == doctest::Approx(2.0));
    const VectorTuple e2(Space::uniform(2), Exponent(2), cmat::Identity(2, 2));
    CHECK(mu(Exponent(2), e2, Budget{}).value == doctest::Approx(1.0));
    const VectorTuple dinf(Space::uniform(2), Exponent::inf(), cmat::Identity(2, 2));
    CHECK(mu_via_predual(Exponent(1), dinf, Budget{}).value == doctest::Approx(1.0));
  }

  TEST_CASE("mu_1 on real l^1 equals the sign maximum") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
      const int m = 2 + trial % 4, n = 1 + trial % 5;
      const Eigen::MatrixXd X = oracle::random_real(rng, m, n);
      const SummingEstimate e = mu(Exponent(1), VectorTuple(Space::uniform(m), Exponent(1), X.cast<cplx>()), Budget{});
      CHECK(e.value == doctest::Approx(oracle::mu1_signs(X)).epsilon(1e-9));
    }
  }

  TEST_CASE("mu_2 on l^2 equals the largest singular value") {
    std::mt19937_64 rng(3);
    const Space s({0.5, 1.0, 2.0, 1.5});
    for (int trial = 0; trial < 10; ++trial) {
      const cmat X = oracle::random_complex(rng, 4, 3);
      const rvec sw = s.weights().cwiseSqrt();
      const double sv = Eigen::JacobiSVD<cmat>(sw.asDiagonal() * X).singularValues()(0);
      CHECK(mu(Exponent(2), VectorTuple(s, Exponent(2), X), Budget{}).value == doctest::Approx(sv).epsilon(1e-9));
    }
  }

  TEST_CASE("literal supremum agrees with the operator route") {
    std::mt19937_64 rng(4);
    for (auto [r, p] : std::vector<std::pair<Exponent, Exponent>>{
             {Exponent(1), Exponent(2)}, {Exponent(2), Exponent(3)}, {Exponent::inf(), Exponent(1)}, {Exponent(3), Exponent(3, 2)}}) {
      const cmat X = oracle::random_real(rng, 3, 3).cast<cplx>();
      const VectorTuple t(Space::uniform(3), r, X);
      const double a = mu(p, t, Budget{}).value;
      const double b = mu_literal(p, t, Budget{}).value;
      CHECK(a == doctest::Approx(b).epsilon(1e-3));
    }
  }

  TEST_CASE("witness evaluates to the reported value") {
    std::mt19937_64 rng(5);
    const VectorTuple t(Space({1.0, 2.0, 1.0}), Exponent(3), oracle::random_real(rng, 3, 4).cast<cplx>());
    const SummingEstimate e = mu_literal(Exponent(2), t, Budget{});
    CHECK(evaluate_mu_witness(Exponent(2), t, e.witness.col(0)) == doctest::Approx(e.value).epsilon(1e-9));
  }

  TEST_CASE("mu is monotone decreasing in p") {
    std::mt19937_64 rng(6);
    const VectorTuple t(Space::uniform(3), Exponent(2), oracle::random_real(rng, 3, 4).cast<cplx>());
    const double m1 = mu(Exponent(1), t, Budget{}).value;
    const double m2 = mu(Exponent(2), t, Budget{}).value;
    const double m3 = mu(Exponent(3), t, Budget{}).value;
    CHECK(m1 >= m2 - 1e-9);
    CHECK(m2 >= m3 - 1e-9);
  }

  TEST_CASE("pi estimates") {
    const Space s = Space::uniform(2);
    const LinearMap zero(s, Exponent(2), s, Exponent(2), cmat::Zero(2, 2));
    CHECK(pi_estimate(Exponent(2), Exponent(2), zero, 2, Budget{}).value == 0.0);
    const LinearMap id(s, Exponent(2), s, Exponent(2), cmat::Identity(2, 2));
    const SummingEstimate e = pi_estimate(Exponent(2), Exponent(2), id, 2, Budget{});
    CHECK(e.value >= std::sqrt(2.0) * (1 - 1e-3));
    CHECK_FALSE(e.certified);
    CHECK_THROWS_AS(pi_estimate(Exponent(1), Exponent(2), id, 2, Budget{}), Error);
  }

  TEST_CASE("pi estimate is nondecreasing in the tuple cap") {
    std::mt19937_64 rng(7);
    const LinearMap T(Space::uniform(3), Exponent(1), Space::uniform(3), Exponent(2),
                      oracle::random_real(rng, 3, 3).cast<cplx>());
    double prev = 0.0;
    for (int cap = 1; cap <= 3; ++cap) {
      const double v = pi_estimate(Exponent(2), Exponent(1), T, cap, Budget{}).value;
      CHECK(v >= prev - 1e-9);
      prev = v;
    }
  }

  TEST_CASE("kp operator") {
    CHECK(kp_operator(1).matrix(0, 0) == cplx(1.0));
    const LinearMap T = kp_operator(3);
    CHECK(T.a.is_one());
    CHECK(T.b.is_inf());
    for (int i = 0; i < 3; ++i) CHECK(T.matrix(i, 2) == cplx(1.0));
    CHECK(T.matrix.real().sum() == doctest::Approx(6.0));
    CHECK_THROWS_AS(kp_operator(0), Error);
  }

  TEST_CASE("infinite p rejected") {
    const VectorTuple t(Space::uniform(2), Exponent(2), cmat::Identity(2, 2));
    CHECK_THROWS_AS(mu(Exponent::inf(), t, Budget{}), Error);
  }
}
