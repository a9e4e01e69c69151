#include "doctest.h"
#include "multinorm/error.hpp"
#include "multinorm/verify.hpp"
#include "oracles.hpp"

using namespace multinorm;

namespace {

std::vector<std::vector<LpVector>> grid(std::mt19937_64& rng, const Space& s, Exponent p, int n, bool diagonal) {
  std::vector<std::vector<LpVector>> F(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cvec v = oracle::random_complex(rng, s.size(), 1).col(0);
      if (diagonal && i != j) v.setZero();
      F[static_cast<std::size_t>(i)].emplace_back(s, p, v);
    }
  return F;
}

}  // namespace

TEST_SUITE("verify_suite") {
  TEST_CASE("rademacher check") {
    std::mt19937_64 rng(1);
    const Space s({1.0, 2.0, 0.5});
    const CheckReport one = rademacher_check(grid(rng, s, Exponent(2), 1, false));
    CHECK(one.pass);
    CHECK(one.slack == doctest::Approx(0.0).scale(1.0));
    const CheckReport diag = rademacher_check(grid(rng, s, Exponent(3), 4, true));
    CHECK(diag.pass);
    CHECK(diag.lhs == doctest::Approx(diag.rhs));
    for (int n = 2; n <= 5; ++n) CHECK(rademacher_check(grid(rng, s, Exponent(3, 2), n, false)).pass);
    CHECK_THROWS_AS(rademacher_check(grid(rng, s, Exponent(2), 3, false), 2), Error);
  }

  TEST_CASE("projection inequality") {
    std::mt19937_64 rng(2);
    const Space omega({1.0, 0.5, 2.0, 1.0});
    const cmat U = oracle::random_complex(rng, 4, 4);
    // evaluation at row 2 placed into the first coordinate
    JFunctional R;
    for (int b = 0; b < 4; ++b) {
      cmat c = cmat::Zero(4, 4);
      c(0, 2) = (b == 1) ? 1.0 : 0.0;
      R.cols.push_back(c);
    }
    CHECK(projection_inequality_check(R, U, omega, Exponent(2), {0, 1, 0, 1}, {1, 0, 1, 0}).pass);
    const CheckReport trivial = projection_inequality_check(R, U, omega, Exponent(2), {0, 0, 0, 0}, {0, 0, 0, 0});
    CHECK(trivial.pass);
    CHECK(trivial.lhs <= j_functional_norm_upper(R, omega, Exponent(2)) * j_operator_norm(U, omega, Exponent(2)) + 1e-12);

    for (int trial = 0; trial < 10; ++trial) {
      JFunctional Q;
      for (int b = 0; b < 4; ++b) Q.cols.push_back(oracle::random_complex(rng, 4, 4));
      const cmat V = oracle::random_complex(rng, 4, 4);
      CHECK(projection_inequality_check(Q, V, omega, Exponent(3), {0, 1, 2, 0}, {2, 1, 0, 0}).pass);
    }
  }

  TEST_CASE("j operator norm uses the column formula") {
    const Space omega({2.0, 0.5});
    cmat U(2, 2);
    U << 1.0, 0.0, 0.0, 1.0;
    // ||U delta_t / w_t||_p
    const double expect = std::max(std::pow(2.0, 0.5) / 2.0, std::pow(0.5, 0.5) / 0.5);
    CHECK(j_operator_norm(U, omega, Exponent(2)) == doctest::Approx(expect));
  }

  TEST_CASE("disjoint rank bound") {
    const Space omega = Space::uniform(3);
    const cmat I = cmat::Identity(3, 3);
    const CheckReport single = disjoint_rank_bound_check(I, omega, Exponent(2), {cvec::Unit(3, 0)}, {cvec::Unit(3, 0)});
    CHECK(single.pass);
    CHECK(single.lhs == doctest::Approx(1.0));
    CHECK(single.rhs == doctest::Approx(1.0));

    std::vector<cvec> d{cvec::Unit(3, 0), cvec::Unit(3, 1), cvec::Unit(3, 2)};
    const CheckReport diag = disjoint_rank_bound_check(I, omega, Exponent(2), d, d);
    CHECK(diag.pass);
    CHECK(diag.lhs == doctest::Approx(1.0));

    std::vector<cvec> overlap{cvec::Ones(3), cvec::Unit(3, 1)};
    CHECK_THROWS_AS(disjoint_rank_bound_check(I, omega, Exponent(2), overlap, d), Error);
  }

  TEST_CASE("suites") {
    SuiteConfig cfg;
    cfg.trials = 0;
    CHECK(identity_suite(cfg).empty());
    CHECK(inequality_suite(0, 42).empty());

    cfg.trials = 2;
    const auto a = identity_suite(cfg);
    const auto b = identity_suite(cfg);
    CHECK_FALSE(a.empty());
    CHECK(reports_to_csv(a) == reports_to_csv(b));
    for (const auto& r : a) {
      INFO(r.name << " " << r.config);
      CHECK(r.pass);
    }
    for (const auto& r : inequality_suite(5, 7)) {
      INFO(r.name << " " << r.config);
      CHECK(r.pass);
    }
  }

  TEST_CASE("report csv") {
    const CheckReport r = inequality_report("x", 1.0, 2.0, 1e-9, 3, "cfg");
    CHECK(r.pass);
    CHECK(r.slack == doctest::Approx(1.0));
    CHECK_FALSE(equality_report("y", 1.0, 2.0, 1e-9, 3, "cfg").pass);
    const std::string csv = reports_to_csv({r});
    CHECK(csv.rfind("name,pass,lhs,rhs,slack,tolerance,equality,seed,config\n", 0) == 0);
  }
}
