#include "doctest.h"
#include "multinorm/error.hpp"
#include "multinorm/linear_map.hpp"
#include "oracles.hpp"

using namespace multinorm;

namespace {

LpVector vec(std::vector<double> w, Exponent p, std::vector<cplx> c) {
  cvec v(static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Eigen::Index>(i)) = c[i];
  return LpVector(Space(std::move(w)), p, v);
}

}  // namespace

TEST_SUITE("core_spaces") {
  TEST_CASE("exponent parsing and conjugates") {
    CHECK(conjugate_exponent(Exponent(2)) == Exponent(2));
    CHECK(conjugate_exponent(Exponent(1)).is_inf());
    CHECK(conjugate_exponent(Exponent::inf()).is_one());
    CHECK(conjugate_exponent(Exponent(4)) == Exponent(4, 3));
    CHECK(Exponent::parse("3/2") == Exponent(3, 2));
    CHECK(Exponent::parse("1.5") == Exponent(3, 2));
    CHECK(Exponent::parse("inf").is_inf());
    CHECK(Exponent(6, 4) == Exponent(3, 2));
    CHECK(Exponent(3, 2).conjugate() == Exponent(3));
    CHECK(Exponent(2) < Exponent(3));
    CHECK(Exponent(3) < Exponent::inf());
    CHECK_THROWS_AS(Exponent::parse("1/2"), Error);
    CHECK_THROWS_AS(Exponent::parse("abc"), Error);
    CHECK_THROWS_AS(Exponent(0), Error);
  }

  TEST_CASE("conjugate is an involution") {
    for (auto p : {Exponent(1), Exponent(5, 4), Exponent(3, 2), Exponent(2), Exponent(7), Exponent::inf()})
      CHECK(p.conjugate().conjugate() == p);
  }

  TEST_CASE("spaces reject bad weights") {
    CHECK_THROWS_AS(Space(std::vector<double>{1.0, 0.0}), Error);
    CHECK_THROWS_AS(Space(std::vector<double>{1.0, -1.0}), Error);
    CHECK_THROWS_AS(Space(std::vector<double>{}), Error);
    CHECK_THROWS_AS(Space({"a"}, {1.0, 2.0}), Error);
    CHECK(Space::uniform(3).unit_weights());
  }

  TEST_CASE("lp norms") {
    CHECK(lp_norm(vec({1, 1}, Exponent(1), {3.0, 4.0})) == doctest::Approx(7.0));
    CHECK(lp_norm(vec({1, 1}, Exponent(2), {3.0, 4.0})) == doctest::Approx(5.0));
    CHECK(lp_norm(vec({2, 1}, Exponent(1), {1.0, 1.0})) == doctest::Approx(3.0));
    CHECK(lp_norm(vec({2, 1}, Exponent::inf(), {1.0, -3.0})) == doctest::Approx(3.0));
    CHECK(lp_norm(vec({1, 1}, Exponent(2), {cplx(0, 3), 4.0})) == doctest::Approx(5.0));
  }

  TEST_CASE("lp norm matches the weighted sum formula") {
    std::mt19937_64 rng(3);
    const rvec w = (rvec(4) << 0.5, 1.0, 2.0, 0.25).finished();
    for (auto p : {Exponent(1), Exponent(3, 2), Exponent(2), Exponent(3), Exponent::inf()}) {
      const cmat X = oracle::random_complex(rng, 4, 1);
      CHECK(lp::norm(X.col(0), w, p) == doctest::Approx(oracle::wnorm(X.col(0), w, p.value())));
    }
  }

  TEST_CASE("pairing") {
    CHECK(pairing(vec({1, 1}, Exponent(2), {1.0, 2.0}), vec({1, 1}, Exponent(2), {3.0, 1.0})).real() ==
          doctest::Approx(5.0));
    CHECK(std::abs(pairing(vec({1, 1}, Exponent(2), {1.0, 2.0}), vec({1, 1}, Exponent(2), {0.0, 0.0}))) == 0.0);
    CHECK(std::abs(pairing(vec({1, 1}, Exponent(1), {1.0, 0.0}), vec({1, 1}, Exponent::inf(), {0.0, 1.0}))) == 0.0);
    CHECK_THROWS_AS(pairing(vec({1, 1}, Exponent(2), {1.0, 0.0}), vec({1, 1}, Exponent(3), {0.0, 1.0})), Error);
  }

  TEST_CASE("norming functionals attain the norm") {
    std::mt19937_64 rng(5);
    const rvec w = (rvec(3) << 1.0, 0.5, 3.0).finished();
    for (auto p : {Exponent(1), Exponent(4, 3), Exponent(2), Exponent(5), Exponent::inf()}) {
      const cvec v = oracle::random_complex(rng, 3, 1).col(0);
      const cvec psi = lp::norming(v, w, p);
      CHECK(lp::pair(v, psi, w).real() == doctest::Approx(lp::norm(v, w, p)));
      CHECK(lp::norm(psi, w, p.conjugate()) <= 1.0 + 1e-12);
    }
  }

  TEST_CASE("lattice sup") {
    cmat X(2, 2);
    X << 1.0, 0.0, -2.0, 3.0;
    VectorTuple t(Space::uniform(2), Exponent(1), X);
    const LpVector s = lattice_sup(t);
    CHECK(s.coords(0).real() == doctest::Approx(1.0));
    CHECK(s.coords(1).real() == doctest::Approx(3.0));

    cmat Y(2, 2);
    Y << cplx(0, 1), 0.0, 0.0, 1.0;
    const LpVector u = lattice_sup(VectorTuple(Space::uniform(2), Exponent(2), Y));
    CHECK(u.coords(0).real() == doctest::Approx(1.0));
    CHECK(u.coords(1).real() == doctest::Approx(1.0));
  }

  TEST_CASE("operator norm closed forms") {
    cmat A(2, 2);
    A << 1.0, 1.0, 1.0, -1.0;
    const Space s = Space::uniform(2);
    const Budget b;
    const NormEstimate one = operator_norm(LinearMap(s, Exponent(1), s, Exponent(1), A), b);
    CHECK(one.certified);
    CHECK(one.value == doctest::Approx(2.0));
    const NormEstimate inf = operator_norm(LinearMap(s, Exponent::inf(), s, Exponent::inf(), A), b);
    CHECK(inf.certified);
    CHECK(inf.value == doctest::Approx(2.0));
    const NormEstimate two = operator_norm(LinearMap(s, Exponent(2), s, Exponent(2), A), b);
    CHECK(two.value == doctest::Approx(std::sqrt(2.0)));
    for (auto p : {Exponent(1), Exponent(3, 2), Exponent(3), Exponent::inf()}) {
      const NormEstimate id = operator_norm(LinearMap(Space::uniform(3), p, Space::uniform(3), p, cmat::Identity(3, 3)), b);
      CHECK(id.value == doctest::Approx(1.0));
    }
  }

  TEST_CASE("operator norm inf -> 1 agrees with sign enumeration") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      const Eigen::MatrixXd A = oracle::random_real(rng, 4, 5);
      const NormEstimate e = operator_norm(
          LinearMap(Space::uniform(5), Exponent::inf(), Space::uniform(4), Exponent(1), A.cast<cplx>()), Budget{});
      CHECK(e.value == doctest::Approx(oracle::inf_to_one(A)).epsilon(1e-10));
    }
  }

  TEST_CASE("operator norm lower bound never exceeds the upper bound") {
    std::mt19937_64 rng(13);
    const rvec wd = (rvec(3) << 1.0, 2.0, 0.5).finished();
    const rvec wc = (rvec(4) << 0.25, 1.0, 1.0, 3.0).finished();
    for (auto [a, b] : std::vector<std::pair<Exponent, Exponent>>{
             {Exponent(3, 2), Exponent(3)}, {Exponent(3), Exponent(3, 2)}, {Exponent(4), Exponent(2)}}) {
      const cmat A = oracle::random_complex(rng, 4, 3);
      const NormEstimate e = operator_norm(A, wd, a, wc, b, Budget{});
      CHECK(e.value <= operator_norm_upper(A, wd, a, wc, b, Budget{}) * (1 + 1e-12));
      CHECK(lp::norm(A * e.argmax, wc, b) == doctest::Approx(e.value));
      CHECK(lp::norm(e.argmax, wd, a) == doctest::Approx(1.0));
    }
  }

  TEST_CASE("dimension mismatch") {
    CHECK_THROWS_AS(LinearMap(Space::uniform(2), Exponent(1), Space::uniform(2), Exponent(1), cmat::Zero(3, 2)), Error);
  }
}
