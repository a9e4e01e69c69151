#include "multinorm/space.hpp"

#include <cmath>
#include <set>

#include "multinorm/error.hpp"

namespace multinorm {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

cplx phase_conj(cplx z) {
  const double a = std::abs(z);
  return a == 0.0 ? cplx(0.0) : std::conj(z) / a;
}

}  // namespace

Space::Space(std::vector<double> weights) : Space(default_labels(weights.size()), weights) {}

Space::Space(std::vector<std::string> labels, std::vector<double> weights) : labels_(std::move(labels)) {
  require(!weights.empty(), ErrorKind::InvalidInput, "space: needs at least one point");
  require(labels_.size() == weights.size(), ErrorKind::InvalidInput, "space: labels/weights length mismatch");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  require(seen.size() == labels_.size(), ErrorKind::InvalidInput, "space: labels must be distinct");
  weights_.resize(static_cast<Eigen::Index>(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    require(std::isfinite(weights[i]) && weights[i] > 0.0, ErrorKind::InvalidInput,
            "space: weights must be finite and > 0");
    weights_(static_cast<Eigen::Index>(i)) = weights[i];
  }
}

Space Space::uniform(int size) {
  require(size >= 1, ErrorKind::InvalidInput, "space: size must be >= 1");
  return Space(std::vector<double>(static_cast<std::size_t>(size), 1.0));
}

bool Space::unit_weights() const { return (weights_.array() == 1.0).all(); }

LpVector::LpVector(Space s, Exponent e, cvec v) : space(std::move(s)), p(e), coords(std::move(v)) {
  require(coords.size() == space.size(), ErrorKind::InvalidInput, "vector: length does not match space");
}

VectorTuple::VectorTuple(Space s, Exponent e, cmat columns)
    : space(std::move(s)), p(e), entries(std::move(columns)) {
  require(entries.cols() >= 1, ErrorKind::InvalidInput, "tuple: must be nonempty");
  require(entries.rows() == space.size(), ErrorKind::InvalidInput, "tuple: entry length does not match space");
}

VectorTuple VectorTuple::from_vectors(const std::vector<LpVector>& xs) {
  require(!xs.empty(), ErrorKind::InvalidInput, "tuple: must be nonempty");
  cmat m(xs[0].size(), static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    require(xs[i].space == xs[0].space && xs[i].p == xs[0].p, ErrorKind::InvalidInput,
            "tuple: entries must share space and exponent");
    m.col(static_cast<Eigen::Index>(i)) = xs[i].coords;
  }
  return VectorTuple(xs[0].space, xs[0].p, std::move(m));
}

Exponent conjugate_exponent(const Exponent& p) { return p.conjugate(); }

double lp_norm(const LpVector& v) { return lp::norm(v.coords, v.space.weights(), v.p); }

cplx pairing(const LpVector& f, const LpVector& lambda) {
  require(f.space == lambda.space, ErrorKind::InvalidInput, "pairing: space mismatch");
  require(lambda.p == f.p.conjugate(), ErrorKind::InvalidInput, "pairing: exponents are not conjugate");
  return lp::pair(f.coords, lambda.coords, f.space.weights());
}

LpVector lattice_sup(const VectorTuple& t) {
  cvec out = t.entries.cwiseAbs().rowwise().maxCoeff().cast<cplx>();
  return LpVector(t.space, t.p, std::move(out));
}

bool is_real(const cmat& m) { return (m.imag().array() == 0.0).all(); }

namespace lp {

double norm(const Eigen::Ref<const rvec>& a, const rvec& w, const Exponent& p) {
  // a holds moduli
  if (a.size() == 0) return 0.0;
  if (p.is_inf()) return a.cwiseAbs().maxCoeff();
  if (p.is_one()) return a.cwiseAbs().dot(w);
  if (p.is_two()) return std::sqrt(a.cwiseAbs2().dot(w));
  const double scale = a.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  const double pv = p.value();
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += std::pow(std::abs(a(i)) / scale, pv) * w(i);
  return scale * std::pow(s, 1.0 / pv);
}

double norm(const Eigen::Ref<const cvec>& v, const rvec& w, const Exponent& p) {
  rvec a = v.cwiseAbs();
  return norm(a, w, p);
}

double seq_norm(const Eigen::Ref<const rvec>& v, const Exponent& p) {
  return norm(v, rvec::Ones(v.size()), p);
}

double seq_norm(const Eigen::Ref<const cvec>& v, const Exponent& p) {
  return norm(v, rvec::Ones(v.size()), p);
}

cplx pair(const Eigen::Ref<const cvec>& f, const Eigen::Ref<const cvec>& g, const rvec& w) {
  cplx s = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) s += f(i) * g(i) * w(i);
  return s;
}

cvec norming(const Eigen::Ref<const cvec>& v, const rvec& w, const Exponent& p) {
  const Eigen::Index m = v.size();
  cvec psi = cvec::Zero(m);
  const double nv = norm(v, w, p);
  if (nv == 0.0) return psi;
  if (p.is_one()) {
    for (Eigen::Index i = 0; i < m; ++i) psi(i) = phase_conj(v(i));
    return psi;
  }
  if (p.is_inf()) {
    Eigen::Index k = 0;
    v.cwiseAbs().maxCoeff(&k);
    psi(k) = phase_conj(v(k)) / w(k);
    return psi;
  }
  const double pv = p.value();
  for (Eigen::Index i = 0; i < m; ++i) {
    const double a = std::abs(v(i));
    if (a == 0.0) continue;
    psi(i) = phase_conj(v(i)) * std::pow(a / nv, pv - 1.0);
  }
  return psi;
}

cvec seq_norming(const Eigen::Ref<const cvec>& v, const Exponent& p) {
  return norming(v, rvec::Ones(v.size()), p);
}

}  // namespace lp

}  // namespace multinorm
