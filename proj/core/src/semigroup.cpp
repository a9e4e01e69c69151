#include "multinorm/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "multinorm/error.hpp"

namespace multinorm {

namespace {

std::string letter_label(int i) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + i % 26));
    i = i / 26 - 1;
  } while (i >= 0);
  return s;
}

void check_element(const FiniteSemigroup& S, int s) {
  require(s >= 0 && s < S.size(), ErrorKind::InvalidInput, "semigroup: element index out of range");
}

void check_fn(const FiniteSemigroup& S, const cvec& f) {
  require(f.size() == S.size(), ErrorKind::InvalidInput, "semigroup: function length does not match |S|");
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(std::vector<std::string> elements, std::vector<std::vector<int>> table,
                                 std::optional<int> identity)
    : elements_(std::move(elements)), table_(std::move(table)) {
  const int n = static_cast<int>(elements_.size());
  require(n >= 1, ErrorKind::InvalidInput, "semigroup: needs at least one element");
  require(static_cast<int>(table_.size()) == n, ErrorKind::InvalidInput, "semigroup: table has wrong row count");
  for (const auto& row : table_) {
    require(static_cast<int>(row.size()) == n, ErrorKind::InvalidInput, "semigroup: table row has wrong length");
    for (int v : row) require(v >= 0 && v < n, ErrorKind::InvalidInput, "semigroup: table entry out of range");
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u)
        require(mul(mul(s, t), u) == mul(s, mul(t, u)), ErrorKind::Algebra,
                "semigroup: table is not associative at (" + elements_[static_cast<std::size_t>(s)] + "," +
                    elements_[static_cast<std::size_t>(t)] + "," + elements_[static_cast<std::size_t>(u)] + ")");

  auto is_identity = [&](int e) {
    for (int s = 0; s < n; ++s)
      if (mul(e, s) != s || mul(s, e) != s) return false;
    return true;
  };
  if (identity) {
    require(*identity >= 0 && *identity < n && is_identity(*identity), ErrorKind::Algebra,
            "semigroup: declared identity is not an identity");
    identity_ = identity;
  } else {
    for (int e = 0; e < n && !identity_; ++e)
      if (is_identity(e)) identity_ = e;
  }
  if (identity_) {
    std::vector<int> inv(static_cast<std::size_t>(n), -1);
    bool group = true;
    for (int s = 0; s < n && group; ++s) {
      for (int t = 0; t < n; ++t)
        if (mul(s, t) == *identity_ && mul(t, s) == *identity_) {
          inv[static_cast<std::size_t>(s)] = t;
          break;
        }
      group = inv[static_cast<std::size_t>(s)] >= 0;
    }
    if (group) inverse_ = inv;
  }
}

FiniteSemigroup FiniteSemigroup::cyclic(int n) {
  require(n >= 1, ErrorKind::InvalidInput, "cyclic: n must be >= 1");
  std::vector<std::string> el;
  std::vector<std::vector<int>> tab(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    el.push_back(i == 0 ? "e" : "g" + std::to_string(i));
    for (int j = 0; j < n; ++j) tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  }
  return FiniteSemigroup(el, tab, 0);
}

FiniteSemigroup FiniteSemigroup::dihedral(int n) {
  require(n >= 1, ErrorKind::InvalidInput, "dihedral: n must be >= 1");
  // index k + n*b stands for r^k s^b
  const int N = 2 * n;
  std::vector<std::string> el;
  std::vector<std::vector<int>> tab(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N)));
  for (int x = 0; x < N; ++x) {
    const int a = x % n, b = x / n;
    el.push_back(x == 0 ? "e" : (b ? "s" : "r") + std::to_string(a));
    for (int y = 0; y < N; ++y) {
      const int c = y % n, d = y / n;
      const int k = ((b ? a - c : a + c) % n + n) % n;
      tab[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = k + n * ((b + d) % 2);
    }
  }
  return FiniteSemigroup(el, tab, 0);
}

FiniteSemigroup FiniteSemigroup::left_zero(int n) {
  require(n >= 1, ErrorKind::InvalidInput, "left_zero: n must be >= 1");
  std::vector<std::string> el;
  std::vector<std::vector<int>> tab(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    el.push_back(letter_label(i));
    for (int j = 0; j < n; ++j) tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i;
  }
  return FiniteSemigroup(el, tab);
}

FiniteSemigroup FiniteSemigroup::right_zero(int n) {
  require(n >= 1, ErrorKind::InvalidInput, "right_zero: n must be >= 1");
  std::vector<std::string> el;
  std::vector<std::vector<int>> tab(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    el.push_back(letter_label(i));
    for (int j = 0; j < n; ++j) tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = j;
  }
  return FiniteSemigroup(el, tab);
}

FiniteSemigroup FiniteSemigroup::rectangular_band(int m, int n) {
  require(m >= 1 && n >= 1, ErrorKind::InvalidInput, "rectangular_band: sizes must be >= 1");
  const int N = m * n;
  std::vector<std::string> el;
  std::vector<std::vector<int>> tab(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N)));
  for (int x = 0; x < N; ++x) {
    el.push_back("(" + std::to_string(x / n) + "," + std::to_string(x % n) + ")");
    for (int y = 0; y < N; ++y) tab[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (x / n) * n + y % n;
  }
  return FiniteSemigroup(el, tab);
}

FiniteSemigroup FiniteSemigroup::symmetric(int n) {
  require(n >= 1 && n <= 5, ErrorKind::InvalidInput, "symmetric: n must be in 1..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int N = static_cast<int>(perms.size());
  std::vector<std::string> el;
  for (const auto& q : perms) {
    std::string s = "[";
    for (int v : q) s += std::to_string(v + 1);
    el.push_back(s + "]");
  }
  std::vector<std::vector<int>> tab(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N)));
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = perms[static_cast<std::size_t>(x)][static_cast<std::size_t>(perms[static_cast<std::size_t>(y)][static_cast<std::size_t>(i)])];
      tab[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteSemigroup(el, tab, 0);
}

FiniteSemigroup FiniteSemigroup::product(const FiniteSemigroup& a, const FiniteSemigroup& b) {
  const int na = a.size(), nb = b.size(), N = na * nb;
  std::vector<std::string> el;
  std::vector<std::vector<int>> tab(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N)));
  for (int x = 0; x < N; ++x) {
    el.push_back("(" + a.elements()[static_cast<std::size_t>(x / nb)] + "," + b.elements()[static_cast<std::size_t>(x % nb)] + ")");
    for (int y = 0; y < N; ++y)
      tab[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  return FiniteSemigroup(el, tab);
}

FiniteSemigroup FiniteSemigroup::from_generator(const std::string& text) {
  const auto colon = text.find(':');
  require(colon != std::string::npos, ErrorKind::InvalidInput, "generator must look like name:args, got '" + text + "'");
  const std::string name = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);
  std::vector<int> nums;
  std::size_t pos = 0;
  try {
    while (pos < args.size()) {
      const auto comma = args.find(',', pos);
      nums.push_back(std::stoi(args.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidInput, "generator: bad arguments in '" + text + "'");
  }
  auto need = [&](std::size_t k) {
    require(nums.size() == k, ErrorKind::InvalidInput, "generator '" + name + "' expects " + std::to_string(k) + " argument(s)");
  };
  if (name == "cyclic") return need(1), cyclic(nums[0]);
  if (name == "dihedral") return need(1), dihedral(nums[0]);
  if (name == "left_zero") return need(1), left_zero(nums[0]);
  if (name == "right_zero") return need(1), right_zero(nums[0]);
  if (name == "band" || name == "rectangular_band") return need(2), rectangular_band(nums[0], nums[1]);
  if (name == "symmetric") return need(1), symmetric(nums[0]);
  throw Error(ErrorKind::InvalidInput, "unknown generator '" + name + "'");
}

int FiniteSemigroup::index_of(const std::string& label) const {
  const auto it = std::find(elements_.begin(), elements_.end(), label);
  require(it != elements_.end(), ErrorKind::InvalidInput, "semigroup: unknown element '" + label + "'");
  return static_cast<int>(it - elements_.begin());
}

int FiniteSemigroup::inv(int s) const {
  require(is_group(), ErrorKind::Algebra, "semigroup: not a group");
  return (*inverse_)[static_cast<std::size_t>(s)];
}

CancellativityReport cancellativity_report(const FiniteSemigroup& S) {
  const int n = S.size();
  CancellativityReport r;
  int worst = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) ++count[static_cast<std::size_t>(S.mul(s, u))];
    worst = std::max(worst, *std::max_element(count.begin(), count.end()));
  }
  r.uniform_constant = worst;
  r.left_cancellative = worst == 1;
  int rworst = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) ++count[static_cast<std::size_t>(S.mul(u, s))];
    rworst = std::max(rworst, *std::max_element(count.begin(), count.end()));
  }
  r.right_cancellative = rworst == 1;
  r.cancellative = r.left_cancellative && r.right_cancellative;
  for (int e = 0; e < n; ++e) {
    bool right = true, left = true;
    for (int s = 0; s < n; ++s) {
      right = right && S.mul(s, e) == s;
      left = left && S.mul(e, s) == s;
    }
    r.has_right_identity = r.has_right_identity || right;
    r.has_left_identity = r.has_left_identity || left;
  }
  r.is_group = S.is_group();
  return r;
}

cvec convolve(const FiniteSemigroup& S, const cvec& f, const cvec& g) {
  check_fn(S, f);
  check_fn(S, g);
  cvec out = cvec::Zero(S.size());
  for (int t = 0; t < S.size(); ++t)
    for (int u = 0; u < S.size(); ++u) out(S.mul(t, u)) += f(t) * g(u);
  return out;
}

cvec dual_translate(const FiniteSemigroup& S, int s, const cvec& Lambda) {
  check_element(S, s);
  check_fn(S, Lambda);
  cvec out = cvec::Zero(S.size());
  for (int r = 0; r < S.size(); ++r) out(S.mul(s, r)) += Lambda(r);
  return out;
}

cvec right_translate_functional(const FiniteSemigroup& S, const cvec& lambda, int s) {
  check_element(S, s);
  check_fn(S, lambda);
  cvec out(S.size());
  for (int r = 0; r < S.size(); ++r) out(r) = lambda(S.mul(s, r));
  return out;
}

cvec group_translate(const FiniteSemigroup& S, int s, const cvec& x) {
  check_element(S, s);
  check_fn(S, x);
  const int si = S.inv(s);
  cvec out(S.size());
  for (int t = 0; t < S.size(); ++t) out(t) = x(S.mul(si, t));
  return out;
}

MeanCheck mean_check(const cvec& Lambda, double tol) {
  MeanCheck m;
  m.norm = Lambda.cwiseAbs().sum();
  m.unit_pairing = Lambda.sum();
  m.is_mean = std::abs(m.norm - 1.0) <= tol && std::abs(m.unit_pairing - cplx(1.0)) <= tol;
  return m;
}

double invariance_defect(const FiniteSemigroup& S, const cvec& Lambda) {
  check_fn(S, Lambda);
  double worst = 0.0;
  for (int s = 0; s < S.size(); ++s) worst = std::max(worst, (dual_translate(S, s, Lambda) - Lambda).cwiseAbs().sum());
  return worst;
}

MultiBoundResult multi_invariance_bound(const FiniteSemigroup& S, const Exponent& p, const Exponent& q,
                                        const cvec& Lambda, const Budget& budget) {
  check_fn(S, Lambda);
  const Space space(S.elements(), std::vector<double>(static_cast<std::size_t>(S.size()), 1.0));
  std::vector<LpVector> translates;
  for (int s = 0; s < S.size(); ++s) translates.emplace_back(space, Exponent(1), dual_translate(S, s, Lambda));
  return multi_bound_set(MultiNormSpec::pq(p, q), translates, budget);
}

cvec abs_normalize(const cvec& Lambda) {
  const double n = Lambda.cwiseAbs().sum();
  require(n > 0.0, ErrorKind::InvalidInput, "abs_normalize: zero functional");
  return (Lambda.cwiseAbs() / n).cast<cplx>();
}

cvec lattice_sup_mean(const FiniteSemigroup& S, const cvec& Lambda) {
  check_fn(S, Lambda);
  require(S.is_group(), ErrorKind::Algebra, "lattice_sup_mean: requires a group");
  require(is_real(Lambda) && (Lambda.real().array() >= 0.0).all() && Lambda.real().sum() > 0.0,
          ErrorKind::InvalidInput, "lattice_sup_mean: functional must be positive and nonzero");
  rvec sup = rvec::Zero(S.size());
  for (int s = 0; s < S.size(); ++s) sup = sup.cwiseMax(dual_translate(S, s, Lambda).real());
  return (sup / sup.sum()).cast<cplx>();
}

cvec theta_twist(const FiniteSemigroup& S, const cvec& f) {
  check_fn(S, f);
  require(S.is_group(), ErrorKind::Algebra, "theta_twist: requires a group");
  cvec out(S.size());
  for (int s = 0; s < S.size(); ++s) out(s) = f(S.inv(s));
  return out;
}

double j_norm(const cmat& U, const Exponent& p) {
  double worst = 0.0;
  for (Eigen::Index s = 0; s < U.rows(); ++s) worst = std::max(worst, lp::seq_norm(U.row(s).transpose(), p));
  return worst;
}

cmat j_action(const FiniteSemigroup& S, const cvec& f, const cmat& U) {
  check_fn(S, f);
  const int n = S.size();
  require(U.rows() == n && U.cols() == n, ErrorKind::InvalidInput, "j_action: U must be |S| x |S|");
  cmat out = cmat::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    if (f(r) == cplx(0.0)) continue;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) out(S.mul(r, x), S.mul(r, y)) += f(r) * U(x, y);
  }
  return out;
}

cmat pi_tilde(const FiniteSemigroup& S, const cvec& g) {
  check_fn(S, g);
  cmat U(S.size(), S.size());
  for (int s = 0; s < S.size(); ++s) U.row(s) = g.transpose();
  return U;
}

TranslateTensorResult translate_tensor_check(const FiniteSemigroup& S, const cvec& lambda, const cvec& x, int s) {
  require(S.is_group(), ErrorKind::Algebra, "translate_tensor_check: requires a group");
  check_fn(S, lambda);
  check_fn(S, x);
  TranslateTensorResult r;
  r.lhs = right_translate_functional(S, lambda, s) * x.transpose();
  const cmat inner = lambda * group_translate(S, s, x).transpose();
  r.rhs = j_action(S, cvec::Unit(S.size(), S.inv(s)), inner);
  r.max_err = (r.lhs - r.rhs).cwiseAbs().maxCoeff();
  return r;
}

cvec qt_map(const FiniteSemigroup& S, int t, const cvec& f) {
  check_element(S, t);
  check_fn(S, f);
  cvec out(S.size());
  for (int s = 0; s < S.size(); ++s) out(s) = f(S.mul(s, t));
  return out;
}

}  // namespace multinorm
