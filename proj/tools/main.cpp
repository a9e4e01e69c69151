#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "io.hpp"
#include "multinorm/error.hpp"

using namespace mncli;

namespace {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

Level log_level() {
  const char* env = std::getenv("LOG_LEVEL");
  if (!env) return Level::Warn;
  const std::string v = env;
  if (v == "error") return Level::Error;
  if (v == "info") return Level::Info;
  if (v == "debug" || v == "trace") return Level::Debug;
  return Level::Warn;
}

void log(Level l, const std::string& msg) {
  static const Level threshold = log_level();
  static const char* names[] = {"error", "warn", "info", "debug"};
  if (l <= threshold) std::cerr << "[" << names[static_cast<int>(l)] << "] " << msg << "\n";
}

struct Common {
  bool json_out = false;
  bool csv_out = false;
  std::string output;
  int restarts = Budget{}.restarts;
  int iters = Budget{}.iters;
  std::uint64_t seed = 42;
  std::string field = "auto";

  Budget budget() const {
    Budget b;
    b.restarts = restarts;
    b.iters = iters;
    b.seed = seed;
    b.field = field == "complex" ? Field::Complex : Field::Auto;
    return b;
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_flag("--json", c.json_out, "JSON output");
  app->add_flag("--csv", c.csv_out, "CSV output");
  app->add_option("-o,--output", c.output, "write output to a file instead of stdout");
  app->add_option("--restarts", c.restarts, "optimizer restarts")->check(CLI::PositiveNumber);
  app->add_option("--iters", c.iters, "optimizer iterations per start")->check(CLI::PositiveNumber);
  app->add_option("--seed", c.seed, "random seed");
  app->add_option("--field", c.field, "auto|complex")->check(CLI::IsMember({"auto", "complex"}));
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

void emit(const Common& c, const json& j, const std::string& text, const std::string& csv) {
  std::string body;
  if (c.json_out)
    body = j.dump(2) + "\n";
  else if (c.csv_out)
    body = csv;
  else
    body = text;
  if (c.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(c.output);
  require(out.good(), ErrorKind::InvalidInput, "cannot write '" + c.output + "'");
  out << body;
}

std::pair<Exponent, Exponent> parse_pq(const std::string& s) {
  const auto comma = s.find(',');
  require(comma != std::string::npos, ErrorKind::InvalidInput, "expected p,q but got '" + s + "'");
  return {Exponent::parse(s.substr(0, comma)), Exponent::parse(s.substr(comma + 1))};
}

// ------------------------------------------------------------------ norm
struct NormArgs {
  Common c;
  std::string spec, input;
};

int cmd_norm(const NormArgs& a) {
  const MultiNormSpec spec = MultiNormSpec::parse(a.spec);
  const VectorTuple t = parse_tuple(read_json_file(a.input));
  log(Level::Info, "norm: spec " + spec.str() + ", tuple length " + std::to_string(t.length()));
  const LevelNormResult r = multi_norm(spec, t, a.c.budget());
  std::ostringstream text;
  text << "spec: " << spec.str() << "\nvalue: " << fmt(r.value) << "\ncertified: " << (r.certified ? "true" : "false")
       << "\nmethod: " << r.method << "\n";
  if (!r.partition.empty()) {
    text << "partition:";
    for (int p : r.partition) text << " " << p;
    text << "\n";
  }
  std::ostringstream csv;
  csv << "spec,value,certified,method\n" << spec.str() << "," << fmt(r.value) << "," << (r.certified ? "true" : "false")
      << "," << r.method << "\n";
  emit(a.c, level_to_json(spec, r), text.str(), csv.str());
  return 0;
}

// ------------------------------------------------------------------ mb
struct MbArgs {
  Common c;
  std::string input, dom_spec = "min", cod_spec, alpha;
  std::vector<std::string> set;
  int k_max = 3;
};

int cmd_mb(const MbArgs& a) {
  const Budget b = a.c.budget();
  MultiBoundResult r;
  std::string mode;
  if (!a.set.empty()) {
    require(!a.cod_spec.empty(), ErrorKind::InvalidInput, "mb --set needs --spec");
    std::vector<LpVector> B;
    for (const auto& path : a.set) B.push_back(parse_vector(read_json_file(path)));
    r = multi_bound_set(MultiNormSpec::parse(a.cod_spec), B, b);
    mode = "set";
  } else {
    require(!a.input.empty(), ErrorKind::InvalidInput, "mb needs --input (operator) or --set (vectors)");
    const LinearMap T = parse_operator(read_json_file(a.input));
    if (!a.alpha.empty()) {
      const auto [p, q] = parse_pq(a.alpha);
      r = alpha(p, q, T, b);
      mode = "alpha:" + p.str() + "," + q.str();
    } else {
      require(!a.cod_spec.empty(), ErrorKind::InvalidInput, "mb needs --spec (codomain) or --alpha p,q");
      r = mb_operator_norm(MultiNormSpec::parse(a.dom_spec), MultiNormSpec::parse(a.cod_spec), T, a.k_max, b);
      mode = "operator";
    }
  }
  json j = multibound_to_json(r);
  j["mode"] = mode;
  std::ostringstream text, csv;
  text << "mode: " << mode << "\nvalue: " << fmt(r.value) << "\ncertified: " << (r.certified ? "true" : "false")
       << "\nmethod: " << r.method << "\ncollapse_length: " << r.collapse_length << "\n";
  csv << "mode,value,certified,method,collapse_length\n"
      << mode << "," << fmt(r.value) << "," << (r.certified ? "true" : "false") << "," << r.method << ","
      << r.collapse_length << "\n";
  emit(a.c, j, text.str(), csv.str());
  return 0;
}

// ------------------------------------------------------------------ summing
struct SummingArgs {
  Common c;
  std::string input, op, p = "2", q;
  int tuple_cap = 0;
};

int cmd_summing(const SummingArgs& a) {
  const Budget b = a.c.budget();
  const Exponent p = Exponent::parse(a.p);
  SummingEstimate r;
  std::string mode;
  if (!a.op.empty()) {
    const LinearMap T = parse_operator(read_json_file(a.op));
    const Exponent q = a.q.empty() ? p : Exponent::parse(a.q);
    const int cap = a.tuple_cap > 0 ? a.tuple_cap : T.dom.size();
    r = pi_estimate(q, p, T, cap, b);
    mode = "pi:" + q.str() + "," + p.str();
  } else {
    require(!a.input.empty(), ErrorKind::InvalidInput, "summing needs --input (tuple) or --operator");
    r = mu(p, parse_tuple(read_json_file(a.input)), b);
    mode = "mu:" + p.str();
  }
  json j = summing_to_json(r);
  j["mode"] = mode;
  std::ostringstream text, csv;
  text << "mode: " << mode << "\nvalue: " << fmt(r.value) << "\ncertified: " << (r.certified ? "true" : "false")
       << "\nmethod: " << r.method << "\n";
  if (r.tuple_length > 0) text << "tuple_length: " << r.tuple_length << "\n";
  csv << "mode,value,certified,method,tuple_length\n"
      << mode << "," << fmt(r.value) << "," << (r.certified ? "true" : "false") << "," << r.method << ","
      << r.tuple_length << "\n";
  emit(a.c, j, text.str(), csv.str());
  return 0;
}

// ------------------------------------------------------------------ tensor
struct TensorArgs {
  Common c;
  std::string input, spec = "min";
};

int cmd_tensor(const TensorArgs& a) {
  const Budget b = a.c.budget();
  const MultiNormSpec spec = MultiNormSpec::parse(a.spec);
  const TensorElement tau = parse_tensor(read_json_file(a.input));
  const LevelNormResult r = multinorm_tensor_norm(spec, tau, b);
  const LevelNormResult inj = injective_tensor_norm(tau, b);
  const ProjectiveBound pb = projective_upper_bound(tau, b);
  json j{{"spec", spec.str()},
         {"value", r.value},
         {"certified", r.certified},
         {"method", r.method},
         {"injective", inj.value},
         {"projective_upper", pb.value},
         {"projective_certified", pb.certified},
         {"projective_lower", pb.lower}};
  std::ostringstream text, csv;
  text << "spec: " << spec.str() << "\nvalue: " << fmt(r.value) << "\ncertified: " << (r.certified ? "true" : "false")
       << "\ninjective: " << fmt(inj.value) << "\nprojective_upper: " << fmt(pb.value)
       << (pb.certified ? " (certified)" : "") << "\n";
  csv << "spec,value,certified,injective,projective_upper\n"
      << spec.str() << "," << fmt(r.value) << "," << (r.certified ? "true" : "false") << "," << fmt(inj.value) << ","
      << fmt(pb.value) << "\n";
  emit(a.c, j, text.str(), csv.str());
  return 0;
}

// ------------------------------------------------------------------ group
struct GroupArgs {
  Common c;
  std::string gen, cayley, mean;
  std::vector<std::string> pq;
};

cvec parse_mean(const FiniteSemigroup& S, const std::string& m) {
  const int n = S.size();
  if (m == "uniform") return cvec::Constant(n, 1.0 / n);
  if (m.rfind("point:", 0) == 0) return cvec::Unit(n, S.index_of(m.substr(6)));
  return parse_coords(read_json_file(m), n);
}

int cmd_group(const GroupArgs& a) {
  require(a.gen.empty() != a.cayley.empty(), ErrorKind::InvalidInput, "group needs exactly one of --gen, --cayley");
  const FiniteSemigroup S = a.gen.empty() ? parse_cayley(read_json_file(a.cayley)) : FiniteSemigroup::from_generator(a.gen);
  const CancellativityReport cr = cancellativity_report(S);
  const auto yn = [](bool b) { return b ? "true" : "false"; };

  json j;
  j["size"] = S.size();
  j["elements"] = S.elements();
  j["cancellativity"] = {{"left_cancellative", cr.left_cancellative},
                         {"right_cancellative", cr.right_cancellative},
                         {"cancellative", cr.cancellative},
                         {"weakly_left_cancellative", cr.weakly_left_cancellative},
                         {"uniform_constant", cr.uniform_constant},
                         {"has_left_identity", cr.has_left_identity},
                         {"has_right_identity", cr.has_right_identity},
                         {"is_group", cr.is_group}};
  std::ostringstream text, csv;
  text << "order: " << S.size() << "\n"
       << (cr.is_group ? "group" : "semigroup") << ", " << (cr.left_cancellative ? "" : "not ")
       << "left-cancellative, uniform constant " << cr.uniform_constant << "\n";
  text << "right-cancellative: " << yn(cr.right_cancellative)
       << "\nweakly left-cancellative: " << yn(cr.weakly_left_cancellative) << "\n";

  csv << "p,q,bound,certified,method\n";
  json bounds = json::array();
  if (!a.mean.empty()) {
    const cvec Lambda = parse_mean(S, a.mean);
    const MeanCheck mc = mean_check(Lambda);
    const double defect = invariance_defect(S, Lambda);
    j["mean"] = {{"is_mean", mc.is_mean},
                 {"norm", mc.norm},
                 {"unit_pairing", {mc.unit_pairing.real(), mc.unit_pairing.imag()}},
                 {"invariance_defect", defect}};
    text << "mean: " << yn(mc.is_mean) << " (norm " << fmt(mc.norm) << ", <1, L> = " << fmt(mc.unit_pairing.real())
         << ")\ninvariance defect: " << fmt(defect) << "\n";
    if (!mc.is_mean) log(Level::Warn, "the given functional is not a mean");
    for (const auto& spec : a.pq) {
      const auto [p, q] = parse_pq(spec);
      const MultiBoundResult r = multi_invariance_bound(S, p, q, Lambda, a.c.budget());
      bounds.push_back({{"p", p.str()}, {"q", q.str()}, {"bound", r.value}, {"certified", r.certified},
                        {"method", r.method}});
      text << "(" << p.str() << "," << q.str() << ")-multi-invariance bound: " << fmt(r.value)
           << (r.certified ? " (certified)" : "") << "\n";
      csv << p.str() << "," << q.str() << "," << fmt(r.value) << "," << yn(r.certified) << "," << r.method << "\n";
    }
  } else {
    require(a.pq.empty(), ErrorKind::InvalidInput, "--pq needs --mean");
  }
  j["bounds"] = bounds;
  emit(a.c, j, text.str(), csv.str());
  return 0;
}

// ------------------------------------------------------------------ verify
struct VerifyArgs {
  Common c;
  int trials = 20;
  int dims = 4;
  std::string report;
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<CheckReport> reports;
  if (a.trials > 0) {
    SuiteConfig cfg;
    cfg.dims = a.dims;
    cfg.trials = a.trials;
    cfg.seed = a.c.seed;
    cfg.budget = a.c.budget();
    reports = identity_suite(cfg);
    log(Level::Info, "identity suite: " + std::to_string(reports.size()) + " checks");
    auto ineq = inequality_suite(a.trials, a.c.seed);
    log(Level::Info, "inequality suite: " + std::to_string(ineq.size()) + " checks");
    reports.insert(reports.end(), ineq.begin(), ineq.end());
  }
  int failed = 0;
  json arr = json::array();
  for (const auto& r : reports) {
    arr.push_back(report_to_json(r));
    if (!r.pass) {
      ++failed;
      std::cerr << "FAIL " << r.name << " lhs=" << fmt(r.lhs) << " rhs=" << fmt(r.rhs) << " slack=" << fmt(r.slack)
                << " tol=" << fmt(r.tolerance) << " seed=" << r.seed << " config=" << r.config << "\n";
    }
  }
  json j{{"total", reports.size()}, {"passed", reports.size() - failed}, {"failed", failed}, {"reports", arr}};

  if (!a.report.empty()) {
    std::ofstream out(a.report);
    require(out.good(), ErrorKind::InvalidInput, "cannot write '" + a.report + "'");
    const bool as_csv = a.report.size() >= 4 && a.report.compare(a.report.size() - 4, 4, ".csv") == 0;
    out << (as_csv ? reports_to_csv(reports) : j.dump(2) + "\n");
  }
  std::ostringstream text;
  text << "checks: " << reports.size() << "\npassed: " << reports.size() - failed << "\nfailed: " << failed << "\n";
  emit(a.c, j, text.str(), reports_to_csv(reports));
  return failed == 0 ? 0 : 1;
}

// ------------------------------------------------------------------ demo-kp
struct KpArgs {
  Common c;
  int n_min = 2;
  int n_max = 8;
  std::string pq = "1,2";
};

int cmd_demo_kp(const KpArgs& a) {
  require(a.n_min >= 1 && a.n_min <= a.n_max, ErrorKind::InvalidInput, "need 1 <= n-min <= n-max");
  const auto [p, q] = parse_pq(a.pq);
  require(p <= q, ErrorKind::InvalidInput, "demo-kp expects p <= q");
  const Budget b = a.c.budget();
  json rows = json::array();
  std::ostringstream text, csv;
  const std::string qq = "alpha_" + q.str() + "_" + q.str();
  const std::string pqs = "alpha_" + p.str() + "_" + q.str();
  text << std::setw(4) << "n" << std::setw(16) << qq << std::setw(16) << pqs << "\n";
  csv << "n," << qq << "," << pqs << "\n";
  for (int n = a.n_min; n <= a.n_max; ++n) {
    const LinearMap T = kp_operator(n);
    const double diag = alpha(q, q, T, b).value;
    const double off = alpha(p, q, T, b).value;
    log(Level::Info, "kp n=" + std::to_string(n) + " done");
    rows.push_back({{"n", n}, {"alpha_qq", diag}, {"alpha_pq", off}});
    text << std::setw(4) << n << std::setw(16) << std::fixed << std::setprecision(6) << diag << std::setw(16) << off
         << "\n";
    csv << n << "," << fmt(diag) << "," << fmt(off) << "\n";
  }
  json j{{"p", p.str()}, {"q", q.str()}, {"rows", rows}};
  emit(a.c, j, text.str(), csv.str());
  return 0;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput:
    case ErrorKind::CapExceeded:
      return 2;
    case ErrorKind::SpecMismatch:
      return 3;
    case ErrorKind::Algebra:
      return 4;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-norms, summing norms and invariant means on finite spaces"};
  app.require_subcommand(1);

  NormArgs norm;
  auto* c_norm = app.add_subcommand("norm", "level norm of a tuple");
  add_common(c_norm, norm.c);
  c_norm->add_option("--spec", norm.spec, "multi-norm spec")->required();
  c_norm->add_option("-i,--input", norm.input, "tuple JSON")->required();

  MbArgs mb;
  auto* c_mb = app.add_subcommand("mb", "multi-bounds of operators and sets");
  add_common(c_mb, mb.c);
  c_mb->add_option("-i,--input", mb.input, "operator JSON");
  c_mb->add_option("--set", mb.set, "vector JSON, repeatable (multi-bound of a set)");
  c_mb->add_option("--spec", mb.cod_spec, "codomain spec (or the set spec)");
  c_mb->add_option("--dom-spec", mb.dom_spec, "domain spec");
  c_mb->add_option("--alpha", mb.alpha, "p,q: (p,q)-multi-bounded norm");
  c_mb->add_option("--k-max", mb.k_max, "largest tuple length")->check(CLI::PositiveNumber);

  SummingArgs sm;
  auto* c_sm = app.add_subcommand("summing", "weak p-summing norm of a tuple or (q,p)-summing norm of an operator");
  add_common(c_sm, sm.c);
  c_sm->add_option("-i,--input", sm.input, "tuple JSON");
  c_sm->add_option("--operator", sm.op, "operator JSON");
  c_sm->add_option("--p", sm.p, "exponent p");
  c_sm->add_option("--q", sm.q, "exponent q (operator mode)");
  c_sm->add_option("--tuple-cap", sm.tuple_cap, "longest tuple searched (operator mode)");

  TensorArgs tn;
  auto* c_tn = app.add_subcommand("tensor", "tensor norms of an element of l^inf_N (x) L^p");
  add_common(c_tn, tn.c);
  c_tn->add_option("-i,--input", tn.input, "tensor JSON")->required();
  c_tn->add_option("--spec", tn.spec, "multi-norm spec");

  GroupArgs gr;
  auto* c_gr = app.add_subcommand("group", "cancellativity and multi-invariance of means");
  add_common(c_gr, gr.c);
  c_gr->add_option("--gen", gr.gen, "builtin generator, e.g. cyclic:6");
  c_gr->add_option("--cayley", gr.cayley, "Cayley table JSON");
  c_gr->add_option("--mean", gr.mean, "uniform | point:<label> | JSON file");
  c_gr->add_option("--pq", gr.pq, "p,q (repeatable)");

  VerifyArgs vf;
  auto* c_vf = app.add_subcommand("verify", "run the identity and inequality suites");
  add_common(c_vf, vf.c);
  c_vf->add_option("--trials", vf.trials, "instances per check")->check(CLI::NonNegativeNumber);
  c_vf->add_option("--dims", vf.dims, "largest base dimension")->check(CLI::Range(2, 8));
  c_vf->add_option("--report", vf.report, "write the full report (.json or .csv)");

  KpArgs kp;
  auto* c_kp = app.add_subcommand("demo-kp", "multi-bounds of the upper-triangular operators T_n");
  add_common(c_kp, kp.c);
  c_kp->add_option("--n-min", kp.n_min, "smallest n");
  c_kp->add_option("--n-max", kp.n_max, "largest n");
  c_kp->add_option("--pq", kp.pq, "p,q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_norm->parsed()) return cmd_norm(norm);
    if (c_mb->parsed()) return cmd_mb(mb);
    if (c_sm->parsed()) return cmd_summing(sm);
    if (c_tn->parsed()) return cmd_tensor(tn);
    if (c_gr->parsed()) return cmd_group(gr);
    if (c_vf->parsed()) return cmd_verify(vf);
    if (c_kp->parsed()) return cmd_demo_kp(kp);
  } catch (const Error& e) {
    log(Level::Error, e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    log(Level::Error, e.what());
    return 2;
  }
  return 2;
}
