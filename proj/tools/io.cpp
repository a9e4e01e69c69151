#include "io.hpp"

#include <fstream>

#include "multinorm/error.hpp"

namespace mncli {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::InvalidInput, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, "'" + path + "': " + e.what());
  }
}

Exponent parse_exponent(const json& j) {
  if (j.is_string()) return Exponent::parse(j.get<std::string>());
  if (j.is_number_integer()) return Exponent(j.get<std::int64_t>());
  if (j.is_number()) return Exponent::parse(j.dump());
  throw Error(ErrorKind::InvalidInput, "exponent must be a string or number");
}

Space parse_space(const json& j) {
  require(j.is_object() && j.contains("weights"), ErrorKind::InvalidInput, "space needs \"weights\"");
  const auto w = j.at("weights").get<std::vector<double>>();
  if (!j.contains("labels")) return Space(w);
  return Space(j.at("labels").get<std::vector<std::string>>(), w);
}

cvec parse_coords(const json& obj, Eigen::Index size) {
  require(obj.contains("re"), ErrorKind::InvalidInput, "vector needs \"re\"");
  const auto re = obj.at("re").get<std::vector<double>>();
  require(static_cast<Eigen::Index>(re.size()) == size, ErrorKind::InvalidInput, "\"re\" has the wrong length");
  cvec v(size);
  for (Eigen::Index i = 0; i < size; ++i) v(i) = re[static_cast<std::size_t>(i)];
  if (obj.contains("im")) {
    const auto im = obj.at("im").get<std::vector<double>>();
    require(static_cast<Eigen::Index>(im.size()) == size, ErrorKind::InvalidInput, "\"im\" has the wrong length");
    for (Eigen::Index i = 0; i < size; ++i) v(i) += cplx(0.0, im[static_cast<std::size_t>(i)]);
  }
  return v;
}

namespace {

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed input: ") + e.what());
  }
}

}  // namespace

LpVector parse_vector(const json& j) {
  return guarded([&] {
    const Space s = parse_space(j.at("space"));
    return LpVector(s, parse_exponent(j.at("p")), parse_coords(j, s.size()));
  });
}

VectorTuple parse_tuple(const json& j) {
  return guarded([&] {
    const Space s = parse_space(j.at("space"));
    const auto& entries = j.at("entries");
    require(entries.is_array() && !entries.empty(), ErrorKind::InvalidInput, "\"entries\" must be a nonempty array");
    cmat X(s.size(), static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) X.col(static_cast<Eigen::Index>(i)) = parse_coords(entries[i], s.size());
    return VectorTuple(s, parse_exponent(j.at("p")), X);
  });
}

LinearMap parse_operator(const json& j) {
  return guarded([&] {
    const Space d = parse_space(j.at("domain").at("space"));
    const Space c = parse_space(j.at("codomain").at("space"));
    const auto rows = j.at("matrix").get<std::vector<std::vector<double>>>();
    require(static_cast<int>(rows.size()) == c.size(), ErrorKind::InvalidInput, "matrix needs one row per codomain point");
    cmat A(c.size(), d.size());
    for (int r = 0; r < c.size(); ++r) {
      require(static_cast<int>(rows[static_cast<std::size_t>(r)].size()) == d.size(), ErrorKind::InvalidInput,
              "matrix row has the wrong length");
      for (int k = 0; k < d.size(); ++k) A(r, k) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
    }
    if (j.contains("matrix_im")) {
      const auto im = j.at("matrix_im").get<std::vector<std::vector<double>>>();
      require(static_cast<int>(im.size()) == c.size(), ErrorKind::InvalidInput, "matrix_im has the wrong shape");
      for (int r = 0; r < c.size(); ++r) {
        require(static_cast<int>(im[static_cast<std::size_t>(r)].size()) == d.size(), ErrorKind::InvalidInput,
                "matrix_im has the wrong shape");
        for (int k = 0; k < d.size(); ++k) A(r, k) += cplx(0.0, im[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]);
      }
    }
    return LinearMap(d, parse_exponent(j.at("domain").at("p")), c, parse_exponent(j.at("codomain").at("p")), A);
  });
}

TensorElement parse_tensor(const json& j) {
  return guarded([&] {
    const int N = j.at("N").get<int>();
    require(N >= 1, ErrorKind::InvalidInput, "tensor: N must be >= 1");
    const auto& terms = j.at("summands");
    require(terms.is_array() && !terms.empty(), ErrorKind::InvalidInput, "tensor: \"summands\" must be nonempty");
    const LpVector x0 = parse_vector(terms[0].at("x"));
    TensorElement tau(N, x0.space, x0.p);
    for (const auto& t : terms) {
      const LpVector x = parse_vector(t.at("x"));
      require(x.space == x0.space && x.p == x0.p, ErrorKind::InvalidInput, "tensor: summands must share a space");
      json a = t.at("a");
      const json aobj = a.is_array() ? json{{"re", a}} : a;
      tau.add(parse_coords(aobj, N), x.coords);
    }
    return tau;
  });
}

FiniteSemigroup parse_cayley(const json& j) {
  return guarded([&] {
    auto el = j.at("elements").get<std::vector<std::string>>();
    auto tab = j.at("table").get<std::vector<std::vector<int>>>();
    std::optional<int> id;
    if (j.contains("identity") && !j.at("identity").is_null()) id = j.at("identity").get<int>();
    return FiniteSemigroup(std::move(el), std::move(tab), id);
  });
}

json complex_array(const cvec& v) {
  json re = json::array(), im = json::array();
  bool any_im = false;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
    any_im = any_im || v(i).imag() != 0.0;
  }
  json out{{"re", re}};
  if (any_im) out["im"] = im;
  return out;
}

json complex_matrix(const cmat& m) {
  json out = json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(complex_array(m.col(c)));
  return out;
}

json level_to_json(const MultiNormSpec& spec, const LevelNormResult& r) {
  json out{{"spec", spec.str()}, {"value", r.value}, {"certified", r.certified}, {"method", r.method}};
  json wit = json::object();
  if (!r.partition.empty()) wit["partition"] = r.partition;
  if (r.lambda.size() > 0) wit["lambda"] = complex_matrix(r.lambda);
  if (r.op.size() > 0) {
    wit["operator_rows"] = complex_matrix(r.op.transpose());
    wit["operator_norm"] = r.op_norm;
    wit["witness_route"] = r.witness_route;
    wit["random_route"] = r.random_route;
  }
  if (r.support.size() > 0) wit["support"] = complex_matrix(r.support);
  out["witness"] = wit;
  return out;
}

json multibound_to_json(const MultiBoundResult& r) {
  json out{{"value", r.value},
           {"certified", r.certified},
           {"method", r.method},
           {"collapse_length", r.collapse_length}};
  if (r.witness.size() > 0) out["witness"] = complex_matrix(r.witness);
  return out;
}

json summing_to_json(const SummingEstimate& r) {
  json out{{"value", r.value}, {"certified", r.certified}, {"method", r.method}, {"tuple_length", r.tuple_length}};
  if (r.witness.size() > 0) out["witness"] = complex_matrix(r.witness);
  return out;
}

json report_to_json(const CheckReport& r) {
  return json{{"name", r.name},     {"pass", r.pass},           {"lhs", r.lhs},
              {"rhs", r.rhs},       {"slack", r.slack},         {"tolerance", r.tolerance},
              {"equality", r.equality}, {"seed", r.seed},       {"config", r.config}};
}

}  // namespace mncli
