#pragma once

#include <string>

#include "json.hpp"
#include "multinorm/multibound.hpp"
#include "multinorm/semigroup.hpp"
#include "multinorm/summing.hpp"
#include "multinorm/tensor_bridge.hpp"
#include "multinorm/verify.hpp"

namespace mncli {

using json = nlohmann::json;
using namespace multinorm;

json read_json_file(const std::string& path);

Exponent parse_exponent(const json& j);
Space parse_space(const json& j);
cvec parse_coords(const json& obj, Eigen::Index size);
LpVector parse_vector(const json& j);
VectorTuple parse_tuple(const json& j);
LinearMap parse_operator(const json& j);
TensorElement parse_tensor(const json& j);
FiniteSemigroup parse_cayley(const json& j);

json complex_array(const cvec& v);
json complex_matrix(const cmat& m);  // list of columns
json level_to_json(const MultiNormSpec& spec, const LevelNormResult& r);
json multibound_to_json(const MultiBoundResult& r);
json summing_to_json(const SummingEstimate& r);
json report_to_json(const CheckReport& r);

}  // namespace mncli
