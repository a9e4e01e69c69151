#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "multinorm/budget.hpp"
#include "multinorm/space.hpp"

namespace multinorm {

struct MultiNormSpec {
  enum class Kind { Min, Max, Lattice, StandardQ, PQ, Extension, Dual };

  Kind kind = Kind::Min;
  Exponent p;  // PQ: p; Extension: target exponent
  Exponent q;  // StandardQ, PQ, Extension
  int target_size = 0;
  std::shared_ptr<const MultiNormSpec> inner;

  static MultiNormSpec min();
  static MultiNormSpec max();
  static MultiNormSpec lattice();
  static MultiNormSpec standard(Exponent q);
  static MultiNormSpec pq(Exponent p, Exponent q);
  static MultiNormSpec extension(Exponent q, Exponent target_p, int target_size);
  static MultiNormSpec dual(MultiNormSpec inner);

  // "min" | "max" | "lattice" | "std:<q>" | "pq:<p>,<q>" | "ext:<q>,<p>,<size>" | "dual(<spec>)"
  static MultiNormSpec parse(std::string_view text);
  std::string str() const;
  bool is_dual() const { return kind == Kind::Dual; }
};

struct LevelNormResult {
  double value = 0.0;
  bool certified = false;
  std::string method;
  // Dual tuple psi (same shape as the input) with Re sum_i <x_i, psi_i> = value
  // and psi in the unit ball of the dual level norm.
  cmat support;
  // Optional witnesses; the first nonempty one is used by reevaluate().
  std::vector<int> partition;  // point -> part index
  cmat lambda;                 // maximizing dual tuple for (p,q) and max norms
  cmat op;                     // contraction E -> l^P_N for extension norms
  double op_norm = 0.0;
  // extension_norm route values
  double witness_route = 0.0;
  double random_route = 0.0;
  // standard_q_norm with q = p: greedy assignment agreed with the enumeration
  bool greedy_matches = false;
};

LevelNormResult multi_norm(const MultiNormSpec& spec, const VectorTuple& t, const Budget& budget);
LevelNormResult standard_q_norm(const Exponent& q, const VectorTuple& t, const Budget& budget);
// sup |sum <x_i, lambda_i>| over multi_norm(spec, x) <= 1, x in the predual.
LevelNormResult dual_level_norm(const MultiNormSpec& spec, const VectorTuple& dual_tuple, const Budget& budget);
LevelNormResult extension_norm(const Exponent& q, const Exponent& target_p, int target_size, const VectorTuple& t,
                               const Budget& budget);

// Optimizer-only evaluations (no closed forms), for cross-checks.
LevelNormResult pq_norm_ascent(const Exponent& p, const Exponent& q, const VectorTuple& t, const Budget& budget);
LevelNormResult max_norm_ascent(const VectorTuple& t, const Budget& budget);

// Recomputes the value from the stored witness.
double reevaluate(const MultiNormSpec& spec, const VectorTuple& t, const LevelNormResult& r, const Budget& budget);

// Value of an explicit labelled assignment for the standard q-multi-norm.
double partition_value(const Exponent& q, const VectorTuple& t, const std::vector<int>& assignment);

struct AxiomResult {
  std::string axiom;
  bool pass = true;
  double worst_slack = 0.0;  // largest violation, relative to max(1, |rhs|)
  double tolerance = 0.0;
};

struct AxiomReport {
  std::string spec;
  std::vector<AxiomResult> axioms;
  bool pass() const;
};

// base_dim points with unit weights and exponent base_p; tuples of length <= max_n.
AxiomReport axiom_report(const MultiNormSpec& spec, const Space& base, const Exponent& base_p, int trials,
                         std::uint64_t seed, const Budget& budget, int max_n = 4);

}  // namespace multinorm
