#pragma once

#include "fei/boolean_function.hpp"
#include "fei/bounds.hpp"
#include "fei/measures.hpp"

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace fei
{

/// Composite functions put source variables first and padding variables last.

/// h(x, y) = f(x) g(y) on n_f + n_g variables.
BooleanFunction tensor( const BooleanFunction& f, const BooleanFunction& g );

/// g(x, y) = f(x) when y_1 = ... = y_k = -1, else +1. Variables y are n+1..n+k.
BooleanFunction and_pad( const BooleanFunction& f, unsigned k );

/// h(x, x_{n+1}) = x_{n+1} f(x).
BooleanFunction balance_extend( const BooleanFunction& f );

/// g = f(x) * max(y_1, z_1) * ... * max(y_k, z_k); the pair (y_j, z_j) occupies
/// variables n+2j-1 and n+2j.
BooleanFunction max_pad( const BooleanFunction& f, unsigned k );

struct MetricRecord
{
  unsigned n = 0;
  double entropy = 0;
  double influence = 0;
  double min_entropy = 0;
  double variance = 0;
  std::string influence_exact;
};

MetricRecord metrics_of( const SpectralProfile& p );

/// An identity or inequality checked against a construction's output.
struct IdentityCheck
{
  std::string name;
  double expected = 0;
  double observed = 0;
  double residual = 0;
  bool exact = false;
  bool asserted = true;
  bool holds = true;
};

struct ConstructionReport
{
  std::string operation;
  std::vector<MetricRecord> inputs;
  MetricRecord output;
  std::vector<IdentityCheck> checks;

  bool all_hold() const;
};

void to_json( nlohmann::json& j, const MetricRecord& r );
void to_json( nlohmann::json& j, const IdentityCheck& c );
void to_json( nlohmann::json& j, const ConstructionReport& r );

ConstructionReport tensor_report( const BooleanFunction& f, const BooleanFunction& g );
/// Identities are asserted only for balanced f; otherwise listed with asserted = false.
ConstructionReport and_pad_report( const BooleanFunction& f, unsigned k );
ConstructionReport balance_extend_report( const BooleanFunction& f );
ConstructionReport max_pad_report( const BooleanFunction& f, unsigned k );

/// Exact value 2^{-k} (k + I[f]).
Dyadic and_pad_influence_formula( const Dyadic& source_influence, unsigned k );
/// 2^{-k-3} (2k + 2 + H[f]).
double and_pad_entropy_floor( double source_entropy, unsigned k );

struct TensorStep
{
  unsigned iteration = 0;
  unsigned n = 0;
  double entropy = 0;
  double influence = 0;
  double min_entropy = 0;
  double ratio = 0;
  /// s(n_k) / 2^k for the supplied sublinear term.
  double scaled_term = 0;
};

/// f_0 = f, f_{i+1} = f_i (x) f_i. Returns iterations + 1 records.
std::vector<TensorStep> self_tensor_iterate( const BooleanFunction& f, unsigned iterations,
                                             const std::function<double( double )>& sublinear = {} );

void to_json( nlohmann::json& j, const TensorStep& s );

} // namespace fei
