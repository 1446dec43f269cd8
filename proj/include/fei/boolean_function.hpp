#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fei
{

/// Largest variable count for dense tables.
inline constexpr unsigned max_dense_vars = 31;

using mask_t = std::uint32_t;

/// Thrown when a construction would exceed the dense-table limit.
class capacity_error : public std::length_error
{
public:
  using std::length_error::length_error;
};

/*! \brief Function {-1,1}^n -> {-1,1} stored as a dense truth table.

  Entry m is f(x) where bit i of m set means x_{i+1} = -1 and clear means
  x_{i+1} = +1. Values are stored as +1 / -1.
*/
class BooleanFunction
{
public:
  /// Constant +1 on n variables.
  explicit BooleanFunction( unsigned n );
  BooleanFunction( unsigned n, std::vector<std::int8_t> table );

  unsigned num_vars() const { return n_; }
  std::uint64_t size() const { return table_.size(); }

  int operator()( std::uint64_t m ) const { return table_[m]; }
  std::span<const std::int8_t> table() const { return table_; }

  /// Number of inputs where f = -1.
  std::uint64_t count_minus() const;

  /// Variable-permuted and input-negated copy: result(m) = f(perm(m ^ flip)).
  /// perm[i] gives the source position of variable i.
  BooleanFunction transformed( std::span<const unsigned> perm, mask_t flip ) const;

  /// Table as a string over {+,-}.
  std::string to_string() const;
  static BooleanFunction from_string( unsigned n, std::string_view pm );

  /// Bit m of index is set when f(m) = -1 (only n <= 6).
  std::uint64_t to_index() const;
  static BooleanFunction from_index( unsigned n, std::uint64_t index );

  friend bool operator==( const BooleanFunction&, const BooleanFunction& ) = default;

private:
  unsigned n_;
  std::vector<std::int8_t> table_;
};

/*! \brief Real-valued function on the hypercube (same index convention). */
class RealFunction
{
public:
  RealFunction( unsigned n, std::vector<double> table );

  unsigned num_vars() const { return n_; }
  double operator()( std::uint64_t m ) const { return table_[m]; }
  std::span<const double> table() const { return table_; }

private:
  unsigned n_;
  std::vector<double> table_;
};

void check_dense_limit( unsigned n );

/* named functions */
BooleanFunction constant_function( unsigned n, int value = 1 );
/// x_i, i is 1-based.
BooleanFunction dictator( unsigned n, unsigned i );
/// chi_S for the subset mask S.
BooleanFunction character( unsigned n, mask_t subset );
BooleanFunction parity( unsigned n );
/// Majority of an odd number of variables.
BooleanFunction majority( unsigned n );
/// max(x1, x2) = 1/2 + x1/2 + x2/2 - x1 x2/2; -1 only when both inputs are -1.
BooleanFunction max_function();
/// -1 exactly when all inputs are -1.
BooleanFunction and_function( unsigned n );

BooleanFunction random_function( unsigned n, std::mt19937_64& rng );

/// (x1 + ... + xn) / sqrt(n); unit L2 norm, used for the weak-FEI tightness demo.
RealFunction normalized_sum( unsigned n );

} // namespace fei
