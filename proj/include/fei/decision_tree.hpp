#pragma once

#include "fei/bounds.hpp"
#include "fei/boolean_function.hpp"
#include "fei/dyadic.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace fei
{

struct TreeNode
{
  /// 0 for a leaf, otherwise the 1-based queried variable.
  unsigned var = 0;
  /// Leaf output, +1 or -1.
  int value = 1;
  /// Subtree for x_var = +1.
  std::size_t left = 0;
  /// Subtree for x_var = -1.
  std::size_t right = 0;

  bool is_leaf() const { return var == 0; }
  friend bool operator==( const TreeNode&, const TreeNode& ) = default;
};

/*! \brief Decision tree with +-1 leaves, stored as an arena.

  Children always have larger indices than their parent and no variable is
  queried twice on a root-to-leaf path; both are checked on construction.
*/
class DecisionTree
{
public:
  static DecisionTree leaf( int value );
  static DecisionTree query( unsigned var, const DecisionTree& left, const DecisionTree& right );

  DecisionTree( std::vector<TreeNode> nodes, std::size_t root = 0 );

  std::size_t root() const { return root_; }
  const TreeNode& node( std::size_t v ) const { return nodes_.at( v ); }
  const std::vector<TreeNode>& nodes() const { return nodes_; }

  /// Nodes reachable from the root, in pre-order.
  std::vector<std::size_t> preorder() const;
  /// Depth of every node (root = 0); unreachable nodes get 0.
  std::vector<unsigned> depths() const;

  unsigned max_var() const;
  unsigned depth() const;
  std::size_t size() const;
  std::size_t leaf_count() const;
  std::size_t query_count() const;

  int evaluate( std::uint64_t m ) const;
  int evaluate_from( std::size_t v, std::uint64_t m ) const;

  DecisionTree subtree( std::size_t v ) const;

  friend bool operator==( const DecisionTree&, const DecisionTree& ) = default;

private:
  void validate() const;

  std::vector<TreeNode> nodes_;
  std::size_t root_ = 0;
};

/// `(xI <left> <right>)` with leaves `1` / `-1`; left is the x_I = +1 branch.
DecisionTree parse_tree( std::string_view text );
std::string serialize_tree( const DecisionTree& t );

/// n = 0 means t.max_var().
BooleanFunction tree_to_function( const DecisionTree& t, unsigned n = 0 );
/// Function computed by the subtree at v, over the ambient n variables.
BooleanFunction subtree_function( const DecisionTree& t, std::size_t v, unsigned n );

/// Cov(g, h) of the children of query node v: sum over nonempty S of g^(S) h^(S).
Dyadic node_cov( const DecisionTree& t, std::size_t v, unsigned n = 0 );
/// sum_v Cov[v] 2^{-d(v)}
Dyadic tree_cov( const DecisionTree& t, unsigned n = 0 );
/// Cov(g, h) + (Cov[T_0] + Cov[T_1]) / 2
Dyadic tree_cov_recursive( const DecisionTree& t, unsigned n = 0 );

/// a_i(T), i 1-based.
unsigned read_multiplicity( const DecisionTree& t, unsigned i );
/// a_1..a_n (entry 0 is a_1); n = 0 means t.max_var().
std::vector<unsigned> read_profile( const DecisionTree& t, unsigned n = 0 );
unsigned max_read( const DecisionTree& t );
bool is_read_k( const DecisionTree& t, unsigned k );

/// max_{i in S} a_i(T); throws domain_error if some a_i = 0.
unsigned m_T( const DecisionTree& t, std::uint64_t subset );
/// 2 sum_{i in S} sqrt(a_i(T)); throws domain_error if some a_i = 0.
double sq_T( const DecisionTree& t, std::uint64_t subset );

struct CovBoundsReport
{
  Dyadic cov;
  unsigned k = 0;
  /// (a) m_T form, (b) sq_T form, (c) 2 sqrt(k) I, (d) (k-1) Var.
  std::vector<BoundCertificate> certificates;
  /// Cov[T] <= log2(k) Var(f), never asserted.
  BoundCertificate log_k_conjecture;
  /// Cov / Var (0 when Var = 0).
  double cov_over_var = 0;

  bool passed() const;
};

CovBoundsReport cov_bounds_report( const DecisionTree& t, unsigned n = 0 );
void to_json( nlohmann::json& j, const CovBoundsReport& r );

/// Query nodes with at least one leaf child.
std::size_t boundary_size( const DecisionTree& t );
/// Query nodes whose children are both query nodes.
std::vector<std::size_t> inner_nodes( const DecisionTree& t );

/// ||f^||_1 <= boundary_size - sum_{inner v} |Cov(g_v, h_v)|, decided exactly.
BoundCertificate l1_tree_bound( const DecisionTree& t, unsigned n = 0 );

/// g^(S)^2 + h^(S)^2 = 2 (f^(S)^2 + f^(S u {r})^2) for every S avoiding the root variable r.
BoundCertificate www_split_identity( const DecisionTree& t, unsigned n = 0 );

struct RandomTreeParams
{
  unsigned n = 4;
  unsigned max_depth = 4;
  double leaf_probability = 0.2;
  /// Largest a_i(T) allowed.
  unsigned read_budget = 1;
};

/*! \brief Seeded recursive generator.

  At each node: emit a uniform +-1 leaf if the depth is max_depth, if no
  variable is available, or (below the root) with leaf_probability;
  otherwise query a uniform choice among variables that are not on the
  current path and still below the read budget, then build left then right.
*/
DecisionTree random_tree( const RandomTreeParams& params, std::mt19937_64& rng );

/// Complete tree on x_1..x_n computing chi_[n].
DecisionTree full_parity_tree( unsigned n );

struct TreeStats
{
  unsigned depth = 0;
  std::size_t size = 0;
  std::size_t leaves = 0;
  std::size_t boundary = 0;
  std::size_t inner = 0;
  unsigned max_read = 0;
  std::vector<unsigned> read_profile;
};

TreeStats tree_stats( const DecisionTree& t, unsigned n = 0 );
std::string tree_stats_csv_header();
std::string tree_stats_csv_row( const TreeStats& s );

} // namespace fei
