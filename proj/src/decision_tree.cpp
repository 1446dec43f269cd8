#include "fei/decision_tree.hpp"

#include "fei/io.hpp"
#include "fei/measures.hpp"
#include "fei/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <sstream>

namespace fei
{

namespace
{

using Numerators = std::vector<std::int64_t>;

unsigned ambient( const DecisionTree& t, unsigned n )
{
  const unsigned need = t.max_var();
  if ( n == 0 )
  {
    return need;
  }
  if ( n < need )
  {
    throw std::invalid_argument( "tree queries x" + std::to_string( need ) + " but n = " + std::to_string( n ) );
  }
  check_dense_limit( n );
  return n;
}

/// Spectrum numerators (over 2^n) of every reachable subtree, built bottom-up.
std::vector<Numerators> subtree_numerators( const DecisionTree& t, unsigned n )
{
  std::vector<Numerators> out( t.nodes().size() );
  const std::size_t size = std::size_t( 1 ) << n;
  auto order = t.preorder();
  for ( auto it = order.rbegin(); it != order.rend(); ++it )
  {
    const auto& nd = t.node( *it );
    Numerators num( size, 0 );
    if ( nd.is_leaf() )
    {
      num[0] = nd.value * static_cast<std::int64_t>( size );
    }
    else
    {
      const auto& g = out[nd.left];
      const auto& h = out[nd.right];
      const std::uint64_t bit = std::uint64_t( 1 ) << ( nd.var - 1 );
      for ( std::uint64_t s = 0; s < size; ++s )
      {
        if ( s & bit )
        {
          continue;
        }
        num[s] = ( g[s] + h[s] ) / 2;
        num[s | bit] = ( g[s] - h[s] ) / 2;
      }
    }
    out[*it] = std::move( num );
  }
  return out;
}

Dyadic covariance( const Numerators& g, const Numerators& h, unsigned n )
{
  int128 acc = 0;
  for ( std::size_t s = 1; s < g.size(); ++s )
  {
    acc += static_cast<int128>( g[s] ) * h[s];
  }
  return Dyadic::from_ratio( acc, 2 * static_cast<int>( n ) );
}

Dyadic l1_of( const Numerators& f, unsigned n )
{
  int128 acc = 0;
  for ( auto v : f )
  {
    acc += v < 0 ? -static_cast<int128>( v ) : static_cast<int128>( v );
  }
  return Dyadic::from_ratio( acc, static_cast<int>( n ) );
}

class TreeParser
{
public:
  explicit TreeParser( std::string_view text ) : text_( text ) {}

  DecisionTree parse()
  {
    nodes_.clear();
    parse_node();
    skip_space();
    if ( pos_ < text_.size() )
    {
      fail( "unexpected trailing input" );
    }
    check_paths();
    return DecisionTree( std::move( nodes_ ) );
  }

private:
  std::size_t parse_node()
  {
    skip_space();
    if ( pos_ >= text_.size() )
    {
      fail( "unexpected end of input" );
    }
    const std::size_t index = nodes_.size();
    nodes_.emplace_back();
    positions_.push_back( pos_ );
    if ( text_[pos_] == '(' )
    {
      ++pos_;
      skip_space();
      if ( pos_ >= text_.size() || text_[pos_] != 'x' )
      {
        fail( "expected variable 'xI'" );
      }
      ++pos_;
      const std::size_t begin = pos_;
      unsigned var = 0;
      while ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
      {
        var = var * 10 + static_cast<unsigned>( text_[pos_] - '0' );
        if ( var > max_dense_vars )
        {
          fail( "variable index too large" );
        }
        ++pos_;
      }
      if ( pos_ == begin || var == 0 )
      {
        pos_ = begin;
        fail( "expected positive variable index" );
      }
      nodes_[index].var = var;
      const auto left = parse_node();
      nodes_[index].left = left;
      const auto right = parse_node();
      nodes_[index].right = right;
      skip_space();
      if ( pos_ >= text_.size() || text_[pos_] != ')' )
      {
        fail( "expected ')'" );
      }
      ++pos_;
    }
    else if ( text_.substr( pos_, 2 ) == "-1" )
    {
      nodes_[index].value = -1;
      pos_ += 2;
      expect_delimiter();
    }
    else if ( text_[pos_] == '1' )
    {
      nodes_[index].value = 1;
      pos_ += 1;
      expect_delimiter();
    }
    else
    {
      fail( "expected '(' or a leaf value 1 / -1" );
    }
    return index;
  }

  void expect_delimiter()
  {
    if ( pos_ < text_.size() && !std::isspace( static_cast<unsigned char>( text_[pos_] ) ) && text_[pos_] != ')' &&
         text_[pos_] != '(' )
    {
      fail( "malformed leaf" );
    }
  }

  void check_paths()
  {
    std::vector<std::size_t> stack{ 0 };
    std::vector<std::uint64_t> path( nodes_.size(), 0 );
    while ( !stack.empty() )
    {
      const auto v = stack.back();
      stack.pop_back();
      const auto& nd = nodes_[v];
      if ( nd.is_leaf() )
      {
        continue;
      }
      const std::uint64_t bit = std::uint64_t( 1 ) << ( nd.var - 1 );
      if ( path[v] & bit )
      {
        pos_ = positions_[v];
        fail( "variable x" + std::to_string( nd.var ) + " repeated on a root-to-leaf path" );
      }
      path[nd.left] = path[nd.right] = path[v] | bit;
      stack.push_back( nd.right );
      stack.push_back( nd.left );
    }
  }

  void skip_space()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      ++pos_;
    }
  }

  [[noreturn]] void fail( const std::string& what ) const
  {
    std::size_t line = 1, column = 1;
    for ( std::size_t i = 0; i < pos_ && i < text_.size(); ++i )
    {
      if ( text_[i] == '\n' )
      {
        ++line;
        column = 1;
      }
      else
      {
        ++column;
      }
    }
    throw parse_error( what, line, column );
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<TreeNode> nodes_;
  std::vector<std::size_t> positions_;
};

} // namespace

DecisionTree DecisionTree::leaf( int value )
{
  TreeNode nd;
  nd.value = value;
  return DecisionTree( { nd } );
}

DecisionTree DecisionTree::query( unsigned var, const DecisionTree& left, const DecisionTree& right )
{
  const auto l = left.subtree( left.root() );
  const auto r = right.subtree( right.root() );
  std::vector<TreeNode> nodes;
  nodes.reserve( 1 + l.nodes_.size() + r.nodes_.size() );
  TreeNode top;
  top.var = var;
  top.left = 1;
  top.right = 1 + l.nodes_.size();
  nodes.push_back( top );
  for ( auto nd : l.nodes_ )
  {
    if ( !nd.is_leaf() )
    {
      nd.left += 1;
      nd.right += 1;
    }
    nodes.push_back( nd );
  }
  for ( auto nd : r.nodes_ )
  {
    if ( !nd.is_leaf() )
    {
      nd.left += top.right;
      nd.right += top.right;
    }
    nodes.push_back( nd );
  }
  return DecisionTree( std::move( nodes ) );
}

DecisionTree::DecisionTree( std::vector<TreeNode> nodes, std::size_t root ) : nodes_( std::move( nodes ) ), root_( root )
{
  validate();
}

void DecisionTree::validate() const
{
  if ( root_ >= nodes_.size() )
  {
    throw std::invalid_argument( "tree root out of range" );
  }
  for ( std::size_t v = 0; v < nodes_.size(); ++v )
  {
    const auto& nd = nodes_[v];
    if ( nd.is_leaf() )
    {
      if ( nd.value != 1 && nd.value != -1 )
      {
        throw std::invalid_argument( "leaf value must be +1 or -1" );
      }
      continue;
    }
    if ( nd.var > max_dense_vars )
    {
      throw std::invalid_argument( "variable index too large" );
    }
    if ( nd.left <= v || nd.right <= v || nd.left >= nodes_.size() || nd.right >= nodes_.size() )
    {
      throw std::invalid_argument( "child index must follow its parent" );
    }
  }
  std::vector<std::pair<std::size_t, std::uint64_t>> stack{ { root_, 0 } };
  while ( !stack.empty() )
  {
    const auto [v, path] = stack.back();
    stack.pop_back();
    const auto& nd = nodes_[v];
    if ( nd.is_leaf() )
    {
      continue;
    }
    const std::uint64_t bit = std::uint64_t( 1 ) << ( nd.var - 1 );
    if ( path & bit )
    {
      throw std::invalid_argument( "variable x" + std::to_string( nd.var ) + " repeated on a root-to-leaf path" );
    }
    stack.push_back( { nd.right, path | bit } );
    stack.push_back( { nd.left, path | bit } );
  }
}

std::vector<std::size_t> DecisionTree::preorder() const
{
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack{ root_ };
  while ( !stack.empty() )
  {
    const auto v = stack.back();
    stack.pop_back();
    out.push_back( v );
    const auto& nd = nodes_[v];
    if ( !nd.is_leaf() )
    {
      stack.push_back( nd.right );
      stack.push_back( nd.left );
    }
  }
  return out;
}

std::vector<unsigned> DecisionTree::depths() const
{
  std::vector<unsigned> d( nodes_.size(), 0 );
  for ( auto v : preorder() )
  {
    const auto& nd = nodes_[v];
    if ( !nd.is_leaf() )
    {
      d[nd.left] = d[nd.right] = d[v] + 1;
    }
  }
  return d;
}

unsigned DecisionTree::max_var() const
{
  unsigned m = 0;
  for ( auto v : preorder() )
  {
    m = std::max( m, nodes_[v].var );
  }
  return m;
}

unsigned DecisionTree::depth() const
{
  const auto d = depths();
  unsigned m = 0;
  for ( auto v : preorder() )
  {
    m = std::max( m, d[v] );
  }
  return m;
}

std::size_t DecisionTree::size() const
{
  return preorder().size();
}

std::size_t DecisionTree::leaf_count() const
{
  std::size_t c = 0;
  for ( auto v : preorder() )
  {
    c += nodes_[v].is_leaf();
  }
  return c;
}

std::size_t DecisionTree::query_count() const
{
  return size() - leaf_count();
}

int DecisionTree::evaluate_from( std::size_t v, std::uint64_t m ) const
{
  while ( !nodes_[v].is_leaf() )
  {
    const auto& nd = nodes_[v];
    v = ( ( m >> ( nd.var - 1 ) ) & 1u ) ? nd.right : nd.left;
  }
  return nodes_[v].value;
}

int DecisionTree::evaluate( std::uint64_t m ) const
{
  return evaluate_from( root_, m );
}

DecisionTree DecisionTree::subtree( std::size_t v ) const
{
  std::vector<TreeNode> out;
  // pre-order copy keeps children after parents
  std::vector<std::size_t> remap( nodes_.size(), 0 );
  std::vector<std::size_t> stack{ v };
  std::vector<std::size_t> order;
  while ( !stack.empty() )
  {
    const auto u = stack.back();
    stack.pop_back();
    remap[u] = order.size();
    order.push_back( u );
    if ( !nodes_[u].is_leaf() )
    {
      stack.push_back( nodes_[u].right );
      stack.push_back( nodes_[u].left );
    }
  }
  out.reserve( order.size() );
  for ( auto u : order )
  {
    auto nd = nodes_[u];
    if ( !nd.is_leaf() )
    {
      nd.left = remap[nd.left];
      nd.right = remap[nd.right];
    }
    out.push_back( nd );
  }
  return DecisionTree( std::move( out ) );
}

DecisionTree parse_tree( std::string_view text )
{
  return TreeParser( text ).parse();
}

std::string serialize_tree( const DecisionTree& t )
{
  std::string out;
  auto emit = [&]( auto&& self, std::size_t v ) -> void {
    const auto& nd = t.node( v );
    if ( nd.is_leaf() )
    {
      out += nd.value == 1 ? "1" : "-1";
      return;
    }
    out += "(x" + std::to_string( nd.var ) + ' ';
    self( self, nd.left );
    out += ' ';
    self( self, nd.right );
    out += ')';
  };
  emit( emit, t.root() );
  return out;
}

BooleanFunction subtree_function( const DecisionTree& t, std::size_t v, unsigned n )
{
  n = ambient( t, n );
  std::vector<std::int8_t> table( std::size_t( 1 ) << n );
  for ( std::uint64_t m = 0; m < table.size(); ++m )
  {
    table[m] = static_cast<std::int8_t>( t.evaluate_from( v, m ) );
  }
  return BooleanFunction( n, std::move( table ) );
}

BooleanFunction tree_to_function( const DecisionTree& t, unsigned n )
{
  return subtree_function( t, t.root(), n );
}

Dyadic node_cov( const DecisionTree& t, std::size_t v, unsigned n )
{
  n = ambient( t, n );
  const auto& nd = t.node( v );
  if ( nd.is_leaf() )
  {
    return Dyadic( 0 );
  }
  const auto g = wht( subtree_function( t, nd.left, n ) );
  const auto h = wht( subtree_function( t, nd.right, n ) );
  return covariance( { g.numerators().begin(), g.numerators().end() },
                     { h.numerators().begin(), h.numerators().end() }, n );
}

Dyadic tree_cov( const DecisionTree& t, unsigned n )
{
  n = ambient( t, n );
  const auto num = subtree_numerators( t, n );
  const auto d = t.depths();
  Dyadic acc;
  for ( auto v : t.preorder() )
  {
    const auto& nd = t.node( v );
    if ( !nd.is_leaf() )
    {
      acc += covariance( num[nd.left], num[nd.right], n ).scaled( -static_cast<int>( d[v] ) );
    }
  }
  return acc;
}

Dyadic tree_cov_recursive( const DecisionTree& t, unsigned n )
{
  n = ambient( t, n );
  const auto num = subtree_numerators( t, n );
  std::vector<Dyadic> cov( t.nodes().size() );
  const auto order = t.preorder();
  for ( auto it = order.rbegin(); it != order.rend(); ++it )
  {
    const auto& nd = t.node( *it );
    if ( !nd.is_leaf() )
    {
      cov[*it] = covariance( num[nd.left], num[nd.right], n ) + ( cov[nd.left] + cov[nd.right] ).scaled( -1 );
    }
  }
  return cov[t.root()];
}

std::vector<unsigned> read_profile( const DecisionTree& t, unsigned n )
{
  n = std::max( n, t.max_var() );
  std::vector<unsigned> a( n, 0 );
  for ( auto v : t.preorder() )
  {
    const auto& nd = t.node( v );
    if ( !nd.is_leaf() )
    {
      ++a[nd.var - 1];
    }
  }
  return a;
}

unsigned read_multiplicity( const DecisionTree& t, unsigned i )
{
  if ( i == 0 )
  {
    throw std::out_of_range( "variable index is 1-based" );
  }
  const auto a = read_profile( t );
  return i <= a.size() ? a[i - 1] : 0;
}

unsigned max_read( const DecisionTree& t )
{
  const auto a = read_profile( t );
  return a.empty() ? 0 : *std::max_element( a.begin(), a.end() );
}

bool is_read_k( const DecisionTree& t, unsigned k )
{
  return max_read( t ) <= k;
}

namespace
{

std::vector<unsigned> members_checked( const DecisionTree& t, std::uint64_t subset )
{
  const auto a = read_profile( t );
  std::vector<unsigned> out;
  for ( unsigned i = 0; subset >> i; ++i )
  {
    if ( ( subset >> i ) & 1u )
    {
      if ( i >= a.size() || a[i] == 0 )
      {
        throw domain_error( "x" + std::to_string( i + 1 ) + " is never queried" );
      }
      out.push_back( a[i] );
    }
  }
  return out;
}

} // namespace

unsigned m_T( const DecisionTree& t, std::uint64_t subset )
{
  const auto a = members_checked( t, subset );
  return a.empty() ? 0 : *std::max_element( a.begin(), a.end() );
}

double sq_T( const DecisionTree& t, std::uint64_t subset )
{
  double acc = 0.0;
  for ( auto ai : members_checked( t, subset ) )
  {
    acc += std::sqrt( static_cast<double>( ai ) );
  }
  return 2.0 * acc;
}

bool CovBoundsReport::passed() const
{
  return std::all_of( certificates.begin(), certificates.end(), []( const auto& c ) { return fei::passed( c ); } );
}

CovBoundsReport cov_bounds_report( const DecisionTree& t, unsigned n )
{
  n = ambient( t, n );
  const auto f = tree_to_function( t, n );
  const SpectralProfile p( f );
  const auto a = read_profile( t, n );
  CovBoundsReport r;
  r.cov = tree_cov( t, n );
  r.k = a.empty() ? 0 : *std::max_element( a.begin(), a.end() );

  int128 m_sum = 0;
  double sq_sum = 0.0;
  for ( std::uint64_t s = 1; s < p.distribution.size(); ++s )
  {
    const auto e = p.distribution.exact_numerator( s );
    if ( e == 0 )
    {
      continue;
    }
    unsigned m = 0;
    double sq = 0.0;
    for ( unsigned i = 0; i < n; ++i )
    {
      if ( ( s >> i ) & 1u )
      {
        m = std::max( m, a[i] );
        sq += std::sqrt( static_cast<double>( a[i] ) );
      }
    }
    m_sum += static_cast<int128>( e ) * ( static_cast<int128>( m ) - 1 );
    sq_sum += 2.0 * sq * p.distribution.prob( s );
  }
  const double k = r.k;
  const std::map<std::string, double> params{ { "k", k }, { "n", static_cast<double>( n ) } };
  r.certificates.push_back(
      make_exact_certificate( "cov_le_m_weight", r.cov, Dyadic::from_ratio( m_sum, 2 * static_cast<int>( n ) ), params ) );
  r.certificates.push_back( make_certificate( "cov_le_sq_weight", r.cov.to_double(), sq_sum, params ) );
  r.certificates.push_back(
      make_certificate( "cov_le_2sqrtk_influence", r.cov.to_double(), 2.0 * std::sqrt( k ) * p.influence, params ) );
  r.certificates.push_back( make_exact_certificate(
      "cov_le_km1_variance", r.cov, Dyadic( static_cast<std::int64_t>( r.k ) - 1 ) * p.variance_exact, params ) );
  const double logk = r.k > 0 ? std::log2( k ) : 0.0;
  r.log_k_conjecture = report_only( make_certificate( "cov_le_logk_variance", r.cov.to_double(), logk * p.variance, params ) );
  r.cov_over_var = p.variance > 0 ? r.cov.to_double() / p.variance : 0.0;
  r.log_k_conjecture.params["cov_over_var"] = r.cov_over_var;
  return r;
}

void to_json( nlohmann::json& j, const CovBoundsReport& r )
{
  j = nlohmann::json{ { "cov", r.cov.to_double() },
                      { "cov_exact", r.cov.to_string() },
                      { "k", r.k },
                      { "certificates", r.certificates },
                      { "log_k_conjecture", r.log_k_conjecture },
                      { "cov_over_var", r.cov_over_var },
                      { "passed", r.passed() } };
}

std::size_t boundary_size( const DecisionTree& t )
{
  std::size_t c = 0;
  for ( auto v : t.preorder() )
  {
    const auto& nd = t.node( v );
    if ( !nd.is_leaf() && ( t.node( nd.left ).is_leaf() || t.node( nd.right ).is_leaf() ) )
    {
      ++c;
    }
  }
  return c;
}

std::vector<std::size_t> inner_nodes( const DecisionTree& t )
{
  std::vector<std::size_t> out;
  for ( auto v : t.preorder() )
  {
    const auto& nd = t.node( v );
    if ( !nd.is_leaf() && !t.node( nd.left ).is_leaf() && !t.node( nd.right ).is_leaf() )
    {
      out.push_back( v );
    }
  }
  return out;
}

BoundCertificate l1_tree_bound( const DecisionTree& t, unsigned n )
{
  if ( t.node( t.root() ).is_leaf() )
  {
    return not_applicable( "l1_tree_bound", "tree has no query node" );
  }
  n = ambient( t, n );
  const auto num = subtree_numerators( t, n );
  const auto& root = t.node( t.root() );
  const Dyadic l1 = l1_of( num[t.root()], n );
  Dyadic subtracted;
  const auto inner = inner_nodes( t );
  for ( auto v : inner )
  {
    const auto& nd = t.node( v );
    subtracted += covariance( num[nd.left], num[nd.right], n ).abs();
  }
  const auto boundary = static_cast<std::int64_t>( boundary_size( t ) );
  auto c = make_exact_certificate( "l1_tree_bound", l1, Dyadic( boundary ) - subtracted,
                                   { { "boundary_size", static_cast<double>( boundary ) },
                                     { "inner_nodes", static_cast<double>( inner.size() ) },
                                     { "inner_cov_sum", subtracted.to_double() } } );
  c.subs.push_back( make_exact_certificate( "l1_le_leaves", l1, Dyadic( static_cast<std::int64_t>( t.leaf_count() ) ) ) );
  const Dyadic root_cov = covariance( num[root.left], num[root.right], n ).abs();
  c.subs.push_back( make_exact_certificate( "l1_root_recursion", l1,
                                            l1_of( num[root.left], n ) + l1_of( num[root.right], n ) - root_cov ) );
  return c;
}

BoundCertificate www_split_identity( const DecisionTree& t, unsigned n )
{
  const auto& root = t.node( t.root() );
  if ( root.is_leaf() )
  {
    return not_applicable( "www_split_identity", "tree has no query node" );
  }
  n = ambient( t, n );
  const auto num = subtree_numerators( t, n );
  const auto& f = num[t.root()];
  const auto& g = num[root.left];
  const auto& h = num[root.right];
  const std::uint64_t bit = std::uint64_t( 1 ) << ( root.var - 1 );
  int128 mismatch = 0;
  std::uint64_t checked = 0;
  for ( std::uint64_t s = 0; s < f.size(); ++s )
  {
    if ( s & bit )
    {
      continue;
    }
    const int128 lhs = static_cast<int128>( g[s] ) * g[s] + static_cast<int128>( h[s] ) * h[s];
    const int128 rhs = 2 * ( static_cast<int128>( f[s] ) * f[s] + static_cast<int128>( f[s | bit] ) * f[s | bit] );
    mismatch += lhs > rhs ? lhs - rhs : rhs - lhs;
    ++checked;
  }
  auto c = make_exact_certificate( "www_split_identity", Dyadic::from_ratio( mismatch, 2 * static_cast<int>( n ) ), Dyadic( 0 ),
                                   { { "root_var", static_cast<double>( root.var ) },
                                     { "subsets_checked", static_cast<double>( checked ) } } );
  c.note = "lhs is the total absolute mismatch";
  return c;
}

DecisionTree random_tree( const RandomTreeParams& params, std::mt19937_64& rng )
{
  if ( params.n == 0 || params.n > max_dense_vars )
  {
    throw std::invalid_argument( "random_tree needs 1 <= n <= 31" );
  }
  std::vector<TreeNode> nodes;
  std::vector<unsigned> reads( params.n, 0 );
  std::bernoulli_distribution stop( params.leaf_probability );
  std::bernoulli_distribution sign( 0.5 );
  auto build = [&]( auto&& self, unsigned depth, std::uint64_t path ) -> std::size_t {
    const std::size_t index = nodes.size();
    nodes.emplace_back();
    std::vector<unsigned> avail;
    for ( unsigned i = 0; i < params.n; ++i )
    {
      if ( !( ( path >> i ) & 1u ) && reads[i] < params.read_budget )
      {
        avail.push_back( i );
      }
    }
    if ( depth >= params.max_depth || avail.empty() || ( depth > 0 && stop( rng ) ) )
    {
      nodes[index].value = sign( rng ) ? 1 : -1;
      return index;
    }
    std::uniform_int_distribution<std::size_t> pick( 0, avail.size() - 1 );
    const unsigned i = avail[pick( rng )];
    ++reads[i];
    nodes[index].var = i + 1;
    const auto left = self( self, depth + 1, path | ( std::uint64_t( 1 ) << i ) );
    nodes[index].left = left;
    const auto right = self( self, depth + 1, path | ( std::uint64_t( 1 ) << i ) );
    nodes[index].right = right;
    return index;
  };
  build( build, 0, 0 );
  return DecisionTree( std::move( nodes ) );
}

DecisionTree full_parity_tree( unsigned n )
{
  auto build = [&]( auto&& self, unsigned var, int sign ) -> DecisionTree {
    if ( var > n )
    {
      return DecisionTree::leaf( sign );
    }
    return DecisionTree::query( var, self( self, var + 1, sign ), self( self, var + 1, -sign ) );
  };
  return build( build, 1, 1 );
}

TreeStats tree_stats( const DecisionTree& t, unsigned n )
{
  TreeStats s;
  s.depth = t.depth();
  s.size = t.size();
  s.leaves = t.leaf_count();
  s.boundary = boundary_size( t );
  s.inner = inner_nodes( t ).size();
  s.read_profile = read_profile( t, n );
  s.max_read = s.read_profile.empty() ? 0 : *std::max_element( s.read_profile.begin(), s.read_profile.end() );
  return s;
}

std::string tree_stats_csv_header()
{
  return "depth,size,leaves,boundary,inner,max_read,read_profile";
}

std::string tree_stats_csv_row( const TreeStats& s )
{
  std::ostringstream os;
  os << s.depth << ',' << s.size << ',' << s.leaves << ',' << s.boundary << ',' << s.inner << ',' << s.max_read << ",\"";
  for ( std::size_t i = 0; i < s.read_profile.size(); ++i )
  {
    os << ( i ? " " : "" ) << s.read_profile[i];
  }
  os << '"';
  return os.str();
}

} // namespace fei
