#include "fei/dnf.hpp"

#include "fei/io.hpp"
#include "fei/measures.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <optional>
#include <tuple>

namespace fei
{

namespace
{

struct ClauseMasks
{
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

ClauseMasks masks_of( const Clause& c )
{
  ClauseMasks m;
  for ( const auto& l : c )
  {
    ( l.positive ? m.pos : m.neg ) |= std::uint64_t( 1 ) << ( l.var - 1 );
  }
  return m;
}

} // namespace

Dnf::Dnf( unsigned n, std::vector<Clause> clauses ) : n_( n ), clauses_( std::move( clauses ) )
{
  if ( clauses_.empty() )
  {
    throw std::invalid_argument( "a DNF needs at least one clause" );
  }
  if ( n_ > 63 )
  {
    throw capacity_error( "DNF variable count above 63" );
  }
  for ( const auto& c : clauses_ )
  {
    if ( c.empty() )
    {
      throw std::invalid_argument( "empty clause" );
    }
    std::uint64_t seen = 0;
    for ( const auto& l : c )
    {
      if ( l.var == 0 || l.var > n_ )
      {
        throw std::invalid_argument( "literal x" + std::to_string( l.var ) + " outside 1.." + std::to_string( n_ ) );
      }
      const std::uint64_t bit = std::uint64_t( 1 ) << ( l.var - 1 );
      if ( seen & bit )
      {
        throw std::invalid_argument( "variable x" + std::to_string( l.var ) + " appears twice in a clause" );
      }
      seen |= bit;
    }
    masks_.push_back( seen );
  }
}

std::uint64_t Dnf::support_mask() const
{
  std::uint64_t m = 0;
  for ( auto c : masks_ )
  {
    m |= c;
  }
  return m;
}

unsigned Dnf::max_width() const
{
  std::size_t w = 0;
  for ( const auto& c : clauses_ )
  {
    w = std::max( w, c.size() );
  }
  return static_cast<unsigned>( w );
}

unsigned Dnf::min_width() const
{
  std::size_t w = clauses_.front().size();
  for ( const auto& c : clauses_ )
  {
    w = std::min( w, c.size() );
  }
  return static_cast<unsigned>( w );
}

int Dnf::evaluate( std::uint64_t m ) const
{
  for ( const auto& c : clauses_ )
  {
    const auto cm = masks_of( c );
    if ( ( m & cm.pos ) == cm.pos && ( m & cm.neg ) == 0 )
    {
      return -1;
    }
  }
  return 1;
}

Dnf parse_dnf( std::string_view text )
{
  std::size_t pos = 0, line = 1, col = 1;
  auto fail = [&]( const std::string& what, std::size_t l, std::size_t c ) { throw parse_error( what, l, c ); };
  auto advance = [&] {
    if ( text[pos] == '\n' )
    {
      ++line;
      col = 1;
    }
    else
    {
      ++col;
    }
    ++pos;
  };

  std::optional<unsigned> declared;
  std::vector<Clause> clauses;
  Clause current;
  std::uint64_t current_vars = 0;
  unsigned max_var = 0;
  bool at_line_start = true;
  auto close_clause = [&] {
    if ( !current.empty() )
    {
      clauses.push_back( std::move( current ) );
      current.clear();
      current_vars = 0;
    }
  };

  while ( pos < text.size() )
  {
    const char c = text[pos];
    if ( c == '\n' )
    {
      close_clause();
      advance();
      at_line_start = true;
      continue;
    }
    if ( std::isspace( static_cast<unsigned char>( c ) ) )
    {
      advance();
      continue;
    }
    if ( c == '#' )
    {
      while ( pos < text.size() && text[pos] != '\n' )
      {
        advance();
      }
      continue;
    }
    if ( c == '/' )
    {
      if ( current.empty() )
      {
        fail( "empty clause before '/'", line, col );
      }
      close_clause();
      advance();
      continue;
    }
    if ( c == 'n' && at_line_start && clauses.empty() && current.empty() && !declared )
    {
      const std::size_t l0 = line, c0 = col;
      advance();
      if ( pos >= text.size() || text[pos] != '=' )
      {
        fail( "expected '=' after 'n'", l0, c0 + 1 );
      }
      advance();
      unsigned n = 0;
      const std::size_t begin = pos;
      while ( pos < text.size() && std::isdigit( static_cast<unsigned char>( text[pos] ) ) )
      {
        n = n * 10 + static_cast<unsigned>( text[pos] - '0' );
        if ( n > 63 )
        {
          fail( "variable count too large", l0, c0 );
        }
        advance();
      }
      if ( pos == begin )
      {
        fail( "expected variable count", line, col );
      }
      declared = n;
      continue;
    }
    at_line_start = false;
    const std::size_t l0 = line, c0 = col;
    bool positive = true;
    if ( c == '!' )
    {
      positive = false;
      advance();
    }
    if ( pos >= text.size() || text[pos] != 'x' )
    {
      fail( "expected literal 'xI' or '!xI'", line, col );
    }
    advance();
    unsigned var = 0;
    const std::size_t begin = pos;
    while ( pos < text.size() && std::isdigit( static_cast<unsigned char>( text[pos] ) ) )
    {
      var = var * 10 + static_cast<unsigned>( text[pos] - '0' );
      if ( var > 63 )
      {
        fail( "variable index too large", l0, c0 );
      }
      advance();
    }
    if ( pos == begin )
    {
      fail( "expected positive variable index", line, col );
    }
    if ( var == 0 )
    {
      fail( "variable indices start at 1", l0, c0 );
    }
    if ( pos < text.size() && !std::isspace( static_cast<unsigned char>( text[pos] ) ) && text[pos] != '/' &&
         text[pos] != '#' )
    {
      fail( "unexpected character after literal", line, col );
    }
    const std::uint64_t bit = std::uint64_t( 1 ) << ( var - 1 );
    if ( current_vars & bit )
    {
      fail( "variable x" + std::to_string( var ) + " appears twice in a clause", l0, c0 );
    }
    if ( declared && var > *declared )
    {
      fail( "variable x" + std::to_string( var ) + " exceeds n=" + std::to_string( *declared ), l0, c0 );
    }
    current_vars |= bit;
    current.push_back( { var, positive } );
    max_var = std::max( max_var, var );
  }
  close_clause();
  if ( clauses.empty() )
  {
    fail( "no clauses", line, col );
  }
  return Dnf( declared.value_or( max_var ), std::move( clauses ) );
}

std::string serialize_dnf( const Dnf& d )
{
  std::string out = "n=" + std::to_string( d.num_vars() ) + "\n";
  for ( const auto& c : d.clauses() )
  {
    for ( std::size_t i = 0; i < c.size(); ++i )
    {
      out += ( i ? " " : "" );
      out += ( c[i].positive ? "x" : "!x" ) + std::to_string( c[i].var );
    }
    out += '\n';
  }
  return out;
}

BooleanFunction dnf_to_function( const Dnf& d )
{
  check_dense_limit( d.num_vars() );
  std::vector<ClauseMasks> cms;
  for ( const auto& c : d.clauses() )
  {
    cms.push_back( masks_of( c ) );
  }
  std::vector<std::int8_t> table( std::size_t( 1 ) << d.num_vars(), 1 );
  for ( std::uint64_t m = 0; m < table.size(); ++m )
  {
    for ( const auto& cm : cms )
    {
      if ( ( m & cm.pos ) == cm.pos && ( m & cm.neg ) == 0 )
      {
        table[m] = -1;
        break;
      }
    }
  }
  return BooleanFunction( d.num_vars(), std::move( table ) );
}

unsigned dnf_read_k( const Dnf& d )
{
  unsigned best = 0;
  for ( unsigned i = 0; i < d.num_vars(); ++i )
  {
    unsigned c = 0;
    for ( std::size_t j = 0; j < d.num_clauses(); ++j )
    {
      c += ( d.clause_mask( j ) >> i ) & 1u;
    }
    best = std::max( best, c );
  }
  return best;
}

RegularityWitness regularity( const Dnf& d, double c1, double c2 )
{
  constexpr double eps = 1e-9;
  RegularityWitness r;
  r.w = d.max_width();
  r.c1 = c1;
  r.c2 = c2;
  r.clauses = d.num_clauses();
  r.target_count = std::exp2( c2 * r.w );
  r.width_ok = d.min_width() + eps >= c1 * r.w;
  const double s = static_cast<double>( r.clauses );
  r.count_ok = s * 2.0 + eps >= r.target_count && s <= 2.0 * r.target_count + eps;
  r.holds = r.width_ok && r.count_ok;
  return r;
}

void to_json( nlohmann::json& j, const RegularityWitness& r )
{
  j = nlohmann::json{ { "w", r.w },
                      { "c1", r.c1 },
                      { "c2", r.c2 },
                      { "clauses", r.clauses },
                      { "target_count", r.target_count },
                      { "width_ok", r.width_ok },
                      { "count_ok", r.count_ok },
                      { "holds", r.holds } };
}

Dnf tribes( unsigned w, unsigned s )
{
  if ( w == 0 || s == 0 )
  {
    throw std::invalid_argument( "tribes needs w, s >= 1" );
  }
  if ( static_cast<std::uint64_t>( w ) * s > 63 )
  {
    throw capacity_error( "tribes with more than 63 variables" );
  }
  std::vector<Clause> clauses( s );
  for ( unsigned i = 0; i < s; ++i )
  {
    for ( unsigned j = 1; j <= w; ++j )
    {
      clauses[i].push_back( { i * w + j, true } );
    }
  }
  return Dnf( w * s, std::move( clauses ) );
}

unsigned unbiased_tribes_count( unsigned w )
{
  if ( w == 0 )
  {
    throw std::invalid_argument( "tribes width must be positive" );
  }
  // 1 - (1 - 2^-w)^s <= 1/2  <=>  2 (2^w - 1)^s >= 2^{ws}
  auto ok = [w]( unsigned s ) {
    if ( static_cast<std::uint64_t>( w ) * s <= 120 )
    {
      int128 lhs = 2;
      for ( unsigned i = 0; i < s; ++i )
      {
        lhs *= ( int128( 1 ) << w ) - 1;
      }
      return lhs >= ( int128( 1 ) << ( w * s ) );
    }
    return 1.0L + s * std::log2( 1.0L - std::exp2( -static_cast<long double>( w ) ) ) >= 0.0L;
  };
  unsigned s = 1;
  while ( ok( s + 1 ) )
  {
    ++s;
  }
  return s;
}

Dnf unbiased_tribes( unsigned w )
{
  return tribes( w, unbiased_tribes_count( w ) );
}

Dyadic tribes_coefficient( unsigned l, unsigned w, unsigned s )
{
  if ( l == 0 )
  {
    throw domain_error( "tribes_coefficient needs l >= 1; use the squared mean for the empty set" );
  }
  if ( l > s || w == 0 )
  {
    throw domain_error( "tribes_coefficient needs 1 <= l <= s and w >= 1" );
  }
  // 4 (2^w - 1)^{2(s-l)} / 2^{2ws}
  Dyadic acc( 4 );
  const Dyadic base = Dyadic::from_ratio( ( int128( 1 ) << w ) - 1, static_cast<int>( w ) );
  acc = acc.scaled( -2 * static_cast<int>( l * w ) );
  for ( unsigned i = 0; i < 2 * ( s - l ); ++i )
  {
    acc *= base;
  }
  return acc;
}

unsigned tribes_met( std::uint64_t subset, unsigned w, unsigned s )
{
  const std::uint64_t block = ( std::uint64_t( 1 ) << w ) - 1;
  unsigned l = 0;
  for ( unsigned i = 0; i < s; ++i )
  {
    l += ( subset >> ( i * w ) & block ) != 0;
  }
  return l;
}

CoverMeasure parse_cover_measure( std::string_view name )
{
  if ( name == "unique_variables" || name == "unique" )
  {
    return CoverMeasure::unique_variables;
  }
  if ( name == "clause_count" || name == "clauses" )
  {
    return CoverMeasure::clause_count;
  }
  if ( name == "total_width" || name == "width" )
  {
    return CoverMeasure::total_width;
  }
  throw std::invalid_argument( "unknown cover measure '" + std::string( name ) + "'" );
}

std::string to_string( CoverMeasure m )
{
  switch ( m )
  {
  case CoverMeasure::unique_variables:
    return "unique_variables";
  case CoverMeasure::clause_count:
    return "clause_count";
  case CoverMeasure::total_width:
    return "total_width";
  }
  return "";
}

namespace
{

void check_cover_guard( const Dnf& d )
{
  if ( d.num_clauses() > max_cover_clauses )
  {
    throw capacity_error( "cover enumeration limited to 20 clauses" );
  }
}

std::uint64_t union_of( const Dnf& d, std::uint64_t chosen )
{
  std::uint64_t u = 0;
  for ( std::size_t i = 0; i < d.num_clauses(); ++i )
  {
    if ( ( chosen >> i ) & 1u )
    {
      u |= d.clause_mask( i );
    }
  }
  return u;
}

std::vector<std::size_t> indices_of( std::uint64_t chosen )
{
  std::vector<std::size_t> out;
  for ( std::size_t i = 0; chosen >> i; ++i )
  {
    if ( ( chosen >> i ) & 1u )
    {
      out.push_back( i );
    }
  }
  return out;
}

} // namespace

std::vector<std::uint64_t> covers( const Dnf& d, std::uint64_t subset )
{
  check_cover_guard( d );
  std::vector<std::uint64_t> out;
  const std::uint64_t total = std::uint64_t( 1 ) << d.num_clauses();
  for ( std::uint64_t chosen = 1; chosen < total; ++chosen )
  {
    if ( ( union_of( d, chosen ) & subset ) == subset )
    {
      out.push_back( chosen );
    }
  }
  return out;
}

std::size_t cover_cost( const Dnf& d, const std::vector<std::size_t>& cover, CoverMeasure measure )
{
  switch ( measure )
  {
  case CoverMeasure::unique_variables:
  {
    std::uint64_t u = 0;
    for ( auto i : cover )
    {
      u |= d.clause_mask( i );
    }
    return static_cast<std::size_t>( std::popcount( u ) );
  }
  case CoverMeasure::clause_count:
    return cover.size();
  case CoverMeasure::total_width:
  {
    std::size_t w = 0;
    for ( auto i : cover )
    {
      w += d.clause( i ).size();
    }
    return w;
  }
  }
  return 0;
}

std::vector<std::size_t> smallest_cover( const Dnf& d, std::uint64_t subset, CoverMeasure measure )
{
  if ( subset == 0 )
  {
    throw std::invalid_argument( "smallest_cover needs a nonempty subset" );
  }
  check_cover_guard( d );
  if ( ( d.support_mask() & subset ) != subset )
  {
    throw no_cover_error( "subset is not contained in the clause variables" );
  }
  std::vector<std::size_t> best;
  std::size_t best_cost = 0;
  bool found = false;
  const std::uint64_t total = std::uint64_t( 1 ) << d.num_clauses();
  for ( std::uint64_t chosen = 1; chosen < total; ++chosen )
  {
    if ( ( union_of( d, chosen ) & subset ) != subset )
    {
      continue;
    }
    auto idx = indices_of( chosen );
    const auto cost = cover_cost( d, idx, measure );
    const auto size = idx.size();
    const auto best_size = best.size();
    if ( !found || std::tie( cost, size, idx ) < std::tie( best_cost, best_size, best ) )
    {
      best = std::move( idx );
      best_cost = cost;
      found = true;
    }
  }
  return best;
}

FamilyReport bfjkmr_family( const Dnf& d, unsigned k )
{
  if ( k == 0 )
  {
    throw std::invalid_argument( "bfjkmr_family needs k >= 1" );
  }
  const double n = d.num_vars();
  FamilyReport r;
  r.width_threshold = std::log2( 24.0 * k * n );
  std::uint64_t budget = 0;
  std::vector<std::uint64_t> members;
  for ( std::size_t i = 0; i < d.num_clauses(); ++i )
  {
    if ( static_cast<double>( d.clause( i ).size() ) > r.width_threshold + 1e-12 )
    {
      continue;
    }
    const auto mask = d.clause_mask( i );
    budget += std::uint64_t( 1 ) << std::popcount( mask );
    if ( budget > max_family_size )
    {
      throw capacity_error( "family exceeds 2^24 subsets" );
    }
    // all submasks of mask, including the empty set
    std::uint64_t sub = mask;
    while ( true )
    {
      members.push_back( sub );
      if ( sub == 0 )
      {
        break;
      }
      sub = ( sub - 1 ) & mask;
    }
  }
  std::sort( members.begin(), members.end() );
  members.erase( std::unique( members.begin(), members.end() ), members.end() );
  r.members = std::move( members );

  const SpectralDistribution dist( wht( dnf_to_function( d ) ) );
  for ( auto s : r.members )
  {
    const auto w = dist.weight( s );
    r.weight += w;
    if ( w > r.max_weight )
    {
      r.max_weight = w;
      r.argmax = s;
    }
  }
  const double kk = k;
  const std::map<std::string, double> params{ { "k", kk }, { "n", n }, { "width_threshold", r.width_threshold } };
  r.size_bound = make_certificate( "family_size", static_cast<double>( r.members.size() ), 24.0 * n * n * kk * kk, params );
  r.weight_bound = make_certificate( "family_weight", 1.0 / ( 4.0 * kk ), r.weight.to_double(), params );
  r.weight_bound.exact_rhs = r.weight.to_string();
  return r;
}

void to_json( nlohmann::json& j, const FamilyReport& r )
{
  j = nlohmann::json{ { "width_threshold", r.width_threshold },
                      { "size", r.members.size() },
                      { "weight", r.weight.to_double() },
                      { "weight_exact", r.weight.to_string() },
                      { "max_weight", r.max_weight.to_double() },
                      { "argmax", r.argmax },
                      { "size_bound", r.size_bound },
                      { "weight_bound", r.weight_bound } };
}

bool RegularFmeiReport::passed() const
{
  return std::all_of( certificates.begin(), certificates.end(), []( const auto& c ) { return fei::passed( c ); } );
}

RegularFmeiReport regular_fmei_report( const Dnf& d, double c1, double c2, unsigned k )
{
  RegularFmeiReport r;
  r.regularity = regularity( d, c1, c2 );
  r.read = dnf_read_k( d );
  r.k = k;
  r.family = bfjkmr_family( d, k );
  if ( !r.regularity.holds || r.read > k )
  {
    r.certificates.push_back( not_applicable( "regular_fmei", "formula is not (c1,c2)-regular read-k",
                                              { { "read", r.read }, { "k", k } } ) );
    return r;
  }
  const SpectralProfile p( dnf_to_function( d ) );
  const double n = p.n;
  const double kk = k;
  const std::map<std::string, double> params{ { "k", kk }, { "n", n }, { "w", r.regularity.w }, { "c1", c1 }, { "c2", c2 } };

  r.certificates.push_back( r.family.weight_bound );
  r.certificates.push_back( r.family.size_bound );

  auto max_coef = make_certificate( "family_max_coefficient", 1.0 / ( 96.0 * kk * kk * kk * n * n ),
                                    r.family.max_weight.to_double(), params );
  max_coef.exact_rhs = r.family.max_weight.to_string();
  r.certificates.push_back( max_coef );

  r.certificates.push_back( make_certificate( "min_entropy_bound", p.min_entropy,
                                              7.0 + 3.0 * std::log2( kk ) + 2.0 * std::log2( n ), params ) );

  const auto infl = variable_influences( p.function );
  Dyadic max_inf;
  for ( const auto& v : infl )
  {
    max_inf = std::max( max_inf, v );
  }
  const double w = r.regularity.w;
  auto per_var = make_certificate( "max_variable_influence", max_inf.to_double(), kk * std::exp2( -c1 * w + 1.0 ), params );
  per_var.exact_lhs = max_inf.to_string();
  per_var.subs.push_back(
      report_only( make_certificate( "max_variable_influence_c2", max_inf.to_double(), kk * std::exp2( -c2 * w + 1.0 ), params ) ) );
  r.certificates.push_back( per_var );

  auto kkl = make_certificate( "kkl_influence", max_inf.is_zero() ? 0.0 : -std::log2( max_inf.to_double() ), p.influence,
                               params );
  kkl.params["max_influence"] = max_inf.to_double();
  r.certificates.push_back( kkl );
  return r;
}

void to_json( nlohmann::json& j, const RegularFmeiReport& r )
{
  j = nlohmann::json{ { "regularity", r.regularity },
                      { "read", r.read },
                      { "k", r.k },
                      { "family", r.family },
                      { "certificates", r.certificates },
                      { "passed", r.passed() } };
}

Dnf cyclic_read2_dnf()
{
  std::vector<Clause> clauses;
  for ( unsigned i = 0; i < 4; ++i )
  {
    Clause c;
    for ( unsigned j = 0; j < 3; ++j )
    {
      c.push_back( { ( 2 * i + j ) % 8 + 1, true } );
    }
    clauses.push_back( c );
  }
  return Dnf( 8, std::move( clauses ) );
}

Dnf grid_read2_dnf()
{
  std::vector<Clause> clauses;
  for ( unsigned r = 0; r < 3; ++r )
  {
    clauses.push_back( { { 3 * r + 1, true }, { 3 * r + 2, true }, { 3 * r + 3, true } } );
  }
  for ( unsigned c = 0; c < 3; ++c )
  {
    clauses.push_back( { { c + 1, true }, { c + 4, true }, { c + 7, true } } );
  }
  return Dnf( 9, std::move( clauses ) );
}

} // namespace fei
