#include "fei/protocol.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>

namespace fei
{

ProtocolCodebook::ProtocolCodebook( unsigned n, std::string alphabet, std::vector<std::string> codewords )
    : n_( n ), alphabet_( std::move( alphabet ) ), codes_( std::move( codewords ) )
{
  if ( alphabet_.size() < 2 )
  {
    throw std::invalid_argument( "alphabet needs at least two symbols" );
  }
  if ( codes_.size() != ( std::size_t( 1 ) << n_ ) )
  {
    throw std::invalid_argument( "codebook needs one codeword per subset" );
  }
  if ( !codes_[0].empty() )
  {
    throw std::invalid_argument( "the empty set must map to the empty string" );
  }
  for ( const auto& c : codes_ )
  {
    if ( c.find_first_not_of( alphabet_ ) != std::string::npos )
    {
      throw std::invalid_argument( "codeword uses a symbol outside the alphabet" );
    }
  }
}

std::optional<std::uint64_t> ProtocolCodebook::decode( const std::string& codeword ) const
{
  for ( std::uint64_t s = 0; s < codes_.size(); ++s )
  {
    if ( codes_[s] == codeword )
    {
      return s;
    }
  }
  return std::nullopt;
}

PrefixReport validate_prefix_free( const ProtocolCodebook& p, const SpectralDistribution& d )
{
  if ( d.size() != p.size() )
  {
    throw std::invalid_argument( "codebook and distribution have different variable counts" );
  }
  std::vector<std::pair<std::string_view, std::uint64_t>> words;
  PrefixReport r;
  const double q = static_cast<double>( p.alphabet_size() );
  for ( std::uint64_t s = 1; s < p.size(); ++s )
  {
    if ( d.prob( s ) > 0.0 )
    {
      words.emplace_back( p.encode( s ), s );
      r.kraft_sum += std::pow( q, -static_cast<double>( p.length( s ) ) );
    }
  }
  // after sorting, a word that prefixes another prefixes its successor
  std::sort( words.begin(), words.end() );
  for ( std::size_t i = 1; i < words.size(); ++i )
  {
    const auto& a = words[i - 1].first;
    const auto& b = words[i].first;
    if ( b.substr( 0, a.size() ) == a )
    {
      r.prefix_free = false;
      r.conflict = std::make_pair( words[i - 1].second, words[i].second );
      break;
    }
  }
  return r;
}

Dyadic expected_cost_exact( const ProtocolCodebook& p, const SpectralDistribution& d )
{
  int128 acc = 0;
  for ( std::uint64_t s = 1; s < p.size(); ++s )
  {
    acc += static_cast<int128>( d.exact_numerator( s ) ) * static_cast<int128>( p.length( s ) );
  }
  return Dyadic::from_ratio( acc, 2 * static_cast<int>( d.num_vars() ) );
}

double expected_cost( const ProtocolCodebook& p, const SpectralDistribution& d )
{
  if ( d.is_exact() )
  {
    return expected_cost_exact( p, d ).to_double();
  }
  double acc = 0.0;
  for ( std::uint64_t s = 1; s < p.size(); ++s )
  {
    acc += d.prob( s ) * static_cast<double>( p.length( s ) );
  }
  return acc;
}

BoundCertificate www_lemma_check( const ProtocolCodebook& p, const SpectralProfile& f )
{
  const double cost = expected_cost( p, f.distribution );
  const double logq = std::log2( static_cast<double>( p.alphabet_size() ) );
  return make_certificate( "www_lemma", f.entropy, logq * cost + 2.0 * f.influence,
                           { { "alphabet_size", static_cast<double>( p.alphabet_size() ) },
                             { "expected_cost", cost },
                             { "I", f.influence } } );
}

BoundCertificate shannon_conditional_check( const ProtocolCodebook& p, const SpectralProfile& f )
{
  const auto& d = f.distribution;
  const double rest = d.mass() - d.prob( 0 );
  if ( rest <= 0.0 )
  {
    return not_applicable( "shannon_conditional", "no mass on nonempty subsets" );
  }
  double h = 0.0, cost = 0.0;
  for ( std::uint64_t s = 1; s < d.size(); ++s )
  {
    const double q = d.prob( s ) / rest;
    if ( q > 0.0 )
    {
      h -= q * std::log2( q );
      cost += q * static_cast<double>( p.length( s ) );
    }
  }
  const double logq = std::log2( static_cast<double>( p.alphabet_size() ) );
  return make_certificate( "shannon_conditional", h, logq * cost, { { "conditional_cost", cost } } );
}

unsigned index_width( std::size_t s )
{
  if ( s == 0 )
  {
    throw std::invalid_argument( "index_width needs s >= 1" );
  }
  return static_cast<unsigned>( std::bit_width( s - 1 ) );
}

namespace
{

void append_bits( std::string& out, std::uint64_t value, unsigned width )
{
  for ( unsigned i = width; i-- > 0; )
  {
    out += ( ( value >> i ) & 1u ) ? '1' : '0';
  }
}

std::string trivial_codeword( std::uint64_t s, unsigned n )
{
  std::string out( n, '0' );
  for ( unsigned i = 0; i < n; ++i )
  {
    if ( ( s >> i ) & 1u )
    {
      out[i] = '1';
    }
  }
  return out;
}

} // namespace

ProtocolCodebook trivial_protocol( unsigned n )
{
  check_dense_limit( n );
  std::vector<std::string> codes( std::size_t( 1 ) << n );
  for ( std::uint64_t s = 1; s < codes.size(); ++s )
  {
    codes[s] = trivial_codeword( s, n );
  }
  return ProtocolCodebook( n, "01", std::move( codes ) );
}

ProtocolCodebook tribes_protocol( unsigned w, unsigned s )
{
  if ( w == 0 || s == 0 )
  {
    throw std::invalid_argument( "tribes_protocol needs w, s >= 1" );
  }
  const unsigned n = w * s;
  check_dense_limit( n );
  const unsigned iw = index_width( s );
  const std::uint64_t block = ( std::uint64_t( 1 ) << w ) - 1;
  std::vector<std::string> codes( std::size_t( 1 ) << n );
  for ( std::uint64_t m = 1; m < codes.size(); ++m )
  {
    std::string c;
    for ( unsigned i = 0; i < s; ++i )
    {
      const std::uint64_t part = ( m >> ( i * w ) ) & block;
      if ( part == 0 )
      {
        continue;
      }
      append_bits( c, i, iw );
      for ( unsigned j = 0; j < w; ++j )
      {
        c += ( ( part >> j ) & 1u ) ? '1' : '0';
      }
    }
    c += terminator_symbol;
    codes[m] = std::move( c );
  }
  return ProtocolCodebook( n, std::string( "01" ) + terminator_symbol, std::move( codes ) );
}

ProtocolCodebook readk_dnf_protocol( const Dnf& d, CoverMeasure measure )
{
  const unsigned n = d.num_vars();
  check_dense_limit( n );
  const unsigned iw = index_width( d.num_clauses() );
  const std::uint64_t support = d.support_mask();
  bool escaped = false;
  std::vector<std::string> codes( std::size_t( 1 ) << n );
  for ( std::uint64_t m = 1; m < codes.size(); ++m )
  {
    if ( ( m & support ) != m )
    {
      codes[m] = escape_symbol + trivial_codeword( m, n );
      escaped = true;
      continue;
    }
    std::string c;
    for ( auto i : smallest_cover( d, m, measure ) )
    {
      append_bits( c, i, iw );
      for ( const auto& lit : d.clause( i ) )
      {
        c += ( ( m >> ( lit.var - 1 ) ) & 1u ) ? '1' : '0';
      }
    }
    c += terminator_symbol;
    codes[m] = std::move( c );
  }
  std::string alphabet = std::string( "01" ) + terminator_symbol;
  if ( escaped )
  {
    alphabet += escape_symbol;
  }
  return ProtocolCodebook( n, std::move( alphabet ), std::move( codes ) );
}

bool ProtocolReport::passed() const
{
  return prefix.prefix_free && fei::passed( www_lemma ) && fei::passed( shannon );
}

ProtocolReport price_protocol( std::string kind, const ProtocolCodebook& p, const SpectralProfile& f )
{
  ProtocolReport r;
  r.kind = std::move( kind );
  r.alphabet_size = p.alphabet_size();
  const auto exact = expected_cost_exact( p, f.distribution );
  r.expected_cost = exact.to_double();
  r.expected_cost_exact = exact.to_string();
  r.influence = f.influence;
  r.entropy = f.entropy;
  r.cost_over_influence = f.influence > 0 ? r.expected_cost / f.influence : 0.0;
  r.prefix = validate_prefix_free( p, f.distribution );
  r.www_lemma = www_lemma_check( p, f );
  r.shannon = shannon_conditional_check( p, f );
  return r;
}

void to_json( nlohmann::json& j, const PrefixReport& r )
{
  j = nlohmann::json{ { "prefix_free", r.prefix_free }, { "kraft_sum", r.kraft_sum } };
  if ( r.conflict )
  {
    j["conflict"] = { r.conflict->first, r.conflict->second };
  }
}

void to_json( nlohmann::json& j, const ProtocolReport& r )
{
  j = nlohmann::json{ { "kind", r.kind },
                      { "alphabet_size", r.alphabet_size },
                      { "expected_cost", r.expected_cost },
                      { "expected_cost_exact", r.expected_cost_exact },
                      { "H", r.entropy },
                      { "I", r.influence },
                      { "cost_over_influence", r.cost_over_influence },
                      { "prefix", r.prefix },
                      { "www_lemma", r.www_lemma },
                      { "shannon", r.shannon },
                      { "passed", r.passed() } };
}

void write_codebook_csv( std::ostream& os, const ProtocolCodebook& p )
{
  os << "mask,codeword,length\n";
  for ( std::uint64_t s = 0; s < p.size(); ++s )
  {
    os << s << ',' << p.encode( s ) << ',' << p.length( s ) << '\n';
  }
}

} // namespace fei
