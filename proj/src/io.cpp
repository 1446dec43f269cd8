#include "fei/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace fei
{

parse_error::parse_error( const std::string& what, std::size_t line, std::size_t column )
    : std::runtime_error( "line " + std::to_string( line ) + ", column " + std::to_string( column ) + ": " + what ),
      line_( line ),
      column_( column )
{
}

namespace
{

std::string_view trim_cr( std::string_view s )
{
  while ( !s.empty() && ( s.back() == '\r' || s.back() == ' ' || s.back() == '\t' ) )
  {
    s.remove_suffix( 1 );
  }
  return s;
}

} // namespace

BooleanFunction parse_truth_table( std::string_view text )
{
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while ( start <= text.size() )
  {
    const auto end = text.find( '\n', start );
    const auto stop = end == std::string_view::npos ? text.size() : end;
    lines.push_back( trim_cr( text.substr( start, stop - start ) ) );
    if ( end == std::string_view::npos )
    {
      break;
    }
    start = end + 1;
  }
  while ( !lines.empty() && lines.back().empty() )
  {
    lines.pop_back();
  }
  if ( lines.empty() )
  {
    throw parse_error( "empty truth table", 1, 1 );
  }
  const auto header = lines[0];
  if ( header.substr( 0, 2 ) != "n=" )
  {
    throw parse_error( "expected header 'n=<k>'", 1, 1 );
  }
  unsigned n = 0;
  const auto* first = header.data() + 2;
  const auto* last = header.data() + header.size();
  const auto [ptr, ec] = std::from_chars( first, last, n );
  if ( ec != std::errc() || ptr != last )
  {
    throw parse_error( "invalid variable count", 1, 3 + static_cast<std::size_t>( ptr - first ) );
  }
  if ( n > max_dense_vars )
  {
    throw parse_error( "variable count exceeds dense-table limit", 1, 3 );
  }
  if ( lines.size() < 2 )
  {
    throw parse_error( "missing table line", 2, 1 );
  }
  if ( lines.size() > 2 )
  {
    throw parse_error( "unexpected content after table line", 3, 1 );
  }
  const auto body = lines[1];
  const std::size_t expected = std::size_t( 1 ) << n;
  std::vector<std::int8_t> table;
  table.reserve( expected );
  for ( std::size_t i = 0; i < body.size(); ++i )
  {
    const char c = body[i];
    if ( c != '+' && c != '-' )
    {
      throw parse_error( std::string( "unexpected character '" ) + c + "'", 2, i + 1 );
    }
    if ( i >= expected )
    {
      throw parse_error( "table longer than 2^n entries", 2, i + 1 );
    }
    table.push_back( c == '+' ? 1 : -1 );
  }
  if ( table.size() != expected )
  {
    throw parse_error( "table has " + std::to_string( table.size() ) + " entries, expected " + std::to_string( expected ),
                       2, body.size() + 1 );
  }
  return BooleanFunction( n, std::move( table ) );
}

std::string format_truth_table( const BooleanFunction& f )
{
  return "n=" + std::to_string( f.num_vars() ) + "\n" + f.to_string() + "\n";
}

std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw std::runtime_error( "cannot open '" + path + "'" );
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file( const std::string& path, std::string_view content )
{
  std::ofstream out( path, std::ios::binary | std::ios::trunc );
  if ( !out )
  {
    throw std::runtime_error( "cannot write '" + path + "'" );
  }
  out.write( content.data(), static_cast<std::streamsize>( content.size() ) );
  if ( !out )
  {
    throw std::runtime_error( "write failed for '" + path + "'" );
  }
}

BooleanFunction read_truth_table( const std::string& path )
{
  return parse_truth_table( read_file( path ) );
}

void write_truth_table( const std::string& path, const BooleanFunction& f )
{
  write_file( path, format_truth_table( f ) );
}

std::string subset_to_string( std::uint64_t mask )
{
  std::string out = "{";
  bool first = true;
  for ( unsigned i = 0; mask >> i; ++i )
  {
    if ( ( mask >> i ) & 1u )
    {
      if ( !first )
      {
        out += ',';
      }
      out += std::to_string( i + 1 );
      first = false;
    }
  }
  return out + "}";
}

void write_spectrum_csv( std::ostream& os, const Spectrum& s )
{
  os << "mask,subset,numerator,value\n";
  std::ostringstream value;
  value << std::setprecision( 17 );
  for ( std::uint64_t m = 0; m < s.size(); ++m )
  {
    value.str( {} );
    value << s.value( m );
    os << m << ",\"" << subset_to_string( m ) << "\"," << s.numerator( m ) << ',' << value.str() << '\n';
  }
}

} // namespace fei
