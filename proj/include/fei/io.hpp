#pragma once

#include "fei/boolean_function.hpp"
#include "fei/spectrum.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fei
{

/// Malformed input; line and column are 1-based (0 when unknown).
class parse_error : public std::runtime_error
{
public:
  parse_error( const std::string& what, std::size_t line, std::size_t column );

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/*! \brief Truth-table text format.

  Line 1 is `n=<k>`, line 2 holds 2^k characters from {+,-} where
  character m is f at input mask m ('+' = +1, bit i set means x_{i+1} = -1).
*/
BooleanFunction parse_truth_table( std::string_view text );
std::string format_truth_table( const BooleanFunction& f );

BooleanFunction read_truth_table( const std::string& path );
void write_truth_table( const std::string& path, const BooleanFunction& f );

/// `{1,3}` style rendering of a subset mask.
std::string subset_to_string( std::uint64_t mask );

/// CSV with columns mask,subset,numerator,value; coefficient = numerator / 2^n.
void write_spectrum_csv( std::ostream& os, const Spectrum& s );

std::string read_file( const std::string& path );
void write_file( const std::string& path, std::string_view content );

} // namespace fei
