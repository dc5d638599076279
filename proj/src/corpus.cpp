#include "npnsig/corpus.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

namespace npnsig
{

namespace
{

[[noreturn]] void fail( const std::string& name, uint64_t line, const std::string& what )
{
  throw corpus_error( name + ":" + std::to_string( line ) + ": " + what );
}

std::string_view strip( std::string_view text )
{
  const std::size_t comment = std::min( text.find( '#' ), text.size() );
  text = text.substr( 0, comment );
  const auto begin = text.find_first_not_of( " \t\r" );
  if ( begin == std::string_view::npos )
  {
    return {};
  }
  return text.substr( begin, text.find_last_not_of( " \t\r" ) - begin + 1 );
}

} // namespace

corpus read_corpus( std::istream& in, const std::string& name, std::optional<uint32_t> arity )
{
  corpus out;
  std::optional<uint32_t> num_vars = arity;
  bool saw_content = false;
  uint64_t line_no = 0;
  std::string line;
  while ( std::getline( in, line ) )
  {
    ++line_no;
    const std::string_view text = strip( line );
    if ( text.empty() )
    {
      continue;
    }
    if ( !saw_content && text.starts_with( "n=" ) )
    {
      saw_content = true;
      const std::string_view value = text.substr( 2 );
      uint32_t n = 0;
      const auto [ptr, ec] = std::from_chars( value.data(), value.data() + value.size(), n );
      if ( ec != std::errc{} || ptr != value.data() + value.size() )
      {
        fail( name, line_no, "malformed variable count '" + std::string( value ) + "'" );
      }
      if ( n < min_vars || n > max_vars )
      {
        fail( name, line_no, "variable count " + std::to_string( n ) + " out of range" );
      }
      if ( arity && *arity != n )
      {
        fail( name, line_no,
              "header declares n=" + std::to_string( n ) + " but n=" + std::to_string( *arity ) +
                  " was requested" );
      }
      num_vars = n;
      continue;
    }
    saw_content = true;
    if ( !num_vars )
    {
      fail( name, line_no, "variable count unknown: add a 'n=<k>' header or pass --n" );
    }
    try
    {
      out.functions.push_back( parse_truth_table( text, *num_vars ) );
    }
    catch ( const error& e )
    {
      fail( name, line_no, e.what() );
    }
  }
  if ( !num_vars )
  {
    fail( name, line_no, "variable count unknown: add a 'n=<k>' header or pass --n" );
  }
  out.num_vars = *num_vars;
  return out;
}

corpus load_corpus( const std::string& path, std::optional<uint32_t> arity )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw corpus_error( path + ": cannot open file" );
  }
  return read_corpus( in, path, arity );
}

void write_corpus( std::ostream& out, const corpus& c, const std::string& comment )
{
  if ( !comment.empty() )
  {
    std::istringstream lines( comment );
    std::string line;
    while ( std::getline( lines, line ) )
    {
      out << "# " << line << '\n';
    }
  }
  out << "n=" << c.num_vars << '\n';
  for ( const auto& t : c.functions )
  {
    out << format_hex( t ) << '\n';
  }
}

corpus generate_uniform( uint32_t num_vars, uint64_t count, uint64_t seed )
{
  corpus out;
  out.num_vars = num_vars;
  out.functions.reserve( count );
  std::mt19937_64 rng( seed );
  truth_table t( num_vars );
  for ( uint64_t i = 0; i < count; ++i )
  {
    for ( auto& word : t.words() )
    {
      word = rng();
    }
    t.mask_tail();
    out.functions.push_back( t );
  }
  return out;
}

corpus generate_consecutive( uint32_t num_vars, uint64_t count, uint64_t first )
{
  corpus out;
  out.num_vars = num_vars;
  out.functions.reserve( count );
  truth_table t( num_vars );
  t.words().front() = first;
  t.mask_tail();
  for ( uint64_t i = 0; i < count; ++i )
  {
    out.functions.push_back( t );
    /* big-integer increment across words */
    for ( auto& word : t.words() )
    {
      if ( ++word != 0 )
      {
        break;
      }
    }
    t.mask_tail();
  }
  return out;
}

} // namespace npnsig
