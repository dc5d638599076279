#include "npnsig/truth_table.hpp"

#include <algorithm>
#include <numeric>

namespace npnsig
{

np_transform np_transform::identity( uint32_t num_vars )
{
  np_transform t;
  t.perm.resize( num_vars );
  std::iota( t.perm.begin(), t.perm.end(), uint8_t{ 0 } );
  return t;
}

void validate_transform( const np_transform& t, uint32_t num_vars )
{
  if ( t.perm.size() != num_vars )
  {
    throw unsupported_arity( "transform is over " + std::to_string( t.perm.size() ) +
                             " variables, table has " + std::to_string( num_vars ) );
  }
  uint32_t seen = 0;
  for ( auto p : t.perm )
  {
    if ( p >= num_vars || ( seen & ( 1u << p ) ) )
    {
      throw unsupported_arity( "transform permutation is not a bijection on [0, n)" );
    }
    seen |= 1u << p;
  }
  if ( num_vars < 32 && ( t.neg_mask >> num_vars ) != 0 )
  {
    throw unsupported_arity( "negation mask has bits beyond the variable count" );
  }
}

uint64_t transform_word( const np_transform& t, uint64_t index )
{
  uint64_t out = 0;
  for ( std::size_t i = 0; i < t.perm.size(); ++i )
  {
    uint64_t bit = ( ( index >> i ) ^ ( t.neg_mask >> i ) ) & 1;
    out |= bit << t.perm[i];
  }
  return out;
}

np_transform compose( const np_transform& first, const np_transform& second )
{
  if ( first.perm.size() != second.perm.size() )
  {
    throw unsupported_arity( "composed transforms act on different variable counts" );
  }
  /* applying `first` then `second` evaluates f at first(second(X)) */
  np_transform out;
  out.perm.resize( first.perm.size() );
  for ( std::size_t i = 0; i < second.perm.size(); ++i )
  {
    out.perm[i] = first.perm[second.perm[i]];
    uint32_t neg = ( ( second.neg_mask >> i ) ^ ( first.neg_mask >> second.perm[i] ) ) & 1;
    out.neg_mask |= neg << i;
  }
  out.out_neg = first.out_neg ^ second.out_neg;
  return out;
}

np_transform inverse( const np_transform& t )
{
  np_transform out;
  out.perm.resize( t.perm.size() );
  for ( std::size_t i = 0; i < t.perm.size(); ++i )
  {
    out.perm[t.perm[i]] = static_cast<uint8_t>( i );
    out.neg_mask |= ( ( t.neg_mask >> i ) & 1 ) << t.perm[i];
  }
  out.out_neg = t.out_neg;
  return out;
}

namespace
{

int hex_digit_value( char c )
{
  if ( c >= '0' && c <= '9' )
  {
    return c - '0';
  }
  if ( c >= 'a' && c <= 'f' )
  {
    return c - 'a' + 10;
  }
  if ( c >= 'A' && c <= 'F' )
  {
    return c - 'A' + 10;
  }
  return -1;
}

} // namespace

truth_table parse_truth_table( std::string_view hex, uint32_t num_vars )
{
  if ( num_vars < min_vars || num_vars > max_vars )
  {
    throw unsupported_arity( "variable count must be in [1, 16], got " + std::to_string( num_vars ) );
  }
  if ( hex.size() >= 2 && hex[0] == '0' && ( hex[1] == 'x' || hex[1] == 'X' ) )
  {
    hex.remove_prefix( 2 );
  }

  const uint64_t num_digits = num_vars < 3 ? 1 : ( 1ull << num_vars ) / 4;
  if ( hex.size() != num_digits )
  {
    throw invalid_length( "expected " + std::to_string( num_digits ) + " hex digits for " +
                          std::to_string( num_vars ) + " variables, got " + std::to_string( hex.size() ) );
  }

  truth_table t( num_vars );
  auto words = t.words();
  for ( uint64_t i = 0; i < num_digits; ++i )
  {
    /* digit 0 is the most significant: it holds bits 2^n-1 .. 2^n-4 */
    const int value = hex_digit_value( hex[i] );
    if ( value < 0 )
    {
      throw invalid_digit( std::string( "invalid hex digit '" ) + hex[i] + "'" );
    }
    const uint64_t nibble = num_digits - 1 - i;
    words[nibble >> 4] |= static_cast<uint64_t>( value ) << ( ( nibble & 15 ) * 4 );
  }
  if ( num_vars < 3 && ( words[0] >> t.num_bits() ) != 0 )
  {
    throw invalid_digit( "digit sets bits beyond the 2^n table size" );
  }
  return t;
}

std::string format_hex( const truth_table& t )
{
  static constexpr char digits[] = "0123456789ABCDEF";
  const uint64_t num_digits = t.num_vars() < 3 ? 1 : t.num_bits() / 4;
  std::string out( num_digits, '0' );
  auto words = t.words();
  for ( uint64_t i = 0; i < num_digits; ++i )
  {
    const uint64_t nibble = num_digits - 1 - i;
    out[i] = digits[( words[nibble >> 4] >> ( ( nibble & 15 ) * 4 ) ) & 15];
  }
  return out;
}

bool evaluate( const truth_table& t, uint64_t index )
{
  if ( index >= t.num_bits() )
  {
    throw invalid_word( "input word " + std::to_string( index ) + " out of range for " +
                        std::to_string( t.num_vars() ) + " variables" );
  }
  return t.get_bit( index );
}

uint64_t satisfy_count( const truth_table& t )
{
  uint64_t count = 0;
  for ( auto w : t.words() )
  {
    count += std::popcount( w );
  }
  return count;
}

bool is_balanced( const truth_table& t )
{
  return satisfy_count( t ) == t.num_bits() / 2;
}

truth_table negate_output( const truth_table& t )
{
  truth_table out = t;
  for ( auto& w : out.words() )
  {
    w = ~w;
  }
  out.mask_tail();
  return out;
}

truth_table apply_np_transform( const truth_table& t, const np_transform& transform )
{
  validate_transform( transform, t.num_vars() );
  truth_table out( t.num_vars() );
  for ( uint64_t index = 0; index < t.num_bits(); ++index )
  {
    const bool bit = t.get_bit( transform_word( transform, index ) ) ^ transform.out_neg;
    out.set_bit( index, bit );
  }
  return out;
}

uint64_t cofactor_count( const truth_table& t, std::span<const literal> assignment )
{
  uint32_t assigned = 0;
  uint64_t low_mask = ~0ull;  /* within-word filter, variables < 6 */
  uint32_t high_sel = 0;      /* word-index filter, variables >= 6 */
  uint32_t high_val = 0;
  for ( const auto& lit : assignment )
  {
    if ( lit.var >= t.num_vars() )
    {
      throw invalid_variable( "variable " + std::to_string( lit.var ) + " out of range" );
    }
    if ( assigned & ( 1u << lit.var ) )
    {
      throw invalid_assignment( "variable " + std::to_string( lit.var ) + " assigned twice" );
    }
    assigned |= 1u << lit.var;
    if ( lit.var < 6 )
    {
      low_mask &= lit.value ? detail::var_mask_pos[lit.var] : ~detail::var_mask_pos[lit.var];
    }
    else
    {
      high_sel |= 1u << ( lit.var - 6 );
      high_val |= static_cast<uint32_t>( lit.value ) << ( lit.var - 6 );
    }
  }

  uint64_t count = 0;
  auto words = t.words();
  for ( std::size_t w = 0; w < words.size(); ++w )
  {
    if ( ( static_cast<uint32_t>( w ) & high_sel ) == high_val )
    {
      count += std::popcount( words[w] & low_mask );
    }
  }
  return count;
}

namespace detail
{

void xor_flip_words( std::span<const uint64_t> src, std::span<uint64_t> dst, uint32_t var )
{
  if ( var < 6 )
  {
    const uint64_t pos = var_mask_pos[var];
    const uint32_t shift = 1u << var;
    for ( std::size_t w = 0; w < src.size(); ++w )
    {
      const uint64_t flipped = ( ( src[w] & pos ) >> shift ) | ( ( src[w] & ~pos ) << shift );
      dst[w] = src[w] ^ flipped;
    }
  }
  else
  {
    const std::size_t stride = std::size_t{ 1 } << ( var - 6 );
    for ( std::size_t w = 0; w < src.size(); ++w )
    {
      dst[w] = src[w] ^ src[w ^ stride];
    }
  }
}

} // namespace detail

truth_table diff_vector( const truth_table& t, uint32_t var )
{
  if ( var >= t.num_vars() )
  {
    throw invalid_variable( "variable " + std::to_string( var ) + " out of range" );
  }
  truth_table out( t.num_vars() );
  detail::xor_flip_words( t.words(), out.words(), var );
  return out;
}

} // namespace npnsig
