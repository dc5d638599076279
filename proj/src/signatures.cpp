#include "npnsig/signatures.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace npnsig
{

signature_selection parse_selection( std::string_view text )
{
  signature_selection sel;
  std::size_t pos = 0;
  while ( pos <= text.size() )
  {
    const std::size_t comma = std::min( text.find( ',', pos ), text.size() );
    const std::string_view token = text.substr( pos, comma - pos );
    if ( token == "all" )
    {
      sel = signature_selection::all();
    }
    else if ( token == "ocv1" )
    {
      sel.ocv1 = true;
    }
    else if ( token == "ocv2" )
    {
      sel.ocv2 = true;
    }
    else if ( token == "oiv" )
    {
      sel.oiv = true;
    }
    else if ( token == "osv" )
    {
      sel.osv = true;
    }
    else if ( token == "osdv" )
    {
      sel.osdv = true;
    }
    else
    {
      throw invalid_selection( "unknown signature family '" + std::string( token ) + "'" );
    }
    pos = comma + 1;
  }
  return sel;
}

std::string to_string( const signature_selection& sel )
{
  std::string out;
  auto add = [&]( bool on, const char* name ) {
    if ( on )
    {
      if ( !out.empty() )
      {
        out += ',';
      }
      out += name;
    }
  };
  add( sel.ocv1, "ocv1" );
  add( sel.ocv2, "ocv2" );
  add( sel.oiv, "oiv" );
  add( sel.osv, "osv" );
  add( sel.osdv, "osdv" );
  return out;
}

namespace
{

uint32_t influence_of( const truth_table& t, uint32_t var, std::span<uint64_t> scratch )
{
  detail::xor_flip_words( t.words(), scratch, var );
  uint64_t pop = 0;
  for ( auto w : scratch )
  {
    pop += std::popcount( w );
  }
  return static_cast<uint32_t>( pop / 2 );
}

/* counts unordered pairs per Hamming distance; row has n slots for distances 1..n */
void count_pairs( std::span<const uint32_t> words, uint32_t* row )
{
  for ( std::size_t i = 0; i < words.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < words.size(); ++j )
    {
      ++row[std::popcount( words[i] ^ words[j] ) - 1];
    }
  }
}

void append( std::vector<uint32_t>& key, std::span<const uint32_t> values )
{
  key.insert( key.end(), values.begin(), values.end() );
}

/* sorted sensitivity multiset from a per-value histogram */
std::vector<uint32_t> expand_histogram( std::span<const uint32_t> hist )
{
  std::vector<uint32_t> out;
  for ( uint32_t value = 0; value < hist.size(); ++value )
  {
    out.insert( out.end(), hist[value], value );
  }
  return out;
}

std::vector<uint32_t> msv_sequence( const truth_table& f, const signature_selection& sel )
{
  std::vector<uint32_t> key;
  key.push_back( f.num_vars() );
  key.push_back( static_cast<uint32_t>( satisfy_count( f ) ) );
  if ( sel.ocv1 )
  {
    append( key, ocv( f, 1 ) );
  }
  if ( sel.ocv2 && f.num_vars() >= 2 )
  {
    /* a single-variable function has no 2-cofactors: the block is empty */
    append( key, ocv( f, 2 ) );
  }
  if ( sel.oiv )
  {
    append( key, oiv( f ) );
  }
  if ( !sel.osv && !sel.osdv )
  {
    return key;
  }

  const uint32_t n = f.num_vars();
  const auto sens = local_sensitivities( f );
  if ( sel.osv )
  {
    std::vector<uint32_t> hist0( n + 1, 0 ), hist1( n + 1, 0 );
    for ( uint64_t x = 0; x < f.num_bits(); ++x )
    {
      ++( f.get_bit( x ) ? hist1 : hist0 )[sens[x]];
    }
    append( key, expand_histogram( hist1 ) );
    append( key, expand_histogram( hist0 ) );
  }
  if ( sel.osdv )
  {
    std::vector<std::vector<uint32_t>> bucket0( n + 1 ), bucket1( n + 1 );
    for ( uint64_t x = 0; x < f.num_bits(); ++x )
    {
      ( f.get_bit( x ) ? bucket1 : bucket0 )[sens[x]].push_back( static_cast<uint32_t>( x ) );
    }
    std::vector<uint32_t> grid1( ( n + 1 ) * n, 0 ), grid0( ( n + 1 ) * n, 0 );
    for ( uint32_t s = 0; s <= n; ++s )
    {
      count_pairs( bucket1[s], grid1.data() + s * n );
      count_pairs( bucket0[s], grid0.data() + s * n );
    }
    append( key, grid1 );
    append( key, grid0 );
  }
  return key;
}

} // namespace

std::vector<uint32_t> ocv( const truth_table& t, uint32_t arity )
{
  const uint32_t n = t.num_vars();
  if ( arity > n )
  {
    throw invalid_arity( "cofactor arity " + std::to_string( arity ) + " exceeds variable count " +
                         std::to_string( n ) );
  }
  if ( arity == 0 )
  {
    return { static_cast<uint32_t>( satisfy_count( t ) ) };
  }

  std::vector<uint32_t> result;
  std::array<uint32_t, max_vars> vars{};
  std::array<literal, max_vars> assignment{};

  /* enumerate the size-arity variable subsets in Gosper order */
  uint32_t subset = ( 1u << arity ) - 1;
  const uint32_t end = 1u << n;
  while ( subset < end )
  {
    uint32_t count = 0;
    for ( uint32_t rest = subset; rest != 0; rest &= rest - 1 )
    {
      vars[count++] = static_cast<uint32_t>( std::countr_zero( rest ) );
    }
    for ( uint32_t values = 0; values < ( 1u << arity ); ++values )
    {
      for ( uint32_t k = 0; k < arity; ++k )
      {
        assignment[k] = { vars[k], ( ( values >> k ) & 1 ) != 0 };
      }
      result.push_back( static_cast<uint32_t>(
          cofactor_count( t, std::span<const literal>( assignment.data(), arity ) ) ) );
    }
    const uint32_t c = subset & ( ~subset + 1 );
    const uint32_t r = subset + c;
    subset = ( ( ( r ^ subset ) >> 2 ) / c ) | r;
  }
  std::sort( result.begin(), result.end() );
  return result;
}

std::vector<uint32_t> oiv( const truth_table& t )
{
  std::vector<uint64_t> scratch( t.words().size() );
  std::vector<uint32_t> result( t.num_vars() );
  for ( uint32_t var = 0; var < t.num_vars(); ++var )
  {
    result[var] = influence_of( t, var, scratch );
  }
  std::sort( result.begin(), result.end() );
  return result;
}

std::vector<uint8_t> local_sensitivities( const truth_table& t )
{
  std::vector<uint8_t> sens( t.num_bits(), 0 );
  std::vector<uint64_t> diff( t.words().size() );
  for ( uint32_t var = 0; var < t.num_vars(); ++var )
  {
    detail::xor_flip_words( t.words(), diff, var );
    for ( std::size_t w = 0; w < diff.size(); ++w )
    {
      const uint64_t base = w << 6;
      for ( uint64_t bits = diff[w]; bits != 0; bits &= bits - 1 )
      {
        ++sens[base + std::countr_zero( bits )];
      }
    }
  }
  return sens;
}

osv_vectors osv_split( const truth_table& t )
{
  const uint32_t n = t.num_vars();
  const auto sens = local_sensitivities( t );
  std::vector<uint32_t> hist0( n + 1, 0 ), hist1( n + 1, 0 ), hist( n + 1, 0 );
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
  {
    ++( t.get_bit( x ) ? hist1 : hist0 )[sens[x]];
    ++hist[sens[x]];
  }
  return { expand_histogram( hist ), expand_histogram( hist0 ), expand_histogram( hist1 ) };
}

osdv_grids osdv_split( const truth_table& t )
{
  const uint32_t n = t.num_vars();
  const auto sens = local_sensitivities( t );

  /* bucket entries pack the word index in the low 16 bits and the
     function value in bit 16, so one XOR yields both the distance and
     whether the pair crosses output values */
  std::vector<std::vector<uint32_t>> buckets( n + 1 );
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
  {
    buckets[sens[x]].push_back( static_cast<uint32_t>( x ) |
                                ( static_cast<uint32_t>( t.get_bit( x ) ) << 16 ) );
  }

  osdv_grids grids;
  grids.osdv.assign( ( n + 1 ) * n, 0 );
  grids.osdv0.assign( ( n + 1 ) * n, 0 );
  grids.osdv1.assign( ( n + 1 ) * n, 0 );
  for ( uint32_t s = 0; s <= n; ++s )
  {
    const auto& bucket = buckets[s];
    for ( std::size_t i = 0; i < bucket.size(); ++i )
    {
      for ( std::size_t j = i + 1; j < bucket.size(); ++j )
      {
        const uint32_t diff = bucket[i] ^ bucket[j];
        const std::size_t cell = s * n + std::popcount( diff & 0xffffu ) - 1;
        ++grids.osdv[cell];
        if ( ( diff >> 16 ) == 0 )
        {
          ++( ( bucket[i] >> 16 ) != 0 ? grids.osdv1 : grids.osdv0 )[cell];
        }
      }
    }
  }
  return grids;
}

uint32_t total_influence( const truth_table& t )
{
  std::vector<uint64_t> scratch( t.words().size() );
  uint32_t total = 0;
  for ( uint32_t var = 0; var < t.num_vars(); ++var )
  {
    total += influence_of( t, var, scratch );
  }
  return total;
}

sensitivity_summary max_sensitivity( const truth_table& t )
{
  const auto sens = local_sensitivities( t );
  sensitivity_summary out;
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
  {
    out.sen = std::max<uint32_t>( out.sen, sens[x] );
    auto& side = t.get_bit( x ) ? out.sen1 : out.sen0;
    side = std::max<uint32_t>( side, sens[x] );
  }
  return out;
}

signature_vectors compute_signature_vectors( const truth_table& t )
{
  signature_vectors out;
  out.ocv1 = ocv( t, 1 );
  out.ocv2 = ocv( t, 2 );
  out.oiv = oiv( t );
  auto osv = osv_split( t );
  out.osv0 = std::move( osv.osv0 );
  out.osv1 = std::move( osv.osv1 );
  auto osdv = osdv_split( t );
  out.osdv0 = std::move( osdv.osdv0 );
  out.osdv1 = std::move( osdv.osdv1 );
  out.satisfy = satisfy_count( t );
  for ( auto inf : out.oiv )
  {
    out.influence_total += inf;
  }
  out.sensitivity = max_sensitivity( t );
  return out;
}

mixed_signature_vector build_msv( const truth_table& t, const signature_selection& sel )
{
  if ( !sel.any() )
  {
    throw invalid_selection( "at least one signature family must be enabled" );
  }
  mixed_signature_vector out;
  out.selection = sel;

  const uint64_t half = t.num_bits() / 2;
  const uint64_t count = satisfy_count( t );
  if ( count > half )
  {
    out.key = msv_sequence( negate_output( t ), sel );
  }
  else if ( count < half )
  {
    out.key = msv_sequence( t, sel );
  }
  else
  {
    auto straight = msv_sequence( t, sel );
    auto negated = msv_sequence( negate_output( t ), sel );
    out.key = std::min( std::move( straight ), std::move( negated ) );
  }
  return out;
}

} // namespace npnsig
