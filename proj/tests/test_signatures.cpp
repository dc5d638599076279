#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <npnsig/signatures.hpp>

#include <algorithm>
#include <bit>
#include <random>

using namespace npnsig;

/* Naive reference implementations, built on nothing but evaluate(): every
   count is an explicit loop over input words, so they share no code with
   the bit-parallel kernels they check. */
namespace ref
{

std::vector<uint32_t> ocv( const truth_table& t, uint32_t arity )
{
  const uint32_t n = t.num_vars();
  std::vector<uint32_t> result;
  for ( uint32_t subset = 0; subset < ( 1u << n ); ++subset )
  {
    if ( static_cast<uint32_t>( std::popcount( subset ) ) != arity )
    {
      continue;
    }
    for ( uint32_t values = 0; values < ( 1u << n ); ++values )
    {
      if ( ( values & ~subset ) != 0 )
      {
        continue;
      }
      uint32_t count = 0;
      for ( uint64_t x = 0; x < t.num_bits(); ++x )
      {
        if ( ( ( x & subset ) == values ) && evaluate( t, x ) )
        {
          ++count;
        }
      }
      result.push_back( count );
    }
  }
  std::sort( result.begin(), result.end() );
  return result;
}

std::vector<uint32_t> oiv( const truth_table& t )
{
  std::vector<uint32_t> result;
  for ( uint32_t var = 0; var < t.num_vars(); ++var )
  {
    uint32_t changed = 0;
    for ( uint64_t x = 0; x < t.num_bits(); ++x )
    {
      changed += evaluate( t, x ) != evaluate( t, x ^ ( 1ull << var ) );
    }
    result.push_back( changed / 2 );
  }
  std::sort( result.begin(), result.end() );
  return result;
}

std::vector<uint8_t> sensitivities( const truth_table& t )
{
  std::vector<uint8_t> sens( t.num_bits(), 0 );
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
  {
    for ( uint32_t var = 0; var < t.num_vars(); ++var )
    {
      sens[x] += evaluate( t, x ) != evaluate( t, x ^ ( 1ull << var ) );
    }
  }
  return sens;
}

osv_vectors osv_split( const truth_table& t )
{
  const auto sens = sensitivities( t );
  osv_vectors out;
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
  {
    out.osv.push_back( sens[x] );
    ( evaluate( t, x ) ? out.osv1 : out.osv0 ).push_back( sens[x] );
  }
  std::sort( out.osv.begin(), out.osv.end() );
  std::sort( out.osv0.begin(), out.osv0.end() );
  std::sort( out.osv1.begin(), out.osv1.end() );
  return out;
}

osdv_grids osdv_split( const truth_table& t )
{
  const uint32_t n = t.num_vars();
  const auto sens = sensitivities( t );
  osdv_grids out;
  out.osdv.assign( ( n + 1 ) * n, 0 );
  out.osdv0.assign( ( n + 1 ) * n, 0 );
  out.osdv1.assign( ( n + 1 ) * n, 0 );
  for ( uint64_t x = 0; x < t.num_bits(); ++x )
  {
    for ( uint64_t y = x + 1; y < t.num_bits(); ++y )
    {
      if ( sens[x] != sens[y] )
      {
        continue;
      }
      const std::size_t cell = sens[x] * n + std::popcount( x ^ y ) - 1;
      ++out.osdv[cell];
      if ( evaluate( t, x ) && evaluate( t, y ) )
      {
        ++out.osdv1[cell];
      }
      if ( !evaluate( t, x ) && !evaluate( t, y ) )
      {
        ++out.osdv0[cell];
      }
    }
  }
  return out;
}

} // namespace ref

namespace
{

truth_table random_table( uint32_t num_vars, std::mt19937_64& rng )
{
  truth_table t( num_vars );
  for ( auto& word : t.words() )
  {
    word = rng();
  }
  t.mask_tail();
  return t;
}

np_transform random_transform( uint32_t num_vars, std::mt19937_64& rng )
{
  np_transform t = np_transform::identity( num_vars );
  std::shuffle( t.perm.begin(), t.perm.end(), rng );
  t.neg_mask = static_cast<uint32_t>( rng() ) & ( ( 1u << num_vars ) - 1 );
  t.out_neg = ( rng() & 1 ) != 0;
  return t;
}

} // namespace

TEST_CASE( "golden vectors: majority of three" )
{
  const auto t = parse_truth_table( "E8", 3 );
  CHECK( ocv( t, 1 ) == std::vector<uint32_t>{ 1, 1, 1, 3, 3, 3 } );
  CHECK( ocv( t, 2 ) == std::vector<uint32_t>{ 0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2 } );
  CHECK( oiv( t ) == std::vector<uint32_t>{ 2, 2, 2 } );

  const auto osv = osv_split( t );
  CHECK( osv.osv1 == std::vector<uint32_t>{ 0, 2, 2, 2 } );
  CHECK( osv.osv0 == std::vector<uint32_t>{ 0, 2, 2, 2 } );
  CHECK( osv.osv == std::vector<uint32_t>{ 0, 0, 2, 2, 2, 2, 2, 2 } );

  const auto osdv = osdv_split( t );
  CHECK( osdv.osdv1 == std::vector<uint32_t>{ 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0 } );
  CHECK( osdv.osdv0 == std::vector<uint32_t>{ 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0 } );
  CHECK( osdv.osdv == std::vector<uint32_t>{ 0, 0, 1, 0, 0, 0, 6, 6, 3, 0, 0, 0 } );

  const auto summary = max_sensitivity( t );
  CHECK( summary.sen == 2 );
  CHECK( summary.sen0 == 2 );
  CHECK( summary.sen1 == 2 );
  CHECK( total_influence( t ) == 6 );
}

TEST_CASE( "golden vectors: projection on one variable" )
{
  const auto t = parse_truth_table( "AA", 3 );
  CHECK( ocv( t, 1 ) == std::vector<uint32_t>{ 0, 2, 2, 2, 2, 4 } );
  CHECK( ocv( t, 2 ) == std::vector<uint32_t>{ 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2 } );
  CHECK( oiv( t ) == std::vector<uint32_t>{ 0, 0, 4 } );

  const auto osv = osv_split( t );
  CHECK( osv.osv1 == std::vector<uint32_t>{ 1, 1, 1, 1 } );
  CHECK( osv.osv0 == std::vector<uint32_t>{ 1, 1, 1, 1 } );
  CHECK( osv.osv == std::vector<uint32_t>{ 1, 1, 1, 1, 1, 1, 1, 1 } );

  const auto osdv = osdv_split( t );
  CHECK( osdv.osdv1 == std::vector<uint32_t>{ 0, 0, 0, 4, 2, 0, 0, 0, 0, 0, 0, 0 } );
  CHECK( osdv.osdv0 == std::vector<uint32_t>{ 0, 0, 0, 4, 2, 0, 0, 0, 0, 0, 0, 0 } );
  CHECK( osdv.osdv == std::vector<uint32_t>{ 0, 0, 0, 12, 12, 4, 0, 0, 0, 0, 0, 0 } );
}

TEST_CASE( "edge functions" )
{
  const auto zero = parse_truth_table( "00", 3 );
  CHECK( ocv( zero, 1 ) == std::vector<uint32_t>( 6, 0 ) );
  CHECK( oiv( zero ) == std::vector<uint32_t>{ 0, 0, 0 } );
  const auto osv = osv_split( zero );
  CHECK( osv.osv1.empty() );
  CHECK( osv.osv0 == std::vector<uint32_t>( 8, 0 ) );

  /* all pairs of the 0-side land in the sensitivity-0 row, split by distance */
  const auto osdv = osdv_split( zero );
  CHECK( osdv.osdv0 == std::vector<uint32_t>{ 12, 12, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0 } );
  CHECK( osdv.osdv1 == std::vector<uint32_t>( 12, 0 ) );

  const auto parity = parse_truth_table( "96", 3 );
  CHECK( oiv( parity ) == std::vector<uint32_t>{ 4, 4, 4 } );
  CHECK( ocv( parity, 1 ) == std::vector<uint32_t>( 6, 2 ) );
  CHECK( ocv( parity, 2 ) == std::vector<uint32_t>( 12, 1 ) );
  CHECK( osv_split( parity ).osv == std::vector<uint32_t>( 8, 3 ) );
  CHECK( max_sensitivity( parity ).sen == 3 );
}

TEST_CASE( "signature vectors match naive recomputation" )
{
  std::mt19937_64 rng( 21 );
  for ( uint32_t n = 1; n <= 8; ++n )
  {
    for ( int round = 0; round < 5; ++round )
    {
      const auto t = random_table( n, rng );
      CHECK( ocv( t, 1 ) == ref::ocv( t, 1 ) );
      if ( n >= 2 )
      {
        CHECK( ocv( t, 2 ) == ref::ocv( t, 2 ) );
      }
      if ( n >= 3 )
      {
        CHECK( ocv( t, 3 ) == ref::ocv( t, 3 ) );
      }
      CHECK( oiv( t ) == ref::oiv( t ) );
      CHECK( local_sensitivities( t ) == ref::sensitivities( t ) );

      const auto osv = osv_split( t );
      const auto ref_osv = ref::osv_split( t );
      CHECK( osv.osv == ref_osv.osv );
      CHECK( osv.osv0 == ref_osv.osv0 );
      CHECK( osv.osv1 == ref_osv.osv1 );

      const auto osdv = osdv_split( t );
      const auto ref_osdv = ref::osdv_split( t );
      CHECK( osdv.osdv == ref_osdv.osdv );
      CHECK( osdv.osdv0 == ref_osdv.osdv0 );
      CHECK( osdv.osdv1 == ref_osdv.osdv1 );
    }
  }
}

TEST_CASE( "consistency identities across vector families" )
{
  std::mt19937_64 rng( 24 );
  for ( uint32_t n : { 2u, 4u, 6u, 8u } )
  {
    for ( int round = 0; round < 5; ++round )
    {
      const auto t = random_table( n, rng );
      const auto influences = oiv( t );
      const auto osv = osv_split( t );
      const auto osdv = osdv_split( t );

      /* every sensitive edge is counted once per endpoint */
      uint64_t influence_sum = 0;
      for ( auto v : influences )
      {
        influence_sum += v;
      }
      uint64_t sensitivity_sum = 0;
      for ( auto v : osv.osv )
      {
        sensitivity_sum += v;
      }
      CHECK( sensitivity_sum == 2 * influence_sum );
      CHECK( total_influence( t ) == influence_sum );

      /* the split vectors partition the merged one */
      auto merged = osv.osv0;
      merged.insert( merged.end(), osv.osv1.begin(), osv.osv1.end() );
      std::sort( merged.begin(), merged.end() );
      CHECK( merged == osv.osv );
      CHECK( osv.osv0.size() + osv.osv1.size() == t.num_bits() );

      /* row i of each grid holds all pairs from the matching bucket */
      auto check_rows = [&]( const std::vector<uint32_t>& grid,
                             const std::vector<uint32_t>& values ) {
        for ( uint32_t s = 0; s <= n; ++s )
        {
          const uint64_t m = std::count( values.begin(), values.end(), s );
          uint64_t row_sum = 0;
          for ( uint32_t d = 0; d < n; ++d )
          {
            row_sum += grid[s * n + d];
          }
          CHECK( row_sum == m * ( m - 1 ) / 2 );
        }
      };
      check_rows( osdv.osdv, osv.osv );
      check_rows( osdv.osdv0, osv.osv0 );
      check_rows( osdv.osdv1, osv.osv1 );

      /* the aggregate helper agrees with the standalone operations */
      const auto all = compute_signature_vectors( t );
      CHECK( all.ocv1 == ocv( t, 1 ) );
      CHECK( all.ocv2 == ocv( t, 2 ) );
      CHECK( all.oiv == influences );
      CHECK( all.osv0 == osv.osv0 );
      CHECK( all.osv1 == osv.osv1 );
      CHECK( all.osdv0 == osdv.osdv0 );
      CHECK( all.osdv1 == osdv.osdv1 );
      CHECK( all.satisfy == satisfy_count( t ) );
      CHECK( all.influence_total == influence_sum );
      CHECK( all.sensitivity == max_sensitivity( t ) );
    }
  }
}

TEST_CASE( "output negation swaps the split vectors" )
{
  std::mt19937_64 rng( 25 );
  for ( uint32_t n : { 1u, 3u, 5u, 7u } )
  {
    for ( int round = 0; round < 5; ++round )
    {
      const auto t = random_table( n, rng );
      const auto negated = negate_output( t );
      CHECK( oiv( negated ) == oiv( t ) );

      const auto osv_t = osv_split( t );
      const auto osv_n = osv_split( negated );
      CHECK( osv_n.osv == osv_t.osv );
      CHECK( osv_n.osv0 == osv_t.osv1 );
      CHECK( osv_n.osv1 == osv_t.osv0 );

      const auto osdv_t = osdv_split( t );
      const auto osdv_n = osdv_split( negated );
      CHECK( osdv_n.osdv == osdv_t.osdv );
      CHECK( osdv_n.osdv0 == osdv_t.osdv1 );
      CHECK( osdv_n.osdv1 == osdv_t.osdv0 );

      const auto sen_t = max_sensitivity( t );
      const auto sen_n = max_sensitivity( negated );
      CHECK( sen_n.sen == sen_t.sen );
      CHECK( sen_n.sen0 == sen_t.sen1 );
      CHECK( sen_n.sen1 == sen_t.sen0 );
    }
  }
}

TEST_CASE( "every vector is invariant under input-only transforms" )
{
  std::mt19937_64 rng( 26 );
  for ( uint32_t n : { 2u, 4u, 6u } )
  {
    for ( int round = 0; round < 10; ++round )
    {
      const auto t = random_table( n, rng );
      auto tr = random_transform( n, rng );
      tr.out_neg = false;
      const auto moved = apply_np_transform( t, tr );

      CHECK( ocv( moved, 1 ) == ocv( t, 1 ) );
      CHECK( ocv( moved, 2 ) == ocv( t, 2 ) );
      CHECK( oiv( moved ) == oiv( t ) );

      const auto osv_t = osv_split( t );
      const auto osv_m = osv_split( moved );
      CHECK( osv_m.osv == osv_t.osv );
      CHECK( osv_m.osv0 == osv_t.osv0 );
      CHECK( osv_m.osv1 == osv_t.osv1 );

      const auto osdv_t = osdv_split( t );
      const auto osdv_m = osdv_split( moved );
      CHECK( osdv_m.osdv == osdv_t.osdv );
      CHECK( osdv_m.osdv0 == osdv_t.osdv0 );
      CHECK( osdv_m.osdv1 == osdv_t.osdv1 );
    }
  }
}

TEST_CASE( "cofactor arity bounds" )
{
  const auto t = parse_truth_table( "E8", 3 );
  CHECK( ocv( t, 0 ) == std::vector<uint32_t>{ 4 } );
  CHECK( ocv( t, 3 ).size() == 8 );
  CHECK_THROWS_AS( ocv( t, 4 ), invalid_arity );
}

TEST_CASE( "selection parsing" )
{
  CHECK( to_string( parse_selection( "all" ) ) == "ocv1,ocv2,oiv,osv,osdv" );
  const auto sel = parse_selection( "oiv,osv" );
  CHECK_FALSE( sel.ocv1 );
  CHECK_FALSE( sel.ocv2 );
  CHECK( sel.oiv );
  CHECK( sel.osv );
  CHECK_FALSE( sel.osdv );
  CHECK( to_string( sel ) == "oiv,osv" );
  CHECK( to_string( signature_selection::all() ) == "ocv1,ocv2,oiv,osv,osdv" );
  CHECK( to_string( parse_selection( "ocv1,osdv" ) ) == "ocv1,osdv" );

  CHECK_THROWS_AS( parse_selection( "" ), invalid_selection );
  CHECK_THROWS_AS( parse_selection( "bogus" ), invalid_selection );
  CHECK_THROWS_AS( parse_selection( "oiv,,osv" ), invalid_selection );
}

TEST_CASE( "signature key is invariant under output negation" )
{
  std::mt19937_64 rng( 22 );
  const auto sel = signature_selection::all();
  for ( uint32_t n = 1; n <= 8; ++n )
  {
    for ( int round = 0; round < 10; ++round )
    {
      const auto t = random_table( n, rng );
      CHECK( build_msv( t, sel ).key == build_msv( negate_output( t ), sel ).key );
    }
  }

  /* a balanced function too: majority stays balanced under negation */
  const auto maj = parse_truth_table( "E8", 3 );
  CHECK( build_msv( maj, sel ).key == build_msv( negate_output( maj ), sel ).key );
}

TEST_CASE( "signature key starts with arity and normalized satisfy count" )
{
  const auto sel = signature_selection::all();
  const auto heavy = parse_truth_table( "FE", 3 ); /* satisfy count 7 -> normalized to 1 */
  const auto key = build_msv( heavy, sel ).key;
  REQUIRE( key.size() >= 2 );
  CHECK( key[0] == 3 );
  CHECK( key[1] == 1 );
}

TEST_CASE( "signature key is invariant under NP transforms" )
{
  std::mt19937_64 rng( 23 );
  const auto sel = signature_selection::all();
  for ( uint32_t n = 2; n <= 6; ++n )
  {
    for ( int round = 0; round < 25; ++round )
    {
      const auto t = random_table( n, rng );
      const auto tr = random_transform( n, rng );
      CHECK( build_msv( t, sel ).key == build_msv( apply_np_transform( t, tr ), sel ).key );
    }
  }
}

TEST_CASE( "signature key respects the selection" )
{
  const auto t = parse_truth_table( "E8", 3 );
  /* arity + satisfy count, then one entry per influence value */
  CHECK( build_msv( t, parse_selection( "oiv" ) ).key.size() == 2 + 3 );
  CHECK( build_msv( t, parse_selection( "ocv1" ) ).key.size() == 2 + 6 );
  CHECK( build_msv( t, parse_selection( "ocv2" ) ).key.size() == 2 + 12 );
  CHECK( build_msv( t, parse_selection( "osv" ) ).key.size() == 2 + 8 );
  CHECK( build_msv( t, parse_selection( "osdv" ) ).key.size() == 2 + 24 );
  CHECK( build_msv( t, signature_selection::all() ).key.size() == 2 + 6 + 12 + 3 + 8 + 24 );

  signature_selection none;
  CHECK_THROWS_AS( build_msv( t, none ), invalid_selection );
}
