/*! \file npnsig.cpp
    \brief Command-line front end for the NPN signature classifier.

    Subcommands: sigs (signature report for one table), classify (group a
    corpus by signature keys), compare (validate a grouping against the
    exhaustive oracle), gen (seeded corpus generation), bench (runtime
    scaling measurement).

    Exit codes: 0 success, 2 input/validation error, 3 I/O error,
    4 soundness violation detected by compare.
*/

#include <CLI11.hpp>
#include <json.hpp>

#include <npnsig/classifier.hpp>
#include <npnsig/corpus.hpp>
#include <npnsig/oracle.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <span>
#include <sstream>
#include <unordered_map>

namespace
{

using nlohmann::ordered_json;

constexpr int exit_io = 3;
constexpr int exit_violation = 4;

/*! Unreadable or unwritable file; distinct from validation errors. */
struct io_error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

double time_ms( const std::chrono::steady_clock::time_point& start )
{
  return std::chrono::duration<double, std::milli>( std::chrono::steady_clock::now() - start )
      .count();
}

void print_vector( std::ostream& out, const char* label, std::span<const uint32_t> values )
{
  out << label;
  for ( auto v : values )
  {
    out << ' ' << v;
  }
  out << '\n';
}

int run_sigs( uint32_t num_vars, const std::string& hex, const std::string& families )
{
  const auto sel = npnsig::parse_selection( families );
  const auto t = npnsig::parse_truth_table( hex, num_vars );
  auto& out = std::cout;
  out << "n " << num_vars << '\n';
  out << "tt " << npnsig::format_hex( t ) << '\n';
  if ( sel.ocv1 )
  {
    print_vector( out, "ocv1", npnsig::ocv( t, 1 ) );
  }
  if ( sel.ocv2 && num_vars >= 2 )
  {
    print_vector( out, "ocv2", npnsig::ocv( t, 2 ) );
  }
  if ( sel.oiv )
  {
    print_vector( out, "oiv", npnsig::oiv( t ) );
  }
  if ( sel.osv )
  {
    const auto osv = npnsig::osv_split( t );
    print_vector( out, "osv1", osv.osv1 );
    print_vector( out, "osv0", osv.osv0 );
    print_vector( out, "osv", osv.osv );
  }
  if ( sel.osdv )
  {
    const auto osdv = npnsig::osdv_split( t );
    print_vector( out, "osdv1", osdv.osdv1 );
    print_vector( out, "osdv0", osdv.osdv0 );
    print_vector( out, "osdv", osdv.osdv );
  }
  return 0;
}

npnsig::corpus read_input( const std::string& path, std::optional<uint32_t> num_vars )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw io_error( path + ": cannot open file" );
  }
  return npnsig::read_corpus( in, path, num_vars );
}

int run_classify( const std::string& input, std::optional<uint32_t> num_vars,
                  const std::string& families, const std::string& output )
{
  const auto sel = npnsig::parse_selection( families );
  const auto c = read_input( input, num_vars );

  const auto start = std::chrono::steady_clock::now();
  const auto result = npnsig::classify( c.functions, sel );
  const double elapsed = time_ms( start );

  std::ofstream file;
  if ( output != "-" )
  {
    file.open( output );
    if ( !file )
    {
      std::cerr << "error: " << output << ": cannot open for writing\n";
      return exit_io;
    }
  }
  std::ostream& out = output == "-" ? std::cout : file;

  std::unordered_map<npnsig::truth_table, uint32_t, npnsig::truth_table_hash> index;
  index.reserve( result.functions.size() );
  for ( uint32_t i = 0; i < result.functions.size(); ++i )
  {
    index.emplace( result.functions[i], i );
  }
  for ( const auto& t : c.functions )
  {
    ordered_json record;
    record["tt"] = npnsig::format_hex( t );
    record["class"] = result.class_of[index.at( t )];
    out << record.dump() << '\n';
  }

  ordered_json summary;
  summary["n"] = result.num_vars;
  summary["functions"] = result.input_count;
  summary["unique"] = result.functions.size();
  summary["classes"] = result.classes.size();
  summary["selection"] = npnsig::to_string( sel );
  summary["elapsed_ms"] = elapsed;
  out << summary.dump() << '\n';
  return out ? 0 : exit_io;
}

int run_compare( const std::string& input, std::optional<uint32_t> num_vars,
                 const std::string& families )
{
  const auto sel = npnsig::parse_selection( families );
  const auto c = read_input( input, num_vars );
  const auto by_signature = npnsig::classify( c.functions, sel );
  const auto exact = npnsig::exact_classify( c.functions );
  const auto report = npnsig::compare( by_signature, exact );

  std::cout << "sig_classes " << report.signature_classes << '\n';
  std::cout << "exact_classes " << report.reference_classes << '\n';
  std::cout << "accuracy " << std::setprecision( 6 ) << std::fixed << report.accuracy << '\n';
  std::cout << "violations " << report.violations.size() << '\n';
  for ( const auto& v : report.violations )
  {
    std::cout << "violation " << npnsig::format_hex( exact.functions[v.function_a] ) << ' '
              << npnsig::format_hex( exact.functions[v.function_b] ) << " exact_class "
              << v.reference_class << " sig_classes " << v.signature_class_a << ' '
              << v.signature_class_b << '\n';
  }
  return report.violations.empty() ? 0 : exit_violation;
}

int run_gen( uint32_t num_vars, uint64_t count, uint64_t seed, const std::string& output,
             bool consecutive )
{
  if ( count == 0 )
  {
    throw npnsig::error( "count must be at least 1" );
  }
  const auto c = consecutive ? npnsig::generate_consecutive( num_vars, count, seed )
                             : npnsig::generate_uniform( num_vars, count, seed );
  std::ostringstream comment;
  if ( consecutive )
  {
    comment << "generator consecutive first=" << seed << " count=" << count;
  }
  else
  {
    comment << "generator mt19937-64 seed=" << seed << " count=" << count;
  }

  if ( output == "-" )
  {
    npnsig::write_corpus( std::cout, c, comment.str() );
    return std::cout ? 0 : exit_io;
  }
  std::ofstream file( output );
  if ( !file )
  {
    std::cerr << "error: " << output << ": cannot open for writing\n";
    return exit_io;
  }
  npnsig::write_corpus( file, c, comment.str() );
  file.flush();
  return file ? 0 : exit_io;
}

int run_bench( uint32_t num_vars, const std::vector<uint64_t>& sizes, uint64_t seed,
               const std::string& families )
{
  const auto sel = npnsig::parse_selection( families );
  for ( std::size_t i = 1; i < sizes.size(); ++i )
  {
    if ( sizes[i] <= sizes[i - 1] )
    {
      throw npnsig::error( "sizes must be strictly ascending" );
    }
  }

  double previous = 0.0;
  for ( std::size_t i = 0; i < sizes.size(); ++i )
  {
    const auto c = npnsig::generate_uniform( num_vars, sizes[i], seed );
    const auto start = std::chrono::steady_clock::now();
    const auto result = npnsig::classify( c.functions, sel );
    const double elapsed = time_ms( start );

    std::cout << "size " << sizes[i] << " classes " << result.classes.size() << " elapsed_ms "
              << std::setprecision( 3 ) << std::fixed << elapsed << " throughput_per_s "
              << std::setprecision( 1 ) << std::fixed << ( 1000.0 * sizes[i] / elapsed );
    if ( i > 0 )
    {
      std::cout << " ratio " << std::setprecision( 3 ) << std::fixed << ( elapsed / previous );
    }
    std::cout << '\n';
    previous = elapsed;
  }
  return 0;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "NPN signature-vector classifier" };
  app.require_subcommand( 1 );

  uint32_t num_vars = 0;
  std::string tt;
  std::string families = "all";
  std::string input;
  std::string output = "-";
  uint64_t count = 0;
  uint64_t seed = 1;
  bool consecutive = false;
  std::vector<uint64_t> sizes{ 10000, 100000 };

  /* the flag is --n to mirror the corpus header key */
  auto* sigs = app.add_subcommand( "sigs", "print signature vectors of one truth table" );
  sigs->add_option( "--n", num_vars, "number of variables" )->required();
  sigs->add_option( "--tt", tt, "hex truth table" )->required();
  sigs->add_option( "--sigs", families, "signature families (comma list or 'all')" );

  auto* classify = app.add_subcommand( "classify", "group a corpus by signature keys" );
  classify->add_option( "--input", input, "corpus file" )->required();
  classify->add_option( "--n", num_vars, "number of variables (overrides no header)" );
  classify->add_option( "--sigs", families, "signature families (comma list or 'all')" );
  classify->add_option( "--output", output, "output file ('-' = stdout)" );

  auto* compare = app.add_subcommand( "compare", "validate a grouping against the exact oracle" );
  compare->add_option( "--input", input, "corpus file" )->required();
  compare->add_option( "--n", num_vars, "number of variables (overrides no header)" );
  compare->add_option( "--sigs", families, "signature families (comma list or 'all')" );

  auto* gen = app.add_subcommand( "gen", "generate a corpus of random truth tables" );
  gen->add_option( "--n", num_vars, "number of variables" )->required();
  gen->add_option( "--count", count, "number of tables" )->required();
  gen->add_option( "--seed", seed, "PRNG seed (start value with --consecutive)" );
  gen->add_option( "--output", output, "output file ('-' = stdout)" );
  gen->add_flag( "--consecutive", consecutive, "emit consecutive integer encodings" );

  auto* bench = app.add_subcommand( "bench", "time classification at increasing corpus sizes" );
  bench->add_option( "--n", num_vars, "number of variables" )->required();
  bench->add_option( "--sizes", sizes, "ascending corpus sizes" )->delimiter( ',' )->required();
  bench->add_option( "--seed", seed, "PRNG seed" );
  bench->add_option( "--sigs", families, "signature families (comma list or 'all')" );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const int code = app.exit( e );
    return code == 0 ? 0 : 2;
  }

  try
  {
    if ( *sigs )
    {
      return run_sigs( num_vars, tt, families );
    }
    if ( *classify )
    {
      const auto arity =
          classify->count( "--n" ) ? std::optional<uint32_t>( num_vars ) : std::nullopt;
      return run_classify( input, arity, families, output );
    }
    if ( *compare )
    {
      const auto arity =
          compare->count( "--n" ) ? std::optional<uint32_t>( num_vars ) : std::nullopt;
      return run_compare( input, arity, families );
    }
    if ( *gen )
    {
      return run_gen( num_vars, count, seed, output, consecutive );
    }
    if ( *bench )
    {
      return run_bench( num_vars, sizes, seed, families );
    }
  }
  catch ( const io_error& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_io;
  }
  catch ( const npnsig::error& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
