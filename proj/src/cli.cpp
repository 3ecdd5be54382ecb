#include "qofmin/cli.hpp"

#include "qofmin/classical_decomp.hpp"
#include "qofmin/errors.hpp"
#include "qofmin/esop.hpp"
#include "qofmin/linearize.hpp"
#include "qofmin/minimize.hpp"
#include "qofmin/netlist.hpp"
#include "qofmin/oracle.hpp"
#include "qofmin/pipeline.hpp"
#include "qofmin/qof_text.hpp"
#include "qofmin/quantum_decomp.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <variant>

namespace qofmin
{

namespace
{

struct options
{
  std::string input;
  std::string output;
  std::string report;
  std::string stop_after;
  std::string mode{ "output-wire" };
  std::string netlist_a;
  std::string netlist_b;
  std::size_t max_qubits{ 10u };
  std::size_t ancilla_budget{ 1u };
  bool trace{ false };
  bool verify{ false };
  bool debug_verify{ false };
  bool no_uncompute{ false };
  bool cv_only{ false };
  bool keep_uncompute{ false };
  uint64_t seed{ 1u };
  std::size_t count{ 20u };
  uint32_t max_arity{ 5u };
  std::size_t max_terms{ 4u };
};

std::string read_file( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw parse_error( "cannot read '" + path + "'", 0, 0 );
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output( std::string const& path, std::string const& text, std::ostream& out )
{
  if ( path.empty() || path == "-" )
  {
    out << text;
    return;
  }
  std::ofstream f( path, std::ios::binary );
  if ( !f )
  {
    throw stage_error( "cannot write '" + path + "'" );
  }
  f << text;
}

using input_value = std::variant<esop_expr, circuit>;

input_value read_input( std::string const& path )
{
  auto const text = read_file( path );
  auto first = text.find_first_not_of( " \t\r\n" );
  if ( path.size() > 4 && path.substr( path.size() - 4 ) == ".pla" )
  {
    return parse_esop_pla( text );
  }
  if ( first != std::string::npos && text.compare( first, 2, ".i" ) == 0 )
  {
    return parse_esop_pla( text );
  }
  if ( first != std::string::npos && text.compare( first, 8, "# wires:" ) == 0 )
  {
    return parse_qof( text );
  }
  if ( looks_like_netlist( text ) )
  {
    return parse_netlist( text );
  }
  /* ESOP text: '#' starts a comment */
  std::string stripped;
  std::istringstream in( text );
  std::string line;
  while ( std::getline( in, line ) )
  {
    stripped += line.substr( 0, line.find( '#' ) ) + "\n";
  }
  return parse_esop( stripped );
}

nlohmann::json report_json( pipeline_result const& r )
{
  nlohmann::json j;
  j["stages"] = nlohmann::json::array();
  for ( auto const& s : r.stages )
  {
    j["stages"].push_back( { { "name", s.name }, { "gate_count", s.gate_count }, { "two_qubit_count", s.two_qubit_count }, { "rules_applied", s.rules_applied } } );
  }
  j["verified"] = r.verified ? nlohmann::json( *r.verified ) : nlohmann::json( nullptr );
  nlohmann::json bounds;
  bounds["rm_I"] = r.rm1 ? nlohmann::json( r.rm1->bound ) : nlohmann::json( nullptr );
  bounds["rm_II"] = r.rm2 ? nlohmann::json( r.rm2->bound ) : nlohmann::json( nullptr );
  bounds["actual"] = { { "rm_I", r.rm1 ? nlohmann::json( r.rm1->actual ) : nlohmann::json( nullptr ) },
                       { "rm_II", r.rm2 ? nlohmann::json( r.rm2->actual ) : nlohmann::json( nullptr ) } };
  j["bounds"] = bounds;
  j["ordering"] = r.ordering;
  j["rules"] = nlohmann::json::array();
  for ( auto const& a : r.rules )
  {
    j["rules"].push_back( { { "rule", a.rule }, { "position", a.position }, { "detail", a.detail } } );
  }
  return j;
}

pipeline_config make_config( options const& o, std::ostream& err )
{
  pipeline_config config;
  config.uncompute = !o.no_uncompute;
  config.keep_uncompute = o.keep_uncompute;
  config.cv_only = o.cv_only;
  config.debug_verify = o.debug_verify;
  config.verify = o.verify;
  config.max_qubits = o.max_qubits;
  config.ancilla_budget = o.ancilla_budget;
  if ( !o.stop_after.empty() )
  {
    config.stop_after = o.stop_after;
  }
  if ( o.trace )
  {
    config.trace = [&err]( rule_application const& app, circuit const& c ) {
      err << "[" << app.rule << " @" << app.position << "] " << app.detail << "\n" << emit_qof( c, false );
    };
  }
  return config;
}

/* circuit-only stages for netlist or QOF input */
pipeline_result run_circuit_stage( std::string const& stage, circuit const& c, options const& o, pipeline_config const& config )
{
  if ( stage == "canonicalize" || stage == "emit-qof" )
  {
    return canonicalize_circuit( c, config );
  }
  pipeline_result r;
  r.ordering = "circuit input: gate order kept as given";
  minimize_options mo;
  mo.debug_verify = config.debug_verify;
  mo.max_qubits = config.max_qubits;
  mo.ancilla_budget = config.ancilla_budget;
  mo.trace = config.trace;
  minimizer m( mo );
  circuit out;
  if ( stage == "decompose-classical" )
  {
    out = decompose_classical( c, { .uncompute = !o.no_uncompute } );
  }
  else if ( stage == "decompose-quantum" )
  {
    out = decompose_quantum( c, { .cv_only = o.cv_only } );
  }
  else if ( stage == "linearize" )
  {
    out = linearize_circuit( c );
  }
  else if ( stage == "minimize" )
  {
    out = m.minimize( c );
  }
  else
  {
    throw std::invalid_argument( "stage '" + stage + "' needs an ESOP input" );
  }
  r.result = out;
  r.rules = m.log();
  r.stages.push_back( { stage, out.num_gates(), two_qubit_count( out ), m.applications() } );
  if ( config.verify && c.output_wire() && std::max( c.num_wires(), out.num_wires() ) <= config.max_qubits )
  {
    try
    {
      r.verified = equivalent( c, out, equivalence_mode::output_wire, config.max_qubits );
    }
    catch ( verification_error const& )
    {
      r.verified = false;
    }
  }
  return r;
}

std::string stop_stage_for( std::string const& subcommand )
{
  static std::map<std::string, std::string> const stops = {
      { "parse", "order" },
      { "merge", "merge" },
      { "cascade", "cascade" },
      { "decompose-classical", "decompose-classical" },
      { "decompose-quantum", "decompose-quantum" },
      { "linearize", "linearize" },
      { "minimize", "minimize" },
  };
  auto it = stops.find( subcommand );
  return it == stops.end() ? std::string() : it->second;
}

esop_expr random_esop( std::mt19937_64& rng, uint32_t max_arity, std::size_t max_terms )
{
  auto const arity = std::uniform_int_distribution<uint32_t>( 1u, max_arity )( rng );
  auto const k = std::uniform_int_distribution<std::size_t>( 1u, max_terms )( rng );
  std::vector<product_term> terms;
  for ( auto i = 0u; i < k; ++i )
  {
    product_term t;
    for ( auto v = 0u; v < arity; ++v )
    {
      auto const choice = std::uniform_int_distribution<int>( 0, 2 )( rng );
      if ( choice > 0 )
      {
        t.literals.push_back( { v, choice == 1 } );
      }
    }
    terms.push_back( std::move( t ) );
  }
  return esop_expr( arity, std::move( terms ) );
}

int run_pipeline( std::string const& subcommand, options o, std::ostream& out, std::ostream& err )
{
  if ( o.stop_after.empty() )
  {
    o.stop_after = stop_stage_for( subcommand );
  }
  auto config = make_config( o, err );
  auto const input = read_input( o.input );

  pipeline_result result;
  if ( auto const* e = std::get_if<esop_expr>( &input ) )
  {
    result = canonicalize( *e, config );
  }
  else
  {
    if ( subcommand == "parse" || subcommand == "merge" || subcommand == "cascade" )
    {
      err << "error: stage '" << subcommand << "' needs an ESOP input\n";
      return exit_code::usage;
    }
    result = run_circuit_stage( subcommand, std::get<circuit>( input ), o, config );
  }

  std::string text;
  if ( result.expression_only )
  {
    text = to_string( result.expression ) + "\n";
  }
  else if ( subcommand == "emit-qof" )
  {
    text = emit_qof( result.result );
  }
  else
  {
    text = write_netlist( result.result );
  }
  write_output( o.output, text, out );

  auto const report = report_json( result ).dump( 2 ) + "\n";
  if ( !o.report.empty() )
  {
    write_output( o.report, report, out );
  }
  else if ( !o.output.empty() && o.output != "-" )
  {
    out << report;
  }

  if ( result.verified && !*result.verified )
  {
    err << "verification failed\n";
    return exit_code::verification;
  }
  return exit_code::ok;
}

int run_verify( options const& o, std::ostream& out, std::ostream& err )
{
  auto const mode = equivalence_mode_from_string( o.mode );
  if ( !mode )
  {
    err << "error: unknown mode '" << o.mode << "'\n";
    return exit_code::usage;
  }
  auto load = []( std::string const& path ) {
    auto v = read_input( path );
    if ( auto const* e = std::get_if<esop_expr>( &v ) )
    {
      return esop_to_cascade( *e );
    }
    return std::get<circuit>( v );
  };
  auto const a = load( o.netlist_a );
  auto const b = load( o.netlist_b );
  bool const same = equivalent( a, b, *mode, o.max_qubits );
  out << ( same ? "equivalent" : "not equivalent" ) << " (" << to_string( *mode ) << ")\n";
  return same ? exit_code::ok : exit_code::verification;
}

int run_corpus( options const& o, std::ostream& out, std::ostream& err )
{
  std::mt19937_64 rng( o.seed );
  auto config = make_config( o, err );
  config.verify = true;
  bool all_ok = true;
  std::string text;
  for ( auto i = 0u; i < o.count; ++i )
  {
    auto const e = random_esop( rng, o.max_arity, o.max_terms );
    auto const r = canonicalize( e, config );
    bool const ok = !r.verified || *r.verified;
    all_ok &= ok;
    text += to_string( e ) + "\tarity=" + std::to_string( e.arity() ) + "\tgates=" + std::to_string( r.result.num_gates() ) +
            "\ttwo_qubit=" + std::to_string( two_qubit_count( r.result ) ) + "\tverified=" + ( r.verified ? ( *r.verified ? "yes" : "NO" ) : "skipped" ) +
            "\n";
  }
  write_output( o.output, text, out );
  return all_ok ? exit_code::ok : exit_code::verification;
}

} // namespace

int run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "ESOP to CNOT/CV/CV+ synthesis with operator-form minimization", "qofmin" };
  app.require_subcommand( 1 );
  options o;

  std::vector<std::string> const stages = { "parse",     "merge",    "cascade",      "decompose-classical", "decompose-quantum",
                                            "linearize", "minimize", "canonicalize", "emit-qof" };
  for ( auto const& name : stages )
  {
    auto* sub = app.add_subcommand( name, "run the pipeline up to '" + name + "'" );
    sub->add_option( "-i,--input", o.input, "ESOP, PLA, netlist or QOF file" )->required();
    sub->add_option( "-o,--output", o.output, "output file (default stdout)" );
    sub->add_option( "--report", o.report, "JSON report file" );
    sub->add_option( "--stop-after", o.stop_after, "last pipeline stage to run" );
    sub->add_flag( "--trace", o.trace, "print the QOF after every rule application" );
    sub->add_flag( "--verify", o.verify, "check the result against the input with the oracle" );
    sub->add_flag( "--debug-verify", o.debug_verify, "check every rule application with the oracle" );
    sub->add_option( "--max-qubits", o.max_qubits, "oracle wire limit" );
    sub->add_option( "--ancilla-budget", o.ancilla_budget, "extra ancillas rematerialization may add" );
    sub->add_flag( "--no-uncompute", o.no_uncompute, "leave classical-decomposition ancillas dirty" );
    sub->add_flag( "--cv-only", o.cv_only, "express CNOTs as CV pairs" );
    sub->add_flag( "--keep-uncompute", o.keep_uncompute, "keep ancilla-restoring gates" );
  }

  auto* verify = app.add_subcommand( "verify", "compare two circuits with the oracle" );
  verify->add_option( "-a", o.netlist_a, "first circuit" )->required();
  verify->add_option( "-b", o.netlist_b, "second circuit" )->required();
  verify->add_option( "--mode", o.mode, "exact, output-wire or ancilla0-subspace" );
  verify->add_option( "--max-qubits", o.max_qubits, "oracle wire limit" );

  auto* corpus = app.add_subcommand( "corpus", "canonicalize and verify random ESOPs" );
  corpus->add_option( "--seed", o.seed, "random seed" );
  corpus->add_option( "--count", o.count, "number of functions" );
  corpus->add_option( "--max-arity", o.max_arity, "largest arity" )->check( CLI::Range( 1u, 8u ) );
  corpus->add_option( "--max-terms", o.max_terms, "largest term count" );
  corpus->add_option( "-o,--output", o.output, "output file (default stdout)" );
  corpus->add_flag( "--debug-verify", o.debug_verify, "check every rule application with the oracle" );
  corpus->add_option( "--max-qubits", o.max_qubits, "oracle wire limit" );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( CLI::CallForHelp const& e )
  {
    app.exit( e, out, err );
    return exit_code::ok;
  }
  catch ( CLI::ParseError const& e )
  {
    app.exit( e, out, err );
    return exit_code::usage;
  }

  try
  {
    if ( verify->parsed() )
    {
      return run_verify( o, out, err );
    }
    if ( corpus->parsed() )
    {
      return run_corpus( o, out, err );
    }
    for ( auto* sub : app.get_subcommands() )
    {
      return run_pipeline( sub->get_name(), o, out, err );
    }
  }
  catch ( parse_error const& e )
  {
    err << "parse error: " << e.what() << "\n";
    return exit_code::parse;
  }
  catch ( verification_error const& e )
  {
    err << "verification error: " << e.what() << "\n";
    return exit_code::verification;
  }
  catch ( std::exception const& e )
  {
    err << "stage error: " << e.what() << "\n";
    return exit_code::stage;
  }
  return exit_code::usage;
}

} // namespace qofmin
