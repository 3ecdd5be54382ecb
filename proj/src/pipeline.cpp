#include "qofmin/pipeline.hpp"

#include "qofmin/errors.hpp"
#include "qofmin/linearize.hpp"
#include "qofmin/oracle.hpp"
#include "qofmin/quantum_decomp.hpp"

#include <algorithm>

namespace qofmin
{

std::vector<std::string> const& pipeline_stage_names()
{
  static std::vector<std::string> const names = { "order", "merge", "cascade", "decompose-classical", "drop-restores", "decompose-quantum",
                                                   "linearize", "minimize", "rematerialize", "reduce", "cv-only" };
  return names;
}

namespace
{

class stage_runner
{
public:
  stage_runner( pipeline_config const& config, pipeline_result& result )
      : config_( config ), result_( result ), minimizer_( make_options( config ) )
  {
    if ( config.stop_after &&
         std::find( pipeline_stage_names().begin(), pipeline_stage_names().end(), *config.stop_after ) == pipeline_stage_names().end() )
    {
      throw std::invalid_argument( "unknown stage '" + *config.stop_after + "'" );
    }
  }

  /* returns true when the pipeline should stop after this stage */
  bool done( std::string const& name, circuit const& c )
  {
    auto const rules = minimizer_.applications() - rules_seen_;
    rules_seen_ = minimizer_.applications();
    result_.stages.push_back( { name, c.num_gates(), two_qubit_count( c ), rules } );
    result_.result = c;
    return config_.stop_after && *config_.stop_after == name;
  }

  bool done( std::string const& name, esop_expr const& e )
  {
    result_.stages.push_back( { name, e.terms().size(), 0u, 0u } );
    result_.expression = e;
    result_.expression_only = true;
    return config_.stop_after && *config_.stop_after == name;
  }

  minimizer& rules() { return minimizer_; }

  void finish()
  {
    result_.rules = minimizer_.log();
    result_.expression_only = false;
  }

private:
  static minimize_options make_options( pipeline_config const& config )
  {
    minimize_options o;
    o.debug_verify = config.debug_verify;
    o.verify_mode = equivalence_mode::output_wire;
    o.max_qubits = config.max_qubits;
    o.ancilla_budget = config.ancilla_budget;
    o.trace = config.trace;
    return o;
  }

  pipeline_config const& config_;
  pipeline_result& result_;
  minimizer minimizer_;
  std::size_t rules_seen_{ 0 };
};

/* linearize .. reduce; returns true if stopped early */
bool run_circuit_stages( stage_runner& run, circuit c, pipeline_config const& config )
{
  c = linearize_circuit( c );
  if ( run.done( "linearize", c ) )
    return true;
  c = run.rules().minimize( c );
  if ( run.done( "minimize", c ) )
    return true;
  c = run.rules().rematerialize_virtual( c );
  if ( run.done( "rematerialize", c ) )
    return true;
  c = run.rules().minimize( c );
  if ( run.done( "reduce", c ) )
    return true;
  if ( config.cv_only )
  {
    c = cnots_to_cv_pairs( c );
    if ( run.done( "cv-only", c ) )
      return true;
  }
  return false;
}

} // namespace

pipeline_result canonicalize( esop_expr const& e, pipeline_config const& config )
{
  pipeline_result result;
  result.ordering = "terms sorted by the fixed literal order, then pairwise polarity merging (no external variable ordering)";
  stage_runner run( config, result );

  /* construction already sorts and cancels duplicate terms */
  esop_expr const ordered( e.arity(), e.terms() );
  if ( run.done( "order", ordered ) )
    return result;
  auto const merged = merge_terms( ordered );
  if ( run.done( "merge", merged ) )
    return result;
  result.expression_only = false;

  if ( merged.terms().size() > 1u )
  {
    result.rm1 = check_upper_bound_rm1( merged );
    result.rm2 = check_upper_bound_rm2( merged );
  }

  auto c = esop_to_cascade( merged );
  if ( run.done( "cascade", c ) )
  {
    run.finish();
    return result;
  }
  c = decompose_classical( c, { .uncompute = config.uncompute } );
  if ( run.done( "decompose-classical", c ) )
  {
    run.finish();
    return result;
  }
  if ( !config.keep_uncompute )
  {
    c = drop_ancilla_restores( c );
  }
  if ( run.done( "drop-restores", c ) )
  {
    run.finish();
    return result;
  }
  if ( config.stop_after && *config.stop_after == "decompose-quantum" )
  {
    c = decompose_quantum( c, { .cv_only = config.cv_only } );
    run.done( "decompose-quantum", c );
    run.finish();
    return result;
  }
  c = decompose_quantum( c );
  if ( run.done( "decompose-quantum", c ) )
  {
    run.finish();
    return result;
  }

  bool const stopped = run_circuit_stages( run, c, config );
  run.finish();
  if ( !stopped && config.verify )
  {
    if ( result.result.num_wires() <= config.max_qubits && e.arity() <= max_truth_table_arity )
    {
      try
      {
        result.verified = output_truth_table( result.result, config.max_qubits ) == truth_table( e );
      }
      catch ( verification_error const& )
      {
        result.verified = false;
      }
    }
  }
  return result;
}

pipeline_result canonicalize_circuit( circuit const& c, pipeline_config const& config )
{
  pipeline_result result;
  result.ordering = "circuit input: gate order kept as given";
  stage_runner run( config, result );
  result.result = c;
  bool const stopped = run_circuit_stages( run, c, config );
  run.finish();
  if ( !stopped && config.verify && c.output_wire() )
  {
    auto const n = std::max( c.num_wires(), result.result.num_wires() );
    if ( n <= config.max_qubits )
    {
      try
      {
        result.verified = equivalent( c, result.result, equivalence_mode::output_wire, config.max_qubits );
      }
      catch ( verification_error const& )
      {
        result.verified = false;
      }
    }
  }
  return result;
}

bool is_fixpoint( circuit const& c )
{
  minimizer m;
  return m.run_pass( c ) == c;
}

} // namespace qofmin
