#include "qofmin/minimize.hpp"

#include "qofmin/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace qofmin
{

namespace
{

enum class path
{
  none,
  second_moves_left,
  first_moves_right
};

/* can gates i < j be made adjacent by commuting one of them through the gates in between */
path adjacency_path( std::vector<gate> const& gates, std::size_t i, std::size_t j )
{
  bool left = true, right = true;
  for ( auto k = i + 1; k < j && ( left || right ); ++k )
  {
    left = left && gates_commute( gates[k], gates[j] );
    right = right && gates_commute( gates[k], gates[i] );
  }
  if ( left )
    return path::second_moves_left;
  if ( right )
    return path::first_moves_right;
  return path::none;
}

/* replaces gates i and j by `merged` at the position where they meet */
std::vector<gate> splice( std::vector<gate> const& gates, std::size_t i, std::size_t j, path how, std::optional<gate> const& merged )
{
  std::vector<gate> out( gates.begin(), gates.begin() + i );
  if ( how == path::second_moves_left && merged )
  {
    out.push_back( *merged );
  }
  out.insert( out.end(), gates.begin() + i + 1, gates.begin() + j );
  if ( how == path::first_moves_right && merged )
  {
    out.push_back( *merged );
  }
  out.insert( out.end(), gates.begin() + j + 1, gates.end() );
  return out;
}

/* index of the single control whose polarity differs, for equal control wire sets */
std::optional<std::size_t> single_polarity_flip( gate const& a, gate const& b )
{
  if ( a.controls.size() != b.controls.size() )
  {
    return std::nullopt;
  }
  std::optional<std::size_t> flip;
  for ( auto k = 0u; k < a.controls.size(); ++k )
  {
    if ( a.controls[k].wire != b.controls[k].wire )
    {
      return std::nullopt;
    }
    if ( a.controls[k].positive != b.controls[k].positive )
    {
      if ( flip )
      {
        return std::nullopt;
      }
      flip = k;
    }
  }
  return flip;
}

std::string describe( gate const& g, circuit const& c )
{
  std::string s = std::string( to_string( g.op ) ) + " " + c.wires()[g.target].name + " |";
  for ( auto const& ctl : g.controls )
  {
    s += ( ctl.positive ? " +" : " -" ) + c.wires()[ctl.wire].name;
  }
  return s;
}

circuit with_gates( circuit const& c, std::vector<gate> gates )
{
  circuit out( c.wires() );
  out.set_gates( std::move( gates ) );
  out.renumber_groups();
  return out;
}

/* true when any control wire of g is the target of some gate */
std::vector<bool> targeted_wires( circuit const& c )
{
  std::vector<bool> targeted( c.num_wires(), false );
  for ( auto const& g : c.gates() )
  {
    targeted[g.target] = true;
  }
  return targeted;
}

} // namespace

std::optional<toffoli_reduction_match> match_toffoli_reduction( gate const& g1, gate const& g2 )
{
  if ( g1.op != op_kind::x || g2.op != op_kind::x || g1.target != g2.target )
  {
    return std::nullopt;
  }
  auto const& shorter = g1.controls.size() <= g2.controls.size() ? g1.controls : g2.controls;
  auto const& longer = g1.controls.size() <= g2.controls.size() ? g2.controls : g1.controls;

  toffoli_reduction_match m;
  std::optional<wire_id> flipped;
  for ( auto const& s : shorter )
  {
    auto it = std::find_if( longer.begin(), longer.end(), [&]( auto const& l ) { return l.wire == s.wire; } );
    if ( it == longer.end() )
    {
      return std::nullopt;
    }
    if ( it->positive != s.positive )
    {
      if ( flipped )
      {
        return std::nullopt;
      }
      flipped = s.wire;
    }
    else
    {
      m.shared.push_back( s );
    }
  }
  if ( !flipped )
  {
    return std::nullopt;
  }
  m.flipped = *flipped;
  for ( auto const& l : longer )
  {
    if ( std::none_of( shorter.begin(), shorter.end(), [&]( auto const& s ) { return s.wire == l.wire; } ) )
    {
      m.extension.push_back( l );
    }
  }
  return m;
}

minimizer::minimizer( minimize_options options ) : options_( std::move( options ) ) {}

void minimizer::record( rule_application app, circuit const& before, circuit const& after )
{
  if ( options_.debug_verify )
  {
    ++verifications_;
    bool ok = false;
    if ( before.num_wires() == after.num_wires() )
    {
      ok = equivalent( before, after, options_.verify_mode, options_.max_qubits );
    }
    else if ( options_.verify_mode == equivalence_mode::output_wire )
    {
      ok = equivalent( before, after, equivalence_mode::output_wire, options_.max_qubits );
    }
    else
    {
      /* added ancillas start at 0; compare on that subspace */
      circuit widened( after.wires() );
      widened.set_gates( before.gates() );
      uint64_t added_mask = 0;
      for ( auto w = before.num_wires(); w < after.num_wires(); ++w )
      {
        added_mask |= uint64_t{ 1 } << ( after.num_wires() - 1u - w );
      }
      ok = true;
      for ( uint64_t i = 0; ok && i < ( uint64_t{ 1 } << after.num_wires() ); ++i )
      {
        if ( i & added_mask )
        {
          continue;
        }
        auto const s1 = simulate( widened, i, options_.max_qubits ), s2 = simulate( after, i, options_.max_qubits );
        ok = ( s1 - s2 ).cwiseAbs().maxCoeff() <= equality_tolerance;
      }
    }
    if ( !ok )
    {
      throw verification_error( "rule '" + app.rule + "' at position " + std::to_string( app.position ) + " changed the circuit function: " + app.detail );
    }
  }
  if ( options_.trace )
  {
    options_.trace( app, after );
  }
  log_.push_back( std::move( app ) );
}

circuit minimizer::group_on_uninterrupted_lines( circuit const& c )
{
  auto const targeted = targeted_wires( c );
  auto movable = [&]( gate const& g ) {
    return std::none_of( g.controls.begin(), g.controls.end(), [&]( auto const& ctl ) { return targeted[ctl.wire]; } );
  };
  auto key = []( gate const& g ) { return std::tie( g.target, g.controls, g.op ); };

  auto gates = c.gates();
  auto const n = gates.size();
  bool changed = true;
  while ( changed )
  {
    changed = false;
    /* movable gates travel right past commuting non-movable gates */
    for ( auto p = n; p-- > 0; )
    {
      if ( !movable( gates[p] ) )
      {
        continue;
      }
      for ( auto q = p; q + 1 < n && !movable( gates[q + 1] ) && gates_commute( gates[q], gates[q + 1] ); ++q )
      {
        std::swap( gates[q], gates[q + 1] );
        changed = true;
      }
    }
    /* sort runs of movable gates */
    bool swapped = true;
    while ( swapped )
    {
      swapped = false;
      for ( auto q = 0u; q + 1 < n; ++q )
      {
        if ( movable( gates[q] ) && movable( gates[q + 1] ) && key( gates[q + 1] ) < key( gates[q] ) && gates_commute( gates[q], gates[q + 1] ) )
        {
          std::swap( gates[q], gates[q + 1] );
          swapped = changed = true;
        }
      }
    }
  }

  if ( gates == c.gates() )
  {
    return c;
  }
  /* reordering breaks group boundaries */
  for ( auto& g : gates )
  {
    g.group.reset();
  }
  auto out = with_gates( c, std::move( gates ) );
  std::size_t first = 0;
  while ( first < n && out.gates()[first] == c.gates()[first] )
  {
    ++first;
  }
  record( { "group", first, "moved gates on uninterrupted lines" }, c, out );
  return out;
}

circuit minimizer::merge_pe_gates( circuit const& c )
{
  circuit current = c;
  while ( true )
  {
    auto const& gates = current.gates();
    bool applied = false;
    for ( auto i = 0u; i < gates.size() && !applied; ++i )
    {
      for ( auto j = i + 1; j < gates.size() && !applied; ++j )
      {
        auto const& a = gates[i];
        auto const& b = gates[j];
        if ( a.target != b.target )
        {
          continue;
        }

        std::optional<gate> merged;
        std::string detail;
        if ( a.controls == b.controls )
        {
          if ( auto op = op_from_power( v_power( a.op ) + v_power( b.op ), a.controls.size() ) )
          {
            merged = make_gate( *op, a.target, a.controls );
          }
          detail = "fuse " + describe( a, current ) + " with " + describe( b, current );
        }
        else if ( is_v_type( a.op ) && is_v_type( b.op ) && v_power( a.op ) == v_power( b.op ) )
        {
          auto flip = single_polarity_flip( a, b );
          if ( !flip )
          {
            continue;
          }
          auto controls = a.controls;
          controls.erase( controls.begin() + *flip );
          merged = make_gate( *op_from_power( v_power( a.op ), controls.size() ), a.target, std::move( controls ) );
          detail = "factor " + describe( a, current ) + " with " + describe( b, current );
        }
        else
        {
          continue;
        }

        auto const how = adjacency_path( gates, i, j );
        if ( how == path::none )
        {
          continue;
        }
        auto next = with_gates( current, splice( gates, i, j, how, merged ) );
        record( { "merge", i, detail }, current, next );
        current = std::move( next );
        applied = true;
      }
    }
    if ( !applied )
    {
      return current;
    }
  }
}

circuit minimizer::toffoli_adjacency_reduce( circuit const& c )
{
  circuit current = c;
  while ( true )
  {
    auto const& gates = current.gates();
    bool applied = false;
    for ( auto i = 0u; i < gates.size() && !applied; ++i )
    {
      for ( auto j = i + 1; j < gates.size() && !applied; ++j )
      {
        auto m = match_toffoli_reduction( gates[i], gates[j] );
        /* with a non-empty extension the rewrite needs an extra CNOT pair and would grow the circuit */
        if ( !m || !m->extension.empty() )
        {
          continue;
        }
        auto const how = adjacency_path( gates, i, j );
        if ( how == path::none )
        {
          continue;
        }
        auto merged = make_gate( op_kind::x, gates[i].target, m->shared );
        auto detail = describe( gates[i], current ) + " and " + describe( gates[j], current ) + " differ in " + current.wires()[m->flipped].name;
        auto next = with_gates( current, splice( gates, i, j, how, merged ) );
        record( { "reduce", i, detail }, current, next );
        current = std::move( next );
        applied = true;
      }
    }
    if ( !applied )
    {
      return current;
    }
  }
}

namespace
{

/* CNOT target for a recompressed XOR: the last input wire, else the last wire */
wire_id choose_xor_wire( circuit const& c, std::vector<control> const& support )
{
  std::optional<wire_id> best;
  for ( auto const& s : support )
  {
    if ( c.wires()[s.wire].role == wire_role::input )
    {
      best = s.wire;
    }
  }
  return best ? *best : support.back().wire;
}

bool minterm_parity( gate const& g )
{
  bool p = false;
  for ( auto const& ctl : g.controls )
  {
    p ^= ctl.positive;
  }
  return p;
}

bool same_support( gate const& a, gate const& b )
{
  if ( a.controls.size() != b.controls.size() )
  {
    return false;
  }
  for ( auto k = 0u; k < a.controls.size(); ++k )
  {
    if ( a.controls[k].wire != b.controls[k].wire )
    {
      return false;
    }
  }
  return true;
}

} // namespace

circuit minimizer::rematerialize_virtual( circuit const& c )
{
  circuit current = c;
  std::optional<wire_id> pool;
  std::size_t added = 0;

  while ( true )
  {
    auto const& gates = current.gates();
    auto it = std::find_if( gates.begin(), gates.end(), []( auto const& g ) { return is_virtual( g.op ); } );
    if ( it == gates.end() )
    {
      return current;
    }
    auto const i = static_cast<std::size_t>( it - gates.begin() );
    auto const first = gates[i];
    circuit const before = current;

    if ( first.controls.size() <= 1u )
    {
      auto g = first;
      g.op = *op_from_power( v_power( g.op ), g.controls.size() );
      auto next_gates = gates;
      next_gates[i] = g;
      auto next = with_gates( current, std::move( next_gates ) );
      record( { "rematerialize", i, "single-control virtual gate is a plain CV" }, current, next );
      current = std::move( next );
      continue;
    }

    /* gather the parity class of `first` if it is complete */
    auto const n = first.controls.size();
    bool const parity = minterm_parity( first );
    std::vector<std::size_t> members{ i };
    std::set<std::vector<control>> minterms{ first.controls };
    for ( auto j = i + 1; j < gates.size() && members.size() < ( std::size_t{ 1 } << ( n - 1u ) ); ++j )
    {
      auto const& g = gates[j];
      bool const candidate = g.op == first.op && g.target == first.target && same_support( g, first ) && minterm_parity( g ) == parity &&
                             !minterms.count( g.controls );
      if ( !candidate )
      {
        continue;
      }
      bool movable = true;
      for ( auto k = i + 1; k < j && movable; ++k )
      {
        if ( std::find( members.begin(), members.end(), k ) == members.end() )
        {
          movable = gates_commute( gates[k], g );
        }
      }
      if ( movable )
      {
        members.push_back( j );
        minterms.insert( g.controls );
      }
    }

    std::vector<gate> replacement;
    std::string detail;
    if ( members.size() == ( std::size_t{ 1 } << ( n - 1u ) ) )
    {
      auto const y = choose_xor_wire( current, first.controls );
      std::vector<gate> cascade;
      for ( auto const& ctl : first.controls )
      {
        if ( ctl.wire != y )
        {
          cascade.push_back( make_gate( op_kind::x, y, { { ctl.wire, true } } ) );
        }
      }
      replacement = cascade;
      replacement.push_back( make_gate( *op_from_power( v_power( first.op ), 1u ), first.target, { { y, parity } } ) );
      replacement.insert( replacement.end(), cascade.rbegin(), cascade.rend() );
      detail = "recompressed " + std::to_string( members.size() ) + " virtual gates into an XOR-controlled CV on " + current.wires()[y].name;
    }
    else
    {
      members = { i };
      if ( !pool )
      {
        for ( auto w : current.wires_with_role( wire_role::ancilla ) )
        {
          if ( current.wires()[w].name == "r0" )
          {
            pool = w;
          }
        }
      }
      if ( !pool )
      {
        if ( added >= options_.ancilla_budget )
        {
          throw stage_error( "ancilla budget exhausted while rematerializing virtual gate at position " + std::to_string( i ) );
        }
        circuit widened = current;
        std::string name = "r0";
        for ( auto k = 1u; widened.find_wire( name ); ++k )
        {
          name = "r" + std::to_string( k );
        }
        pool = widened.add_wire( name, wire_role::ancilla );
        ++added;
        current = widened;
      }
      auto const compute = make_gate( op_kind::x, *pool, first.controls );
      replacement = { compute, make_gate( *op_from_power( v_power( first.op ), 1u ), first.target, { { *pool, true } } ), compute };
      detail = "computed product on ancilla " + current.wires()[*pool].name;
    }

    auto const& gates_now = current.gates();
    std::vector<gate> next_gates( gates_now.begin(), gates_now.begin() + i );
    next_gates.insert( next_gates.end(), replacement.begin(), replacement.end() );
    for ( auto k = i + 1; k < gates_now.size(); ++k )
    {
      if ( std::find( members.begin(), members.end(), k ) == members.end() )
      {
        next_gates.push_back( gates_now[k] );
      }
    }
    auto next = with_gates( current, std::move( next_gates ) );
    record( { "rematerialize", i, detail }, before, next );
    current = std::move( next );
  }
}

circuit minimizer::run_pass( circuit const& c )
{
  auto out = group_on_uninterrupted_lines( c );
  out = merge_pe_gates( out );
  return toffoli_adjacency_reduce( out );
}

circuit minimizer::minimize( circuit const& c )
{
  circuit current = c;
  for ( auto pass = 0u; pass < options_.max_passes; ++pass )
  {
    auto next = run_pass( current );
    if ( next == current )
    {
      return next;
    }
    current = std::move( next );
  }
  throw stage_error( "minimization did not reach a fixpoint within " + std::to_string( options_.max_passes ) + " passes" );
}

circuit group_on_uninterrupted_lines( circuit const& c )
{
  return minimizer().group_on_uninterrupted_lines( c );
}

circuit merge_pe_gates( circuit const& c )
{
  return minimizer().merge_pe_gates( c );
}

circuit toffoli_adjacency_reduce( circuit const& c )
{
  return minimizer().toffoli_adjacency_reduce( c );
}

circuit rematerialize_virtual( circuit const& c )
{
  return minimizer().rematerialize_virtual( c );
}

} // namespace qofmin
