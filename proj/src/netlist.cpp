#include "qofmin/netlist.hpp"

#include "qofmin/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace qofmin
{

std::string write_netlist( circuit const& c )
{
  std::string out;
  for ( auto const& w : c.wires() )
  {
    out += "wire " + w.name + " " + std::string( to_string( w.role ) ) + "\n";
  }
  for ( auto const& g : c.gates() )
  {
    out += std::string( to_string( g.op ) ) + " " + c.wires()[g.target].name + " |";
    for ( auto const& ctl : g.controls )
    {
      out += ctl.positive ? " +" : " -";
      out += c.wires()[ctl.wire].name;
    }
    if ( g.group )
    {
      out += " @" + std::to_string( *g.group );
    }
    out += "\n";
  }
  return out;
}

namespace
{

std::optional<op_kind> op_from_string( std::string_view s )
{
  if ( s == "X" )
    return op_kind::x;
  if ( s == "V" )
    return op_kind::v;
  if ( s == "V+" )
    return op_kind::vdg;
  if ( s == "~V" )
    return op_kind::virt_v;
  if ( s == "~V+" )
    return op_kind::virt_vdg;
  return std::nullopt;
}

} // namespace

circuit parse_netlist( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  std::string raw;
  std::size_t line = 0;
  circuit c;

  while ( std::getline( in, raw ) )
  {
    ++line;
    if ( auto hash = raw.find( '#' ); hash != std::string::npos )
    {
      raw.erase( hash );
    }
    std::istringstream ls( raw );
    std::string head;
    if ( !( ls >> head ) )
    {
      continue;
    }

    if ( head == "wire" )
    {
      std::string name, role, extra;
      if ( !( ls >> name >> role ) || ( ls >> extra ) )
      {
        throw parse_error( "expected 'wire <name> <role>'", line, 1 );
      }
      auto r = role_from_string( role );
      if ( !r )
      {
        throw parse_error( "unknown wire role '" + role + "'", line, 1 );
      }
      if ( c.num_gates() > 0 )
      {
        throw parse_error( "wire declared after gates", line, 1 );
      }
      if ( c.find_wire( name ) )
      {
        throw parse_error( "duplicate wire '" + name + "'", line, 1 );
      }
      c.add_wire( name, *r );
      continue;
    }

    auto op = op_from_string( head );
    if ( !op )
    {
      throw parse_error( "unknown operator '" + head + "'", line, 1 );
    }
    std::string target_name, bar;
    if ( !( ls >> target_name >> bar ) || bar != "|" )
    {
      throw parse_error( "expected '<op> <target> | <controls>'", line, 1 );
    }
    auto target = c.find_wire( target_name );
    if ( !target )
    {
      throw parse_error( "unknown wire '" + target_name + "'", line, 1 );
    }
    gate g;
    g.op = *op;
    g.target = *target;
    std::string tok;
    while ( ls >> tok )
    {
      if ( tok[0] == '@' )
      {
        try
        {
          std::size_t used = 0;
          g.group = static_cast<uint32_t>( std::stoul( tok.substr( 1 ), &used ) );
          if ( used + 1 != tok.size() )
          {
            throw std::invalid_argument( tok );
          }
        }
        catch ( std::exception const& )
        {
          throw parse_error( "bad group tag '" + tok + "'", line, 1 );
        }
        if ( ls >> tok )
        {
          throw parse_error( "group tag must be last", line, 1 );
        }
        break;
      }
      if ( tok.size() < 2 || ( tok[0] != '+' && tok[0] != '-' ) )
      {
        throw parse_error( "bad control '" + tok + "'", line, 1 );
      }
      auto w = c.find_wire( tok.substr( 1 ) );
      if ( !w )
      {
        throw parse_error( "unknown wire '" + tok.substr( 1 ) + "'", line, 1 );
      }
      g.controls.push_back( { *w, tok[0] == '+' } );
    }
    c.add_gate( std::move( g ) );
    try
    {
      circuit probe( c.wires() );
      probe.add_gate( c.gates().back() );
      probe.validate();
    }
    catch ( std::invalid_argument const& e )
    {
      throw parse_error( e.what(), line, 1 );
    }
  }
  try
  {
    c.validate();
  }
  catch ( std::invalid_argument const& e )
  {
    throw parse_error( e.what(), line, 1 );
  }
  return c;
}

bool looks_like_netlist( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  std::string tok;
  while ( in >> tok )
  {
    if ( tok[0] == '#' )
    {
      std::string rest;
      std::getline( in, rest );
      continue;
    }
    return tok == "wire";
  }
  return false;
}

} // namespace qofmin
