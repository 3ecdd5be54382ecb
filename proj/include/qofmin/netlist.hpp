/*!
  \file netlist.hpp
  \brief Line-oriented netlist format

  \verbatim
  wire a input
  wire t output
  V t | +a -b
  X b | +a @0
  \endverbatim

  Operators are `X`, `V`, `V+`, `~V`, `~V+`.  A trailing `@n` tags the
  gate with group `n`.  Lines starting with `#` are comments.
*/

#pragma once

#include "qofmin/circuit.hpp"

#include <string>
#include <string_view>

namespace qofmin
{

std::string write_netlist( circuit const& c );
circuit parse_netlist( std::string_view text );

/*! \brief Heuristic used by the CLI: does the text start with a `wire` declaration? */
bool looks_like_netlist( std::string_view text );

} // namespace qofmin
