/*!
  \file qof_text.hpp
  \brief Textual operator-form notation

  One term per gate:

  - `a^V_t`       CV from `a` onto `t` (`^V+`, `^~V`, `^~V+` for the others)
  - `abd^V_t`     multi-controlled V, `!` negates a literal
  - `(a+b)_b`     CNOT from `a` onto `b`
  - `ab_t`        Toffoli; the X operator is implied (`^X` is accepted)
  - `1^V_t`       uncontrolled operator

  Groups are written `[ g1 o g2 o g3 ]`.  Terms targeting the output wire
  are joined by ` (+) `, all others by a space.  Literals are concatenated
  when every wire name is one letter plus optional digits, otherwise they
  are joined by `*`.  A first line `# wires: a:input t:output ...`
  carries the wire table.
*/

#pragma once

#include "qofmin/circuit.hpp"

#include <string>
#include <string_view>

namespace qofmin
{

std::string emit_qof( circuit const& c, bool with_header = true );

/*! \brief Inverse of emit_qof; throws parse_error with line and column.

  Without a header, wires are created in order of first use: `t` is the
  output, `t<k>` and `r<k>` are ancillas, everything else is an input.
*/
circuit parse_qof( std::string_view text );

} // namespace qofmin
