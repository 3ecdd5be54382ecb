/*!
  \file linearize.hpp
  \brief Removal of CNOT cascades that feed V/V+ controls

  A V or V+ gate whose control wire was first XORed with other literals
  by a cascade of CNOTs (and is restored afterwards) is controlled by the
  XOR of those literals.  That XOR is expanded into one mixed-polarity
  controlled gate per satisfying minterm, which leaves no gate targeting
  an input wire.
*/

#pragma once

#include "qofmin/circuit.hpp"

#include <vector>

namespace qofmin
{

/*! \brief Gates equivalent to `terminal` controlled by the XOR of `xor_support`.

  Returns `2^(n-1)` gates for `n` literals, one per minterm on which the
  XOR is 1, enumerated with the lowest wire as most significant bit.  A
  single literal gives the ordinary controlled gate; two or more give
  virtual gates.  Throws std::invalid_argument for an empty support or a
  non-V operator.
*/
std::vector<gate> expand_xor_control( gate const& terminal, std::vector<control> xor_support );

/*! \brief Replaces CNOTs onto input wires by XOR-expanded controls.

  Each input wire is tracked as an XOR of original wire values.  A V/V+
  gate controlled by a modified input is expanded with expand_xor_control,
  a CNOT from a modified input becomes a fan of CNOTs, and the CNOTs onto
  inputs are dropped.  Throws stage_error, naming the gate position, for
  any other operator on an input, for a multi-controlled gate reading a
  modified input, when a wire is changed while an input still depends on
  it, or when an input is not restored by the end.
*/
circuit linearize_circuit( circuit const& c );

} // namespace qofmin
