/*!
  \file quantum_decomp.hpp
  \brief Two-control Toffoli gates as CNOT/CV/CV+ sequences, and the Peres family
*/

#pragma once

#include "qofmin/circuit.hpp"
#include "qofmin/classical_decomp.hpp"
#include "qofmin/esop.hpp"

#include <optional>
#include <vector>

namespace qofmin
{

/*! \brief `CV(x) CV(y) [CNOT(x->y) o CV+(y) o CNOT(x->y)]` for controls x, y of any polarity.

  `cnot_target` selects which of the two controls is `y`.  The three
  bracketed gates carry `group`.  Throws stage_error unless `g` is an X
  gate with exactly two controls.
*/
std::vector<gate> toffoli_to_5gate( gate const& g, std::size_t cnot_target = 1u, std::optional<uint32_t> group = std::nullopt );

/*! \brief The 5-gate form with each CNOT replaced by two CVs; seven CV/CV+ gates. */
std::vector<gate> toffoli_to_7gate( gate const& g, std::size_t cnot_target = 1u, std::optional<uint32_t> group = std::nullopt );

/*! \brief Four-gate Peres gate (a, a^b, ab^c) on wires a, b (inputs) and c (output).

  Variant 1: CV(a) CV(b) CNOT(a->b) CV+(b).  Variant 2 swaps V and V+.
  Variant 3 moves CV(a) behind the CNOT.  Throws std::invalid_argument
  for variants other than 1..3.
*/
circuit peres( int variant );

struct quantum_options
{
  bool cv_only{ false };
};

/*! \brief Decomposes every two-control X gate; gates with fewer controls pass through.

  The CNOT target is the input wire among the two controls (the later one
  if both are inputs).  Throws stage_error on X gates with more than two
  controls.
*/
circuit decompose_quantum( circuit const& c, quantum_options const& options = {} );

/*! \brief Replaces every single-control X by two CVs on the same wires. */
circuit cnots_to_cv_pairs( circuit const& c );

/*! \brief Two-qubit operator count against `sum(5 * 2^(n_k-2)) + k` over terms with `n_k >= 2` controls.

  The actual count decomposes without uncompute, so no ancilla is reused.
*/
bound_check check_upper_bound_rm2( esop_expr const& e );

} // namespace qofmin
