/*!
  \file classical_decomp.hpp
  \brief ESOP to Toffoli cascades and reduction to two-control Toffoli gates
*/

#pragma once

#include "qofmin/circuit.hpp"
#include "qofmin/esop.hpp"

#include <span>
#include <vector>

namespace qofmin
{

/*! \brief One input wire per variable (named `a`, `b`, ...), output wire `t`, one X gate per term. */
circuit esop_to_cascade( esop_expr const& e );

/*! \brief AND-chain decomposition of a multi-controlled X.

  For `n > 2` controls the first `n - 2` ancillas hold the running
  products, a two-control Toffoli acts on the target and, when `uncompute`
  is set, the products are cleared in reverse order.  That is `2(n-2)+1`
  gates with uncompute and `n-1` without.  Gates with two or fewer
  controls are returned unchanged.  Throws stage_error when fewer than
  `n - 2` ancillas are supplied.
*/
std::vector<gate> decompose_toffoli( gate const& g, std::span<wire_id const> ancillas, bool uncompute = true );

struct classical_options
{
  bool uncompute{ true };
};

/*! \brief Replaces every X gate with more than two controls, adding ancilla wires `t1`, `t2`, ...

  With uncompute the ancillas are reused across terms (lowest index first);
  without it every term gets fresh ancillas.  Each expanded gate sequence
  forms one group.
*/
circuit decompose_classical( circuit const& c, classical_options const& options = {} );

/*! \brief Drops gates on ancilla wires whose value no later gate reads. */
circuit drop_ancilla_restores( circuit const& c );

struct bound_check
{
  std::size_t actual{ 0 };
  std::size_t bound{ 0 };
  bool holds() const { return actual <= bound; }
};

/*! \brief Two-control Toffoli count against the bound `sum(2^(n_k-2)) + k` over terms with `n_k > 2` controls.

  The actual count is taken from `decompose_classical` with uncompute.
*/
bound_check check_upper_bound_rm1( esop_expr const& e );

} // namespace qofmin
