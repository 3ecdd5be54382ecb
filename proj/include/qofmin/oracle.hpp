/*!
  \file oracle.hpp
  \brief Dense unitary simulation used as ground truth for every rewrite

  Wire `k` of an `n`-wire circuit is bit `n - 1 - k` of a basis index, so
  the first wire is the most significant.  Gates are applied in circuit
  order: the unitary of `g1 g2` is `U(g2) * U(g1)`.
*/

#pragma once

#include "qofmin/circuit.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qofmin
{

using unitary = Eigen::MatrixXcd;
using matrix2 = Eigen::Matrix2cd;
using state_vector = Eigen::VectorXcd;

inline constexpr double equality_tolerance = 1e-10;
inline constexpr double algebra_tolerance = 1e-12;
inline constexpr std::size_t default_max_qubits = 12u;

matrix2 v_matrix();
matrix2 vdg_matrix();
matrix2 x_matrix();
matrix2 op_matrix( op_kind op );

struct identity_check
{
  std::string name;
  double max_error{ 0.0 };
  bool holds{ false };
};

/*! \brief Checks V*V = V+*V+ = X, V*V+ = V+*V = I, V*X = X*V = V+, V+*X = X*V+ = V. */
std::vector<identity_check> check_operator_identities( double tolerance = algebra_tolerance );

void apply_gate( gate const& g, std::size_t num_wires, state_vector& state );
state_vector simulate( circuit const& c, uint64_t basis_index, std::size_t max_qubits = default_max_qubits );

/*! \brief Throws std::length_error when the circuit has more than `max_qubits` wires. */
unitary circuit_unitary( circuit const& c, std::size_t max_qubits = default_max_qubits );

bool approx_equal( unitary const& a, unitary const& b, double tolerance = equality_tolerance );

/*! \brief Basis index for an input assignment; ancillas and outputs start at 0.

  Input `k` (in wire order) takes bit `num_inputs - 1 - k` of `assignment`.
*/
uint64_t basis_index_for( circuit const& c, uint64_t assignment );

/*! \brief Output-wire bit after applying `c` to a classical input.

  Throws verification_error when the final state is not a basis state.
*/
bool boolean_output( circuit const& c, uint64_t assignment, std::size_t max_qubits = default_max_qubits );

/*! \brief Boolean function on the output wire over all input assignments. */
std::vector<uint8_t> output_truth_table( circuit const& c, std::size_t max_qubits = default_max_qubits );

enum class equivalence_mode
{
  exact,
  output_wire,
  ancilla0_subspace
};

std::string_view to_string( equivalence_mode mode );
std::optional<equivalence_mode> equivalence_mode_from_string( std::string_view s );

/*! \brief Throws std::invalid_argument when the wire sets are incompatible for `mode`. */
bool equivalent( circuit const& c1, circuit const& c2, equivalence_mode mode, std::size_t max_qubits = default_max_qubits );

} // namespace qofmin
