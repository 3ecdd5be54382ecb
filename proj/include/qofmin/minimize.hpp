/*!
  \file minimize.hpp
  \brief Rewrite rules over linearized circuits

  Rules are applied one at a time, leftmost candidate first:

  - `group`: gates whose controls lie only on wires that no gate targets
    are moved right through commuting gates and sorted into clusters.
  - `merge`: two same-target gates that can be made adjacent fuse when
    their controls are identical (operator powers add: V V = X, V V+ = I,
    X X = I), or, for V-type gates with the same operator, when their
    controls differ in exactly one literal's polarity (`aC + !aC = C`).
  - `reduce`: the same single-flip rule for multi-controlled X gates.
  - `rematerialize`: virtual gates are turned back into realizable ones.

  With `debug_verify` set, the oracle compares every rewrite with its
  input and a mismatch throws verification_error.
*/

#pragma once

#include "qofmin/circuit.hpp"
#include "qofmin/oracle.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qofmin
{

struct rule_application
{
  std::string rule;
  std::size_t position{ 0 };
  std::string detail;
};

struct minimize_options
{
  bool debug_verify{ false };
  equivalence_mode verify_mode{ equivalence_mode::output_wire };
  std::size_t max_qubits{ default_max_qubits };

  /* extra ancilla wires rematerialization may add */
  std::size_t ancilla_budget{ 1u };
  std::size_t max_passes{ 1000u };

  std::function<void( rule_application const&, circuit const& )> trace;
};

/*! \brief Result of matching two X gates against the Toffoli reduction pattern. */
struct toffoli_reduction_match
{
  wire_id flipped{ 0 };
  std::vector<control> shared;    /* C: literals common to both gates */
  std::vector<control> extension; /* P: literals only the longer gate has */
};

/*! \brief Controls of one gate are `C x`, the other's are `C !x P`.

  Both gates must be X gates on the same target.  Returns nullopt
  otherwise, in particular for pairs where no literal is flipped.
*/
std::optional<toffoli_reduction_match> match_toffoli_reduction( gate const& g1, gate const& g2 );

class minimizer
{
public:
  explicit minimizer( minimize_options options = {} );

  circuit group_on_uninterrupted_lines( circuit const& c );
  circuit merge_pe_gates( circuit const& c );
  circuit toffoli_adjacency_reduce( circuit const& c );
  circuit rematerialize_virtual( circuit const& c );

  /*! \brief One pass of group, merge and reduce. */
  circuit run_pass( circuit const& c );

  /*! \brief Passes until nothing changes. */
  circuit minimize( circuit const& c );

  std::vector<rule_application> const& log() const { return log_; }
  std::size_t applications() const { return log_.size(); }
  std::size_t verifications() const { return verifications_; }

private:
  void record( rule_application app, circuit const& before, circuit const& after );

  minimize_options options_;
  std::vector<rule_application> log_;
  std::size_t verifications_{ 0 };
};

circuit group_on_uninterrupted_lines( circuit const& c );
circuit merge_pe_gates( circuit const& c );
circuit toffoli_adjacency_reduce( circuit const& c );
circuit rematerialize_virtual( circuit const& c );

} // namespace qofmin
