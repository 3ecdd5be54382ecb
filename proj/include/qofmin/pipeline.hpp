/*!
  \file pipeline.hpp
  \brief End-to-end generation of the weakly canonical operator form

  1. order the terms (the fixed total order of `term_less`)
  2. merge terms that differ in one polarity
  3. cascade, decompose, linearize and minimize with the rewrite rules
  4. rematerialize and reduce Toffoli pairs to a fixpoint

  Stage names, in order: order, merge, cascade, decompose-classical,
  drop-restores, decompose-quantum, linearize, minimize, rematerialize,
  reduce, cv-only (only with `cv_only`).
*/

#pragma once

#include "qofmin/classical_decomp.hpp"
#include "qofmin/circuit.hpp"
#include "qofmin/esop.hpp"
#include "qofmin/minimize.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qofmin
{

struct pipeline_config
{
  /* false leaves classical-decomposition ancillas dirty */
  bool uncompute{ true };
  /* true skips dropping ancilla-restoring gates, keeping the circuit fully reversible */
  bool keep_uncompute{ false };
  bool cv_only{ false };
  bool debug_verify{ false };
  bool verify{ true };
  std::size_t max_qubits{ default_max_qubits };
  std::size_t ancilla_budget{ 1u };
  std::optional<std::string> stop_after;
  std::function<void( rule_application const&, circuit const& )> trace;
};

struct stage_report
{
  std::string name;
  std::size_t gate_count{ 0 };
  std::size_t two_qubit_count{ 0 };
  std::size_t rules_applied{ 0 };
};

struct pipeline_result
{
  esop_expr expression; /* after ordering and merging */
  circuit result;
  std::vector<stage_report> stages;
  std::vector<rule_application> rules;
  std::optional<bool> verified; /* nullopt when verification was skipped */
  std::optional<bound_check> rm1;
  std::optional<bound_check> rm2;
  std::string ordering;

  /* true when the run stopped before a circuit existed */
  bool expression_only{ false };
};

std::vector<std::string> const& pipeline_stage_names();

/*! \brief Runs the stages on an ESOP; stops early at `config.stop_after`. */
pipeline_result canonicalize( esop_expr const& e, pipeline_config const& config = {} );

/*! \brief Runs linearize, minimize, rematerialize and reduce on a circuit. */
pipeline_result canonicalize_circuit( circuit const& c, pipeline_config const& config = {} );

/*! \brief One more group/merge/reduce pass leaves `c` unchanged. */
bool is_fixpoint( circuit const& c );

} // namespace qofmin
