#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bondcycle {

/// Outcome of one verification check.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double wall_time_ms = 0.0;
};

/// The named checks behind `verify-paper`: exact values on the Petersen
/// families, co-spectrum equalities, dual-Hamiltonian witnesses, the bond
/// upper bound, the Dirac circumference bound, the exhaustive 3-connected
/// conjecture sweep, the two-connected counterexample family, oracle
/// equivalence against naive full enumeration, and graph6 fidelity.
CriterionResult verify_petersen_bond_values();       // 1
CriterionResult verify_co_spectrum_exhaustive();     // 2
CriterionResult verify_co_spectrum_constructive();   // 3
CriterionResult verify_dual_hamiltonian();           // 4
CriterionResult verify_bond_upper_bound();           // 5
CriterionResult verify_dirac_bound();                // 6
CriterionResult verify_conjecture_sweep();           // 7
CriterionResult verify_counterexample_family();      // 8
CriterionResult verify_oracle_equivalence();         // 9
CriterionResult verify_graph6_fidelity();            // 10

/// Runs all checks in order. When `progress` is given, prints one
/// "[PASS]"/"[FAIL]" line per criterion as it completes.
std::vector<CriterionResult> run_verification(std::ostream* progress = nullptr);

}  // namespace bondcycle
