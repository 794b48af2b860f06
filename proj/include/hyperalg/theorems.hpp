// The law harness: executable statements of the structural laws the library
// catalogs (hypergroup laws R2.x, space laws R3.7/T4.x, dependence laws
// T5.x, basis laws T6.x), instantiated over bounded quantifier spaces on
// concrete validated structures. A FAIL on a structure satisfying a law's
// hypotheses is a counterexample report, never silently suppressed; SKIP
// appears exactly when a hypothesis (strong left distributivity, or a
// degenerate one-element scalar field) is unmet.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperalg/axioms.hpp"

namespace hyperalg {

struct PropertyVerdict {
  std::string property_id;   // "R2.5", "T6.5", ...
  std::string structure_id;
  bool pass = false;
  std::optional<std::string> witness;         // set iff !pass
  std::optional<std::string> skipped_reason;  // set iff skipped

  bool skipped() const { return skipped_reason.has_value(); }
};

// One text line per verdict: "<property> <structure> PASS|FAIL|SKIP [...]".
std::string render_verdict(const PropertyVerdict& v);

// Subspace-law sweeps enumerate all subsets of V; guarded to keep that
// exhaustive search at desk scale.
inline constexpr std::size_t kLawSweepMaxVectors = 12;

// Laws R2.5-R2.7 (double negation, zero neutrality, zero uniqueness) on a
// table that passed check_hypergroup; R2.6/R2.7 are skipped for
// non-commutative tables.
std::vector<PropertyVerdict> verify_hypergroup_laws(const HyperTable& t,
                                                    const std::string& id);

// The R3.7 scalar-action laws plus the subspace laws (criteria agreement,
// intersections, linear sums and their minimality) over every subspace pair.
std::vector<PropertyVerdict> verify_space_laws(const HyperVectorSpace& space,
                                               const std::string& id);

// The dependence laws R5.3/R5.4 and T5.6-T5.10 over vector lists of length
// <= 3 and generating sets found by search. Skipped (with reason) when the
// space is not strongly left distributive or the scalars are degenerate.
std::vector<PropertyVerdict> verify_linalg_theorems(const HyperVectorSpace& space,
                                                    const std::string& id);

// The basis laws T6.2-T6.5: unique representation, extension to a basis,
// maximal-independent maximality, and the dimension formula. Same
// hypothesis discipline as the dependence laws.
std::vector<PropertyVerdict> verify_basis_theorems(const HyperVectorSpace& space,
                                                   const std::string& id);

// All subsets of V that pass check_subspace, in ascending mask order.
std::vector<IndexSubset> all_subspaces(const HyperVectorSpace& space);

}  // namespace hyperalg
