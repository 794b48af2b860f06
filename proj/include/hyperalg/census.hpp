// Exhaustive small-order census of hypergroups and hyperfields up to
// relabeling. The pruned search fixes the zero at index 0 and forces its row
// and column to singletons (sound for commutative candidates, where the zero
// is unique and neutral); candidates are checked fast at mask level, then
// every emitted entry is re-validated by the real checker. Entries are
// deduplicated by canonical form: the lexicographically least serialization
// over all carrier permutations moving some zero to index 0.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperalg/axioms.hpp"
#include "hyperalg/table.hpp"

namespace hyperalg {

enum class CensusKind { kCommutativeHypergroup, kHypergroup, kHyperfield };

std::string census_kind_name(CensusKind kind);
std::optional<CensusKind> census_kind_from(const std::string& name,
                                           bool commutative);

struct CensusEntry {
  CensusKind kind;
  std::size_t order = 0;
  std::string name;  // position-based, assigned after canonical sort
  HyperTable add;    // canonical table over the generic carrier e0..e{n-1}
  std::optional<MulTable> mul;  // hyperfields only
  std::size_t zero = 0;
  std::size_t one = 0;  // hyperfields only
  std::string canonical_form;
  std::string id;  // FNV-1a 64 hash of canonical_form, hex
};

struct EnumerateOptions {
  std::size_t jobs = 1;
  double budget = 1e8;  // refusal threshold on the estimated candidate count
  DistributivityMode mode = DistributivityMode::kEqual;
};

// Estimated number of raw candidates the search must visit.
double estimate_census_cost(CensusKind kind, std::size_t order);

// Complete, deduplicated, canonically ordered census. Throws BudgetError
// when the estimate exceeds options.budget. Output is byte-identical for any
// jobs count.
std::vector<CensusEntry> enumerate_census(CensusKind kind, std::size_t order,
                                          const EnumerateOptions& options = {});

// Canonicalization primitives, exposed for the brute-force oracle in tests.
// Masks are row-major cell bit masks; `zeros` are the table's valid zero
// elements (per check_hypergroup).
std::vector<std::uint32_t> table_masks(const HyperTable& t);
std::vector<std::uint32_t> canonical_hypergroup_masks(
    const std::vector<std::uint32_t>& masks, std::size_t n,
    const std::vector<std::size_t>& zeros);
// Joint canonicalization of (add, mul) over permutations fixing `zero` at 0.
std::pair<std::vector<std::uint32_t>, std::vector<std::size_t>>
canonical_hyperfield_tables(const std::vector<std::uint32_t>& add_masks,
                            const std::vector<std::size_t>& mul_cells,
                            std::size_t n, std::size_t zero);
std::string canonical_form_string(CensusKind kind, std::size_t n,
                                  const std::vector<std::uint32_t>& add_masks,
                                  const std::vector<std::size_t>* mul_cells);
std::string content_hash(const std::string& canonical_form);

// Rebuild library values from canonical masks (used by entries and tests).
HyperTable table_from_masks(const std::vector<std::uint32_t>& masks,
                            std::size_t n);

}  // namespace hyperalg
