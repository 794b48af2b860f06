// Set-valued and single-valued operation tables over a Carrier, plus the
// set-extension algebra (extend_op, fold_op) the rest of the library builds
// on. Tables are immutable after construction and safe to share across
// threads; all operations here are pure.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperalg/carrier.hpp"
#include "hyperalg/subset.hpp"

namespace hyperalg {

// n x n table of subsets of the carrier. Cell contents are index-checked at
// construction; cell NON-emptiness is an axiom (a hyperoperation maps into
// non-empty subsets) and is the business of check_hypergroupoid and the
// parser, so broken candidates remain representable for the checkers.
class HyperTable {
 public:
  HyperTable(Carrier carrier, std::vector<IndexSubset> cells);

  const Carrier& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }

  const IndexSubset& cell(std::size_t a, std::size_t b) const {
    return cells_[index(a, b)];
  }

 private:
  std::size_t index(std::size_t a, std::size_t b) const;

  Carrier carrier_;
  std::vector<IndexSubset> cells_;  // row-major
};

// n x n table of single elements (the multiplication of a hyperring).
class MulTable {
 public:
  MulTable(Carrier carrier, std::vector<std::size_t> cells);

  const Carrier& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }

  std::size_t cell(std::size_t a, std::size_t b) const {
    return cells_[index(a, b)];
  }

 private:
  std::size_t index(std::size_t a, std::size_t b) const;

  Carrier carrier_;
  std::vector<std::size_t> cells_;  // row-major
};

// Set extension of the table's operation to subset arguments:
// union of cell(a, b) over a in A, b in B. A and B must be non-empty subsets
// over the table's carrier.
IndexSubset extend_op(const HyperTable& table, const IndexSubset& a,
                      const IndexSubset& b);

// Left fold of extend_op over a non-empty list of parts. Callers must have
// established associativity (semihypergroup check) for the result to be
// parenthesization-free.
IndexSubset fold_op(const HyperTable& table, std::span<const IndexSubset> parts);

}  // namespace hyperalg
