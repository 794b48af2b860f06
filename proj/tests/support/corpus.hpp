// Shared builders for tests.
#pragma once

#include <vector>

#include "hyperalg/axioms.hpp"
#include "hyperalg/constructions.hpp"
#include "hyperalg/errors.hpp"

namespace corpus {

using namespace hyperalg;

inline ProductSpace k2_square() { return product_space(k2_hyperfield(), 2); }
inline ProductSpace k2_cube() { return product_space(k2_hyperfield(), 3); }
inline ProductSpace s3_line() { return product_space(sign_hyperfield(), 1); }
inline ProductSpace s3_square() { return product_space(sign_hyperfield(), 2); }

// The one-vector space {theta} over the given hyperfield.
inline HyperVectorSpace zero_space(const Hyperfield& field) {
  Carrier vectors({"theta"});
  HyperTable vadd(vectors, {IndexSubset::singleton(1, 0)});
  std::vector<IndexSubset> cells(field.size(), IndexSubset::singleton(1, 0));
  ActionTable action(field.size(), 1, std::move(cells));
  SpaceCheck check = check_hypervectorspace(field, vectors, vadd, action, 0);
  if (!check.ok()) throw ContractError("zero space failed validation");
  return std::move(*check.space);
}

// K2's hyperaddition with one cell replaced.
inline HyperTable k2_add_mutant(std::size_t a, std::size_t b, IndexSubset cell) {
  Hyperfield k2 = k2_hyperfield();
  std::vector<IndexSubset> cells;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      cells.push_back(i == a && j == b ? cell : k2.add.cell(i, j));
  return HyperTable(k2.carrier, std::move(cells));
}

}  // namespace corpus
