// Built-in exemplar hyperfields, componentwise product spaces, and
// coordinate subspaces. Every constructor validates its result through the
// axiom checkers before returning it.
#pragma once

#include <cstddef>
#include <string>

#include "hyperalg/axioms.hpp"

namespace hyperalg {

// K2: the two-element hyperfield with 1+1 = {0,1}.
Hyperfield k2_hyperfield();

// S3: the sign hyperfield {0, 1, -1}: x+x = {x}, 1+(-1) = everything,
// sign multiplication.
Hyperfield sign_hyperfield();

// GF(p) wrapped as a degenerate hyperfield (singleton hyperaddition cells);
// p must be a prime <= 7.
Hyperfield gf_hyperfield(std::size_t p);

// Lookup by name: "K2", "S3", "GF2", "GF3", "GF5", "GF7".
Hyperfield builtin_hyperfield(const std::string& name);

// A validated product space together with its coordinate structure.
struct ProductSpace {
  HyperVectorSpace space;
  std::size_t arity = 0;

  // coordinate k of vector index v (coordinate 0 varies fastest)
  std::size_t coordinate(std::size_t v, std::size_t k) const;
  std::size_t encode(const std::vector<std::size_t>& coords) const;
};

// F^n with componentwise hyperaddition and singleton scalar action
// a*(x_1,...,x_n) = {(a.x_1,...,a.x_n)}. Guarded to |F|^n <= 343 and
// 1 <= n <= 3. The class flags are computed by validation, not assumed.
ProductSpace product_space(const Hyperfield& field, std::size_t n);

// Vectors of a product space whose coordinates vanish outside `mask`
// (mask bit k set = coordinate k free). Always a hypersubspace.
IndexSubset coordinate_subspace(const ProductSpace& ps, const IndexSubset& mask);

}  // namespace hyperalg
