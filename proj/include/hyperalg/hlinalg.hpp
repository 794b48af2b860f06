// Hyper-linear algebra: linear-combination sets, spans, dependence
// witnesses, subspace sums, bases and dimension.
//
// The deletion/extension/dimension theorems are proved only for strongly
// left distributive spaces. The operations here still run on other spaces:
// wherever a conclusion would rest on that hypothesis they verify it
// directly on the result instead (span checks closure of the computed set,
// extend_to_basis re-checks independence, delete_redundant re-checks span
// preservation per step) and raise PreconditionError / TheoremViolation when
// the verification fails. On strongly-left spaces the verifications cannot
// fire. Tie-breaking is deterministic everywhere: coefficient tuples are
// enumerated lexicographically, vectors lowest-index first.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hyperalg/axioms.hpp"
#include "hyperalg/subset.hpp"

namespace hyperalg {

// Scalar indices (a_1,...,a_n), same length as an associated vector list.
using CoeffTuple = std::vector<std::size_t>;

// A not-all-zero coefficient tuple whose combination set contains theta.
struct DependenceWitness {
  CoeffTuple coeffs;
  std::vector<std::size_t> vectors;
};

struct Basis {
  std::vector<std::size_t> vectors;
  std::size_t dim() const { return vectors.size(); }
};

// The set a_1*x_1 # a_2*x_2 # ... # a_n*x_n. Lengths must match and be >= 1.
IndexSubset linear_combination(const HyperVectorSpace& space,
                               const CoeffTuple& coeffs,
                               const std::vector<std::size_t>& vecs);

// Union of linear_combination over every coefficient tuple: the set HL(S)
// of vectors reachable from `vecs`. No closure claim is made; an empty list
// yields {theta}.
IndexSubset combination_union(const HyperVectorSpace& space,
                              const std::vector<std::size_t>& vecs);

// The hyperlinear span. On strongly-left spaces this is the smallest
// hypersubspace containing the vectors; on other spaces the computed set is
// verified to be a subspace and a PreconditionError pointing at
// subspace_closure is raised when it is not.
IndexSubset span(const HyperVectorSpace& space,
                 const std::vector<std::size_t>& vecs);

// Smallest superset of S and {theta} closed under # and the action, by
// fixed-point iteration. Coincides with span on strongly-left spaces.
IndexSubset subspace_closure(const HyperVectorSpace& space,
                             const IndexSubset& s);

// First (lexicographic) not-all-zero coefficient tuple putting theta in the
// combination set, if any.
std::optional<DependenceWitness> is_dependent(
    const HyperVectorSpace& space, const std::vector<std::size_t>& vecs);

// Set-level dependence: dedups (ascending index order) and tests the tuple.
std::optional<DependenceWitness> is_dependent_set(const HyperVectorSpace& space,
                                                  const IndexSubset& s);

// Coefficients over vecs minus position `i` reproducing vecs[i], if any.
std::optional<CoeffTuple> express_as_combination(
    const HyperVectorSpace& space, const std::vector<std::size_t>& vecs,
    std::size_t i);

// Union of x # y over the two subspaces; the linear sum, itself a subspace.
IndexSubset sum_subspaces(const HyperVectorSpace& space, const IndexSubset& w1,
                          const IndexSubset& w2);

// Whether the subspaces intersect in {theta} only.
bool is_direct_sum(const HyperVectorSpace& space, const IndexSubset& w1,
                   const IndexSubset& w2);

// Repeatedly removes the lowest-position vector expressible from the others
// while the list is dependent, keeping the span equal to V (verified per
// step). Independent input is returned unchanged.
std::vector<std::size_t> delete_redundant(const HyperVectorSpace& space,
                                          const std::vector<std::size_t>& gens);

// Greedily appends the lowest-index vector outside the current span until
// the span is all of V. The seed must be independent (or empty).
Basis extend_to_basis(const HyperVectorSpace& space,
                      const std::vector<std::size_t>& indep);

// Basis of a hypersubspace W, greedy inside W.
Basis basis_of_subspace(const HyperVectorSpace& space, const IndexSubset& w);

// |extend_to_basis(space, ())|; 0 for the zero space.
std::size_t dimension(const HyperVectorSpace& space);

// Every coefficient tuple representing alpha over the basis, lexicographic.
std::vector<CoeffTuple> representations(const HyperVectorSpace& space,
                                        const Basis& basis, std::size_t alpha);

// indep followed by the first (position-lexicographic) sublist of gens of
// size |gens| - |indep| such that the result spans V.
std::vector<std::size_t> exchange(const HyperVectorSpace& space,
                                  const std::vector<std::size_t>& gens,
                                  const std::vector<std::size_t>& indep);

// Advance a coefficient tuple in lexicographic order (last position varies
// fastest); false once the tuple wraps to all zeros.
bool next_tuple(CoeffTuple& tuple, std::size_t base);

}  // namespace hyperalg
