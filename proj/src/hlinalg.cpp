#include "hyperalg/hlinalg.hpp"

#include <algorithm>
#include <string>

#include "hyperalg/errors.hpp"

namespace hyperalg {

namespace {

void check_vector_indices(const HyperVectorSpace& space,
                          const std::vector<std::size_t>& vecs) {
  for (std::size_t v : vecs)
    if (v >= space.dim_carrier())
      throw ContractError("vector index " + std::to_string(v) + " out of range");
}

bool all_zero(const HyperVectorSpace& space, const CoeffTuple& coeffs) {
  for (std::size_t a : coeffs)
    if (a != space.field.zero) return false;
  return true;
}

std::string render_list(const HyperVectorSpace& space,
                        const std::vector<std::size_t>& vecs) {
  std::string out;
  for (std::size_t v : vecs) {
    if (!out.empty()) out += ' ';
    out += space.vectors.label(v);
  }
  return out;
}

}  // namespace

bool next_tuple(CoeffTuple& tuple, std::size_t base) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < base) return true;
    tuple[i] = 0;
  }
  return false;
}

IndexSubset linear_combination(const HyperVectorSpace& space,
                               const CoeffTuple& coeffs,
                               const std::vector<std::size_t>& vecs) {
  if (coeffs.size() != vecs.size())
    throw ContractError("coefficient and vector lists have different lengths");
  if (vecs.empty())
    throw ContractError("linear combination needs at least one vector");
  check_vector_indices(space, vecs);
  for (std::size_t a : coeffs)
    if (a >= space.field.size())
      throw ContractError("scalar index " + std::to_string(a) + " out of range");

  IndexSubset acc = space.action.cell(coeffs[0], vecs[0]);
  for (std::size_t i = 1; i < vecs.size(); ++i)
    acc = extend_op(space.vadd, acc, space.action.cell(coeffs[i], vecs[i]));
  return acc;
}

IndexSubset combination_union(const HyperVectorSpace& space,
                              const std::vector<std::size_t>& vecs) {
  const std::size_t nv = space.dim_carrier();
  if (vecs.empty()) return IndexSubset::singleton(nv, space.theta);
  check_vector_indices(space, vecs);
  IndexSubset out(nv);
  const IndexSubset everything = IndexSubset::full(nv);
  CoeffTuple coeffs(vecs.size(), 0);
  do {
    out.unite(linear_combination(space, coeffs, vecs));
    if (out == everything) break;
  } while (next_tuple(coeffs, space.field.size()));
  return out;
}

IndexSubset span(const HyperVectorSpace& space,
                 const std::vector<std::size_t>& vecs) {
  if (vecs.empty()) throw ContractError("span needs at least one vector");
  IndexSubset result = combination_union(space, vecs);
  if (!space.cls.strong_left) {
    SubspaceReport report = check_subspace(space, result);
    if (!report.pass)
      throw PreconditionError(
          "span(" + render_list(space, vecs) +
          "): the space is not strongly left distributive and the combination "
          "union is not a hypersubspace; use subspace_closure instead");
  }
  return result;
}

IndexSubset subspace_closure(const HyperVectorSpace& space,
                             const IndexSubset& s) {
  const std::size_t nv = space.dim_carrier();
  if (s.universe() != nv)
    throw ContractError("closure argument must range over the space's vectors");
  IndexSubset closed = s;
  closed.insert(space.theta);
  for (;;) {
    IndexSubset next = closed;
    next.unite(extend_op(space.vadd, closed, closed));
    for (std::size_t a = 0; a < space.field.size(); ++a)
      next.unite(act_on_subset(space.action, a, closed));
    if (next == closed) return closed;
    closed = next;
  }
}

std::optional<DependenceWitness> is_dependent(
    const HyperVectorSpace& space, const std::vector<std::size_t>& vecs) {
  if (vecs.empty()) throw ContractError("dependence test needs vectors");
  check_vector_indices(space, vecs);
  CoeffTuple coeffs(vecs.size(), 0);
  do {
    if (all_zero(space, coeffs)) continue;
    if (linear_combination(space, coeffs, vecs).contains(space.theta))
      return DependenceWitness{coeffs, vecs};
  } while (next_tuple(coeffs, space.field.size()));
  return std::nullopt;
}

std::optional<DependenceWitness> is_dependent_set(const HyperVectorSpace& space,
                                                  const IndexSubset& s) {
  if (s.empty()) return std::nullopt;  // no finite subset is dependent
  return is_dependent(space, s.indices());
}

std::optional<CoeffTuple> express_as_combination(
    const HyperVectorSpace& space, const std::vector<std::size_t>& vecs,
    std::size_t i) {
  if (vecs.size() < 2)
    throw ContractError("express_as_combination needs at least two vectors");
  if (i >= vecs.size()) throw ContractError("position out of range");
  std::vector<std::size_t> remaining;
  remaining.reserve(vecs.size() - 1);
  for (std::size_t j = 0; j < vecs.size(); ++j)
    if (j != i) remaining.push_back(vecs[j]);
  CoeffTuple coeffs(remaining.size(), 0);
  do {
    if (linear_combination(space, coeffs, remaining).contains(vecs[i]))
      return coeffs;
  } while (next_tuple(coeffs, space.field.size()));
  return std::nullopt;
}

IndexSubset sum_subspaces(const HyperVectorSpace& space, const IndexSubset& w1,
                          const IndexSubset& w2) {
  if (!check_subspace(space, w1).pass)
    throw PreconditionError("sum_subspaces: left argument is not a hypersubspace");
  if (!check_subspace(space, w2).pass)
    throw PreconditionError("sum_subspaces: right argument is not a hypersubspace");
  return extend_op(space.vadd, w1, w2);
}

bool is_direct_sum(const HyperVectorSpace& space, const IndexSubset& w1,
                   const IndexSubset& w2) {
  if (!check_subspace(space, w1).pass || !check_subspace(space, w2).pass)
    throw PreconditionError("is_direct_sum: arguments must be hypersubspaces");
  return set_intersection(w1, w2) ==
         IndexSubset::singleton(space.dim_carrier(), space.theta);
}

std::vector<std::size_t> delete_redundant(const HyperVectorSpace& space,
                                          const std::vector<std::size_t>& gens) {
  if (gens.empty()) throw ContractError("delete_redundant needs vectors");
  const IndexSubset target = combination_union(space, gens);
  if (!(target == IndexSubset::full(space.dim_carrier())))
    throw PreconditionError("delete_redundant: the given vectors do not span V");

  std::vector<std::size_t> current = gens;
  while (is_dependent(space, current)) {
    bool removed = false;
    for (std::size_t i = 0; i < current.size() && !removed; ++i) {
      std::vector<std::size_t> rest;
      rest.reserve(current.size() - 1);
      for (std::size_t j = 0; j < current.size(); ++j)
        if (j != i) rest.push_back(current[j]);
      bool expressible =
          current.size() >= 2
              ? express_as_combination(space, current, i).has_value()
              : true;  // a dependent singleton spans only the zero space
      if (expressible && combination_union(space, rest) == target) {
        current = std::move(rest);
        removed = true;
      }
    }
    if (!removed)
      throw TheoremViolation(
          "deletion failed: dependent spanning list " +
          render_list(space, current) +
          " has no removable vector preserving the span (space is not "
          "strongly left distributive)");
    if (current.empty()) break;
  }
  return current;
}

namespace {

Basis greedy_basis(const HyperVectorSpace& space, const IndexSubset& target,
                   std::vector<std::size_t> seed) {
  IndexSubset reach = combination_union(space, seed);
  while (!(reach == target)) {
    std::size_t pick = space.dim_carrier();
    IndexSubset missing = set_difference(target, reach);
    pick = missing.first();
    if (pick >= space.dim_carrier())
      throw TheoremViolation("greedy basis construction overshot its target");
    seed.push_back(pick);
    reach = combination_union(space, seed);
  }
  if (!seed.empty() && is_dependent(space, seed))
    throw TheoremViolation(
        "greedy basis construction produced a dependent list " +
        render_list(space, seed) +
        " (space is not strongly left distributive)");
  return Basis{std::move(seed)};
}

}  // namespace

Basis extend_to_basis(const HyperVectorSpace& space,
                      const std::vector<std::size_t>& indep) {
  check_vector_indices(space, indep);
  if (!indep.empty()) {
    if (auto witness = is_dependent(space, indep))
      throw PreconditionError(
          "extend_to_basis: seed " + render_list(space, indep) +
          " is dependent (witness coefficients found)");
  }
  return greedy_basis(space, IndexSubset::full(space.dim_carrier()), indep);
}

Basis basis_of_subspace(const HyperVectorSpace& space, const IndexSubset& w) {
  if (!check_subspace(space, w).pass)
    throw PreconditionError("basis_of_subspace: argument is not a hypersubspace");
  return greedy_basis(space, w, {});
}

std::size_t dimension(const HyperVectorSpace& space) {
  return extend_to_basis(space, {}).dim();
}

std::vector<CoeffTuple> representations(const HyperVectorSpace& space,
                                        const Basis& basis, std::size_t alpha) {
  if (alpha >= space.dim_carrier())
    throw ContractError("representations: vector index out of range");
  std::vector<CoeffTuple> out;
  if (basis.vectors.empty()) {
    if (alpha == space.theta) out.push_back({});
    return out;
  }
  CoeffTuple coeffs(basis.vectors.size(), 0);
  do {
    if (linear_combination(space, coeffs, basis.vectors).contains(alpha))
      out.push_back(coeffs);
  } while (next_tuple(coeffs, space.field.size()));
  return out;
}

std::vector<std::size_t> exchange(const HyperVectorSpace& space,
                                  const std::vector<std::size_t>& gens,
                                  const std::vector<std::size_t>& indep) {
  check_vector_indices(space, gens);
  check_vector_indices(space, indep);
  const IndexSubset full = IndexSubset::full(space.dim_carrier());
  if (!(combination_union(space, gens) == full))
    throw PreconditionError("exchange: generators do not span V");
  if (!indep.empty() && is_dependent(space, indep))
    throw PreconditionError("exchange: the independent list is dependent");
  if (indep.size() > gens.size())
    throw TheoremViolation(
        "exchange: |independent| > |generators| — this would contradict the "
        "replacement bound m <= n");

  const std::size_t needed = gens.size() - indep.size();
  std::vector<std::size_t> picks(needed);
  for (std::size_t i = 0; i < needed; ++i) picks[i] = i;
  for (;;) {
    std::vector<std::size_t> candidate = indep;
    for (std::size_t p : picks) candidate.push_back(gens[p]);
    if (combination_union(space, candidate) == full) return candidate;
    // next position combination, lexicographic
    std::size_t i = needed;
    while (i-- > 0) {
      if (picks[i] + (needed - i) < gens.size()) {
        ++picks[i];
        for (std::size_t j = i + 1; j < needed; ++j) picks[j] = picks[j - 1] + 1;
        break;
      }
      if (i == 0) {
        throw TheoremViolation(
            "exchange: no completion of the independent list from the "
            "generators spans V");
      }
    }
    if (needed == 0)
      throw TheoremViolation(
          "exchange: independent list alone does not span V and no generators "
          "may be added");
  }
}

}  // namespace hyperalg
