#include "hyperalg/theorems.hpp"

#include <algorithm>
#include <string>

#include "hyperalg/errors.hpp"
#include "hyperalg/hlinalg.hpp"

namespace hyperalg {

namespace {

constexpr const char* kNotStrongLeft = "not strongly left distributive";
// Over the one-element hyperfield 1 = 0, so "not all zero" coefficient
// tuples do not exist and the dependence theorems degenerate (even the null
// vector is independent). The source implicitly assumes nontrivial scalars.
constexpr const char* kDegenerateField = "degenerate hyperfield (1 = 0)";

PropertyVerdict pass_verdict(const std::string& property, const std::string& id) {
  return PropertyVerdict{property, id, true, std::nullopt, std::nullopt};
}

PropertyVerdict fail_verdict(const std::string& property, const std::string& id,
                             std::string witness) {
  return PropertyVerdict{property, id, false, std::move(witness), std::nullopt};
}

PropertyVerdict skip_verdict(const std::string& property, const std::string& id,
                             std::string reason) {
  return PropertyVerdict{property, id, false, std::nullopt, std::move(reason)};
}

void guard_sweep(const HyperVectorSpace& space, const std::string& what) {
  if (space.dim_carrier() > kLawSweepMaxVectors)
    throw PreconditionError(what + ": exhaustive sweep guarded to |V| <= " +
                            std::to_string(kLawSweepMaxVectors) + ", got " +
                            std::to_string(space.dim_carrier()));
}

// Ordered vector lists of the given length, visited in lexicographic order.
template <typename Fn>
void for_each_list(std::size_t n, std::size_t length, Fn&& fn) {
  std::vector<std::size_t> list(length, 0);
  for (;;) {
    fn(const_cast<const std::vector<std::size_t>&>(list));
    std::size_t i = length;
    while (i-- > 0) {
      if (++list[i] < n) break;
      list[i] = 0;
      if (i == 0) return;
    }
  }
}

// Strictly increasing index lists (subsets) of the given size.
template <typename Fn>
void for_each_subset_list(std::size_t n, std::size_t size, Fn&& fn) {
  if (size > n) return;
  std::vector<std::size_t> picks(size);
  for (std::size_t i = 0; i < size; ++i) picks[i] = i;
  for (;;) {
    fn(const_cast<const std::vector<std::size_t>&>(picks));
    std::size_t i = size;
    bool advanced = false;
    while (i-- > 0) {
      if (picks[i] + (size - i) < n) {
        ++picks[i];
        for (std::size_t j = i + 1; j < size; ++j) picks[j] = picks[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
  }
}

std::string list_text(const HyperVectorSpace& space,
                      const std::vector<std::size_t>& vecs) {
  std::string out = "(";
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (i) out += ' ';
    out += space.vectors.label(vecs[i]);
  }
  return out + ")";
}

bool expressible_from_prefix(const HyperVectorSpace& space,
                             const std::vector<std::size_t>& vecs,
                             std::size_t i) {
  if (i == 0) return false;
  std::vector<std::size_t> prefix(vecs.begin(), vecs.begin() + i);
  CoeffTuple coeffs(prefix.size(), 0);
  do {
    if (linear_combination(space, coeffs, prefix).contains(vecs[i])) return true;
  } while (next_tuple(coeffs, space.field.size()));
  return false;
}

}  // namespace

std::string render_verdict(const PropertyVerdict& v) {
  std::string out = v.property_id + " " + v.structure_id + " ";
  if (v.skipped())
    out += "SKIP " + *v.skipped_reason;
  else if (v.pass)
    out += v.witness ? "PASS " + *v.witness : "PASS";
  else
    out += "FAIL THEOREM-COUNTEREXAMPLE " + v.witness.value_or("");
  return out;
}

std::vector<PropertyVerdict> verify_hypergroup_laws(const HyperTable& t,
                                                    const std::string& id) {
  HypergroupReport report = check_hypergroup(t);
  if (!report.is_hypergroup())
    throw ContractError("verify_hypergroup_laws needs a validated hypergroup");
  const std::size_t n = t.size();
  const std::size_t zero = *report.canonical_zero();
  std::vector<PropertyVerdict> out;

  {  // R2.5: -(-a) = a
    PropertyVerdict v = pass_verdict("R2.5", id);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t nn = *report.inverse[*report.inverse[a]];
      if (nn != a) {
        v = fail_verdict("R2.5", id,
                         "a=" + t.carrier().label(a) + " -(-a)=" +
                             t.carrier().label(nn));
        break;
      }
    }
    out.push_back(std::move(v));
  }

  if (!report.is_commutative) {
    out.push_back(skip_verdict("R2.6", id, "not commutative"));
    out.push_back(skip_verdict("R2.7", id, "not commutative"));
    return out;
  }

  {  // R2.6: 0 # a = {a}
    PropertyVerdict v = pass_verdict("R2.6", id);
    for (std::size_t a = 0; a < n; ++a) {
      if (!(t.cell(zero, a) == IndexSubset::singleton(n, a))) {
        v = fail_verdict("R2.6", id,
                         "0#a=" + t.cell(zero, a).to_string() + " at a=" +
                             t.carrier().label(a));
        break;
      }
    }
    out.push_back(std::move(v));
  }

  {  // R2.7: the zero is unique
    if (report.zeros.count() == 1)
      out.push_back(pass_verdict("R2.7", id));
    else
      out.push_back(fail_verdict(
          "R2.7", id, "zeros=" + t.carrier().render_subset(report.zeros)));
  }
  return out;
}

std::vector<IndexSubset> all_subspaces(const HyperVectorSpace& space) {
  guard_sweep(space, "all_subspaces");
  const std::size_t n = space.dim_carrier();
  std::vector<IndexSubset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    IndexSubset w(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) w.insert(i);
    if (check_subspace(space, w).pass) out.push_back(std::move(w));
  }
  return out;
}

std::vector<PropertyVerdict> verify_space_laws(const HyperVectorSpace& space,
                                               const std::string& id) {
  guard_sweep(space, "verify_space_laws");
  const std::size_t nv = space.dim_carrier();
  const std::size_t nf = space.field.size();
  const IndexSubset just_theta = IndexSubset::singleton(nv, space.theta);
  std::vector<PropertyVerdict> out;

  {  // R3.7(i): k * theta = {theta}
    PropertyVerdict v = pass_verdict("R3.7i", id);
    for (std::size_t k = 0; k < nf; ++k)
      if (!(space.action.cell(k, space.theta) == just_theta)) {
        v = fail_verdict("R3.7i", id,
                         "k=" + space.field.carrier.label(k) + " k*theta=" +
                             space.vectors.render_subset(
                                 space.action.cell(k, space.theta)));
        break;
      }
    out.push_back(std::move(v));
  }

  {  // R3.7(ii): k * x = {theta} forces k = 0 or x = theta
    PropertyVerdict v = pass_verdict("R3.7ii", id);
    for (std::size_t k = 0; k < nf && v.pass; ++k)
      for (std::size_t x = 0; x < nv; ++x)
        if (space.action.cell(k, x) == just_theta && k != space.field.zero &&
            x != space.theta) {
          v = fail_verdict("R3.7ii", id,
                           "k=" + space.field.carrier.label(k) +
                               " x=" + space.vectors.label(x));
          break;
        }
    out.push_back(std::move(v));
  }

  {  // R3.7(iii): -x lies in (-1) * x
    PropertyVerdict v = pass_verdict("R3.7iii", id);
    const std::size_t minus_one = space.field.neg[space.field.one];
    for (std::size_t x = 0; x < nv; ++x)
      if (!space.action.cell(minus_one, x).contains(space.vneg[x])) {
        v = fail_verdict("R3.7iii", id, "x=" + space.vectors.label(x));
        break;
      }
    out.push_back(std::move(v));
  }

  // Subspace sweeps. The two criteria must agree on EVERY subset.
  {
    PropertyVerdict v = pass_verdict("T4.2-T4.3", id);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nv) && v.pass;
         ++mask) {
      IndexSubset w(nv);
      for (std::size_t i = 0; i < nv; ++i)
        if ((mask >> i) & 1u) w.insert(i);
      SubspaceReport rep = check_subspace(space, w);
      if (!rep.criteria_agree)
        v = fail_verdict("T4.2-T4.3", id,
                         "criteria disagree on W=" +
                             space.vectors.render_subset(w));
    }
    out.push_back(std::move(v));
  }

  std::vector<IndexSubset> subspaces = all_subspaces(space);

  {  // T4.5: pairwise intersections are subspaces
    PropertyVerdict v = pass_verdict("T4.5", id);
    for (std::size_t i = 0; i < subspaces.size() && v.pass; ++i)
      for (std::size_t j = 0; j < subspaces.size(); ++j) {
        IndexSubset meet = set_intersection(subspaces[i], subspaces[j]);
        if (!check_subspace(space, meet).pass) {
          v = fail_verdict("T4.5", id,
                           "U=" + space.vectors.render_subset(subspaces[i]) +
                               " W=" + space.vectors.render_subset(subspaces[j]));
          break;
        }
      }
    out.push_back(std::move(v));
  }

  {  // T4.6: family intersections (all triples and the full family)
    PropertyVerdict v = pass_verdict("T4.6", id);
    for (std::size_t i = 0; i < subspaces.size() && v.pass; ++i)
      for (std::size_t j = i; j < subspaces.size() && v.pass; ++j)
        for (std::size_t k = j; k < subspaces.size(); ++k) {
          IndexSubset meet = set_intersection(
              set_intersection(subspaces[i], subspaces[j]), subspaces[k]);
          if (!check_subspace(space, meet).pass) {
            v = fail_verdict("T4.6", id, "triple intersection not a subspace");
            break;
          }
        }
    if (v.pass && !subspaces.empty()) {
      IndexSubset meet = subspaces.front();
      for (const IndexSubset& w : subspaces) meet.intersect(w);
      if (!check_subspace(space, meet).pass)
        v = fail_verdict("T4.6", id, "full-family intersection not a subspace");
    }
    out.push_back(std::move(v));
  }

  {  // T4.8: the linear sum is a subspace
    PropertyVerdict v = pass_verdict("T4.8", id);
    for (std::size_t i = 0; i < subspaces.size() && v.pass; ++i)
      for (std::size_t j = 0; j < subspaces.size(); ++j) {
        IndexSubset sum = extend_op(space.vadd, subspaces[i], subspaces[j]);
        if (!check_subspace(space, sum).pass) {
          v = fail_verdict("T4.8", id,
                           "U=" + space.vectors.render_subset(subspaces[i]) +
                               " W=" + space.vectors.render_subset(subspaces[j]));
          break;
        }
      }
    out.push_back(std::move(v));
  }

  {  // T4.10: the sum is the smallest subspace containing both
    PropertyVerdict v = pass_verdict("T4.10", id);
    for (std::size_t i = 0; i < subspaces.size() && v.pass; ++i)
      for (std::size_t j = 0; j < subspaces.size() && v.pass; ++j) {
        IndexSubset sum = extend_op(space.vadd, subspaces[i], subspaces[j]);
        IndexSubset both = set_union(subspaces[i], subspaces[j]);
        if (!both.is_subset_of(sum)) {
          v = fail_verdict("T4.10", id, "sum does not contain its parts");
          break;
        }
        for (const IndexSubset& p : subspaces)
          if (both.is_subset_of(p) && !sum.is_subset_of(p)) {
            v = fail_verdict(
                "T4.10", id,
                "P=" + space.vectors.render_subset(p) + " contains U and W " +
                    "but not U # W");
            break;
          }
      }
    out.push_back(std::move(v));
  }

  return out;
}

std::vector<PropertyVerdict> verify_linalg_theorems(
    const HyperVectorSpace& space, const std::string& id) {
  static const char* kIds[] = {"R5.3", "R5.4", "T5.6", "T5.7",
                               "T5.8", "T5.9", "T5.10"};
  std::vector<PropertyVerdict> out;
  if (space.field.size() == 1) {
    for (const char* property : kIds)
      out.push_back(skip_verdict(property, id, kDegenerateField));
    return out;
  }
  if (!space.cls.strong_left) {
    for (const char* property : kIds)
      out.push_back(skip_verdict(property, id, kNotStrongLeft));
    return out;
  }
  guard_sweep(space, "verify_linalg_theorems");
  const std::size_t nv = space.dim_carrier();
  const IndexSubset full = IndexSubset::full(nv);

  {  // R5.3: singletons of non-null vectors are independent
    PropertyVerdict v = pass_verdict("R5.3", id);
    for (std::size_t x = 0; x < nv; ++x) {
      if (x == space.theta) continue;
      if (auto w = is_dependent(space, {x})) {
        v = fail_verdict("R5.3", id, "x=" + space.vectors.label(x));
        break;
      }
    }
    out.push_back(std::move(v));
  }

  {  // R5.4: every list containing theta is dependent
    PropertyVerdict v = pass_verdict("R5.4", id);
    for (std::size_t len = 1; len <= 3 && v.pass; ++len)
      for_each_list(nv, len, [&](const std::vector<std::size_t>& list) {
        if (!v.pass) return;
        if (std::find(list.begin(), list.end(), space.theta) == list.end())
          return;
        if (!is_dependent(space, list))
          v = fail_verdict("R5.4", id, list_text(space, list));
      });
    out.push_back(std::move(v));
  }

  {  // T5.6: dependent iff some member is a combination of the rest
    PropertyVerdict v = pass_verdict("T5.6", id);
    for (std::size_t len = 2; len <= 3 && v.pass; ++len)
      for_each_list(nv, len, [&](const std::vector<std::size_t>& list) {
        if (!v.pass) return;
        bool dependent = is_dependent(space, list).has_value();
        bool expressible = false;
        for (std::size_t i = 0; i < list.size() && !expressible; ++i)
          expressible = express_as_combination(space, list, i).has_value();
        if (dependent != expressible)
          v = fail_verdict("T5.6", id,
                           list_text(space, list) +
                               (dependent ? " dependent without expressible member"
                                          : " expressible member but independent"));
      });
    out.push_back(std::move(v));
  }

  {  // T5.7: for non-null vectors, dependent iff some member is a
     // combination of the previous ones
    PropertyVerdict v = pass_verdict("T5.7", id);
    for (std::size_t len = 2; len <= 3 && v.pass; ++len)
      for_each_list(nv, len, [&](const std::vector<std::size_t>& list) {
        if (!v.pass) return;
        if (std::find(list.begin(), list.end(), space.theta) != list.end())
          return;
        bool dependent = is_dependent(space, list).has_value();
        bool prefix_expressible = false;
        for (std::size_t i = 1; i < list.size() && !prefix_expressible; ++i)
          prefix_expressible = expressible_from_prefix(space, list, i);
        if (dependent != prefix_expressible)
          v = fail_verdict("T5.7", id, list_text(space, list));
      });
    out.push_back(std::move(v));
  }

  // Generating sets found by search: subsets of size <= 3 whose combination
  // union is all of V.
  std::vector<std::vector<std::size_t>> generating;
  for (std::size_t size = 1; size <= 3 && size <= nv; ++size)
    for_each_subset_list(nv, size, [&](const std::vector<std::size_t>& set) {
      if (combination_union(space, set) == full) generating.push_back(set);
    });

  {  // T5.8 deletion theorem
    PropertyVerdict v = pass_verdict("T5.8", id);
    for (const auto& gens : generating) {
      if (!is_dependent(space, gens)) continue;
      try {
        std::vector<std::size_t> reduced = delete_redundant(space, gens);
        if (reduced.size() >= gens.size() ||
            !(combination_union(space, reduced) == full)) {
          v = fail_verdict("T5.8", id, list_text(space, gens));
          break;
        }
      } catch (const TheoremViolation& e) {
        v = fail_verdict("T5.8", id, e.what());
        break;
      }
    }
    out.push_back(std::move(v));
  }

  {  // T5.9: no proper subset of an independent generating set spans
    PropertyVerdict v = pass_verdict("T5.9", id);
    for (const auto& gens : generating) {
      if (is_dependent(space, gens)) continue;
      for (std::size_t skip = 0; skip < gens.size(); ++skip) {
        std::vector<std::size_t> sub;
        for (std::size_t i = 0; i < gens.size(); ++i)
          if (i != skip) sub.push_back(gens[i]);
        if (combination_union(space, sub) == full) {
          v = fail_verdict("T5.9", id,
                           list_text(space, gens) + " minus position " +
                               std::to_string(skip) + " still spans");
          break;
        }
      }
      if (!v.pass) break;
    }
    out.push_back(std::move(v));
  }

  {  // T5.10 exchange: m <= n and the completion spans
    PropertyVerdict v = pass_verdict("T5.10", id);
    std::vector<std::vector<std::size_t>> independents;
    independents.push_back({});
    for (std::size_t size = 1; size <= 3 && size <= nv; ++size)
      for_each_subset_list(nv, size, [&](const std::vector<std::size_t>& set) {
        if (!is_dependent(space, set)) independents.push_back(set);
      });
    for (const auto& gens : generating) {
      for (const auto& indep : independents) {
        if (indep.size() > gens.size()) {
          v = fail_verdict("T5.10", id,
                           "independent " + list_text(space, indep) +
                               " larger than generating " + list_text(space, gens));
          break;
        }
        try {
          std::vector<std::size_t> completed = exchange(space, gens, indep);
          if (!(combination_union(space, completed) == full)) {
            v = fail_verdict("T5.10", id, list_text(space, indep));
            break;
          }
        } catch (const TheoremViolation& e) {
          v = fail_verdict("T5.10", id, e.what());
          break;
        }
      }
      if (!v.pass) break;
    }
    out.push_back(std::move(v));
  }

  return out;
}

std::vector<PropertyVerdict> verify_basis_theorems(
    const HyperVectorSpace& space, const std::string& id) {
  static const char* kIds[] = {"T6.2", "T6.3", "T6.4", "T6.5"};
  std::vector<PropertyVerdict> out;
  if (space.field.size() == 1) {
    for (const char* property : kIds)
      out.push_back(skip_verdict(property, id, kDegenerateField));
    return out;
  }
  if (!space.cls.strong_left) {
    for (const char* property : kIds)
      out.push_back(skip_verdict(property, id, kNotStrongLeft));
    return out;
  }
  guard_sweep(space, "verify_basis_theorems");
  const std::size_t nv = space.dim_carrier();
  const IndexSubset full = IndexSubset::full(nv);

  // All independent subsets, built by extension (independence is downward
  // closed, so every independent set arises from a smaller one).
  std::vector<std::vector<std::size_t>> independents;
  independents.push_back({});
  {
    std::vector<std::vector<std::size_t>> frontier = {{}};
    while (!frontier.empty()) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& set : frontier) {
        std::size_t from = set.empty() ? 0 : set.back() + 1;
        for (std::size_t v = from; v < nv; ++v) {
          std::vector<std::size_t> cand = set;
          cand.push_back(v);
          if (!is_dependent(space, cand)) {
            independents.push_back(cand);
            next.push_back(std::move(cand));
          }
        }
      }
      frontier = std::move(next);
    }
  }

  auto is_maximal = [&](const std::vector<std::size_t>& set) {
    for (std::size_t v = 0; v < nv; ++v) {
      if (std::find(set.begin(), set.end(), v) != set.end()) continue;
      std::vector<std::size_t> cand = set;
      cand.insert(std::lower_bound(cand.begin(), cand.end(), v), v);
      if (!is_dependent(space, cand)) return false;
    }
    return true;
  };

  std::vector<std::vector<std::size_t>> bases;
  for (const auto& set : independents)
    if (!set.empty() && combination_union(space, set) == full)
      bases.push_back(set);
  if (nv == 1) bases.push_back({});  // zero space: the empty basis

  {  // T6.2: unique representation of every non-null vector
    PropertyVerdict v = pass_verdict("T6.2", id);
    std::size_t theta_reps = 0;
    for (const auto& b : bases) {
      Basis basis{b};
      for (std::size_t x = 0; x < nv; ++x) {
        std::size_t count = representations(space, basis, x).size();
        if (x == space.theta) {
          theta_reps = count;
          continue;
        }
        if (count != 1) {
          v = fail_verdict("T6.2", id,
                           "x=" + space.vectors.label(x) + " basis=" +
                               list_text(space, b) + " representations=" +
                               std::to_string(count));
          break;
        }
      }
      if (!v.pass) break;
    }
    if (v.pass) v.witness = "theta-representations=" + std::to_string(theta_reps);
    out.push_back(std::move(v));
  }

  {  // T6.3 extension theorem
    PropertyVerdict v = pass_verdict("T6.3", id);
    for (const auto& set : independents) {
      try {
        Basis basis = extend_to_basis(space, set);
        if (!(combination_union(space, basis.vectors) == full)) {
          v = fail_verdict("T6.3", id, list_text(space, set));
          break;
        }
      } catch (const std::runtime_error& e) {
        v = fail_verdict("T6.3", id, e.what());
        break;
      }
    }
    out.push_back(std::move(v));
  }

  {  // T6.4: maximal independent subsets are bases
    PropertyVerdict v = pass_verdict("T6.4", id);
    for (const auto& set : independents) {
      if (!is_maximal(set)) continue;
      if (!(combination_union(space, set) == full)) {
        v = fail_verdict("T6.4", id, list_text(space, set) + " maximal but not spanning");
        break;
      }
    }
    out.push_back(std::move(v));
  }

  {  // T6.5 dimension formula over all subspace pairs
    PropertyVerdict v = pass_verdict("T6.5", id);
    std::vector<IndexSubset> subspaces = all_subspaces(space);
    for (std::size_t i = 0; i < subspaces.size() && v.pass; ++i)
      for (std::size_t j = 0; j < subspaces.size(); ++j) {
        const IndexSubset& u = subspaces[i];
        const IndexSubset& w = subspaces[j];
        std::size_t du = basis_of_subspace(space, u).dim();
        std::size_t dw = basis_of_subspace(space, w).dim();
        std::size_t dmeet =
            basis_of_subspace(space, set_intersection(u, w)).dim();
        IndexSubset sum = extend_op(space.vadd, u, w);
        std::size_t dsum = basis_of_subspace(space, sum).dim();
        if (dsum + dmeet != du + dw) {
          v = fail_verdict(
              "T6.5", id,
              "dim(U#W)=" + std::to_string(dsum) + " dim(U)=" +
                  std::to_string(du) + " dim(W)=" + std::to_string(dw) +
                  " dim(U^W)=" + std::to_string(dmeet));
          break;
        }
      }
    out.push_back(std::move(v));
  }

  return out;
}

}  // namespace hyperalg
