#include <algorithm>
#include <set>

#include "doctest.h"
#include "hyperalg/axioms.hpp"
#include "hyperalg/census.hpp"
#include "hyperalg/constructions.hpp"
#include "hyperalg/errors.hpp"
#include "support/census_oracle.hpp"

using namespace hyperalg;

TEST_CASE("order-1 census has exactly one entry of each kind") {
  CHECK(enumerate_census(CensusKind::kCommutativeHypergroup, 1).size() == 1);
  CHECK(enumerate_census(CensusKind::kHypergroup, 1).size() == 1);
  auto fields = enumerate_census(CensusKind::kHyperfield, 1);
  REQUIRE(fields.size() == 1);
  CHECK(fields[0].zero == 0);
  CHECK(fields[0].one == 0);  // degenerate one-element hyperfield
}

TEST_CASE("pruned order-2 commutative census equals the 81-table oracle") {
  auto entries = enumerate_census(CensusKind::kCommutativeHypergroup, 2);
  std::set<std::string> pruned;
  for (const auto& e : entries) pruned.insert(e.canonical_form);
  std::set<std::string> oracle = census_oracle::commutative_hypergroups(2);
  CHECK(pruned == oracle);
  CHECK(entries.size() == 2);  // the group GF(2)+ and the Krasner addition
}

TEST_CASE("order-2 hyperfield census equals the oracle and contains K2") {
  auto entries = enumerate_census(CensusKind::kHyperfield, 2);
  std::set<std::string> pruned;
  for (const auto& e : entries) pruned.insert(e.canonical_form);
  CHECK(pruned == census_oracle::hyperfields(2));
  CHECK(entries.size() == 2);

  Hyperfield k2 = k2_hyperfield();
  std::vector<std::size_t> mul_cells;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) mul_cells.push_back(k2.mul.cell(a, b));
  auto [cadd, cmul] =
      canonical_hyperfield_tables(table_masks(k2.add), mul_cells, 2, k2.zero);
  std::string k2_form =
      canonical_form_string(CensusKind::kHyperfield, 2, cadd, &cmul);
  CHECK(pruned.count(k2_form) == 1);
}

TEST_CASE("frozen census counts at desk scale") {
  CHECK(enumerate_census(CensusKind::kCommutativeHypergroup, 3).size() == 10);
  CHECK(enumerate_census(CensusKind::kHypergroup, 2).size() == 3);
  CHECK(enumerate_census(CensusKind::kHyperfield, 3).size() == 5);
}

TEST_CASE("every census entry re-validates under its checker") {
  for (std::size_t order = 1; order <= 3; ++order) {
    for (const auto& e :
         enumerate_census(CensusKind::kCommutativeHypergroup, order)) {
      HypergroupReport report = check_hypergroup(e.add);
      CHECK(report.is_hypergroup());
      CHECK(report.is_commutative);
      CHECK(report.zeros.contains(e.zero));
    }
    for (const auto& e : enumerate_census(CensusKind::kHyperfield, order)) {
      REQUIRE(e.mul);
      CHECK(check_hyperfield(e.add, *e.mul, e.zero, e.one).ok());
    }
  }
  for (const auto& e : enumerate_census(CensusKind::kHypergroup, 3)) {
    CHECK(check_hypergroup(e.add).is_hypergroup());
  }
}

TEST_CASE("canonicalization is invariant under relabeling") {
  // apply every carrier permutation to every entry; the canonical form must
  // not move
  for (std::size_t order = 2; order <= 4; ++order) {
    auto entries = enumerate_census(CensusKind::kCommutativeHypergroup, order);
    std::size_t checked = 0;
    for (const auto& e : entries) {
      if (++checked > 12) break;  // keep the order-4 loop short
      std::vector<std::uint32_t> masks = table_masks(e.add);
      std::vector<std::size_t> perm(order);
      for (std::size_t i = 0; i < order; ++i) perm[i] = i;
      do {
        std::vector<std::uint32_t> relabeled(order * order);
        for (std::size_t i = 0; i < order; ++i)
          for (std::size_t j = 0; j < order; ++j) {
            std::uint32_t mask = masks[i * order + j];
            std::uint32_t moved = 0;
            for (std::size_t v = 0; v < order; ++v)
              if ((mask >> v) & 1u) moved |= 1u << perm[v];
            relabeled[perm[i] * order + perm[j]] = moved;
          }
        HyperTable t = table_from_masks(relabeled, order);
        HypergroupReport report = check_hypergroup(t);
        REQUIRE(report.is_hypergroup());
        auto canon = canonical_hypergroup_masks(relabeled, order,
                                                report.zeros.indices());
        CHECK(canonical_form_string(CensusKind::kCommutativeHypergroup, order,
                                    canon, nullptr) == e.canonical_form);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("census ids are content hashes of the canonical form") {
  for (const auto& e : enumerate_census(CensusKind::kHyperfield, 2)) {
    CHECK(e.id == content_hash(e.canonical_form));
    CHECK(e.id.size() == 16);
  }
}

TEST_CASE("budget refusal carries the estimate") {
  EnumerateOptions options;
  try {
    enumerate_census(CensusKind::kHypergroup, 4, options);
    FAIL("expected budget refusal");
  } catch (const BudgetError& e) {
    CHECK(e.estimated_cost > options.budget);
  }
  CHECK_THROWS_AS(enumerate_census(CensusKind::kCommutativeHypergroup, 5),
                  BudgetError);
  // a raised budget admits the non-commutative order-3 search
  EnumerateOptions raised;
  raised.budget = 1e12;
  CHECK(enumerate_census(CensusKind::kHypergroup, 3, raised).size() == 33);
}

TEST_CASE("census output is independent of the job count") {
  for (CensusKind kind :
       {CensusKind::kCommutativeHypergroup, CensusKind::kHyperfield}) {
    EnumerateOptions serial;
    EnumerateOptions parallel;
    parallel.jobs = 4;
    auto a = enumerate_census(kind, 3, serial);
    auto b = enumerate_census(kind, 3, parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].name == b[i].name);
      CHECK(a[i].canonical_form == b[i].canonical_form);
    }
  }
}
