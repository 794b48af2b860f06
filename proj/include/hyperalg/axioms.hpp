// Validators deciding which structure a set of tables forms. Checkers never
// throw on semantic failure: they return reports carrying machine-readable
// witnesses (first witness in lexicographic index order). Validated value
// types (Hyperfield, HyperVectorSpace) are produced only by their checkers
// in normal use; the fields are public so the harness and tests can also
// assemble deliberately broken instances.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperalg/carrier.hpp"
#include "hyperalg/subset.hpp"
#include "hyperalg/table.hpp"

namespace hyperalg {

// One violated axiom: which law, the offending indices, and a rendered
// description using carrier labels.
struct AxiomFailure {
  std::string axiom;
  std::vector<std::size_t> where;
  std::string detail;
};

struct CheckReport {
  bool pass = false;
  std::vector<AxiomFailure> failures;
};

// Report of check_hypergroup. `zeros` holds every element that can serve as
// the hypergroup's zero: unique two-sided inverses exist for it AND the
// reversibility axiom holds with the inverse map it induces (the -c in that
// axiom is bound to the chosen zero). `inverse` and `reversible` refer to
// the canonical zero (lowest index in zeros).
struct HypergroupReport {
  bool is_hypergroupoid = false;
  bool is_semihypergroup = false;
  bool is_commutative = false;
  IndexSubset zeros;
  bool zero_ambiguous = false;
  std::vector<std::optional<std::size_t>> inverse;
  bool reversible = false;
  std::vector<AxiomFailure> failures;

  bool is_hypergroup() const {
    return is_semihypergroup && !zeros.empty() && reversible;
  }
  std::optional<std::size_t> canonical_zero() const {
    if (zeros.empty()) return std::nullopt;
    return zeros.first();
  }
};

enum class DistributivityMode {
  kEqual,      // a.(b + c) = a.b + a.c elementwise (Krasner convention)
  kInclusive,  // a.(b + c) subset of a.b + a.c
};

// A validated hyperfield. neg/inv are the unique witnesses extracted during
// validation; inv is defined exactly on the non-zero elements.
struct Hyperfield {
  Carrier carrier;
  HyperTable add;
  MulTable mul;
  std::size_t zero = 0;
  std::size_t one = 0;
  std::vector<std::size_t> neg;
  std::vector<std::optional<std::size_t>> inv;

  std::size_t size() const { return carrier.size(); }
};

struct HyperfieldCheck {
  std::optional<Hyperfield> field;
  std::vector<AxiomFailure> failures;
  bool ok() const { return field.has_value(); }
};

// |F| x |V| table of non-empty subsets of the vector carrier: the scalar
// action cell a * alpha.
class ActionTable {
 public:
  ActionTable(std::size_t scalar_count, std::size_t vector_count,
              std::vector<IndexSubset> cells);

  std::size_t scalar_count() const { return scalars_; }
  std::size_t vector_count() const { return vectors_; }

  const IndexSubset& cell(std::size_t scalar, std::size_t vec) const;

 private:
  std::size_t scalars_;
  std::size_t vectors_;
  std::vector<IndexSubset> cells_;  // scalar-major
};

// Whether equality (not mere inclusion) holds in the two distributivity
// axioms of a hypervector space:
// strong right = equality in a*(x # y) <= a*x # a*y,
// strong left  = equality in (a + b)*x <= a*x # b*x.
struct SpaceClass {
  bool strong_right = false;
  bool strong_left = false;
  bool good = false;
};

struct HyperVectorSpace {
  Hyperfield field;
  Carrier vectors;
  HyperTable vadd;
  ActionTable action;
  std::size_t theta = 0;
  std::vector<std::size_t> vneg;
  SpaceClass cls;

  std::size_t dim_carrier() const { return vectors.size(); }
};

struct SpaceCheck {
  std::optional<HyperVectorSpace> space;
  std::vector<AxiomFailure> failures;
  bool ok() const { return space.has_value(); }
};

// Verdict of both subspace criteria. `pass` is the three-condition criterion
// (non-empty + closed under # + closed under *); `pair_criterion` is the
// two-condition one (a*x # b*y inside W); the two provably agree and
// `criteria_agree` records that they did.
struct SubspaceReport {
  bool pass = false;
  bool closure_criterion = false;
  bool pair_criterion = false;
  bool criteria_agree = false;
  std::vector<AxiomFailure> failures;
};

CheckReport check_hypergroupoid(const HyperTable& t);
CheckReport check_semihypergroup(const HyperTable& t);
HypergroupReport check_hypergroup(const HyperTable& t);
CheckReport check_hyperring(const HyperTable& add, const MulTable& mul,
                            std::size_t zero,
                            DistributivityMode mode = DistributivityMode::kEqual);
HyperfieldCheck check_hyperfield(const HyperTable& add, const MulTable& mul,
                                 std::size_t zero, std::size_t one,
                                 DistributivityMode mode = DistributivityMode::kEqual);
SpaceCheck check_hypervectorspace(const Hyperfield& field,
                                  const Carrier& vectors,
                                  const HyperTable& vadd,
                                  const ActionTable& action, std::size_t theta);
SubspaceReport check_subspace(const HyperVectorSpace& space,
                              const IndexSubset& w);

// Set extensions of the scalar action.
// action of one scalar on a set of vectors: union of a*x over x in vs.
IndexSubset act_on_subset(const ActionTable& action, std::size_t scalar,
                          const IndexSubset& vs);
// action of a set of scalars on one vector: union of k*alpha over k in ks.
IndexSubset act_scalar_set(const ActionTable& action, const IndexSubset& ks,
                           std::size_t vec);

}  // namespace hyperalg
