#include "hyperalg/axioms.hpp"

#include <algorithm>

#include "hyperalg/errors.hpp"

namespace hyperalg {

namespace {

std::string braced(const Carrier& c, const IndexSubset& s) {
  if (s.empty()) return "{}";
  return "{ " + c.render_subset(s) + " }";
}

// Unique two-sided inverse map induced by zero candidate e: inv[a] is the
// unique b with e in a#b and e in b#a, or nullopt when existence or
// uniqueness fails (in which case e is not a zero).
std::vector<std::optional<std::size_t>> inverse_map_for(const HyperTable& t,
                                                        std::size_t e) {
  const std::size_t n = t.size();
  std::vector<std::optional<std::size_t>> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t found = 0;
    std::size_t witness = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (t.cell(a, b).contains(e) && t.cell(b, a).contains(e)) {
        ++found;
        witness = b;
      }
    }
    if (found != 1) return {};  // e disqualified
    inv[a] = witness;
  }
  return inv;
}

// Reversibility (if a in b#c then b in a#(-c)) for the given inverse map.
// Returns the first violating triple (b, c, a) in lex order, if any.
std::optional<std::array<std::size_t, 3>> reversibility_violation(
    const HyperTable& t, const std::vector<std::optional<std::size_t>>& inv) {
  const std::size_t n = t.size();
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) {
      const IndexSubset& cell = t.cell(b, c);
      for (std::size_t a = 0; a < n; ++a) {
        if (!cell.contains(a)) continue;
        if (!t.cell(a, *inv[c]).contains(b))
          return std::array<std::size_t, 3>{b, c, a};
      }
    }
  return std::nullopt;
}

}  // namespace

CheckReport check_hypergroupoid(const HyperTable& t) {
  CheckReport report;
  report.pass = true;
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (t.cell(a, b).empty()) {
        report.pass = false;
        report.failures.push_back(
            {"hyperoperation-nonempty",
             {a, b},
             "cell (" + t.carrier().label(a) + ", " + t.carrier().label(b) +
                 ") is empty"});
        return report;
      }
  return report;
}

CheckReport check_semihypergroup(const HyperTable& t) {
  CheckReport report = check_hypergroupoid(t);
  if (!report.pass) return report;
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        IndexSubset lhs = extend_op(t, t.cell(x, y), IndexSubset::singleton(n, z));
        IndexSubset rhs = extend_op(t, IndexSubset::singleton(n, x), t.cell(y, z));
        if (!(lhs == rhs)) {
          report.pass = false;
          report.failures.push_back(
              {"associativity",
               {x, y, z},
               "(x#y)#z = " + braced(t.carrier(), lhs) + " but x#(y#z) = " +
                   braced(t.carrier(), rhs) + " at x=" + t.carrier().label(x) +
                   " y=" + t.carrier().label(y) + " z=" + t.carrier().label(z)});
          return report;
        }
      }
  return report;
}

HypergroupReport check_hypergroup(const HyperTable& t) {
  const std::size_t n = t.size();
  HypergroupReport report;
  report.zeros = IndexSubset(n);

  CheckReport groupoid = check_hypergroupoid(t);
  report.is_hypergroupoid = groupoid.pass;
  CheckReport assoc = groupoid.pass ? check_semihypergroup(t) : CheckReport{};
  report.is_semihypergroup = assoc.pass;
  for (auto& f : groupoid.failures) report.failures.push_back(std::move(f));
  for (auto& f : assoc.failures) report.failures.push_back(std::move(f));
  if (!report.is_hypergroupoid) return report;

  report.is_commutative = true;
  for (std::size_t x = 0; x < n && report.is_commutative; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (!(t.cell(x, y) == t.cell(y, x))) {
        report.is_commutative = false;
        break;
      }

  // Zero candidates: (ii)'s unique-inverse condition together with (iii)
  // for the inverse map the candidate induces.
  std::optional<std::size_t> first_candidate;
  std::optional<std::array<std::size_t, 3>> first_candidate_violation;
  for (std::size_t e = 0; e < n; ++e) {
    auto inv = inverse_map_for(t, e);
    if (inv.empty()) continue;
    auto violation = reversibility_violation(t, inv);
    if (!first_candidate) {
      first_candidate = e;
      first_candidate_violation = violation;
    }
    if (!violation) report.zeros.insert(e);
  }
  report.zero_ambiguous = report.zeros.count() > 1;

  if (report.zeros.empty()) {
    if (!first_candidate) {
      report.failures.push_back(
          {"zero-existence", {}, "no element admits unique two-sided inverses"});
    } else {
      auto [b, c, a] = *first_candidate_violation;
      report.failures.push_back(
          {"reversibility",
           {b, c, a},
           t.carrier().label(a) + " in " + t.carrier().label(b) + "#" +
               t.carrier().label(c) + " but " + t.carrier().label(b) +
               " not in a#(-c) for candidate zero " +
               t.carrier().label(*first_candidate)});
    }
    return report;
  }

  std::size_t zero = report.zeros.first();
  report.inverse = inverse_map_for(t, zero);
  report.reversible = true;  // members of zeros passed reversibility
  return report;
}

CheckReport check_hyperring(const HyperTable& add, const MulTable& mul,
                            std::size_t zero, DistributivityMode mode) {
  CheckReport report;
  const std::size_t n = add.size();
  if (mul.size() != n)
    throw ContractError("hyperring addition and multiplication sizes differ");
  if (zero >= n) throw ContractError("hyperring zero index out of range");
  const Carrier& c = add.carrier();

  HypergroupReport hg = check_hypergroup(add);
  if (!hg.is_hypergroup()) {
    report.failures = hg.failures;
    report.failures.push_back(
        {"additive-hypergroup", {}, "(X, +) is not a hypergroup"});
    return report;
  }
  if (!hg.is_commutative) {
    report.failures.push_back(
        {"additive-commutativity", {}, "(X, +) is not commutative"});
    return report;
  }
  if (!hg.zeros.contains(zero)) {
    report.failures.push_back(
        {"zero-element",
         {zero},
         "declared zero " + c.label(zero) + " is not the zero of (X, +)"});
    return report;
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (mul.cell(mul.cell(x, y), z) != mul.cell(x, mul.cell(y, z))) {
          report.failures.push_back(
              {"multiplicative-associativity",
               {x, y, z},
               "(x.y).z = " + c.label(mul.cell(mul.cell(x, y), z)) +
                   " but x.(y.z) = " + c.label(mul.cell(x, mul.cell(y, z))) +
                   " at x=" + c.label(x) + " y=" + c.label(y) +
                   " z=" + c.label(z)});
          return report;
        }

  // Two-sided distributivity over the hyperaddition. The left-hand side is
  // the set {a.w : w in b+c}; the right-hand side is the cell a.b + a.c.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc) {
        IndexSubset left(n);
        add.cell(b, cc).for_each(
            [&](std::size_t w) { left.insert(mul.cell(a, w)); });
        const IndexSubset& right = add.cell(mul.cell(a, b), mul.cell(a, cc));
        bool ok = mode == DistributivityMode::kEqual ? left == right
                                                     : left.is_subset_of(right);
        if (!ok) {
          report.failures.push_back(
              {"distributivity-left",
               {a, b, cc},
               "a.(b+c) = " + braced(c, left) + " vs a.b + a.c = " +
                   braced(c, right) + " at a=" + c.label(a) +
                   " b=" + c.label(b) + " c=" + c.label(cc)});
          return report;
        }
        IndexSubset left2(n);
        add.cell(b, cc).for_each(
            [&](std::size_t w) { left2.insert(mul.cell(w, a)); });
        const IndexSubset& right2 = add.cell(mul.cell(b, a), mul.cell(cc, a));
        bool ok2 = mode == DistributivityMode::kEqual
                       ? left2 == right2
                       : left2.is_subset_of(right2);
        if (!ok2) {
          report.failures.push_back(
              {"distributivity-right",
               {a, b, cc},
               "(b+c).a = " + braced(c, left2) + " vs b.a + c.a = " +
                   braced(c, right2) + " at a=" + c.label(a) +
                   " b=" + c.label(b) + " c=" + c.label(cc)});
          return report;
        }
      }

  for (std::size_t a = 0; a < n; ++a)
    if (mul.cell(a, zero) != zero || mul.cell(zero, a) != zero) {
      report.failures.push_back(
          {"absorbing-zero",
           {a},
           "a.0 = " + c.label(mul.cell(a, zero)) + ", 0.a = " +
               c.label(mul.cell(zero, a)) + " at a=" + c.label(a)});
      return report;
    }

  report.pass = true;
  return report;
}

HyperfieldCheck check_hyperfield(const HyperTable& add, const MulTable& mul,
                                 std::size_t zero, std::size_t one,
                                 DistributivityMode mode) {
  HyperfieldCheck result;
  const std::size_t n = add.size();
  if (one >= n) throw ContractError("hyperfield one index out of range");
  const Carrier& c = add.carrier();

  // (i) hyperring
  CheckReport ring = check_hyperring(add, mul, zero, mode);
  if (!ring.pass) {
    result.failures = std::move(ring.failures);
    return result;
  }

  // (ii) multiplicative identity; a one-element structure is accepted as the
  // degenerate hyperfield, otherwise the identity must differ from zero.
  if (n > 1 && one == zero) {
    result.failures.push_back(
        {"identity", {one}, "identity element equals zero in a structure of size > 1"});
    return result;
  }
  for (std::size_t a = 0; a < n; ++a)
    if (mul.cell(a, one) != a) {
      result.failures.push_back(
          {"identity",
           {a},
           "a.1 = " + c.label(mul.cell(a, one)) + " at a=" + c.label(a)});
      return result;
    }

  // (iii) multiplicative inverses for non-zero elements
  std::vector<std::optional<std::size_t>> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (a == zero) continue;
    for (std::size_t b = 0; b < n; ++b)
      if (mul.cell(a, b) == one && mul.cell(b, a) == one) {
        inv[a] = b;
        break;
      }
    if (!inv[a]) {
      result.failures.push_back(
          {"inverses", {a}, "no multiplicative inverse for " + c.label(a)});
      return result;
    }
  }

  // (iv) commutative multiplication
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (mul.cell(a, b) != mul.cell(b, a)) {
        result.failures.push_back(
            {"multiplicative-commutativity",
             {a, b},
             "a.b = " + c.label(mul.cell(a, b)) + " but b.a = " +
                 c.label(mul.cell(b, a)) + " at a=" + c.label(a) +
                 " b=" + c.label(b)});
        return result;
      }

  HypergroupReport hg = check_hypergroup(add);
  std::vector<std::size_t> neg(n);
  for (std::size_t a = 0; a < n; ++a) neg[a] = *hg.inverse[a];

  result.field = Hyperfield{c, add, mul, zero, one, std::move(neg), std::move(inv)};
  return result;
}

ActionTable::ActionTable(std::size_t scalar_count, std::size_t vector_count,
                         std::vector<IndexSubset> cells)
    : scalars_(scalar_count), vectors_(vector_count), cells_(std::move(cells)) {
  if (cells_.size() != scalars_ * vectors_)
    throw ContractError("action table needs " +
                        std::to_string(scalars_ * vectors_) + " cells, got " +
                        std::to_string(cells_.size()));
  for (const IndexSubset& cell : cells_)
    if (cell.universe() != vectors_)
      throw ContractError("action cell universe mismatch");
}

const IndexSubset& ActionTable::cell(std::size_t scalar, std::size_t vec) const {
  if (scalar >= scalars_ || vec >= vectors_)
    throw ContractError("action cell (" + std::to_string(scalar) + ", " +
                        std::to_string(vec) + ") out of range");
  return cells_[scalar * vectors_ + vec];
}

IndexSubset act_on_subset(const ActionTable& action, std::size_t scalar,
                          const IndexSubset& vs) {
  IndexSubset out(action.vector_count());
  vs.for_each([&](std::size_t v) { out.unite(action.cell(scalar, v)); });
  return out;
}

IndexSubset act_scalar_set(const ActionTable& action, const IndexSubset& ks,
                           std::size_t vec) {
  IndexSubset out(action.vector_count());
  ks.for_each([&](std::size_t k) { out.unite(action.cell(k, vec)); });
  return out;
}

SpaceCheck check_hypervectorspace(const Hyperfield& field,
                                  const Carrier& vectors,
                                  const HyperTable& vadd,
                                  const ActionTable& action,
                                  std::size_t theta) {
  SpaceCheck result;
  const std::size_t nv = vectors.size();
  const std::size_t nf = field.size();
  if (vadd.size() != nv || action.vector_count() != nv ||
      action.scalar_count() != nf)
    throw ContractError("hypervector space table shapes do not match");
  if (theta >= nv) throw ContractError("theta index out of range");

  for (std::size_t k = 0; k < nf; ++k)
    for (std::size_t v = 0; v < nv; ++v)
      if (action.cell(k, v).empty()) {
        result.failures.push_back(
            {"action-nonempty",
             {k, v},
             "action cell (" + field.carrier.label(k) + ", " +
                 vectors.label(v) + ") is empty"});
        return result;
      }

  HypergroupReport hg = check_hypergroup(vadd);
  if (!hg.is_hypergroup() || !hg.is_commutative) {
    result.failures = hg.failures;
    result.failures.push_back({"vector-hypergroup",
                               {},
                               "(V, #) is not a commutative hypergroup"});
    return result;
  }
  if (!hg.zeros.contains(theta)) {
    result.failures.push_back(
        {"vector-zero",
         {theta},
         "theta " + vectors.label(theta) + " is not the zero of (V, #)"});
    return result;
  }

  // Each axiom is scanned to its first violation; all four verdicts are
  // reported so a broken table names every law it breaks.

  // (i) a*(x # y) included in a*x # a*y; equality everywhere = strong right.
  bool strong_right = true;
  bool axiom_i_ok = true;
  for (std::size_t a = 0; a < nf && axiom_i_ok; ++a)
    for (std::size_t x = 0; x < nv && axiom_i_ok; ++x)
      for (std::size_t y = 0; y < nv; ++y) {
        IndexSubset lhs = act_on_subset(action, a, vadd.cell(x, y));
        IndexSubset rhs = extend_op(vadd, action.cell(a, x), action.cell(a, y));
        if (!lhs.is_subset_of(rhs)) {
          axiom_i_ok = false;
          result.failures.push_back(
              {"axiom-i",
               {a, x, y},
               "a*(x#y) = " + braced(vectors, lhs) + " not within a*x # a*y = " +
                   braced(vectors, rhs) + " at a=" + field.carrier.label(a) +
                   " x=" + vectors.label(x) + " y=" + vectors.label(y)});
          break;
        }
        if (!(lhs == rhs)) strong_right = false;
      }

  // (ii) (a + b)*x included in a*x # b*x; equality everywhere = strong left.
  bool strong_left = true;
  bool axiom_ii_ok = true;
  for (std::size_t a = 0; a < nf && axiom_ii_ok; ++a)
    for (std::size_t b = 0; b < nf && axiom_ii_ok; ++b)
      for (std::size_t x = 0; x < nv; ++x) {
        IndexSubset lhs = act_scalar_set(action, field.add.cell(a, b), x);
        IndexSubset rhs = extend_op(vadd, action.cell(a, x), action.cell(b, x));
        if (!lhs.is_subset_of(rhs)) {
          axiom_ii_ok = false;
          result.failures.push_back(
              {"axiom-ii",
               {a, b, x},
               "(a+b)*x = " + braced(vectors, lhs) + " not within a*x # b*x = " +
                   braced(vectors, rhs) + " at a=" + field.carrier.label(a) +
                   " b=" + field.carrier.label(b) + " x=" + vectors.label(x)});
          break;
        }
        if (!(lhs == rhs)) strong_left = false;
      }

  // (iii) (a.b)*x = a*(b*x)
  bool axiom_iii_ok = true;
  for (std::size_t a = 0; a < nf && axiom_iii_ok; ++a)
    for (std::size_t b = 0; b < nf && axiom_iii_ok; ++b)
      for (std::size_t x = 0; x < nv; ++x) {
        const IndexSubset& lhs = action.cell(field.mul.cell(a, b), x);
        IndexSubset rhs = act_on_subset(action, a, action.cell(b, x));
        if (!(lhs == rhs)) {
          axiom_iii_ok = false;
          result.failures.push_back(
              {"axiom-iii",
               {a, b, x},
               "(a.b)*x = " + braced(vectors, lhs) + " but a*(b*x) = " +
                   braced(vectors, rhs) + " at a=" + field.carrier.label(a) +
                   " b=" + field.carrier.label(b) + " x=" + vectors.label(x)});
          break;
        }
      }

  // (iv) 1*x = {x} and 0*x = {theta}
  for (std::size_t x = 0; x < nv; ++x) {
    if (!(action.cell(field.one, x) == IndexSubset::singleton(nv, x))) {
      result.failures.push_back(
          {"axiom-iv",
           {field.one, x},
           "1*x = " + braced(vectors, action.cell(field.one, x)) +
               " at x=" + vectors.label(x)});
      break;
    }
    if (!(action.cell(field.zero, x) == IndexSubset::singleton(nv, theta))) {
      result.failures.push_back(
          {"axiom-iv",
           {field.zero, x},
           "0*x = " + braced(vectors, action.cell(field.zero, x)) +
               " at x=" + vectors.label(x)});
      break;
    }
  }

  if (!result.failures.empty()) return result;

  std::vector<std::size_t> vneg(nv);
  for (std::size_t v = 0; v < nv; ++v) vneg[v] = *hg.inverse[v];

  SpaceClass cls{strong_right, strong_left, strong_right && strong_left};
  result.space = HyperVectorSpace{field,  vectors, vadd, action,
                                  theta,  std::move(vneg), cls};
  return result;
}

SubspaceReport check_subspace(const HyperVectorSpace& space,
                              const IndexSubset& w) {
  const std::size_t nv = space.dim_carrier();
  if (w.universe() != nv)
    throw ContractError("subspace candidate must range over the space's vectors");
  SubspaceReport report;
  const Carrier& vc = space.vectors;

  if (w.empty()) {
    report.failures.push_back({"subspace-empty", {}, "candidate subset is empty"});
    report.criteria_agree = true;
    return report;
  }

  // Three-condition criterion: closure under # and under the action.
  bool closure = true;
  auto members = w.indices();
  for (std::size_t x : members) {
    for (std::size_t y : members) {
      if (!space.vadd.cell(x, y).is_subset_of(w)) {
        closure = false;
        report.failures.push_back(
            {"subspace-add-closure",
             {x, y},
             "x # y = " + braced(vc, space.vadd.cell(x, y)) +
                 " leaves W at x=" + vc.label(x) + " y=" + vc.label(y)});
        break;
      }
    }
    if (!closure) break;
  }
  if (closure) {
    for (std::size_t a = 0; a < space.field.size() && closure; ++a)
      for (std::size_t x : members) {
        if (!space.action.cell(a, x).is_subset_of(w)) {
          closure = false;
          report.failures.push_back(
              {"subspace-action-closure",
               {a, x},
               "a*x = " + braced(vc, space.action.cell(a, x)) +
                   " leaves W at a=" + space.field.carrier.label(a) +
                   " x=" + vc.label(x)});
          break;
        }
      }
  }

  // Two-condition criterion: a*x # b*y within W.
  bool pair = true;
  for (std::size_t a = 0; a < space.field.size() && pair; ++a)
    for (std::size_t b = 0; b < space.field.size() && pair; ++b)
      for (std::size_t x : members) {
        for (std::size_t y : members) {
          IndexSubset combo = extend_op(space.vadd, space.action.cell(a, x),
                                        space.action.cell(b, y));
          if (!combo.is_subset_of(w)) {
            pair = false;
            if (closure)  // record only if the other criterion missed it
              report.failures.push_back(
                  {"subspace-pair-closure",
                   {a, b, x, y},
                   "a*x # b*y = " + braced(vc, combo) + " leaves W"});
            break;
          }
        }
        if (!pair) break;
      }

  report.closure_criterion = closure;
  report.pair_criterion = pair;
  report.pass = closure;
  report.criteria_agree = closure == pair;
  if (!report.criteria_agree)
    report.failures.push_back(
        {"criteria-disagreement",
         {},
         "three-condition and two-condition subspace criteria disagree"});
  return report;
}

}  // namespace hyperalg
