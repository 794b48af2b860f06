#include "hyperalg/census.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <thread>

#include "hyperalg/errors.hpp"

namespace hyperalg {

namespace {

constexpr std::size_t kMaxOrder = 4;

// Cell masks of a small table, row-major. n <= 4 so masks fit in 4 bits.
struct MaskTable {
  std::size_t n = 0;
  std::array<std::uint32_t, kMaxOrder * kMaxOrder> m{};

  std::uint32_t at(std::size_t i, std::size_t j) const { return m[i * n + j]; }
  void set(std::size_t i, std::size_t j, std::uint32_t v) { m[i * n + j] = v; }
};

bool mask_associative(const MaskTable& t) {
  const std::size_t n = t.n;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::uint32_t xy = t.at(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        std::uint32_t lhs = 0;
        for (std::uint32_t bits = xy; bits != 0; bits &= bits - 1)
          lhs |= t.at(static_cast<std::size_t>(std::countr_zero(bits)), z);
        std::uint32_t rhs = 0;
        for (std::uint32_t bits = t.at(y, z); bits != 0; bits &= bits - 1)
          rhs |= t.at(x, static_cast<std::size_t>(std::countr_zero(bits)));
        if (lhs != rhs) return false;
      }
    }
  return true;
}

// Unique two-sided inverse map for zero candidate e; false when (ii) fails.
bool mask_inverse_map(const MaskTable& t, std::size_t e,
                      std::array<std::size_t, kMaxOrder>& inv) {
  const std::size_t n = t.n;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t found = 0, witness = 0;
    for (std::size_t b = 0; b < n; ++b)
      if (((t.at(a, b) >> e) & 1u) && ((t.at(b, a) >> e) & 1u)) {
        ++found;
        witness = b;
      }
    if (found != 1) return false;
    inv[a] = witness;
  }
  return true;
}

bool mask_reversible(const MaskTable& t,
                     const std::array<std::size_t, kMaxOrder>& inv) {
  const std::size_t n = t.n;
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c)
      for (std::uint32_t bits = t.at(b, c); bits != 0; bits &= bits - 1) {
        std::size_t a = static_cast<std::size_t>(std::countr_zero(bits));
        if (!((t.at(a, inv[c]) >> b) & 1u)) return false;
      }
  return true;
}

// Valid zero elements: (ii) and (iii) jointly, as in check_hypergroup.
std::vector<std::size_t> mask_zeros(const MaskTable& t) {
  std::vector<std::size_t> zeros;
  std::array<std::size_t, kMaxOrder> inv{};
  for (std::size_t e = 0; e < t.n; ++e)
    if (mask_inverse_map(t, e, inv) && mask_reversible(t, inv))
      zeros.push_back(e);
  return zeros;
}

std::uint32_t permute_mask(std::uint32_t mask,
                           const std::array<std::size_t, kMaxOrder>& p) {
  std::uint32_t out = 0;
  for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1)
    out |= 1u << p[static_cast<std::size_t>(std::countr_zero(bits))];
  return out;
}

template <typename Fn>
void for_each_permutation_sending(std::size_t n, std::size_t from_zero,
                                  Fn&& fn) {
  // permutations p with p[from_zero] == 0
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < n; ++i)
    if (i != from_zero) positions.push_back(i);
  std::vector<std::size_t> values;
  for (std::size_t v = 1; v < n; ++v) values.push_back(v);
  std::array<std::size_t, kMaxOrder> p{};
  do {
    p[from_zero] = 0;
    for (std::size_t i = 0; i < positions.size(); ++i) p[positions[i]] = values[i];
    fn(p);
  } while (std::next_permutation(values.begin(), values.end()));
}

std::vector<std::uint32_t> apply_perm_to_masks(
    const std::vector<std::uint32_t>& masks, std::size_t n,
    const std::array<std::size_t, kMaxOrder>& p) {
  std::vector<std::uint32_t> out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[p[i] * n + p[j]] = permute_mask(masks[i * n + j], p);
  return out;
}

std::vector<std::size_t> apply_perm_to_mul(
    const std::vector<std::size_t>& cells, std::size_t n,
    const std::array<std::size_t, kMaxOrder>& p) {
  std::vector<std::size_t> out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[p[i] * n + p[j]] = p[cells[i * n + j]];
  return out;
}

}  // namespace

std::string census_kind_name(CensusKind kind) {
  switch (kind) {
    case CensusKind::kCommutativeHypergroup: return "commutative-hypergroup";
    case CensusKind::kHypergroup: return "hypergroup";
    case CensusKind::kHyperfield: return "hyperfield";
  }
  return "?";
}

std::optional<CensusKind> census_kind_from(const std::string& name,
                                           bool commutative) {
  if (name == "hypergroup")
    return commutative ? CensusKind::kCommutativeHypergroup
                       : CensusKind::kHypergroup;
  if (name == "commutative-hypergroup") return CensusKind::kCommutativeHypergroup;
  if (name == "hyperfield") return CensusKind::kHyperfield;
  return std::nullopt;
}

std::vector<std::uint32_t> table_masks(const HyperTable& t) {
  const std::size_t n = t.size();
  std::vector<std::uint32_t> masks(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t.cell(i, j).for_each([&](std::size_t v) {
        masks[i * n + j] |= 1u << v;
      });
  return masks;
}

HyperTable table_from_masks(const std::vector<std::uint32_t>& masks,
                            std::size_t n) {
  Carrier carrier = generic_carrier(n);
  std::vector<IndexSubset> cells;
  cells.reserve(n * n);
  for (std::uint32_t mask : masks) {
    IndexSubset cell(n);
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1)
      cell.insert(static_cast<std::size_t>(std::countr_zero(bits)));
    cells.push_back(std::move(cell));
  }
  return HyperTable(std::move(carrier), std::move(cells));
}

std::vector<std::uint32_t> canonical_hypergroup_masks(
    const std::vector<std::uint32_t>& masks, std::size_t n,
    const std::vector<std::size_t>& zeros) {
  if (n > kMaxOrder) throw ContractError("canonicalization supports order <= 4");
  if (zeros.empty())
    throw ContractError("canonicalization needs at least one zero element");
  std::optional<std::vector<std::uint32_t>> best;
  for (std::size_t z : zeros)
    for_each_permutation_sending(n, z, [&](const auto& p) {
      auto cand = apply_perm_to_masks(masks, n, p);
      if (!best || cand < *best) best = std::move(cand);
    });
  return *best;
}

std::pair<std::vector<std::uint32_t>, std::vector<std::size_t>>
canonical_hyperfield_tables(const std::vector<std::uint32_t>& add_masks,
                            const std::vector<std::size_t>& mul_cells,
                            std::size_t n, std::size_t zero) {
  if (n > kMaxOrder) throw ContractError("canonicalization supports order <= 4");
  std::optional<std::pair<std::vector<std::uint32_t>, std::vector<std::size_t>>>
      best;
  for_each_permutation_sending(n, zero, [&](const auto& p) {
    auto cand = std::make_pair(apply_perm_to_masks(add_masks, n, p),
                               apply_perm_to_mul(mul_cells, n, p));
    if (!best || cand < *best) best = std::move(cand);
  });
  return *best;
}

std::string canonical_form_string(CensusKind kind, std::size_t n,
                                  const std::vector<std::uint32_t>& add_masks,
                                  const std::vector<std::size_t>* mul_cells) {
  std::string s = census_kind_name(kind) + ":" + std::to_string(n) + ":";
  for (std::size_t i = 0; i < add_masks.size(); ++i) {
    if (i) s += ';';
    std::uint32_t mask = add_masks[i];
    bool first = true;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      if (!first) s += ',';
      s += std::to_string(std::countr_zero(bits));
      first = false;
    }
  }
  if (mul_cells) {
    s += '|';
    for (std::size_t i = 0; i < mul_cells->size(); ++i) {
      if (i) s += ';';
      s += std::to_string((*mul_cells)[i]);
    }
  }
  return s;
}

std::string content_hash(const std::string& canonical_form) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical_form) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (std::size_t i = 16; i-- > 0;) {
    out[i] = hex[h & 15];
    h >>= 4;
  }
  return out;
}

double estimate_census_cost(CensusKind kind, std::size_t order) {
  const double choices = std::pow(2.0, static_cast<double>(order)) - 1.0;
  const double upper = static_cast<double>((order - 1) * order / 2);
  switch (kind) {
    case CensusKind::kCommutativeHypergroup:
      return std::pow(choices, upper);
    case CensusKind::kHypergroup:
      return std::pow(choices, static_cast<double>(order * order));
    case CensusKind::kHyperfield:
      return std::pow(choices, upper) *
             std::pow(static_cast<double>(order), upper);
  }
  return 0.0;
}

namespace {

struct FreeCells {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  bool mirrored = false;  // fill (j, i) alongside (i, j)
};

FreeCells commutative_free_cells(std::size_t n) {
  FreeCells fc;
  fc.mirrored = true;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) fc.cells.emplace_back(i, j);
  return fc;
}

FreeCells full_free_cells(std::size_t n) {
  FreeCells fc;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) fc.cells.emplace_back(i, j);
  return fc;
}

// Base table for the pruned commutative search: zero fixed at 0 with
// singleton row and column.
MaskTable pruned_base(std::size_t n) {
  MaskTable t;
  t.n = n;
  for (std::size_t a = 0; a < n; ++a) {
    t.set(0, a, 1u << a);
    t.set(a, 0, 1u << a);
  }
  return t;
}

void assign(MaskTable& t, const FreeCells& fc,
            const std::vector<std::uint32_t>& digits) {
  for (std::size_t k = 0; k < fc.cells.size(); ++k) {
    auto [i, j] = fc.cells[k];
    t.set(i, j, digits[k] + 1);  // digit d encodes non-empty mask d+1
    if (fc.mirrored) t.set(j, i, digits[k] + 1);
  }
}

bool decode_digits(std::uint64_t linear, std::uint32_t base,
                   std::vector<std::uint32_t>& digits) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    digits[k] = static_cast<std::uint32_t>(linear % base);
    linear /= base;
  }
  return linear == 0;
}

bool advance_digits(std::vector<std::uint32_t>& digits, std::uint32_t base) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < base) return true;
    digits[k] = 0;
  }
  return false;
}

struct CanonKey {
  std::vector<std::uint32_t> add;
  std::vector<std::size_t> mul;  // empty for hypergroup kinds

  bool operator<(const CanonKey& o) const {
    if (add != o.add) return add < o.add;
    return mul < o.mul;
  }
};

// One worker's share of the hypergroup-search candidate space.
void hypergroup_worker(CensusKind kind, std::size_t n, const FreeCells& fc,
                       std::uint64_t begin, std::uint64_t end,
                       std::map<CanonKey, MaskTable>& found) {
  const std::uint32_t base = (1u << n) - 1;
  MaskTable t = fc.mirrored ? pruned_base(n) : MaskTable{};
  t.n = n;
  std::vector<std::uint32_t> digits(fc.cells.size(), 0);
  if (begin >= end) return;
  decode_digits(begin, base, digits);
  const bool need_commutative = kind == CensusKind::kCommutativeHypergroup;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    assign(t, fc, digits);
    bool ok = true;
    if (need_commutative && !fc.mirrored) {
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (t.at(i, j) != t.at(j, i)) {
            ok = false;
            break;
          }
    }
    if (ok && mask_associative(t)) {
      std::vector<std::size_t> zeros = mask_zeros(t);
      if (!zeros.empty()) {
        std::vector<std::uint32_t> masks(t.m.begin(), t.m.begin() + n * n);
        CanonKey key{canonical_hypergroup_masks(masks, n, zeros), {}};
        auto it = found.find(key);
        if (it == found.end()) {
          MaskTable canon;
          canon.n = n;
          std::copy(key.add.begin(), key.add.end(), canon.m.begin());
          found.emplace(std::move(key), canon);
        }
      }
    }
    if (idx + 1 < end) advance_digits(digits, base);
  }
}

// Mul assignments over one surviving hyperaddition, full checker per
// candidate (the space is tiny once the addition is fixed).
void hyperfield_mul_scan(const HyperTable& add, std::size_t n,
                         DistributivityMode mode,
                         std::map<CanonKey, std::size_t>& found) {
  FreeCells mul_free;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) mul_free.cells.emplace_back(i, j);
  std::vector<std::uint32_t> digits(mul_free.cells.size(), 0);
  bool more = true;
  while (more) {
    std::vector<std::size_t> mul_cells(n * n, 0);
    for (std::size_t k = 0; k < mul_free.cells.size(); ++k) {
      auto [i, j] = mul_free.cells[k];
      mul_cells[i * n + j] = digits[k];
      mul_cells[j * n + i] = digits[k];
    }
    // identity, if any (unique in a semigroup)
    std::optional<std::size_t> one;
    for (std::size_t e = 0; e < n && !one; ++e) {
      bool id = true;
      for (std::size_t a = 0; a < n; ++a)
        if (mul_cells[a * n + e] != a || mul_cells[e * n + a] != a) {
          id = false;
          break;
        }
      if (id) one = e;
    }
    if (one) {
      MulTable mul(add.carrier(), mul_cells);
      HyperfieldCheck check = check_hyperfield(add, mul, 0, *one, mode);
      if (check.ok()) {
        auto [cadd, cmul] =
            canonical_hyperfield_tables(table_masks(add), mul_cells, n, 0);
        CanonKey key{std::move(cadd), std::move(cmul)};
        found.emplace(std::move(key), n);
      }
    }
    more = !digits.empty() && advance_digits(digits, static_cast<std::uint32_t>(n));
    if (digits.empty()) break;
  }
}

}  // namespace

std::vector<CensusEntry> enumerate_census(CensusKind kind, std::size_t order,
                                          const EnumerateOptions& options) {
  if (order < 1) throw ContractError("census order must be at least 1");
  if (order > kMaxOrder)
    throw BudgetError("census order " + std::to_string(order) +
                          " exceeds the supported maximum " +
                          std::to_string(kMaxOrder),
                      std::pow(2.0, static_cast<double>(order * order)));
  const double cost = estimate_census_cost(kind, order);
  if (cost > options.budget)
    throw BudgetError("census refused: estimated " + std::to_string(cost) +
                          " candidates exceed the budget of " +
                          std::to_string(options.budget) +
                          " (raise HYPERALG_BUDGET to override)",
                      cost);

  const std::size_t n = order;
  const bool commutative_search = kind != CensusKind::kHypergroup;
  FreeCells fc = commutative_search ? commutative_free_cells(n) : full_free_cells(n);
  const std::uint32_t base = (1u << n) - 1;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < fc.cells.size(); ++k) total *= base;

  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  std::vector<std::map<CanonKey, MaskTable>> partials(jobs);
  if (jobs == 1) {
    hypergroup_worker(kind == CensusKind::kHyperfield
                          ? CensusKind::kCommutativeHypergroup
                          : kind,
                      n, fc, 0, total, partials[0]);
  } else {
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (std::size_t j = 0; j < jobs; ++j) {
      std::uint64_t begin = j * chunk;
      std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
      threads.emplace_back([&, j, begin, end] {
        hypergroup_worker(kind == CensusKind::kHyperfield
                              ? CensusKind::kCommutativeHypergroup
                              : kind,
                          n, fc, begin, end, partials[j]);
      });
    }
    for (auto& th : threads) th.join();
  }

  std::map<CanonKey, MaskTable> merged;
  for (auto& part : partials) merged.merge(part);

  std::vector<CensusEntry> entries;
  if (kind == CensusKind::kHyperfield) {
    std::map<CanonKey, std::size_t> fields;
    for (const auto& [key, table] : merged) {
      HyperTable add = table_from_masks(key.add, n);
      hyperfield_mul_scan(add, n, options.mode, fields);
    }
    for (const auto& [key, _] : fields) {
      HyperTable add = table_from_masks(key.add, n);
      MulTable mul(add.carrier(), key.mul);
      std::optional<std::size_t> one;
      for (std::size_t e = 0; e < n && !one; ++e) {
        bool id = true;
        for (std::size_t a = 0; a < n; ++a)
          if (mul.cell(a, e) != a) {
            id = false;
            break;
          }
        if (id) one = e;
      }
      HyperfieldCheck check = check_hyperfield(add, mul, 0, *one, options.mode);
      if (!check.ok())
        throw ContractError("census emitted a hyperfield that fails validation");
      std::string form = canonical_form_string(kind, n, key.add, &key.mul);
      entries.push_back(CensusEntry{kind, n, "", std::move(add), std::move(mul),
                                    0, *one, form, content_hash(form)});
    }
  } else {
    for (const auto& [key, table] : merged) {
      HyperTable add = table_from_masks(key.add, n);
      HypergroupReport report = check_hypergroup(add);
      if (!report.is_hypergroup())
        throw ContractError("census emitted a hypergroup that fails validation");
      if (kind == CensusKind::kCommutativeHypergroup && !report.is_commutative)
        throw ContractError("census emitted a non-commutative entry");
      std::string form = canonical_form_string(kind, n, key.add, nullptr);
      entries.push_back(CensusEntry{kind, n, "", std::move(add), std::nullopt,
                                    report.zeros.first(), 0, form,
                                    content_hash(form)});
    }
  }

  std::sort(entries.begin(), entries.end(),
            [](const CensusEntry& a, const CensusEntry& b) {
              return a.canonical_form < b.canonical_form;
            });
  std::string prefix = kind == CensusKind::kCommutativeHypergroup ? "chg"
                       : kind == CensusKind::kHypergroup          ? "hg"
                                                                  : "hf";
  prefix += std::to_string(order);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::string seq = std::to_string(i);
    while (seq.size() < 3) seq.insert(seq.begin(), '0');
    entries[i].name = prefix + "_" + seq;
  }
  return entries;
}

}  // namespace hyperalg
