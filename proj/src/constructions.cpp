#include "hyperalg/constructions.hpp"

#include <vector>

#include "hyperalg/errors.hpp"

namespace hyperalg {

namespace {

Hyperfield validated(const HyperTable& add, const MulTable& mul,
                     std::size_t zero, std::size_t one,
                     const std::string& name) {
  HyperfieldCheck check = check_hyperfield(add, mul, zero, one);
  if (!check.ok())
    throw ContractError("builtin hyperfield " + name + " failed validation: " +
                        (check.failures.empty() ? std::string("?")
                                                : check.failures.front().detail));
  return std::move(*check.field);
}

bool is_small_prime(std::size_t p) {
  return p == 2 || p == 3 || p == 5 || p == 7;
}

}  // namespace

Hyperfield k2_hyperfield() {
  Carrier c({"0", "1"});
  auto s = [](std::size_t i) { return IndexSubset::singleton(2, i); };
  std::vector<IndexSubset> add = {s(0), s(1), s(1), IndexSubset::of(2, {0, 1})};
  std::vector<std::size_t> mul = {0, 0, 0, 1};
  return validated(HyperTable(c, std::move(add)), MulTable(c, std::move(mul)),
                   0, 1, "K2");
}

Hyperfield sign_hyperfield() {
  Carrier c({"0", "1", "-1"});
  auto s = [](std::size_t i) { return IndexSubset::singleton(3, i); };
  IndexSubset all = IndexSubset::full(3);
  // rows: 0, 1, -1
  std::vector<IndexSubset> add = {s(0), s(1), s(2),   //
                                  s(1), s(1), all,    //
                                  s(2), all,  s(2)};
  std::vector<std::size_t> mul = {0, 0, 0,  //
                                  0, 1, 2,  //
                                  0, 2, 1};
  return validated(HyperTable(c, std::move(add)), MulTable(c, std::move(mul)),
                   0, 1, "S3");
}

Hyperfield gf_hyperfield(std::size_t p) {
  if (!is_small_prime(p))
    throw ContractError("GF(p) exemplar needs a prime p <= 7, got " +
                        std::to_string(p));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p; ++i) labels.push_back(std::to_string(i));
  Carrier c(std::move(labels));
  std::vector<IndexSubset> add;
  std::vector<std::size_t> mul;
  add.reserve(p * p);
  mul.reserve(p * p);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b) {
      add.push_back(IndexSubset::singleton(p, (a + b) % p));
      mul.push_back((a * b) % p);
    }
  return validated(HyperTable(c, std::move(add)), MulTable(c, std::move(mul)),
                   0, 1, "GF" + std::to_string(p));
}

Hyperfield builtin_hyperfield(const std::string& name) {
  if (name == "K2") return k2_hyperfield();
  if (name == "S3") return sign_hyperfield();
  if (name.size() > 2 && name.substr(0, 2) == "GF") {
    std::size_t p = 0;
    for (char ch : name.substr(2)) {
      if (ch < '0' || ch > '9') throw ContractError("unknown hyperfield: " + name);
      p = p * 10 + static_cast<std::size_t>(ch - '0');
    }
    return gf_hyperfield(p);
  }
  throw ContractError("unknown hyperfield: " + name);
}

std::size_t ProductSpace::coordinate(std::size_t v, std::size_t k) const {
  const std::size_t q = space.field.size();
  for (std::size_t i = 0; i < k; ++i) v /= q;
  return v % q;
}

std::size_t ProductSpace::encode(const std::vector<std::size_t>& coords) const {
  const std::size_t q = space.field.size();
  if (coords.size() != arity)
    throw ContractError("coordinate tuple has wrong arity");
  std::size_t v = 0;
  for (std::size_t k = arity; k-- > 0;) v = v * q + coords[k];
  return v;
}

ProductSpace product_space(const Hyperfield& field, std::size_t n) {
  if (n < 1 || n > 3)
    throw ContractError("product space arity must be between 1 and 3");
  const std::size_t q = field.size();
  std::size_t nv = 1;
  for (std::size_t i = 0; i < n; ++i) {
    nv *= q;
    if (nv > 343)
      throw ContractError("product space size guard exceeded: |F|^n > 343");
  }

  auto coord = [&](std::size_t v, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) v /= q;
    return v % q;
  };

  std::vector<std::string> names(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    std::string name = "v";
    for (std::size_t k = 0; k < n; ++k) name += field.carrier.label(coord(v, k));
    names[v] = std::move(name);
  }
  Carrier vectors(std::move(names));

  // componentwise hyperaddition: cartesian product of the coordinate cells
  std::vector<IndexSubset> vadd_cells;
  vadd_cells.reserve(nv * nv);
  for (std::size_t x = 0; x < nv; ++x)
    for (std::size_t y = 0; y < nv; ++y) {
      IndexSubset cell(nv);
      std::vector<std::size_t> cursor(n, 0);
      // walk the product of the n coordinate sums
      std::vector<std::vector<std::size_t>> sums(n);
      for (std::size_t k = 0; k < n; ++k)
        sums[k] = field.add.cell(coord(x, k), coord(y, k)).indices();
      bool done = false;
      while (!done) {
        std::size_t v = 0;
        for (std::size_t k = n; k-- > 0;) v = v * q + sums[k][cursor[k]];
        cell.insert(v);
        done = true;
        for (std::size_t k = 0; k < n; ++k) {
          if (++cursor[k] < sums[k].size()) {
            done = false;
            break;
          }
          cursor[k] = 0;
        }
      }
      vadd_cells.push_back(std::move(cell));
    }
  HyperTable vadd(vectors, std::move(vadd_cells));

  std::vector<IndexSubset> act_cells;
  act_cells.reserve(q * nv);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t v = 0; v < nv; ++v) {
      std::size_t image = 0;
      for (std::size_t k = n; k-- > 0;)
        image = image * q + field.mul.cell(a, coord(v, k));
      act_cells.push_back(IndexSubset::singleton(nv, image));
    }
  ActionTable action(q, nv, std::move(act_cells));

  SpaceCheck check = check_hypervectorspace(field, vectors, vadd, action, 0);
  if (!check.ok())
    throw ContractError("product space failed validation: " +
                        (check.failures.empty() ? std::string("?")
                                                : check.failures.front().detail));
  return ProductSpace{std::move(*check.space), n};
}

IndexSubset coordinate_subspace(const ProductSpace& ps, const IndexSubset& mask) {
  if (mask.universe() != ps.arity)
    throw ContractError("coordinate mask must range over the space's arity");
  const std::size_t nv = ps.space.dim_carrier();
  const std::size_t zero = ps.space.field.zero;
  IndexSubset out(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    bool in = true;
    for (std::size_t k = 0; k < ps.arity; ++k)
      if (!mask.contains(k) && ps.coordinate(v, k) != zero) {
        in = false;
        break;
      }
    if (in) out.insert(v);
  }
  return out;
}

}  // namespace hyperalg
