#include "hyperalg/table.hpp"

#include "hyperalg/errors.hpp"

namespace hyperalg {

HyperTable::HyperTable(Carrier carrier, std::vector<IndexSubset> cells)
    : carrier_(std::move(carrier)), cells_(std::move(cells)) {
  const std::size_t n = carrier_.size();
  if (cells_.size() != n * n)
    throw ContractError("hypertable needs " + std::to_string(n * n) +
                        " cells, got " + std::to_string(cells_.size()));
  for (const IndexSubset& c : cells_)
    if (c.universe() != n)
      throw ContractError("hypertable cell universe mismatch");
}

std::size_t HyperTable::index(std::size_t a, std::size_t b) const {
  const std::size_t n = carrier_.size();
  if (a >= n || b >= n)
    throw ContractError("hypertable cell (" + std::to_string(a) + ", " +
                        std::to_string(b) + ") out of range");
  return a * n + b;
}

MulTable::MulTable(Carrier carrier, std::vector<std::size_t> cells)
    : carrier_(std::move(carrier)), cells_(std::move(cells)) {
  const std::size_t n = carrier_.size();
  if (cells_.size() != n * n)
    throw ContractError("multable needs " + std::to_string(n * n) +
                        " cells, got " + std::to_string(cells_.size()));
  for (std::size_t v : cells_)
    if (v >= n) throw ContractError("multable value out of range");
}

std::size_t MulTable::index(std::size_t a, std::size_t b) const {
  const std::size_t n = carrier_.size();
  if (a >= n || b >= n)
    throw ContractError("multable cell (" + std::to_string(a) + ", " +
                        std::to_string(b) + ") out of range");
  return a * n + b;
}

IndexSubset extend_op(const HyperTable& table, const IndexSubset& a,
                      const IndexSubset& b) {
  const std::size_t n = table.size();
  if (a.universe() != n || b.universe() != n)
    throw ContractError("extend_op arguments must range over the table's carrier");
  if (a.empty() || b.empty())
    throw ContractError("extend_op arguments must be non-empty");
  IndexSubset out(n);
  a.for_each([&](std::size_t x) {
    b.for_each([&](std::size_t y) { out.unite(table.cell(x, y)); });
  });
  return out;
}

IndexSubset fold_op(const HyperTable& table,
                    std::span<const IndexSubset> parts) {
  if (parts.empty()) throw ContractError("fold_op needs at least one part");
  IndexSubset acc = parts[0];
  if (acc.universe() != table.size())
    throw ContractError("fold_op parts must range over the table's carrier");
  for (std::size_t i = 1; i < parts.size(); ++i)
    acc = extend_op(table, acc, parts[i]);
  return acc;
}

}  // namespace hyperalg
