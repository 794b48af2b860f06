#include "hyperalg/carrier.hpp"

namespace hyperalg {

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw ContractError("carrier must have at least one element");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw ContractError("carrier label must be non-empty");
    auto [it, inserted] = index_.emplace(labels_[i], i);
    if (!inserted)
      throw ContractError("duplicate carrier label: " + labels_[i]);
  }
}

const std::string& Carrier::label(std::size_t i) const {
  if (i >= labels_.size())
    throw ContractError("carrier index " + std::to_string(i) + " out of range");
  return labels_[i];
}

std::optional<std::size_t> Carrier::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Carrier::render_subset(const IndexSubset& s) const {
  std::string out;
  s.for_each([&](std::size_t i) {
    if (!out.empty()) out += ' ';
    out += label(i);
  });
  return out;
}

Carrier generic_carrier(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  return Carrier(std::move(labels));
}

}  // namespace hyperalg
