// Carrier: the ordered ground set of a structure. Elements are addressed by
// dense index everywhere; labels exist for parsing and report rendering only.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperalg/errors.hpp"
#include "hyperalg/subset.hpp"

namespace hyperalg {

class Carrier {
 public:
  // Labels must be non-empty, pairwise distinct and at least one is required.
  explicit Carrier(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(const std::string& label) const;

  // "v00 v10" — members of `s` rendered by label in ascending index order.
  std::string render_subset(const IndexSubset& s) const;

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Carrier with labels "e0".."e{n-1}"; used by the census.
Carrier generic_carrier(std::size_t n);

}  // namespace hyperalg
