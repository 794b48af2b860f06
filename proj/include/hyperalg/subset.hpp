// IndexSubset: a set of element indices over a fixed finite universe,
// stored inline as a bit mask. Equality is extensional; printing and
// iteration are in ascending index order.
#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperalg/errors.hpp"

namespace hyperalg {

class IndexSubset {
 public:
  // Largest supported universe. Product spaces are capped at |F|^n <= 343,
  // so everything the library builds fits.
  static constexpr std::size_t kMaxUniverse = 384;

  IndexSubset() : universe_(0), words_{} {}

  explicit IndexSubset(std::size_t universe) : universe_(universe), words_{} {
    if (universe > kMaxUniverse)
      throw ContractError("IndexSubset universe too large: " +
                          std::to_string(universe));
  }

  static IndexSubset singleton(std::size_t universe, std::size_t i) {
    IndexSubset s(universe);
    s.insert(i);
    return s;
  }

  static IndexSubset full(std::size_t universe) {
    IndexSubset s(universe);
    for (std::size_t w = 0; w < s.word_count(); ++w)
      s.words_[w] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static IndexSubset of(std::size_t universe,
                        const std::vector<std::size_t>& indices) {
    IndexSubset s(universe);
    for (std::size_t i : indices) s.insert(i);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool empty() const {
    for (std::size_t w = 0; w < word_count(); ++w)
      if (words_[w] != 0) return false;
    return true;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::size_t w = 0; w < word_count(); ++w)
      n += static_cast<std::size_t>(std::popcount(words_[w]));
    return n;
  }

  bool contains(std::size_t i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void insert(std::size_t i) {
    check_index(i);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void erase(std::size_t i) {
    check_index(i);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  IndexSubset& unite(const IndexSubset& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < word_count(); ++w) words_[w] |= other.words_[w];
    return *this;
  }

  IndexSubset& intersect(const IndexSubset& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < word_count(); ++w) words_[w] &= other.words_[w];
    return *this;
  }

  IndexSubset& subtract(const IndexSubset& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < word_count(); ++w)
      words_[w] &= ~other.words_[w];
    return *this;
  }

  bool is_subset_of(const IndexSubset& other) const {
    check_same_universe(other);
    for (std::size_t w = 0; w < word_count(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  bool intersects(const IndexSubset& other) const {
    check_same_universe(other);
    for (std::size_t w = 0; w < word_count(); ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  friend bool operator==(const IndexSubset& a, const IndexSubset& b) {
    if (a.universe_ != b.universe_) return false;
    for (std::size_t w = 0; w < a.word_count(); ++w)
      if (a.words_[w] != b.words_[w]) return false;
    return true;
  }

  // Lowest member, or universe() when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < word_count(); ++w)
      if (words_[w] != 0)
        return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return universe_;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < word_count(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        std::size_t i = (w << 6) +
                        static_cast<std::size_t>(std::countr_zero(bits));
        fn(i);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  // "{ 0 2 3 }" with members in ascending index order.
  std::string to_string() const {
    std::string s = "{";
    for_each([&](std::size_t i) {
      s += ' ';
      s += std::to_string(i);
    });
    s += s.size() == 1 ? "}" : " }";
    return s;
  }

 private:
  std::size_t word_count() const { return (universe_ + 63) >> 6; }

  void trim() {
    std::size_t used = universe_ & 63;
    if (universe_ > 0 && used != 0)
      words_[word_count() - 1] &= (std::uint64_t{1} << used) - 1;
  }

  void check_index(std::size_t i) const {
    if (i >= universe_)
      throw ContractError("subset index " + std::to_string(i) +
                          " out of range for universe " +
                          std::to_string(universe_));
  }

  void check_same_universe(const IndexSubset& other) const {
    if (universe_ != other.universe_)
      throw ContractError("subset universe mismatch: " +
                          std::to_string(universe_) + " vs " +
                          std::to_string(other.universe_));
  }

  std::size_t universe_;
  std::array<std::uint64_t, kMaxUniverse / 64> words_;
};

inline IndexSubset set_union(IndexSubset a, const IndexSubset& b) {
  return a.unite(b);
}

inline IndexSubset set_intersection(IndexSubset a, const IndexSubset& b) {
  return a.intersect(b);
}

inline IndexSubset set_difference(IndexSubset a, const IndexSubset& b) {
  return a.subtract(b);
}

}  // namespace hyperalg
