// Classical linear algebra over GF(p) by Gaussian elimination, used as the
// independent oracle for dependence, span and dimension on degenerate
// (classical-field) product spaces. Works on coordinate tuples and never
// touches the hyperstructure code paths it checks.
#pragma once

#include <cstddef>
#include <set>
#include <vector>

namespace gf_oracle {

using Vec = std::vector<std::size_t>;  // coordinates in [0, p)

inline std::size_t mod_inverse(std::size_t a, std::size_t p) {
  for (std::size_t x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  return 0;
}

// Row-reduced echelon basis of the span of the given rows.
inline std::vector<Vec> echelon_basis(std::vector<Vec> rows, std::size_t p) {
  if (rows.empty()) return {};
  const std::size_t width = rows.front().size();
  std::vector<Vec> basis;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
    std::size_t pivot = pivot_row;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot_row], rows[pivot]);
    std::size_t inv = mod_inverse(rows[pivot_row][col], p);
    for (std::size_t c = 0; c < width; ++c)
      rows[pivot_row][c] = (rows[pivot_row][c] * inv) % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      std::size_t factor = rows[r][col];
      for (std::size_t c = 0; c < width; ++c)
        rows[r][c] = (rows[r][c] + (p - factor) * rows[pivot_row][c]) % p;
    }
    ++pivot_row;
  }
  for (std::size_t r = 0; r < pivot_row; ++r) basis.push_back(rows[r]);
  return basis;
}

inline std::size_t rank(const std::vector<Vec>& rows, std::size_t p) {
  return echelon_basis(rows, p).size();
}

inline bool dependent(const std::vector<Vec>& vecs, std::size_t p) {
  return rank(vecs, p) < vecs.size();
}

// All linear combinations, enumerated over the echelon basis.
inline std::set<Vec> span_set(const std::vector<Vec>& vecs, std::size_t p) {
  const std::size_t width = vecs.empty() ? 0 : vecs.front().size();
  std::vector<Vec> basis = echelon_basis(vecs, p);
  std::set<Vec> out;
  std::vector<std::size_t> coeffs(basis.size(), 0);
  for (;;) {
    Vec sum(width, 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t c = 0; c < width; ++c)
        sum[c] = (sum[c] + coeffs[i] * basis[i][c]) % p;
    out.insert(sum);
    std::size_t i = coeffs.size();
    bool advanced = false;
    while (i-- > 0) {
      if (++coeffs[i] < p) {
        advanced = true;
        break;
      }
      coeffs[i] = 0;
    }
    if (!advanced) break;
  }
  if (out.empty()) out.insert(Vec(width, 0));
  return out;
}

}  // namespace gf_oracle
