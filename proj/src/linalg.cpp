#include "linalg.hpp"

namespace sqfree::detail {

Rref rref(std::vector<Vec> rows) {
  Rref out;
  if (rows.empty()) return out;
  const std::size_t width = rows.front().size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < width && top < rows.size(); ++col) {
    std::size_t pivot = top;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[top], rows[pivot]);
    const coeff::Element inv = rows[top][col].inverse();
    for (auto& x : rows[top]) x = x * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || rows[r][col].is_zero()) continue;
      const coeff::Element factor = rows[r][col];
      for (std::size_t c = col; c < width; ++c) rows[r][c] = rows[r][c] - factor * rows[top][c];
    }
    out.pivots.push_back(col);
    ++top;
  }
  rows.resize(top);
  out.rows = std::move(rows);
  return out;
}

namespace {

// Rows of the matrix whose columns are cols, optionally augmented by b.
std::vector<Vec> as_rows(const std::vector<Vec>& cols, const Vec* b) {
  const std::size_t height = b ? b->size() : (cols.empty() ? 0 : cols.front().size());
  std::vector<Vec> rows(height);
  for (std::size_t r = 0; r < height; ++r) {
    for (const auto& c : cols) rows[r].push_back(c[r]);
    if (b) rows[r].push_back((*b)[r]);
  }
  return rows;
}

}  // namespace

std::optional<Vec> solve(const std::vector<Vec>& cols, const Vec& b, const coeff::Element& zero) {
  auto r = rref(as_rows(cols, &b));
  Vec x(cols.size(), zero);
  for (std::size_t t = 0; t < r.pivots.size(); ++t) {
    if (r.pivots[t] == cols.size()) return std::nullopt;
    x[r.pivots[t]] = r.rows[t].back();
  }
  return x;
}

std::vector<Vec> kernel(const std::vector<Vec>& cols, const coeff::Element& zero, const coeff::Element& one) {
  auto r = rref(as_rows(cols, nullptr));
  std::vector<char> is_pivot(cols.size(), 0);
  for (auto p : r.pivots) is_pivot[p] = 1;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols.size(); ++f) {
    if (is_pivot[f]) continue;
    Vec x(cols.size(), zero);
    x[f] = one;
    for (std::size_t t = 0; t < r.pivots.size(); ++t) x[r.pivots[t]] = -r.rows[t][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace sqfree::detail
