#pragma once

// Dense linear algebra over the prime field (GF(p) or Q), with entries held
// as central coefficient elements.

#include <optional>
#include <vector>

#include "sqfree/coeff.hpp"

namespace sqfree::detail {

using Vec = std::vector<coeff::Element>;

struct Rref {
  std::vector<Vec> rows;             // nonzero rows, pivot entries equal to 1
  std::vector<std::size_t> pivots;   // pivot column of each row
};

Rref rref(std::vector<Vec> rows);

inline std::size_t rank(std::vector<Vec> rows) { return rref(std::move(rows)).pivots.size(); }

/// x with sum_t x[t] * cols[t] = b, or nullopt.
std::optional<Vec> solve(const std::vector<Vec>& cols, const Vec& b, const coeff::Element& zero);

/// Basis of {x : sum_t x[t] * cols[t] = 0}.
std::vector<Vec> kernel(const std::vector<Vec>& cols, const coeff::Element& zero, const coeff::Element& one);

}  // namespace sqfree::detail
