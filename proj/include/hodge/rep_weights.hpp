#pragma once

#include <map>
#include <vector>

#include "hodge/root_system.hpp"

namespace hodge {

struct WeightEntry {
  std::vector<int> omega;   // fundamental-weight coordinates
  QVector sigma;            // rational simple-root coordinates
  long long mult = 0;
};

/// Full weight system of an irreducible with exact multiplicities.
struct WeightSystem {
  std::vector<WeightEntry> entries;
  long long dim = 0;
};

/// Weyl dimension formula. Exact; no enumeration.
long long weyl_dim(const RootSystem& rs, const std::vector<int>& highest_omega);

/// All weights of the irreducible with highest weight lambda (dominant,
/// omega coordinates), multiplicities by Freudenthal recursion in exact
/// rationals. Throws size_limit_error if weyl_dim exceeds dim_cap.
WeightSystem weight_system(const RootSystem& rs, const std::vector<int>& highest_omega,
                           long long dim_cap = 100000);

/// Roots with multiplicity one plus the zero weight with multiplicity rank.
WeightSystem adjoint_weight_system(const RootSystem& rs);

/// Hodge numbers of a weight-n Hodge representation graded by E:
/// h^{p,n-p} = sum of multiplicities over weights with mu(E) = p - n/2.
/// h[k] = h^{p_max-k, n-p_max+k}; for ordinary effective ranges p_max = n
/// and the vector reads (h^{n,0}, ..., h^{0,n}).
struct HodgeNumbers {
  int n = 0;
  int p_max = 0;
  std::vector<long long> h;
  std::vector<long long> f;  // f^p partial sums, aligned with h

  long long at(int p) const {
    int k = p_max - p;
    if (k < 0 || k >= static_cast<int>(h.size())) return 0;
    return h[k];
  }
  int p_min() const { return p_max - static_cast<int>(h.size()) + 1; }
};

HodgeNumbers hodge_numbers(const RootSystem& rs, const WeightSystem& ws,
                           const GradingElement& e, int n);

}  // namespace hodge
