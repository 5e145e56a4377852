#pragma once

// Test-side oracles, independent of the library's construction paths:
// brute-force subsystem enumeration by rational spans, and the classical
// partition dictionaries for nilpotent orbits of the classical series.

#include <algorithm>
#include <ostream>
#include <numeric>
#include <set>
#include <vector>

#include "hodge/linalg.hpp"
#include "hodge/root_system.hpp"

namespace oracles {

/// Every subsystem of the form Delta intersect span(X), X any subset of the
/// positive roots. For type A these are exactly the Levi subsystems.
inline std::set<hodge::RootSet, hodge::RootSetLess> span_closed_subsystems(const hodge::RootSystem& rs) {
  std::set<hodge::RootSet, hodge::RootSetLess> out;
  int np = rs.num_positive();
  for (unsigned mask = 0; mask < (1u << np); ++mask) {
    std::vector<std::vector<int>> gens;
    for (int i = 0; i < np; ++i)
      if (mask & (1u << i)) gens.push_back(rs.root(i));
    hodge::RootSet sub;
    for (int r = 0; r < rs.num_roots(); ++r)
      if (hodge::q_in_span(gens, rs.root(r))) sub.set(r);
    out.insert(sub);
  }
  return out;
}

inline void partitions_rec(int n, int max, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

inline std::vector<int> h_multiset(const std::vector<int>& parts) {
  std::vector<int> h;
  for (int d : parts)
    for (int k = d - 1; k >= 1 - d; k -= 2) h.push_back(k);
  std::sort(h.rbegin(), h.rend());
  return h;
}

inline int multiplicity(const std::vector<int>& parts, int value) {
  return static_cast<int>(std::count(parts.begin(), parts.end(), value));
}

/// so(2n+1) orbits: even parts with even multiplicity. Diagram from the
/// nonnegative half of the h-multiset.
inline std::set<std::vector<int>> so_odd_char_vectors(int n) {
  std::set<std::vector<int>> out;
  for (const auto& parts : partitions(2 * n + 1)) {
    bool ok = true;
    for (int d : parts)
      if (d % 2 == 0 && multiplicity(parts, d) % 2 != 0) ok = false;
    if (!ok) continue;
    auto h = h_multiset(parts);
    std::vector<int> cv(n);
    for (int i = 0; i + 1 < n; ++i) cv[i] = h[i] - h[i + 1];
    cv[n - 1] = h[n - 1];
    out.insert(cv);
  }
  return out;
}

/// sp(2n) orbits: odd parts with even multiplicity.
inline std::set<std::vector<int>> sp_char_vectors(int n) {
  std::set<std::vector<int>> out;
  for (const auto& parts : partitions(2 * n)) {
    bool ok = true;
    for (int d : parts)
      if (d % 2 == 1 && multiplicity(parts, d) % 2 != 0) ok = false;
    if (!ok) continue;
    auto h = h_multiset(parts);
    std::vector<int> cv(n);
    for (int i = 0; i + 1 < n; ++i) cv[i] = h[i] - h[i + 1];
    cv[n - 1] = 2 * h[n - 1];
    out.insert(cv);
  }
  return out;
}

/// Closure generation: the subsystem generated by a set of roots by repeated
/// addition, together with negatives.
inline hodge::RootSet closure_generate(const hodge::RootSystem& rs,
                                       const std::vector<int>& root_indices) {
  hodge::RootSet sub;
  for (int r : root_indices) {
    sub.set(r);
    sub.set(rs.negative(r));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> members;
    for (int r = 0; r < rs.num_roots(); ++r)
      if (sub[r]) members.push_back(r);
    for (int a : members)
      for (int b : members) {
        hodge::RootCoords sum = rs.root(a);
        for (int i = 0; i < rs.rank(); ++i) sum[i] += rs.root(b)[i];
        int si = rs.root_index(sum);
        if (si >= 0 && !sub[si]) {
          sub.set(si);
          grew = true;
        }
      }
  }
  return sub;
}

}  // namespace oracles
