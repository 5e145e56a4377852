#include "hodge/nilpotent_orbits.hpp"

#include <algorithm>
#include <numeric>

#include "hodge/linalg.hpp"

namespace hodge {

CharVector partition_char_vector(const std::vector<int>& parts) {
  int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> h;
  for (int d : parts) {
    if (d <= 0) throw error("partition_char_vector: nonpositive part");
    for (int k = d - 1; k >= 1 - d; k -= 2) h.push_back(k);
  }
  std::sort(h.rbegin(), h.rend());
  CharVector out(n - 1);
  for (int i = 0; i + 1 < n; ++i) out[i] = h[i] - h[i + 1];
  return out;
}

namespace {

// Dominant representative of a Cartan element under the full Weyl group,
// first-negative reflection policy.
std::vector<Rational> make_dominant(const RootSystem& rs, std::vector<Rational> y) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (y[i].sign() < 0) {
        rs.reflect_h_simple(i, y);
        moved = true;
        break;
      }
    }
  }
  return y;
}

}  // namespace

std::set<CharVector> enumerate_char_vectors(const RootSystem& rs) {
  int n = rs.rank();
  std::set<CharVector> out;
  out.insert(CharVector(n, 0));  // trivial orbit

  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    RootSet levi = standard_levi(rs, subset);
    int k = static_cast<int>(subset.size());

    // Sub-Cartan matrix of the base (the subset itself, for standard Levis).
    QMatrix m(k, QVector(k));
    std::vector<std::vector<Rational>> coroots;
    for (int j = 0; j < k; ++j) {
      RootCoords e(n, 0);
      e[subset[j]] = 1;
      coroots.push_back(rs.coroot_s(e));
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        RootCoords bi(n, 0);
        bi[subset[i]] = 1;
        m[i][j] = rs.pair(bi, GradingElement(coroots[j]));
      }

    for (unsigned ymask = 1; ymask < (1u << k); ++ymask) {
      QVector rhs(k);
      for (int i = 0; i < k; ++i) rhs[i] = Rational((ymask & (1u << i)) ? 2 : 0);
      auto c = q_solve(m, rhs);
      if (!c) throw error("enumerate_char_vectors: singular sub-Cartan matrix");
      std::vector<Rational> y(n, Rational(0));
      for (int j = 0; j < k; ++j)
        for (int t = 0; t < n; ++t) y[t] += (*c)[j] * coroots[j][t];
      GradingElement yg{y};

      // Distinguished test inside the Levi: rank l^ss plus the zero
      // eigenvalue count on Delta(l) must equal the eigenvalue-2 count.
      long long zero = 0, two = 0;
      bool integral = true;
      for (int r = 0; r < rs.num_roots() && integral; ++r) {
        if (!levi[r]) continue;
        Rational v = rs.pair(rs.root(r), yg);
        if (!v.is_integer()) { integral = false; break; }
        if (v.is_zero()) ++zero;
        if (v == Rational(2)) ++two;
      }
      if (!integral || k + zero != two) continue;

      auto dom = make_dominant(rs, y);
      CharVector cv(n);
      bool ok = true;
      for (int i = 0; i < n; ++i) {
        if (!dom[i].is_integer()) { ok = false; break; }
        long long v = dom[i].as_integer();
        if (v < 0 || v > 2) { ok = false; break; }
        cv[i] = static_cast<int>(v);
      }
      if (!ok)
        throw error("enumerate_char_vectors: candidate neutral element is not a weighted diagram");
      out.insert(cv);
    }
  }
  return out;
}

std::set<std::set<int>> jm_parabolic_classes(const RootSystem& rs) {
  std::set<std::set<int>> out;
  for (const auto& cv : enumerate_char_vectors(rs)) {
    std::set<int> supp;
    for (int i = 0; i < rs.rank(); ++i)
      if (cv[i] != 0) supp.insert(i + 1);
    if (!supp.empty()) out.insert(supp);
  }
  return out;
}

bool is_even_jm(const RootSystem& rs, const std::set<int>& index_set) {
  if (index_set.empty()) throw error("is_even_jm: empty index set");
  CharVector cv(rs.rank(), 0);
  for (int i : index_set) {
    if (i < 1 || i > rs.rank()) throw error("is_even_jm: index out of range");
    cv[i - 1] = 2;
  }
  auto all = enumerate_char_vectors(rs);
  return all.count(cv) > 0;
}

std::map<long long, long long> jm_filtration_dims(const RootSystem& rs, const WeightSystem& ws,
                                                  const GradingElement& y) {
  std::map<long long, long long> levels;
  for (const auto& e : ws.entries) {
    Rational v = rs.pair_weight(e.sigma, y);
    if (!v.is_integer()) throw error("jm_filtration_dims: non-integral eigenvalue " + v.str());
    levels[v.as_integer()] += e.mult;
  }
  std::map<long long, long long> out;
  long long acc = 0;
  for (const auto& [l, d] : levels) {
    acc += d;
    out[l] = acc;
  }
  return out;
}

}  // namespace hodge
