#include "hodge/rep_weights.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace hodge {

namespace {

// (lambda, mu) with lambda in omega-coordinates and mu in sigma-coordinates:
// sum_j a_j d_j m_j, using (omega_i, sigma_j) = delta_ij d_j.
Rational form_om_sg(const RootSystem& rs, const std::vector<int>& a, const QVector& m) {
  Rational s(0);
  for (int j = 0; j < rs.rank(); ++j)
    s += Rational(static_cast<long long>(a[j]) * rs.symmetrizers()[j]) * m[j];
  return s;
}

Rational form_om_om(const RootSystem& rs, const std::vector<int>& a, const std::vector<int>& b) {
  return form_om_sg(rs, a, rs.omega_to_sigma(b));
}

// Reflect a weight (omega coordinates) to the dominant chamber.
std::vector<int> dominant_rep(const RootSystem& rs, std::vector<int> w) {
  const auto& a = rs.cartan();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (w[i] < 0) {
        int c = w[i];
        for (int j = 0; j < rs.rank(); ++j) w[j] -= c * a[i][j];  // w - c * sigma_i
        moved = true;
        break;
      }
    }
  }
  return w;
}

}  // namespace

long long weyl_dim(const RootSystem& rs, const std::vector<int>& highest_omega) {
  std::vector<int> rho(rs.rank(), 1);
  std::vector<int> lr(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    if (highest_omega[i] < 0) throw error("weyl_dim: non-dominant highest weight");
    lr[i] = highest_omega[i] + 1;
  }
  Rational out(1);
  for (int r = 0; r < rs.num_positive(); ++r) {
    QVector alpha_sigma(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) alpha_sigma[i] = rs.root(r)[i];
    out *= form_om_sg(rs, lr, alpha_sigma) / form_om_sg(rs, rho, alpha_sigma);
  }
  return out.as_integer();
}

WeightSystem weight_system(const RootSystem& rs, const std::vector<int>& highest_omega,
                           long long dim_cap) {
  long long dim = weyl_dim(rs, highest_omega);
  if (dim > dim_cap)
    throw size_limit_error("representation dimension " + std::to_string(dim) +
                               " exceeds cap " + std::to_string(dim_cap),
                           dim);
  int n = rs.rank();
  const auto& a = rs.cartan();

  // Enumerate the weight set: lattice points below lambda whose dominant
  // representative is still below lambda; by saturation these are exactly
  // the weights.
  std::map<std::vector<int>, long long> mult;  // weight (omega) -> mult, -1 = unknown
  std::set<std::vector<int>> weights;
  std::queue<std::vector<int>> bfs;
  weights.insert(highest_omega);
  bfs.push(highest_omega);
  auto below_lambda = [&](const std::vector<int>& dom) {
    // lambda - dom must be a nonnegative integer combination of simple roots.
    std::vector<int> diff(n);
    for (int i = 0; i < n; ++i) diff[i] = highest_omega[i] - dom[i];
    QVector sg(n, Rational(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sg[i] += rs.cartan_inverse()[j][i] * Rational(diff[j]);
    for (const auto& c : sg)
      if (!c.is_integer() || c.num() < 0) return false;
    return true;
  };
  while (!bfs.empty()) {
    auto w = bfs.front();
    bfs.pop();
    for (int i = 0; i < n; ++i) {
      std::vector<int> w2 = w;
      for (int j = 0; j < n; ++j) w2[j] -= a[i][j];
      if (weights.count(w2)) continue;
      if (!below_lambda(dominant_rep(rs, w2))) continue;
      weights.insert(w2);
      bfs.push(w2);
    }
  }

  // Freudenthal on dominant weights, deepest last.
  std::vector<std::vector<int>> dominants;
  for (const auto& w : weights)
    if (std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; })) dominants.push_back(w);
  auto depth = [&](const std::vector<int>& w) {
    QVector sg(n, Rational(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        sg[i] += rs.cartan_inverse()[j][i] * Rational(highest_omega[j] - w[j]);
    Rational d(0);
    for (const auto& c : sg) d += c;
    return d.as_integer();
  };
  std::sort(dominants.begin(), dominants.end(),
            [&](const auto& x, const auto& y) { return depth(x) < depth(y); });

  std::vector<int> rho(n, 1);
  auto norm_plus_rho = [&](const std::vector<int>& w) {
    std::vector<int> wr(n);
    for (int i = 0; i < n; ++i) wr[i] = w[i] + 1;
    return form_om_om(rs, wr, wr);
  };
  Rational top_norm = norm_plus_rho(highest_omega);

  std::map<std::vector<int>, long long> dom_mult;
  for (const auto& mu : dominants) {
    if (mu == highest_omega) {
      dom_mult[mu] = 1;
      continue;
    }
    Rational num(0);
    for (int r = 0; r < rs.num_positive(); ++r) {
      std::vector<int> alpha_om = rs.root_to_omega(rs.root(r));
      QVector alpha_sg(n);
      for (int i = 0; i < n; ++i) alpha_sg[i] = rs.root(r)[i];
      std::vector<int> nu = mu;
      for (int k = 1;; ++k) {
        for (int i = 0; i < n; ++i) nu[i] += alpha_om[i];
        if (!weights.count(nu)) break;
        auto dom = dominant_rep(rs, nu);
        auto it = dom_mult.find(dom);
        if (it == dom_mult.end()) throw error("weight_system: Freudenthal ordering failure");
        num += form_om_sg(rs, nu, alpha_sg) * Rational(it->second);
      }
    }
    Rational denom = top_norm - norm_plus_rho(mu);
    long long m = (Rational(2) * num / denom).as_integer();
    if (m <= 0) throw error("weight_system: non-positive multiplicity");
    dom_mult[mu] = m;
  }

  WeightSystem ws;
  long long total = 0;
  for (const auto& w : weights) {
    WeightEntry e;
    e.omega = w;
    e.sigma = rs.omega_to_sigma(w);
    e.mult = dom_mult.at(dominant_rep(rs, w));
    total += e.mult;
    ws.entries.push_back(std::move(e));
  }
  ws.dim = total;
  if (total != dim) throw error("weight_system: dimension mismatch with Weyl formula");
  return ws;
}

WeightSystem adjoint_weight_system(const RootSystem& rs) {
  WeightSystem ws;
  for (int r = 0; r < rs.num_roots(); ++r) {
    WeightEntry e;
    e.omega = rs.root_to_omega(rs.root(r));
    e.sigma.assign(rs.root(r).begin(), rs.root(r).end());
    e.mult = 1;
    ws.entries.push_back(std::move(e));
  }
  WeightEntry zero;
  zero.omega.assign(rs.rank(), 0);
  zero.sigma.assign(rs.rank(), Rational(0));
  zero.mult = rs.rank();
  ws.entries.push_back(std::move(zero));
  ws.dim = rs.num_roots() + rs.rank();
  return ws;
}

HodgeNumbers hodge_numbers(const RootSystem& rs, const WeightSystem& ws,
                           const GradingElement& e, int n) {
  std::map<Rational, long long> by_level;  // mu(E) -> dim
  for (const auto& w : ws.entries) by_level[rs.pair_weight(w.sigma, e)] += w.mult;

  std::map<long long, long long> by_p;
  for (const auto& [lvl, d] : by_level) {
    Rational p = lvl + Rational(n, 2);
    if (!p.is_integer())
      throw parse_error("hodge_numbers: weight level " + lvl.str() + " with n=" +
                        std::to_string(n) + " gives non-integral p; inconsistent (rep, E, n)");
    by_p[p.as_integer()] += d;
  }
  HodgeNumbers out;
  out.n = n;
  out.p_max = static_cast<int>(by_p.rbegin()->first);
  int p_min = static_cast<int>(by_p.begin()->first);
  out.h.assign(out.p_max - p_min + 1, 0);
  for (const auto& [p, d] : by_p) out.h[out.p_max - p] += d;
  out.f.resize(out.h.size());
  long long acc = 0;
  for (std::size_t k = 0; k < out.h.size(); ++k) {
    acc += out.h[k];
    out.f[k] = acc;
  }
  return out;
}

}  // namespace hodge
