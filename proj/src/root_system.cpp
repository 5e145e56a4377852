#include "hodge/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_set>

namespace hodge {

namespace {

std::vector<std::vector<int>> cartan_matrix(CartanType t) {
  int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case Family::B:  // sigma_n short
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case Family::C:  // sigma_n long
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: 1-3-4-5-6(-7)(-8) chain, 2 attached to 4.
      chain(0, 2);
      for (int i = 2; i + 1 < n; ++i) chain(i, i + 1);
      chain(1, 3);
      break;
    case Family::F:  // sigma_1, sigma_2 long
      chain(0, 1);
      chain(1, 2);
      chain(2, 3);
      a[1][2] = -2;
      break;
    case Family::G:  // sigma_1 short
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

std::vector<int> compute_symmetrizers(const std::vector<std::vector<int>>& a) {
  // d_i with d_i a_ij = d_j a_ji, minimal positive integers.
  int n = static_cast<int>(a.size());
  std::vector<Rational> d(n, Rational(0));
  std::vector<int> todo;
  d[0] = 1;
  todo.push_back(0);
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0 || !d[j].is_zero()) continue;
      d[j] = d[i] * Rational(a[j][i]) / Rational(a[i][j]);
      todo.push_back(j);
    }
  }
  long long lcm_den = 1;
  for (auto& x : d) lcm_den = std::lcm(lcm_den, x.den());
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<int>((d[i] * Rational(lcm_den)).as_integer());
  int g = 0;
  for (int v : out) g = std::gcd(g, v);
  for (int& v : out) v /= g;
  return out;
}

}  // namespace

std::string RootSystem::key(const RootCoords& c) {
  std::string k;
  k.reserve(c.size() * 3);
  for (int v : c) {
    k += std::to_string(v);
    k += ',';
  }
  return k;
}

RootSystem RootSystem::build(CartanType t) {
  t.validate();
  RootSystem rs;
  rs.type_ = t;
  rs.rank_ = t.rank;
  rs.cartan_ = cartan_matrix(t);
  rs.d_ = compute_symmetrizers(rs.cartan_);
  int n = rs.rank_;
  rs.gram_.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.gram_[i][j] = static_cast<long long>(rs.cartan_[i][j]) * rs.d_[j];

  QMatrix aq(n, QVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) aq[i][j] = rs.cartan_[i][j];
  rs.cartan_inv_ = q_invert(aq);

  // Positive roots by closure, level by level. alpha + sigma_i is a root iff
  // p - <alpha, sigma_i^v> > 0 with p the depth of the sigma_i-string below.
  std::map<std::vector<int>, int> seen;  // coords -> height
  std::vector<RootCoords> level;
  for (int i = 0; i < n; ++i) {
    RootCoords e(n, 0);
    e[i] = 1;
    seen[e] = 1;
    level.push_back(e);
  }
  std::vector<RootCoords> positives = level;
  int h = 1;
  while (!level.empty()) {
    std::vector<RootCoords> next;
    for (const auto& alpha : level) {
      for (int i = 0; i < n; ++i) {
        long long pairing = 0;
        for (int k = 0; k < n; ++k) pairing += static_cast<long long>(alpha[k]) * rs.cartan_[k][i];
        int p = 0;
        RootCoords down = alpha;
        while (true) {
          down[i] -= 1;
          bool zero = std::all_of(down.begin(), down.end(), [](int v) { return v == 0; });
          if (zero || down[i] < 0 || !seen.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          RootCoords up = alpha;
          up[i] += 1;
          if (!seen.count(up)) {
            seen[up] = h + 1;
            next.push_back(up);
            positives.push_back(up);
          }
        }
      }
    }
    level = std::move(next);
    ++h;
  }

  std::sort(positives.begin(), positives.end(), [](const RootCoords& a, const RootCoords& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;  // sigma_1 before sigma_2 within a height level
  });

  rs.n_pos_ = static_cast<int>(positives.size());
  if (2 * positives.size() > kMaxRoots)
    throw size_limit_error("root system too large", 2 * static_cast<long long>(positives.size()));
  rs.roots_ = positives;
  for (const auto& p : positives) {
    RootCoords neg(p.size());
    for (size_t i = 0; i < p.size(); ++i) neg[i] = -p[i];
    rs.roots_.push_back(neg);
  }
  for (int i = 0; i < static_cast<int>(rs.roots_.size()); ++i) rs.index_[key(rs.roots_[i])] = i;

  rs.simple_idx_.resize(n);
  for (int i = 0; i < n; ++i) {
    RootCoords e(n, 0);
    e[i] = 1;
    rs.simple_idx_[i] = rs.index_.at(key(e));
  }
  rs.highest_ = rs.n_pos_ - 1;  // unique root of maximal height

  if (2LL * rs.n_pos_ + rs.rank_ != t.dim())
    throw error("root generation mismatch for " + t.str());
  return rs;
}

int RootSystem::root_index(const RootCoords& c) const {
  auto it = index_.find(key(c));
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int i) const {
  const auto& c = roots_[i];
  return std::accumulate(c.begin(), c.end(), 0);
}

long long RootSystem::inner(const RootCoords& a, const RootCoords& b) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += static_cast<long long>(a[i]) * b[j] * gram_[i][j];
  return s;
}

Rational RootSystem::pair(const RootCoords& alpha, const GradingElement& e) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i)
    if (alpha[i] != 0) s += Rational(alpha[i]) * e.s[i];
  return s;
}

Rational RootSystem::pair_weight(const QVector& mu_sigma, const GradingElement& e) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i) s += mu_sigma[i] * e.s[i];
  return s;
}

std::vector<Rational> RootSystem::coroot_s(const RootCoords& beta) const {
  long long norm = inner(beta, beta);
  std::vector<Rational> out(rank_);
  for (int j = 0; j < rank_; ++j) {
    long long sj_beta = 0;
    for (int k = 0; k < rank_; ++k) sj_beta += static_cast<long long>(beta[k]) * gram_[j][k];
    out[j] = Rational(2 * sj_beta, norm);
  }
  return out;
}

RootCoords RootSystem::reflect_root_simple(int i, RootCoords a) const {
  long long pairing = 0;
  for (int k = 0; k < rank_; ++k) pairing += static_cast<long long>(a[k]) * cartan_[k][i];
  a[i] -= static_cast<int>(pairing);
  return a;
}

void RootSystem::reflect_h_simple(int i, std::vector<Rational>& xi) const {
  Rational c = xi[i];
  if (c.is_zero()) return;
  for (int j = 0; j < rank_; ++j) xi[j] -= c * Rational(cartan_[j][i]);
}

std::vector<Rational> RootSystem::reflect_h_in_root(const RootCoords& beta,
                                                    std::vector<Rational> xi) const {
  Rational beta_xi(0);
  for (int i = 0; i < rank_; ++i) beta_xi += Rational(beta[i]) * xi[i];
  if (beta_xi.is_zero()) return xi;
  auto cov = coroot_s(beta);
  for (int i = 0; i < rank_; ++i) xi[i] -= beta_xi * cov[i];
  return xi;
}

QVector RootSystem::omega_to_sigma(const std::vector<int>& omega) const {
  // sigma-coords = (A^{-1})^T * omega-coords
  QVector out(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += cartan_inv_[j][i] * Rational(omega[j]);
  return out;
}

std::vector<int> RootSystem::root_to_omega(const RootCoords& a) const {
  std::vector<int> out(rank_, 0);
  for (int j = 0; j < rank_; ++j) {
    long long s = 0;
    for (int i = 0; i < rank_; ++i) s += static_cast<long long>(a[i]) * cartan_[i][j];
    out[j] = static_cast<int>(s);
  }
  return out;
}

std::string RootSystem::pretty_root(const RootCoords& a) const {
  std::string out;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += a[i] > 0 ? "+" : "-";
    else if (a[i] < 0) out += "-";
    int m = std::abs(a[i]);
    if (m != 1) out += std::to_string(m);
    out += "s" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string RootSystem::pretty_h(const std::vector<Rational>& s_coords) const {
  std::string out;
  for (int i = 0; i < rank_; ++i) {
    const Rational& c = s_coords[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += c.sign() > 0 ? "+" : "-";
    else if (c.sign() < 0) out += "-";
    Rational m = c.sign() < 0 ? -c : c;
    if (m != Rational(1)) {
      out += m.str();
      out += "*";
    }
    out += "S^" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

WeylGroup::WeylGroup(const RootSystem& rs, std::vector<int> gens, std::size_t cap,
                     bool check_full_order)
    : rs_(&rs), gens_(std::move(gens)) {
  if (check_full_order) {
    unsigned long long order = rs.type().weyl_order();
    if (order > cap)
      throw size_limit_error("Weyl group of " + rs.type().str() + " has order " +
                                 std::to_string(order) + " exceeding cap " + std::to_string(cap),
                             static_cast<long long>(order));
  }
  int m = rs.num_roots();
  std::vector<std::vector<uint16_t>> gen_perms;
  for (int g : gens_) {
    std::vector<uint16_t> p(m);
    for (int r = 0; r < m; ++r) {
      RootCoords img = rs.reflect_root_simple(g, rs.root(r));
      p[r] = static_cast<uint16_t>(rs.root_index(img));
    }
    gen_perms.push_back(std::move(p));
  }

  std::vector<uint16_t> id(m);
  for (int r = 0; r < m; ++r) id[r] = static_cast<uint16_t>(r);
  std::unordered_set<std::string> seen;
  auto perm_key = [](const std::vector<uint16_t>& p) {
    return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(uint16_t));
  };
  perms_.push_back(id);
  words_.emplace_back();
  seen.insert(perm_key(id));
  for (std::size_t head = 0; head < perms_.size(); ++head) {
    for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
      std::vector<uint16_t> nw(m);
      for (int r = 0; r < m; ++r) nw[r] = gen_perms[gi][perms_[head][r]];
      auto k = perm_key(nw);
      if (seen.count(k)) continue;
      if (perms_.size() >= cap)
        throw size_limit_error("Weyl enumeration exceeded cap " + std::to_string(cap),
                               static_cast<long long>(cap));
      seen.insert(std::move(k));
      std::vector<uint8_t> w;
      w.reserve(words_[head].size() + 1);
      w.push_back(static_cast<uint8_t>(gens_[gi]));
      w.insert(w.end(), words_[head].begin(), words_[head].end());
      perms_.push_back(std::move(nw));
      words_.push_back(std::move(w));
    }
  }
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs, std::size_t cap) {
  std::vector<int> gens(rs.rank());
  std::iota(gens.begin(), gens.end(), 0);
  return WeylGroup(rs, std::move(gens), cap, true);
}

WeylGroup WeylGroup::subgroup(const RootSystem& rs, const std::vector<int>& gens,
                              std::size_t cap) {
  return WeylGroup(rs, gens, cap, false);
}

RootSet WeylGroup::apply(std::size_t w, const RootSet& s) const {
  RootSet out;
  const auto& p = perms_[w];
  for (std::size_t i = 0; i < p.size(); ++i)
    if (s[i]) out.set(p[i]);
  return out;
}

std::vector<Rational> WeylGroup::apply_h(std::size_t w, std::vector<Rational> xi) const {
  const auto& word = words_[w];
  for (auto it = word.rbegin(); it != word.rend(); ++it) rs_->reflect_h_simple(*it, xi);
  return xi;
}

// ---------------------------------------------------------------------------

bool rootset_less(const RootSet& a, const RootSet& b) {
  for (std::size_t i = 0; i < kMaxRoots; ++i) {
    if (a[i] != b[i]) return a[i];
  }
  return false;
}

RootSet standard_levi(const RootSystem& rs, const std::vector<int>& simple_subset) {
  std::vector<bool> in(rs.rank(), false);
  for (int i : simple_subset) in[i] = true;
  RootSet out;
  for (int r = 0; r < rs.num_roots(); ++r) {
    bool ok = true;
    const auto& c = rs.root(r);
    for (int i = 0; i < rs.rank() && ok; ++i)
      if (c[i] != 0 && !in[i]) ok = false;
    if (ok) out.set(r);
  }
  return out;
}

std::vector<LeviSubsystem> enumerate_levis(const RootSystem& rs, const WeylGroup& w) {
  int n = rs.rank();
  std::vector<RootSet> standards;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    standards.push_back(standard_levi(rs, subset));
  }
  std::unordered_set<RootSet> seen;
  for (const auto& s : standards)
    for (std::size_t wi = 0; wi < w.size(); ++wi) seen.insert(w.apply(wi, s));
  std::vector<LeviSubsystem> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.push_back(LeviSubsystem{s});
  std::sort(out.begin(), out.end(), [](const LeviSubsystem& a, const LeviSubsystem& b) {
    if (a.roots.count() != b.roots.count()) return a.roots.count() < b.roots.count();
    return rootset_less(a.roots, b.roots);
  });
  return out;
}

std::vector<int> subsystem_base(const RootSystem& rs, const RootSet& sub) {
  std::vector<int> pos;
  for (int r = 0; r < rs.num_roots(); ++r) {
    if (!sub[r]) continue;
    if (!sub[rs.negative(r)]) throw error("subsystem_base: input not closed under negation");
    if (rs.is_positive(r)) pos.push_back(r);
  }
  // Closure under addition within Delta.
  for (int a : pos)
    for (int b : pos) {
      RootCoords sum = rs.root(a);
      const auto& bc = rs.root(b);
      for (int i = 0; i < rs.rank(); ++i) sum[i] += bc[i];
      int si = rs.root_index(sum);
      if (si >= 0 && !sub[si]) throw error("subsystem_base: input not closed under addition");
    }
  std::vector<int> base;
  for (int b : pos) {
    bool decomposable = false;
    for (int g : pos) {
      if (g == b) continue;
      RootCoords diff = rs.root(b);
      const auto& gc = rs.root(g);
      for (int i = 0; i < rs.rank(); ++i) diff[i] -= gc[i];
      int di = rs.root_index(diff);
      if (di >= 0 && sub[di] && rs.is_positive(di)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) base.push_back(b);
  }
  return base;
}

RootSet span_subsystem(const RootSystem& rs, const std::vector<RootCoords>& gens) {
  RootSet out;
  std::vector<std::vector<int>> span_vecs(gens.begin(), gens.end());
  for (int r = 0; r < rs.num_roots(); ++r)
    if (q_in_span(span_vecs, rs.root(r))) out.set(r);
  return out;
}

namespace {

struct Diagram {
  // Base roots as local indices with Cartan integers between them.
  std::vector<int> roots;                 // ambient root indices
  std::vector<std::vector<int>> cartan;   // a_ij = <b_i, b_j^v>
};

// Orders one connected component to the Bourbaki numbering and names it.
BaseComponent classify_component(const Diagram& d) {
  int n = static_cast<int>(d.roots.size());
  auto order_to_component = [&](const std::vector<int>& local_order, CartanType t) {
    BaseComponent c;
    c.type = t;
    for (int i : local_order) c.base_roots.push_back(d.roots[i]);
    // Cross-check: the reordered Cartan matrix must equal the type's.
    auto expect = cartan_matrix(t);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d.cartan[local_order[i]][local_order[j]] != expect[i][j])
          throw error("identify_components: base does not match any finite type");
    return c;
  };

  if (n == 1) return order_to_component({0}, CartanType(Family::A, 1));

  std::vector<std::vector<int>> adj(n);
  int triple = 0, dbl = 0;
  std::pair<int, int> dbl_edge{-1, -1};  // (long side, short side)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || d.cartan[i][j] == 0) continue;
      if (j > i) {
        int m = d.cartan[i][j] * d.cartan[j][i];
        if (m == 3) ++triple;
        if (m == 2) {
          ++dbl;
          // cartan[i][j] = -2 means root j is short.
          dbl_edge = d.cartan[i][j] == -2 ? std::make_pair(i, j) : std::make_pair(j, i);
        }
      }
      adj[i].push_back(j);
    }

  if (triple > 0) {
    if (n != 2 || triple != 1) throw error("identify_components: bad G2-like diagram");
    // G2 with sigma_1 short: cartan[long][short] = -3.
    int s = d.cartan[0][1] == -3 ? 1 : 0;
    return order_to_component({s, 1 - s}, CartanType(Family::G, 2));
  }

  std::vector<int> deg(n);
  int branch = -1, nbranch = 0;
  for (int i = 0; i < n; ++i) {
    deg[i] = static_cast<int>(adj[i].size());
    if (deg[i] >= 3) { branch = i; ++nbranch; }
    if (deg[i] > 3) throw error("identify_components: node of degree > 3");
  }
  if (nbranch > 1) throw error("identify_components: multiple branch nodes");

  auto path_from = [&](int start, int avoid) {
    std::vector<int> p{start};
    int prev = avoid, cur = start;
    while (true) {
      int nxt = -1;
      for (int x : adj[cur])
        if (x != prev) { nxt = x; break; }
      if (nxt < 0) break;
      p.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    return p;
  };

  if (dbl > 1) throw error("identify_components: more than one double bond");

  if (dbl == 1) {
    if (branch >= 0) throw error("identify_components: branched multiply-laced diagram");
    // Path with one double bond: B, C or F4.
    auto [lng, sht] = dbl_edge;
    bool long_end = deg[lng] == 1, short_end = deg[sht] == 1;
    if (n == 2) {
      // Canonical rank-2 name: B2, ordered long then short.
      return order_to_component({lng, sht}, CartanType(Family::B, 2));
    }
    if (long_end && short_end) throw error("identify_components: bad doubly-laced diagram");
    if (short_end) {
      // B_n: walk to the far (long) end, then list toward the short end.
      auto p = path_from(sht, -1);
      std::reverse(p.begin(), p.end());
      return order_to_component(p, CartanType(Family::B, n));
    }
    if (long_end) {
      auto p = path_from(lng, -1);
      std::reverse(p.begin(), p.end());
      return order_to_component(p, CartanType(Family::C, n));
    }
    // Interior double bond: F4, long pair first.
    if (n != 4) throw error("identify_components: interior double bond outside F4");
    auto p = path_from(lng, sht);  // lng, then the far long end
    std::reverse(p.begin(), p.end());
    auto q = path_from(sht, lng);
    p.insert(p.end(), q.begin(), q.end());
    return order_to_component(p, CartanType(Family::F, 4));
  }

  // Simply laced.
  if (branch < 0) {
    // Path -> A_n; orient deterministically by smaller first ambient index.
    int e1 = -1, e2 = -1;
    for (int i = 0; i < n; ++i)
      if (deg[i] == 1) (e1 < 0 ? e1 : e2) = i;
    auto p1 = path_from(e1, -1);
    auto p2 = path_from(e2, -1);
    return order_to_component(d.roots[p1.front()] <= d.roots[p2.front()] ? p1 : p2,
                              CartanType(Family::A, n));
  }

  std::vector<std::vector<int>> arms;
  for (int x : adj[branch]) {
    auto p = path_from(x, branch);
    arms.push_back(p);
  }
  std::sort(arms.begin(), arms.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return d.roots[a.front()] < d.roots[b.front()];
  });
  auto a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
  if (a0 == 1 && a1 == 1) {
    // D_n: long arm from its far end, then branch, then the two tips.
    std::vector<int> order(arms[2].rbegin(), arms[2].rend());
    order.push_back(branch);
    int t1 = arms[0][0], t2 = arms[1][0];
    if (d.roots[t1] > d.roots[t2]) std::swap(t1, t2);
    order.push_back(t1);
    order.push_back(t2);
    return order_to_component(order, CartanType(Family::D, n));
  }
  if (a0 == 1 && a1 == 2 && (a2 >= 2 && a2 <= 4)) {
    // E_n: sigma_2 = short arm tip, sigma_4 = branch, chain 1,3 on the
    // length-2 arm, 5.. on the long arm.
    std::vector<int> order;
    order.push_back(arms[1][1]);  // sigma_1
    order.push_back(arms[0][0]);  // sigma_2
    order.push_back(arms[1][0]);  // sigma_3
    order.push_back(branch);      // sigma_4
    for (int x : arms[2]) order.push_back(x);
    return order_to_component(order, CartanType(Family::E, n));
  }
  throw error("identify_components: diagram matches no finite type");
}

}  // namespace

std::vector<BaseComponent> identify_components(const RootSystem& rs,
                                               const std::vector<int>& base_root_indices) {
  int n = static_cast<int>(base_root_indices.size());
  std::vector<std::vector<int>> cart(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    const auto& bi = rs.root(base_root_indices[i]);
    for (int j = 0; j < n; ++j) {
      const auto& bj = rs.root(base_root_indices[j]);
      long long norm = rs.inner(bj, bj);
      long long v = 2 * rs.inner(bi, bj);
      if (v % norm != 0) throw error("identify_components: non-integral Cartan pairing");
      cart[i][j] = static_cast<int>(v / norm);
      if (i != j && cart[i][j] > 0)
        throw error("identify_components: base roots with positive pairing");
    }
  }
  // Connected components.
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = nc;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && cart[x][j] != 0) {
          comp[j] = nc;
          stack.push_back(j);
        }
    }
    ++nc;
  }
  std::vector<BaseComponent> out;
  for (int c = 0; c < nc; ++c) {
    Diagram d;
    std::vector<int> local;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) local.push_back(i);
    for (int i : local) d.roots.push_back(base_root_indices[i]);
    int m = static_cast<int>(local.size());
    d.cartan.assign(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) d.cartan[i][j] = cart[local[i]][local[j]];
    out.push_back(classify_component(d));
  }
  // Deterministic component order: by smallest ambient base-root index.
  std::sort(out.begin(), out.end(), [](const BaseComponent& a, const BaseComponent& b) {
    return a.base_roots.front() < b.base_roots.front();
  });
  return out;
}

std::vector<CartanType> identify_type(const RootSystem& rs, const RootSet& levi) {
  auto base = subsystem_base(rs, levi);
  std::vector<CartanType> out;
  for (const auto& c : identify_components(rs, base)) out.push_back(c.type);
  return out;
}

}  // namespace hodge
