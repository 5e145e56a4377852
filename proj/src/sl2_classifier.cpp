#include "hodge/sl2_classifier.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "hodge/linalg.hpp"

namespace hodge {

void MTDomainSpec::validate() const {
  type.validate();
  if (static_cast<int>(grading.size()) != type.rank)
    throw parse_error("grading has " + std::to_string(grading.size()) + " entries for rank " +
                      std::to_string(type.rank));
  int ones = 0;
  for (int c : grading) {
    if (c != 0 && c != 1) throw parse_error("grading coefficients must be 0 or 1");
    ones += c;
  }
  if (ones == 0) throw parse_error("grading must have at least one nonzero coefficient");
}

Domain Domain::build(const MTDomainSpec& s, std::size_t weyl_cap) {
  s.validate();
  Domain d;
  d.spec = s;
  d.rs = std::make_shared<const RootSystem>(RootSystem::build(s.type));
  d.weyl = std::make_shared<const WeylGroup>(WeylGroup::enumerate(*d.rs, weyl_cap));
  d.e = s.grading_element();
  return d;
}

CentralSplit central_split(const RootSystem& rs, const GradingElement& e,
                           const LeviSubsystem& levi) {
  auto base = subsystem_base(rs, levi.roots);
  if (base.empty()) throw error("central_split: empty Levi subsystem");
  int k = static_cast<int>(base.size());
  std::vector<std::vector<Rational>> coroots;
  coroots.reserve(k);
  for (int b : base) coroots.push_back(rs.coroot_s(rs.root(b)));
  QMatrix m(k, QVector(k));
  QVector rhs(k);
  for (int i = 0; i < k; ++i) {
    rhs[i] = rs.pair(rs.root(base[i]), e);
    for (int j = 0; j < k; ++j)
      m[i][j] = rs.pair(rs.root(base[i]), GradingElement(coroots[j]));
  }
  auto c = q_solve(m, rhs);
  if (!c) throw error("central_split: singular base Cartan matrix");
  std::vector<Rational> z(rs.rank(), Rational(0));
  for (int j = 0; j < k; ++j)
    for (int t = 0; t < rs.rank(); ++t) z[t] += Rational(2) * (*c)[j] * coroots[j][t];
  CentralSplit out;
  out.z = GradingElement(z);
  std::vector<Rational> zeta(rs.rank());
  for (int t = 0; t < rs.rank(); ++t) zeta[t] = e.s[t] - z[t] / Rational(2);
  out.zeta = GradingElement(zeta);
  return out;
}

bool is_distinguished(const RootSystem& rs, const GradingElement& e,
                      const LeviSubsystem& levi) {
  if (levi.roots.none()) return true;  // vacuous; classify excludes it by default
  auto base = subsystem_base(rs, levi.roots);
  long long zero = 0, one = 0;
  for (int r = 0; r < rs.num_roots(); ++r) {
    if (!levi.roots[r]) continue;
    Rational v = rs.pair(rs.root(r), e);
    if (v.is_zero()) ++zero;
    else if (v == Rational(1)) ++one;
  }
  return static_cast<long long>(base.size()) + zero == one;
}

long long orbit_codim(const RootSystem& rs, const GradingElement& e, const GradingElement& z) {
  long long out = 0;
  for (int r = 0; r < rs.num_roots(); ++r) {
    Rational p = rs.pair(rs.root(r), e);
    if (p < Rational(1)) continue;
    Rational q = rs.pair(rs.root(r), z) - p;
    if (q >= Rational(1)) ++out;
  }
  return out;
}

DeligneDiamond deligne_diamond(const RootSystem& rs, const GradingElement& e,
                               const GradingElement& z, const WeightSystem& ws, int n) {
  std::map<std::pair<int, int>, long long> cells;
  for (const auto& w : ws.entries) {
    Rational p = rs.pair_weight(w.sigma, e) + Rational(n, 2);
    Rational pq = rs.pair_weight(w.sigma, z) + Rational(n);
    if (!p.is_integer() || !pq.is_integer())
      throw parse_error("deligne_diamond: non-integral placement for a weight; inconsistent (rep, n)");
    long long pi = p.as_integer();
    long long qi = pq.as_integer() - pi;
    cells[{static_cast<int>(pi), static_cast<int>(qi)}] += w.mult;
  }
  DeligneDiamond out;
  out.n = n;
  out.cells.assign(cells.begin(), cells.end());
  return out;
}

namespace {

const RootSystem& component_system(CartanType t) {
  static std::map<CartanType, std::unique_ptr<RootSystem>> cache;
  auto it = cache.find(t);
  if (it == cache.end())
    it = cache.emplace(t, std::make_unique<RootSystem>(RootSystem::build(t))).first;
  return *it->second;
}

std::string component_label(const RootSystem& ambient, const GradingElement& e,
                            const BaseComponent& comp) {
  const RootSystem& sub = component_system(comp.type);
  std::vector<Rational> es;
  es.reserve(comp.base_roots.size());
  for (int b : comp.base_roots) {
    Rational v = ambient.pair(ambient.root(b), e);
    if (v != Rational(0) && v != Rational(1))
      throw error("levi_real_form_labels: base root with grading value " + v.str());
    es.push_back(v);
  }
  RealFormLabel label = identify_real_form(sub, GradingElement(es));
  // Rank-2 double-bond components are named in the ambient family's style:
  // sp(2,R)/sp(1,1) inside symplectic systems, so(...) otherwise.
  if (comp.type == CartanType(Family::B, 2) && ambient.type().family == Family::C) {
    if (label.name == "so(2,3)") return "sp(2,R)";
    if (label.name == "so(4,1)") return "sp(1,1)";
  }
  return label.name;
}

}  // namespace

std::vector<std::string> levi_real_form_labels(const RootSystem& rs, const GradingElement& e,
                                               const LeviSubsystem& levi) {
  auto base = subsystem_base(rs, levi.roots);
  auto comps = identify_components(rs, base);
  std::vector<std::pair<int, std::string>> labeled;
  for (const auto& c : comps) labeled.emplace_back(c.type.rank, component_label(rs, e, c));
  std::sort(labeled.begin(), labeled.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<std::string> out;
  out.reserve(labeled.size());
  for (auto& [_, name] : labeled) out.push_back(std::move(name));
  return out;
}

std::vector<SL2Class> classify(const Domain& d, const ClassifyOptions& opts) {
  const RootSystem& rs = *d.rs;
  const WeylGroup& w = *d.weyl;
  const GradingElement& e = d.e;

  std::vector<int> w0_gens;
  for (int i = 0; i < rs.rank(); ++i)
    if (e.s[i].is_zero()) w0_gens.push_back(i);
  WeylGroup w0 = WeylGroup::subgroup(rs, w0_gens, opts.weyl_cap);

  std::unordered_set<RootSet> canonical;
  for (const auto& levi : enumerate_levis(rs, w)) {
    if (levi.roots.none() && !opts.include_trivial) continue;
    if (!is_distinguished(rs, e, levi)) continue;
    RootSet best = levi.roots;
    for (std::size_t wi = 0; wi < w0.size(); ++wi) {
      RootSet img = w0.apply(wi, levi.roots);
      if (rootset_less(img, best)) best = img;
    }
    canonical.insert(best);
  }

  std::vector<SL2Class> out;
  for (const auto& roots : canonical) {
    SL2Class cls;
    cls.levi.roots = roots;
    if (roots.none()) {
      cls.z = GradingElement::zero(rs.rank());
      cls.zeta = e;
      cls.codim = 0;
      cls.hodge_tate = cls.zeta.is_zero();
      out.push_back(std::move(cls));
      continue;
    }
    cls.base = subsystem_base(rs, roots);
    cls.components = identify_components(rs, cls.base);
    auto split = central_split(rs, e, cls.levi);
    if (!split.z.is_integral())
      throw error("classify: neutral element fails to be a grading element");
    cls.z = split.z;
    cls.zeta = split.zeta;
    cls.codim = orbit_codim(rs, e, cls.z);
    cls.levi_real_forms = levi_real_form_labels(rs, e, cls.levi);
    cls.hodge_tate = cls.zeta.is_zero();
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const SL2Class& a, const SL2Class& b) {
    if (a.codim != b.codim) return a.codim < b.codim;
    return rootset_less(a.levi.roots, b.levi.roots);
  });
  return out;
}

HodgeTateVerdict admits_hodge_tate(const Domain& d, const ClassifyOptions& opts) {
  HodgeTateVerdict v;
  for (auto& cls : classify(d, opts)) {
    if (cls.hodge_tate && cls.levi.roots.any()) {
      v.admits = true;
      v.witness = std::move(cls);
      break;
    }
  }
  return v;
}

int codim1_count(const MTDomainSpec& spec) {
  spec.validate();
  int out = 0;
  for (int c : spec.grading) out += c;
  return out;
}

bool period_domain_ht_check(const HodgeNumbers& h) {
  int m = h.n / 2;
  for (int k = 1; k <= m; ++k)
    if (h.at(h.n - k + 1) > h.at(h.n - k)) return false;
  return true;
}

}  // namespace hodge
