#include "hodge/real_forms.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hodge {

RootParity split_roots(const RootSystem& rs, const GradingElement& e) {
  RootParity out;
  for (int r = 0; r < rs.num_roots(); ++r) {
    Rational v = rs.pair(rs.root(r), e);
    if (!v.is_integer())
      throw error("split_roots: non-integral pairing " + v.str() + " for root " +
                  rs.pretty_root(rs.root(r)));
    if (v.as_integer() % 2 == 0) out.compact.set(r);
    else out.noncompact.set(r);
  }
  return out;
}

CompactSimpleSystem compact_simple_system(const RootSystem& rs, const WeylGroup& w,
                                          const GradingElement& e) {
  RootParity parity = split_roots(rs, e);
  std::vector<int> base = subsystem_base(rs, parity.compact);
  std::set<int> base_set(base.begin(), base.end());

  CompactSimpleSystem out;
  out.s_k = base;
  if (parity.noncompact.none()) return out;  // compact form; no alpha'

  int r = rs.rank();
  int minus_highest = rs.negative(rs.highest_root());
  for (std::size_t wi = 0; wi < w.size(); ++wi) {
    std::set<int> ws;
    for (int i = 0; i < r; ++i) ws.insert(w.apply_root(wi, rs.simple_root(i)));
    int neg_high = w.apply_root(wi, minus_highest);
    bool ok = true;
    for (int b : base)
      if (!ws.count(b) && b != neg_high) { ok = false; break; }
    if (!ok) continue;
    std::vector<int> rest;
    for (int x : ws)
      if (!base_set.count(x)) rest.push_back(x);
    if (rest.size() != 1) continue;
    out.alpha_prime = rs.root(rest[0]);
    out.witness_word = w.word(wi);
    return out;
  }
  throw error("compact_simple_system: no Weyl image of the extended simple system contains the base");
}

namespace {

struct KShape {
  std::vector<CartanType> types;  // canonical, sorted
  int center = 0;

  bool operator==(const KShape& o) const { return types == o.types && center == o.center; }
};

KShape sorted_shape(std::vector<CartanType> t, int center) {
  std::sort(t.begin(), t.end());
  return KShape{std::move(t), center};
}

// Compact factors of the classical real forms, expressed in canonical
// component types (D2 -> A1 A1, D3 -> A3, C1/B1 -> A1, C2 -> B2).
void add_so_factor(int m, std::vector<CartanType>& types, int& center) {
  // so(m)
  if (m <= 1) return;
  if (m == 2) { ++center; return; }
  if (m == 3) { types.emplace_back(Family::A, 1); return; }
  if (m == 4) {
    types.emplace_back(Family::A, 1);
    types.emplace_back(Family::A, 1);
    return;
  }
  if (m == 5) { types.emplace_back(Family::B, 2); return; }
  if (m == 6) { types.emplace_back(Family::A, 3); return; }
  if (m % 2 == 1) types.emplace_back(Family::B, (m - 1) / 2);
  else types.emplace_back(Family::D, m / 2);
}

void add_sp_factor(int m, std::vector<CartanType>& types) {
  // sp(m) compact
  if (m == 0) return;
  if (m == 1) { types.emplace_back(Family::A, 1); return; }
  if (m == 2) { types.emplace_back(Family::B, 2); return; }
  types.emplace_back(Family::C, m);
}

void add_su_factor(int m, std::vector<CartanType>& types) {
  if (m >= 2) types.emplace_back(Family::A, m - 1);
}

struct Candidate {
  std::string name;
  std::string alt;
  KShape shape;
};

std::vector<Candidate> candidates_for(CartanType t) {
  std::vector<Candidate> out;
  int n = t.rank;
  switch (t.family) {
    case Family::A:
      for (int a = (n + 2) / 2; a <= n; ++a) {
        int b = n + 1 - a;
        std::vector<CartanType> types;
        add_su_factor(a, types);
        add_su_factor(b, types);
        out.push_back({"su(" + std::to_string(a) + "," + std::to_string(b) + ")", "",
                       sorted_shape(types, 1)});
      }
      break;
    case Family::B:
      for (int a = 1; a <= n; ++a) {
        int b = 2 * n + 1 - 2 * a;
        std::vector<CartanType> types;
        int center = 0;
        add_so_factor(2 * a, types, center);
        add_so_factor(b, types, center);
        out.push_back({"so(" + std::to_string(2 * a) + "," + std::to_string(b) + ")", "",
                       sorted_shape(types, center)});
      }
      break;
    case Family::C: {
      std::vector<CartanType> types;
      add_su_factor(n, types);
      out.push_back({"sp(" + std::to_string(n) + ",R)", "", sorted_shape(types, 1)});
      for (int a = n - 1; a >= (n + 1) / 2; --a) {
        int b = n - a;
        std::vector<CartanType> t2;
        add_sp_factor(a, t2);
        add_sp_factor(b, t2);
        out.push_back({"sp(" + std::to_string(a) + "," + std::to_string(b) + ")", "",
                       sorted_shape(t2, 0)});
      }
      break;
    }
    case Family::D:
      for (int a = 1; a < n; ++a) {
        int b = 2 * n - 2 * a;
        if (2 * a < b) continue;  // report the larger even part first
        std::vector<CartanType> types;
        int center = 0;
        add_so_factor(2 * a, types, center);
        add_so_factor(b, types, center);
        out.push_back({"so(" + std::to_string(2 * a) + "," + std::to_string(b) + ")", "",
                       sorted_shape(types, center)});
      }
      {
        std::vector<CartanType> types;
        add_su_factor(n, types);
        out.push_back({"so*(" + std::to_string(2 * n) + ")", "", sorted_shape(types, 1)});
      }
      break;
    case Family::G: {
      std::vector<CartanType> types{CartanType(Family::A, 1), CartanType(Family::A, 1)};
      out.push_back({"G2(2)", "G", sorted_shape(types, 0)});
      break;
    }
    case Family::F: {
      std::vector<CartanType> fi{CartanType(Family::C, 3), CartanType(Family::A, 1)};
      out.push_back({"F4(4)", "FI", sorted_shape(fi, 0)});
      std::vector<CartanType> fii{CartanType(Family::B, 4)};
      out.push_back({"F4(-20)", "FII", sorted_shape(fii, 0)});
      break;
    }
    case Family::E:
      if (n == 6) {
        out.push_back({"E6(2)", "EII",
                       sorted_shape({CartanType(Family::A, 5), CartanType(Family::A, 1)}, 0)});
        out.push_back({"E6(-14)", "EIII", sorted_shape({CartanType(Family::D, 5)}, 1)});
      } else if (n == 7) {
        out.push_back({"E7(7)", "EV", sorted_shape({CartanType(Family::A, 7)}, 0)});
        out.push_back({"E7(-5)", "EVI",
                       sorted_shape({CartanType(Family::D, 6), CartanType(Family::A, 1)}, 0)});
        out.push_back({"E7(-25)", "EVII", sorted_shape({CartanType(Family::E, 6)}, 1)});
      } else {
        out.push_back({"E8(8)", "EVIII", sorted_shape({CartanType(Family::D, 8)}, 0)});
        out.push_back({"E8(-24)", "EIX",
                       sorted_shape({CartanType(Family::E, 7), CartanType(Family::A, 1)}, 0)});
      }
      break;
  }
  return out;
}

}  // namespace

RealFormLabel identify_real_form(const RootSystem& rs, const GradingElement& e) {
  RootParity parity = split_roots(rs, e);
  auto base = subsystem_base(rs, parity.compact);
  auto comps = identify_components(rs, base);

  RealFormLabel out;
  for (const auto& c : comps) out.k_types.push_back(c.type);
  std::sort(out.k_types.begin(), out.k_types.end());
  int base_rank = static_cast<int>(base.size());
  out.k_center_dim = rs.rank() - base_rank;
  out.dim_k = rs.rank() + static_cast<long long>(parity.compact.count());
  out.signature = rs.type().dim() - 2 * out.dim_k;

  KShape shape{out.k_types, out.k_center_dim};
  for (const auto& cand : candidates_for(rs.type())) {
    if (cand.shape == shape) {
      out.name = cand.name;
      out.alt = cand.alt;
      return out;
    }
  }
  throw error("identify_real_form: compact subalgebra of " + rs.type().str() +
              " matches no table entry");
}

bool in_borel_ht_list(const RealFormLabel& label) {
  if (!label.alt.empty())
    return label.alt == "EII" || label.alt == "EV" || label.alt == "EVIII" ||
           label.alt == "FI" || label.alt == "G";
  const std::string& s = label.name;
  auto args = [&](std::size_t open) {
    auto comma = s.find(',', open);
    auto close = s.find(')', open);
    long long x = std::stoll(s.substr(open + 1, comma - open - 1));
    std::string second = s.substr(comma + 1, close - comma - 1);
    return std::make_pair(x, second);
  };
  if (s.rfind("su(", 0) == 0) {
    auto [a, b] = args(2);
    return std::llabs(a - std::stoll(b)) <= 1;
  }
  if (s.rfind("sp(", 0) == 0) {
    auto [a, b] = args(2);
    (void)a;
    return b == "R";
  }
  if (s.rfind("so(", 0) == 0) {
    auto [a, bs] = args(2);
    long long b = std::stoll(bs);
    long long diff = std::llabs(a - b);
    if (diff == 1) return true;                                    // so(2p+-1, 2p)
    if (a % 2 == 0 && b % 2 == 0 && (diff == 0 || diff == 2)) return true;
    return false;
  }
  return false;
}

CompactCharVector compact_characteristic_vector(const RootSystem& rs, const WeylGroup& w,
                                                const GradingElement& e,
                                                const GradingElement& z) {
  auto css = compact_simple_system(rs, w, e);
  std::vector<Rational> zi = z.s;
  // Reduce to the W(K)-dominant chamber: reflect in the first compact simple
  // root pairing negatively; standard height argument terminates this.
  bool moved = true;
  while (moved) {
    moved = false;
    for (int b : css.s_k) {
      Rational v = rs.pair(rs.root(b), GradingElement(zi));
      if (v.sign() < 0) {
        zi = rs.reflect_h_in_root(rs.root(b), zi);
        moved = true;
        break;
      }
    }
  }
  CompactCharVector out;
  GradingElement zred{zi};
  for (int b : css.s_k) out.gamma.push_back(rs.pair(rs.root(b), zred).as_integer());
  if (!css.alpha_prime.empty())
    out.alpha_prime_value = rs.pair(css.alpha_prime, zred).as_integer();
  return out;
}

}  // namespace hodge
