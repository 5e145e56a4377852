#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hodge/real_forms.hpp"
#include "hodge/rep_weights.hpp"
#include "hodge/root_system.hpp"

namespace hodge {

/// Mumford-Tate domain datum: a simple type and the 0/1 grading coefficients
/// of E = sum over I of S^i. Bracket-generating, so at least one coefficient
/// is nonzero and all lie in {0,1}.
struct MTDomainSpec {
  CartanType type;
  std::vector<int> grading;

  void validate() const;
  GradingElement grading_element() const {
    return GradingElement::from_ints(grading);
  }
};

/// Root system plus enumerated Weyl group for one domain. The root system is
/// heap-held so the group's back-pointer stays valid across moves.
struct Domain {
  std::shared_ptr<const RootSystem> rs;
  std::shared_ptr<const WeylGroup> weyl;
  MTDomainSpec spec;
  GradingElement e;

  static Domain build(const MTDomainSpec& s, std::size_t weyl_cap = 1000000);
};

/// One W0-conjugacy class of the classification.
struct SL2Class {
  LeviSubsystem levi;                    // canonical W0-representative
  std::vector<int> base;                 // simple system of the Levi, root indices
  std::vector<BaseComponent> components;
  GradingElement z;                      // integral; alpha(z) = 2 alpha(e) on Delta(l)
  GradingElement zeta;                   // e - z/2, central part
  long long codim = 0;
  std::vector<std::string> levi_real_forms;  // one per component, canonical order
  bool hodge_tate = false;               // zeta == 0
};

struct ClassifyOptions {
  std::size_t weyl_cap = 1000000;
  bool include_trivial = false;
};

/// Z = 2 pi^ss(E) and the central remainder zeta, solved exactly from the
/// Levi's base coweights.
struct CentralSplit {
  GradingElement z;
  GradingElement zeta;
};
CentralSplit central_split(const RootSystem& rs, const GradingElement& e,
                           const LeviSubsystem& levi);

/// Dimension-count test for 2 pi^ss(E) distinguished in l^ss:
/// rank l^ss + #{a in Delta(l) : a(E)=0} == #{a in Delta(l) : a(E)=1}.
bool is_distinguished(const RootSystem& rs, const GradingElement& e,
                      const LeviSubsystem& levi);

/// The classification: distinguished Levi subsystems up to W0, with Z, zeta,
/// codimension, component real forms and the Hodge-Tate flag. Rows sorted by
/// codimension then canonical Levi.
std::vector<SL2Class> classify(const Domain& d, const ClassifyOptions& opts = {});

/// Codimension of the polarized boundary orbit:
/// #{a in Delta : a(E) >= 1 and a(Z) - a(E) >= 1}.
long long orbit_codim(const RootSystem& rs, const GradingElement& e, const GradingElement& z);

/// Deligne bigrading multiplicities of a weight-n representation:
/// cells(p,q) = sum of mult(mu) over mu(E) = p - n/2, mu(Z) = p + q - n.
struct DeligneDiamond {
  int n = 0;
  std::vector<std::pair<std::pair<int, int>, long long>> cells;  // sorted by (p,q)

  long long total() const {
    long long t = 0;
    for (const auto& c : cells) t += c.second;
    return t;
  }
  long long at(int p, int q) const {
    for (const auto& c : cells)
      if (c.first.first == p && c.first.second == q) return c.second;
    return 0;
  }
  friend bool operator==(const DeligneDiamond& a, const DeligneDiamond& b) {
    return a.n == b.n && a.cells == b.cells;
  }
};
DeligneDiamond deligne_diamond(const RootSystem& rs, const GradingElement& e,
                               const GradingElement& z, const WeightSystem& ws, int n);

/// Hodge-Tate existence: true iff the classification contains a class with
/// zeta = 0; returns that class as witness.
struct HodgeTateVerdict {
  bool admits = false;
  std::optional<SL2Class> witness;
};
HodgeTateVerdict admits_hodge_tate(const Domain& d, const ClassifyOptions& opts = {});

/// Number of codimension-one boundary orbits: |I(p)|.
int codim1_count(const MTDomainSpec& spec);

/// Period-domain Hodge-Tate test on weight-n Hodge numbers:
/// h^{n,0} <= h^{n-1,1} <= ... <= h^{n-m,m}, n in {2m, 2m+1}.
bool period_domain_ht_check(const HodgeNumbers& h);

/// Real-form label per simple component of the Levi, via the component's own
/// root system with the induced grading functional.
std::vector<std::string> levi_real_form_labels(const RootSystem& rs, const GradingElement& e,
                                               const LeviSubsystem& levi);

}  // namespace hodge
