#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodge/root_system.hpp"

namespace hodge {

/// Partition of the roots by parity of alpha(E): the even roots span the
/// complexified maximal compact subalgebra.
struct RootParity {
  RootSet compact;
  RootSet noncompact;
};

RootParity split_roots(const RootSystem& rs, const GradingElement& e);

/// Simple system for the compact subsystem together with the noncompact
/// simple root alpha', realized inside a Weyl image of the extended simple
/// system S u {-highest}. The witness word records that image.
struct CompactSimpleSystem {
  std::vector<int> s_k;      // root indices, sorted
  RootCoords alpha_prime;    // empty if every root is compact
  std::vector<uint8_t> witness_word;
};

CompactSimpleSystem compact_simple_system(const RootSystem& rs, const WeylGroup& w,
                                          const GradingElement& e);

/// Identified real form of the grading-element polarization: name plus the
/// compact subalgebra data used to match it against the classical and
/// exceptional tables.
struct RealFormLabel {
  std::string name;                  // "su(2,1)", "sp(4,R)", "so(2,7)", "F4(4)"
  std::string alt;                   // letter name for exceptional forms ("FI")
  std::vector<CartanType> k_types;   // canonicalized component types of k
  int k_center_dim = 0;
  long long dim_k = 0;
  long long signature = 0;           // dim k_perp - dim k

  std::string display() const { return alt.empty() ? name : alt + " = " + name; }
};

RealFormLabel identify_real_form(const RootSystem& rs, const GradingElement& e);

/// Real forms admitting a full-flag Hodge-Tate degeneration.
bool in_borel_ht_list(const RealFormLabel& label);

/// Complete invariant of a real nilpotent orbit: the pairings of Z against
/// the compact simple roots (after reduction to the W(K)-dominant chamber)
/// and against the noncompact simple root.
struct CompactCharVector {
  std::vector<long long> gamma;
  long long alpha_prime_value = 0;
};

CompactCharVector compact_characteristic_vector(const RootSystem& rs, const WeylGroup& w,
                                                const GradingElement& e,
                                                const GradingElement& z);

}  // namespace hodge
