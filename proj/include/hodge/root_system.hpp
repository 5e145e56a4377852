#pragma once

#include <bitset>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hodge/linalg.hpp"
#include "hodge/rational.hpp"
#include "hodge/types.hpp"

namespace hodge {

constexpr std::size_t kMaxRoots = 256;

/// Subset of the root index set {0, ..., |Delta|-1}.
using RootSet = std::bitset<kMaxRoots>;

/// Root in simple-root coordinates (integers, all >= 0 or all <= 0).
using RootCoords = std::vector<int>;

/// Element of the Cartan subalgebra written in the basis {S^1,...,S^r} dual
/// to the simple roots, so s[i] = sigma_i(E). Rational entries; integral on
/// the root lattice iff all entries are integers.
struct GradingElement {
  std::vector<Rational> s;

  GradingElement() = default;
  explicit GradingElement(std::vector<Rational> coords) : s(std::move(coords)) {}
  static GradingElement zero(int rank) { return GradingElement(std::vector<Rational>(rank)); }
  static GradingElement from_ints(const std::vector<int>& v) {
    std::vector<Rational> c(v.begin(), v.end());
    return GradingElement(std::move(c));
  }

  int rank() const { return static_cast<int>(s.size()); }
  bool is_zero() const {
    for (const auto& x : s)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_integral() const {
    for (const auto& x : s)
      if (!x.is_integer()) return false;
    return true;
  }
  std::vector<long long> int_tuple() const {
    std::vector<long long> v;
    v.reserve(s.size());
    for (const auto& x : s) v.push_back(x.as_integer());
    return v;
  }

  friend bool operator==(const GradingElement& a, const GradingElement& b) { return a.s == b.s; }
  friend bool operator!=(const GradingElement& a, const GradingElement& b) { return !(a == b); }
};

/// Root system of a simple type in Bourbaki conventions: full root set
/// generated by closure from the Cartan matrix, exact Cartan data, dual
/// bases, and the standard pairings. Immutable after construction.
class RootSystem {
 public:
  static RootSystem build(CartanType t);

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return n_pos_; }
  bool is_positive(int i) const { return i < n_pos_; }
  const RootCoords& root(int i) const { return roots_[i]; }
  int root_index(const RootCoords& c) const;  // -1 if not a root
  int negative(int i) const { return i < n_pos_ ? i + n_pos_ : i - n_pos_; }
  int simple_root(int i) const { return simple_idx_[i]; }  // index of sigma_{i+1}
  int height(int i) const;
  int highest_root() const { return highest_; }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }  // A_ij = <s_i, s_j^v>
  const QMatrix& cartan_inverse() const { return cartan_inv_; }
  const std::vector<int>& symmetrizers() const { return d_; }  // d_i ~ (s_i,s_i)/2
  long long gram(int i, int j) const { return gram_[i][j]; }   // (s_i, s_j)

  long long inner(const RootCoords& a, const RootCoords& b) const;  // (a, b)
  /// alpha(E) for a root alpha.
  Rational pair(const RootCoords& alpha, const GradingElement& e) const;
  /// mu(E) for a weight mu given in rational simple-root coordinates.
  Rational pair_weight(const QVector& mu_sigma, const GradingElement& e) const;

  /// Coroot beta^v in S-coordinates; entries are always integers.
  std::vector<Rational> coroot_s(const RootCoords& beta) const;

  /// Simple reflection s_i on weights (simple-root coordinates).
  RootCoords reflect_root_simple(int i, RootCoords a) const;
  /// Simple reflection s_i on the Cartan (S-coordinates), in place.
  void reflect_h_simple(int i, std::vector<Rational>& xi) const;
  /// Reflection in an arbitrary root, acting on the Cartan.
  std::vector<Rational> reflect_h_in_root(const RootCoords& beta, std::vector<Rational> xi) const;

  /// Weight conversions. omega_to_sigma may be rational.
  QVector omega_to_sigma(const std::vector<int>& omega) const;
  std::vector<int> root_to_omega(const RootCoords& a) const;

  std::string pretty_root(const RootCoords& a) const;                  // "s1+2s2"
  std::string pretty_h(const std::vector<Rational>& s_coords) const;   // "2S^1-S^2"

 private:
  RootSystem() = default;

  CartanType type_;
  int rank_ = 0;
  int n_pos_ = 0;
  int highest_ = 0;
  std::vector<RootCoords> roots_;  // positives (height then lex), then negatives
  std::vector<int> simple_idx_;
  std::vector<std::vector<int>> cartan_;
  QMatrix cartan_inv_;
  std::vector<int> d_;
  std::vector<std::vector<long long>> gram_;
  std::unordered_map<std::string, int> index_;

  static std::string key(const RootCoords& c);
};

/// Finite Weyl group enumerated breadth-first from the simple reflections.
/// Elements are stored as permutations of the root index set together with a
/// reduced-ish word; element 0 is the identity.
class WeylGroup {
 public:
  /// Full group; throws size_limit_error (naming the true order) if the
  /// classical order exceeds the cap.
  static WeylGroup enumerate(const RootSystem& rs, std::size_t cap = 1000000);
  /// Subgroup generated by the given simple reflections (0-based indices).
  static WeylGroup subgroup(const RootSystem& rs, const std::vector<int>& gens,
                            std::size_t cap = 1000000);

  std::size_t size() const { return perms_.size(); }
  int apply_root(std::size_t w, int root_index) const { return perms_[w][root_index]; }
  RootSet apply(std::size_t w, const RootSet& s) const;
  /// Action on the Cartan via the stored word.
  std::vector<Rational> apply_h(std::size_t w, std::vector<Rational> xi) const;
  const std::vector<uint8_t>& word(std::size_t w) const { return words_[w]; }
  const std::vector<int>& generators() const { return gens_; }

 private:
  WeylGroup(const RootSystem& rs, std::vector<int> gens, std::size_t cap,
            bool check_full_order);

  const RootSystem* rs_;
  std::vector<int> gens_;
  std::vector<std::vector<uint16_t>> perms_;
  std::vector<std::vector<uint8_t>> words_;
};

/// Levi sub-root-system: Delta(l) as a root index set, canonically a sorted
/// bitset. Closed under negation and equal to Delta intersected with the
/// rational span of some W-image of a subset of the simple roots.
struct LeviSubsystem {
  RootSet roots;

  std::size_t count() const { return roots.count(); }
  friend bool operator==(const LeviSubsystem& a, const LeviSubsystem& b) {
    return a.roots == b.roots;
  }
};

/// Deterministic order on root sets: compare membership from index 0 up; the
/// set owning the first differing index sorts first.
bool rootset_less(const RootSet& a, const RootSet& b);

struct RootSetLess {
  bool operator()(const RootSet& a, const RootSet& b) const { return rootset_less(a, b); }
};

/// All Levi subsystems {<wS'> : w in W, S' subset of S}, deduplicated,
/// including the empty subsystem and Delta itself. Sorted by rootset_less.
std::vector<LeviSubsystem> enumerate_levis(const RootSystem& rs, const WeylGroup& w);

/// Standard Levi subsystem for a subset of simple roots: all roots supported
/// on the subset.
RootSet standard_levi(const RootSystem& rs, const std::vector<int>& simple_subset);

/// Simple system for a subsystem closed under negation: the positive
/// elements (ambient positivity) that are not sums of two positive elements
/// of the subsystem. Throws if the input is not a valid subsystem.
std::vector<int> subsystem_base(const RootSystem& rs, const RootSet& sub);

/// One irreducible component of a base, with the base roots reordered to the
/// Bourbaki numbering of the identified type.
struct BaseComponent {
  CartanType type;
  std::vector<int> base_roots;  // ambient root indices, Bourbaki order
};

std::vector<BaseComponent> identify_components(const RootSystem& rs,
                                               const std::vector<int>& base_root_indices);

/// Component types only (one CartanType per connected component).
std::vector<CartanType> identify_type(const RootSystem& rs, const RootSet& levi);

/// Subsystem generated by an arbitrary set of roots: Delta intersected with
/// their rational span.
RootSet span_subsystem(const RootSystem& rs, const std::vector<RootCoords>& gens);

}  // namespace hodge
