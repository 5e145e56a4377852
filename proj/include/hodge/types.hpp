#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A requested enumeration exceeds a configured cap (Weyl group order,
/// representation dimension). Carries the true size so callers can report it.
struct size_limit_error : error {
  size_limit_error(const std::string& what, long long size_)
      : error(what), size(size_) {}
  long long size;
};

struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Simple Lie type, families A..G with per-family rank bounds.
struct CartanType {
  Family family;
  int rank;

  CartanType() : family(Family::A), rank(1) {}
  CartanType(Family f, int r) : family(f), rank(r) { validate(); }

  void validate() const {
    bool ok = false;
    switch (family) {
      case Family::A: ok = rank >= 1; break;
      case Family::B: ok = rank >= 2; break;
      case Family::C: ok = rank >= 2; break;
      case Family::D: ok = rank >= 3; break;
      case Family::E: ok = rank >= 6 && rank <= 8; break;
      case Family::F: ok = rank == 4; break;
      case Family::G: ok = rank == 2; break;
    }
    if (!ok)
      throw parse_error("invalid rank " + std::to_string(rank) + " for family " +
                        std::string(1, static_cast<char>(family)));
    if (rank > 15) throw parse_error("rank > 15 unsupported");
  }

  std::string str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
  }

  static CartanType parse(const std::string& s) {
    if (s.size() < 2) throw parse_error("cannot parse Cartan type '" + s + "'");
    char f = s[0];
    if (f < 'A' || f > 'G') throw parse_error("unknown family '" + std::string(1, f) + "'");
    int r = 0;
    try {
      size_t pos = 0;
      r = std::stoi(s.substr(1), &pos);
      if (pos + 1 != s.size()) throw parse_error("trailing characters in type '" + s + "'");
    } catch (const std::logic_error&) {
      throw parse_error("cannot parse rank in type '" + s + "'");
    }
    return CartanType(static_cast<Family>(f), r);
  }

  long long dim() const {
    long long n = rank;
    switch (family) {
      case Family::A: return (n + 1) * (n + 1) - 1;
      case Family::B: return n * (2 * n + 1);
      case Family::C: return n * (2 * n + 1);
      case Family::D: return n * (2 * n - 1);
      case Family::E: return rank == 6 ? 78 : (rank == 7 ? 133 : 248);
      case Family::F: return 52;
      case Family::G: return 14;
    }
    return 0;
  }

  /// Classical |W| formula; independent of any enumeration.
  unsigned long long weyl_order() const {
    auto fact = [](int m) {
      unsigned long long r = 1;
      for (int i = 2; i <= m; ++i) r *= i;
      return r;
    };
    switch (family) {
      case Family::A: return fact(rank + 1);
      case Family::B:
      case Family::C: return (1ULL << rank) * fact(rank);
      case Family::D: return (1ULL << (rank - 1)) * fact(rank);
      case Family::E:
        return rank == 6 ? 51840ULL : (rank == 7 ? 2903040ULL : 696729600ULL);
      case Family::F: return 1152ULL;
      case Family::G: return 12ULL;
    }
    return 0;
  }

  friend bool operator==(const CartanType& a, const CartanType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator!=(const CartanType& a, const CartanType& b) { return !(a == b); }
  friend bool operator<(const CartanType& a, const CartanType& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.rank < b.rank;
  }
};

}  // namespace hodge
