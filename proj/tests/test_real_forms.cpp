#include <ostream>

#include "doctest.h"

#include <random>

#include "hodge/real_forms.hpp"

using namespace hodge;

namespace {

struct Ctx {
  RootSystem rs;
  WeylGroup w;
  explicit Ctx(const std::string& t)
      : rs(RootSystem::build(CartanType::parse(t))), w(WeylGroup::enumerate(rs)) {}
};

long long expected_dim_k(const RealFormLabel& l) {
  const std::string& s = l.name;
  auto two = [&](std::size_t open) {
    auto comma = s.find(',', open);
    auto close = s.find(')', open);
    return std::make_pair(std::stoll(s.substr(open + 1, comma - open - 1)),
                          s.substr(comma + 1, close - comma - 1));
  };
  if (!l.alt.empty()) {
    if (l.alt == "G") return 6;
    if (l.alt == "FI") return 24;
    if (l.alt == "FII") return 36;
    if (l.alt == "EII") return 38;
    if (l.alt == "EIII") return 46;
    if (l.alt == "EV") return 63;
    if (l.alt == "EVI") return 69;
    if (l.alt == "EVII") return 79;
    if (l.alt == "EVIII") return 120;
    if (l.alt == "EIX") return 136;
  }
  if (s.rfind("su(", 0) == 0) {
    auto [a, bs] = two(2);
    long long b = std::stoll(bs);
    return a * a + b * b - 1;
  }
  if (s.rfind("sp(", 0) == 0) {
    auto [a, bs] = two(2);
    if (bs == "R") return a * a;
    long long b = std::stoll(bs);
    return a * (2 * a + 1) + b * (2 * b + 1);
  }
  if (s.rfind("so*(", 0) == 0) {
    long long n = std::stoll(s.substr(4, s.size() - 5)) / 2;
    return n * n;
  }
  if (s.rfind("so(", 0) == 0) {
    auto [a, bs] = two(2);
    long long b = std::stoll(bs);
    return a * (a - 1) / 2 + b * (b - 1) / 2;
  }
  return -1;
}

}  // namespace

TEST_CASE("split_roots parity partitions") {
  SUBCASE("B2, E = S^1") {
    Ctx c("B2");
    auto p = split_roots(c.rs, GradingElement::from_ints({1, 0}));
    CHECK(p.compact.count() == 2);
    CHECK(p.noncompact.count() == 6);
  }
  SUBCASE("E = 0 makes everything compact") {
    Ctx c("A3");
    auto p = split_roots(c.rs, GradingElement::zero(3));
    CHECK(p.compact.count() == static_cast<std::size_t>(c.rs.num_roots()));
    CHECK(p.noncompact.none());
  }
  SUBCASE("G2 Borel grading has compact subsystem A1 x A1") {
    Ctx c("G2");
    auto p = split_roots(c.rs, GradingElement::from_ints({1, 1}));
    auto types = identify_type(c.rs, p.compact);
    REQUIRE(types.size() == 2);
    CHECK(types[0] == CartanType(Family::A, 1));
    CHECK(types[1] == CartanType(Family::A, 1));
  }
  SUBCASE("non-integral pairing is an error") {
    Ctx c("A2");
    CHECK_THROWS_AS(split_roots(c.rs, GradingElement({Rational(1, 2), Rational(0)})), error);
  }
}

TEST_CASE("compact root set is closed under addition") {
  for (const auto& item : {std::pair<std::string, std::vector<int>>{"B2", {1, 0}},
                           {"C3", {1, 0, 1}},
                           {"G2", {1, 1}},
                           {"D4", {0, 1, 0, 0}},
                           {"F4", {1, 0, 0, 0}}}) {
    Ctx c(item.first);
    auto p = split_roots(c.rs, GradingElement::from_ints(item.second));
    for (int a = 0; a < c.rs.num_roots(); ++a) {
      if (!p.compact[a]) continue;
      for (int b = 0; b < c.rs.num_roots(); ++b) {
        if (!p.compact[b]) continue;
        RootCoords sum = c.rs.root(a);
        for (int i = 0; i < c.rs.rank(); ++i) sum[i] += c.rs.root(b)[i];
        int si = c.rs.root_index(sum);
        if (si >= 0) CHECK(p.compact[si]);
      }
    }
  }
}

TEST_CASE("compact simple systems") {
  SUBCASE("A2 adjoint domain: S_k = {s1+s2}, alpha' = -s1") {
    Ctx c("A2");
    auto css = compact_simple_system(c.rs, c.w, GradingElement::from_ints({1, 1}));
    REQUIRE(css.s_k.size() == 1);
    CHECK(c.rs.root(css.s_k[0]) == RootCoords{1, 1});
    CHECK(css.alpha_prime == RootCoords{-1, 0});
  }
  SUBCASE("su(2,2) pattern: A3 with E = S^2") {
    Ctx c("A3");
    auto css = compact_simple_system(c.rs, c.w, GradingElement::from_ints({0, 1, 0}));
    REQUIRE(css.s_k.size() == 2);
    CHECK(c.rs.root(css.s_k[0]) == RootCoords{1, 0, 0});
    CHECK(c.rs.root(css.s_k[1]) == RootCoords{0, 0, 1});
    CHECK(css.alpha_prime == RootCoords{0, 1, 0});
  }
  SUBCASE("B2 with E = S^1 is Hermitian: S_k inside S") {
    Ctx c("B2");
    auto css = compact_simple_system(c.rs, c.w, GradingElement::from_ints({1, 0}));
    REQUIRE(css.s_k.size() == 1);
    CHECK(c.rs.root(css.s_k[0]) == RootCoords{0, 1});
    CHECK(css.alpha_prime == RootCoords{1, 0});
    CHECK(css.witness_word.empty());  // no Weyl adjustment needed
  }
}

TEST_CASE("identify_real_form against the classical tables") {
  auto name = [](const std::string& t, std::vector<int> g) {
    Ctx c(t);
    return identify_real_form(c.rs, GradingElement::from_ints(g)).name;
  };
  CHECK(name("C4", {0, 1, 0, 0}) == "sp(2,2)");
  CHECK(name("C4", {0, 0, 0, 1}) == "sp(4,R)");
  CHECK(name("C4", {1, 1, 1, 1}) == "sp(4,R)");
  CHECK(name("B4", {1, 0, 0, 0}) == "so(2,7)");
  CHECK(name("B4", {0, 0, 1, 0}) == "so(6,3)");
  CHECK(name("B4", {1, 1, 1, 1}) == "so(4,5)");
  CHECK(name("B2", {1, 0}) == "so(2,3)");
  CHECK(name("B2", {0, 1}) == "so(4,1)");
  CHECK(name("A2", {1, 1}) == "su(2,1)");
  CHECK(name("A3", {0, 1, 0}) == "su(2,2)");
  CHECK(name("D4", {0, 1, 0, 0}) == "so(4,4)");
  CHECK(name("G2", {1, 0}) == "G2(2)");
  CHECK(name("F4", {1, 0, 0, 0}) == "F4(4)");
  CHECK(identify_real_form(RootSystem::build(CartanType::parse("F4")),
                           GradingElement::from_ints({1, 0, 0, 0}))
            .display() == "FI = F4(4)");
}

TEST_CASE("identify_real_form dim k agrees with the matched label") {
  for (const auto& t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3",
                        "D4", "F4", "G2"}) {
    Ctx c(t);
    int r = c.rs.rank();
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
      std::vector<int> g(r, 0);
      for (int i = 0; i < r; ++i)
        if (mask & (1u << i)) g[i] = 1;
      auto label = identify_real_form(c.rs, GradingElement::from_ints(g));
      long long parity_count = split_roots(c.rs, GradingElement::from_ints(g)).compact.count();
      CHECK(label.dim_k == c.rs.rank() + parity_count);
      CHECK(label.dim_k == expected_dim_k(label));
      // Hermitian detection: one-dimensional center iff corank-one span.
      bool hermitian = label.k_center_dim == 1;
      int base_rank = 0;
      for (const auto& kt : label.k_types) base_rank += kt.rank;
      CHECK(hermitian == (base_rank == r - 1));
    }
  }
}

TEST_CASE("compact characteristic vectors of the A2 adjoint domain") {
  Ctx c("A2");
  GradingElement e = GradingElement::from_ints({1, 1});
  SUBCASE("Z = 2S^1 - S^2") {
    auto cv = compact_characteristic_vector(c.rs, c.w, e,
                                            GradingElement::from_ints({2, -1}));
    CHECK(cv.gamma == std::vector<long long>{1});
    CHECK(cv.alpha_prime_value == -2);
  }
  SUBCASE("Z = -S^1 + 2S^2") {
    auto cv = compact_characteristic_vector(c.rs, c.w, e,
                                            GradingElement::from_ints({-1, 2}));
    CHECK(cv.gamma == std::vector<long long>{1});
    CHECK(cv.alpha_prime_value == 1);
  }
  SUBCASE("Z = 0") {
    auto cv = compact_characteristic_vector(c.rs, c.w, e, GradingElement::zero(2));
    CHECK(cv.gamma == std::vector<long long>{0});
    CHECK(cv.alpha_prime_value == 0);
  }
}

TEST_CASE("compact characteristic vector is W(K)-invariant") {
  for (const auto& item : {std::pair<std::string, std::vector<int>>{"A2", {1, 1}},
                           {"B2", {1, 0}},
                           {"C3", {1, 0, 1}}}) {
    Ctx c(item.first);
    GradingElement e = GradingElement::from_ints(item.second);
    auto css = compact_simple_system(c.rs, c.w, e);
    std::mt19937 rng(23);
    std::vector<GradingElement> zs = {GradingElement::from_ints(std::vector<int>(
                                          c.rs.rank(), 2)),
                                      e};
    for (const auto& z : zs) {
      auto ref = compact_characteristic_vector(c.rs, c.w, e, z);
      for (int trial = 0; trial < 10; ++trial) {
        // random word in the compact simple reflections
        std::vector<Rational> xi = z.s;
        int len = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < len; ++k) {
          int b = css.s_k[rng() % css.s_k.size()];
          xi = c.rs.reflect_h_in_root(c.rs.root(b), xi);
        }
        auto got = compact_characteristic_vector(c.rs, c.w, e, GradingElement(xi));
        CHECK(got.gamma == ref.gamma);
        CHECK(got.alpha_prime_value == ref.alpha_prime_value);
      }
    }
  }
}

TEST_CASE("borel Hodge-Tate real-form list membership") {
  auto label = [](const std::string& n, const std::string& alt = "") {
    RealFormLabel l;
    l.name = n;
    l.alt = alt;
    return l;
  };
  CHECK(in_borel_ht_list(label("su(2,2)")));
  CHECK(in_borel_ht_list(label("su(2,1)")));
  CHECK(!in_borel_ht_list(label("su(3,1)")));
  CHECK(in_borel_ht_list(label("sp(3,R)")));
  CHECK(!in_borel_ht_list(label("sp(2,2)")));
  CHECK(in_borel_ht_list(label("so(2,3)")));
  CHECK(in_borel_ht_list(label("so(4,4)")));
  CHECK(in_borel_ht_list(label("so(6,4)")));
  CHECK(!in_borel_ht_list(label("so(2,7)")));
  CHECK(!in_borel_ht_list(label("so*(8)")));
  CHECK(in_borel_ht_list(label("G2(2)", "G")));
  CHECK(in_borel_ht_list(label("F4(4)", "FI")));
  CHECK(!in_borel_ht_list(label("F4(-20)", "FII")));
}
