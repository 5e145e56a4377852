#include <ostream>

#include "doctest.h"

#include <set>

#include "hodge/nilpotent_orbits.hpp"
#include "oracles.hpp"

using namespace hodge;

TEST_CASE("partition dictionary for sl_4") {
  CHECK(partition_char_vector({3, 1}) == CharVector{2, 0, 2});
  CHECK(partition_char_vector({2, 2}) == CharVector{0, 2, 0});
  CHECK(partition_char_vector({1, 1, 1, 1}) == CharVector{0, 0, 0});
  CHECK(partition_char_vector({4}) == CharVector{2, 2, 2});
  CHECK(partition_char_vector({2, 1, 1}) == CharVector{1, 0, 1});
}

TEST_CASE("characteristic vectors of A3") {
  RootSystem rs = RootSystem::build(CartanType::parse("A3"));
  auto got = enumerate_char_vectors(rs);
  std::set<CharVector> want = {{2, 2, 2}, {2, 0, 2}, {0, 2, 0}, {1, 0, 1}, {0, 0, 0}};
  CHECK(got == want);
}

TEST_CASE("characteristic vectors of A1 and G2") {
  RootSystem a1 = RootSystem::build(CartanType::parse("A1"));
  CHECK(enumerate_char_vectors(a1) == std::set<CharVector>{{0}, {2}});
  RootSystem g2 = RootSystem::build(CartanType::parse("G2"));
  auto got = enumerate_char_vectors(g2);
  CHECK(got.count({2, 2}) == 1);
  CHECK(got.count({0, 2}) == 1);
  CHECK(got.count({2, 0}) == 0);
  CHECK(got.size() == 5);
}

TEST_CASE("Bala-Carter enumeration equals the partition dictionary for A, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    RootSystem rs = RootSystem::build(CartanType(Family::A, n - 1));
    std::set<CharVector> from_partitions;
    for (const auto& p : oracles::partitions(n)) from_partitions.insert(partition_char_vector(p));
    CHECK(enumerate_char_vectors(rs) == from_partitions);
  }
}

TEST_CASE("Bala-Carter enumeration equals the partition dictionary for B and C series") {
  for (int n = 2; n <= 4; ++n) {
    RootSystem b = RootSystem::build(CartanType(Family::B, n));
    CHECK(enumerate_char_vectors(b) == oracles::so_odd_char_vectors(n));
    RootSystem c = RootSystem::build(CartanType(Family::C, n));
    CHECK(enumerate_char_vectors(c) == oracles::sp_char_vectors(n));
  }
}

TEST_CASE("characteristic vector entries are Dynkin-bounded and the principal orbit exists") {
  for (const auto& ts : {"A1", "A2", "A3", "B2", "B3", "C3", "C4", "D4", "F4", "G2"}) {
    RootSystem rs = RootSystem::build(CartanType::parse(ts));
    auto all = enumerate_char_vectors(rs);
    for (const auto& cv : all)
      for (int v : cv) CHECK((v >= 0 && v <= 2));
    CHECK(all.count(CharVector(rs.rank(), 2)) == 1);
    // principal orbit: the full index set is always even Jacobson-Morosov
    std::set<int> full;
    for (int i = 1; i <= rs.rank(); ++i) full.insert(i);
    CHECK(is_even_jm(rs, full));
  }
}

TEST_CASE("Jacobson-Morosov classes of A3 and A1") {
  RootSystem a3 = RootSystem::build(CartanType::parse("A3"));
  std::set<std::set<int>> want = {{2}, {1, 3}, {1, 2, 3}};
  CHECK(jm_parabolic_classes(a3) == want);
  RootSystem a1 = RootSystem::build(CartanType::parse("A1"));
  CHECK(jm_parabolic_classes(a1) == std::set<std::set<int>>{{1}});
}

TEST_CASE("even Jacobson-Morosov classes of C4") {
  RootSystem rs = RootSystem::build(CartanType::parse("C4"));
  CHECK(is_even_jm(rs, {2, 4}));
  std::set<std::set<int>> even;
  for (const auto& I : jm_parabolic_classes(rs))
    if (is_even_jm(rs, I)) even.insert(I);
  std::set<std::set<int>> want = {{1, 2, 3, 4}, {1, 2, 4}, {2, 4}, {1, 4}, {2}, {4}};
  CHECK(even == want);
}

TEST_CASE("even Jacobson-Morosov classes of B4") {
  // Cross-checked against the so(9) partition dictionary: the even orbits
  // are exactly the all-odd-parts partitions [9], [7,1,1], [5,3,1], [5,1^4],
  // [3,3,3], [3,3,1^3], [3,1^6].
  RootSystem rs = RootSystem::build(CartanType::parse("B4"));
  std::set<std::set<int>> even;
  for (const auto& I : jm_parabolic_classes(rs))
    if (is_even_jm(rs, I)) even.insert(I);
  std::set<std::set<int>> want = {{1, 2, 3, 4}, {1, 2, 3}, {1, 3}, {1, 2}, {3}, {2}, {1}};
  CHECK(even == want);

  std::set<std::set<int>> from_partitions;
  for (const auto& cv : oracles::so_odd_char_vectors(4)) {
    bool is_even = true;
    std::set<int> supp;
    for (int i = 0; i < 4; ++i) {
      if (cv[i] == 1) is_even = false;
      if (cv[i] != 0) supp.insert(i + 1);
    }
    if (is_even && !supp.empty()) from_partitions.insert(supp);
  }
  CHECK(from_partitions == want);
}

TEST_CASE("even Jacobson-Morosov classes of G2") {
  RootSystem rs = RootSystem::build(CartanType::parse("G2"));
  CHECK(!is_even_jm(rs, {1}));
  CHECK(is_even_jm(rs, {2}));
  CHECK(is_even_jm(rs, {1, 2}));
}

TEST_CASE("is_even_jm input validation") {
  RootSystem rs = RootSystem::build(CartanType::parse("A2"));
  CHECK_THROWS_AS(is_even_jm(rs, {}), error);
  CHECK_THROWS_AS(is_even_jm(rs, {5}), error);
}

TEST_CASE("Jacobson-Morosov filtration dimensions") {
  RootSystem a1 = RootSystem::build(CartanType::parse("A1"));
  GradingElement y = GradingElement::from_ints({2});
  SUBCASE("standard representation of A1") {
    auto dims = jm_filtration_dims(a1, weight_system(a1, {1}), y);
    CHECK(dims.at(-1) == 1);
    CHECK(dims.at(1) == 2);
  }
  SUBCASE("adjoint representation of A1") {
    auto dims = jm_filtration_dims(a1, adjoint_weight_system(a1), y);
    CHECK(dims.at(-2) == 1);
    CHECK(dims.at(0) == 2);
    CHECK(dims.at(2) == 3);
  }
  SUBCASE("adjoint B2 at Y = 2S^1") {
    RootSystem b2 = RootSystem::build(CartanType::parse("B2"));
    GradingElement y2 = GradingElement::from_ints({2, 0});
    auto dims = jm_filtration_dims(b2, adjoint_weight_system(b2), y2);
    // Oracle: roots with alpha(S^1) >= 0 plus the Cartan.
    long long count = b2.rank();
    for (int r = 0; r < b2.num_roots(); ++r)
      if (b2.pair(b2.root(r), GradingElement::from_ints({1, 0})).is_nonneg()) ++count;
    CHECK(count == 7);
    CHECK(dims.at(0) == count);
    CHECK(dims.rbegin()->second == b2.num_roots() + b2.rank());
  }
  SUBCASE("non-integral eigenvalue is an error") {
    RootSystem c3 = RootSystem::build(CartanType::parse("C3"));
    CHECK_THROWS_AS(jm_filtration_dims(c3, weight_system(c3, {1, 0, 0}),
                                       GradingElement::from_ints({0, 0, 1})),
                    error);
  }
}
