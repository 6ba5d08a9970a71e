#include <doctest.h>

#include "wallcrys/cartan.hpp"

using namespace wallcrys;

namespace {

// the full rank matrix used across the test suite
std::vector<AffineType> test_matrix() {
  return {
      make_type(Family::A1, 1),    make_type(Family::A1, 2),    make_type(Family::A1, 3),
      make_type(Family::A2odd, 3), make_type(Family::A2odd, 4), make_type(Family::D1, 4),
      make_type(Family::D1, 5),    make_type(Family::A2even, 2), make_type(Family::A2even, 3),
      make_type(Family::D2, 2),    make_type(Family::D2, 3),    make_type(Family::B1, 3),
      make_type(Family::B1, 4),
  };
}

}  // namespace

TEST_CASE("type string grammar round-trips") {
  for (auto s : {"A1~1", "A2~1", "A5~2", "A7~2", "D4~1", "D5~1", "A4~2", "A6~2", "D3~2", "D4~2",
                 "B3~1", "B4~1"}) {
    AffineType t = parse_type(s);
    CHECK(type_to_string(t) == s);
  }
  CHECK(parse_type("A5~2").family == Family::A2odd);
  CHECK(parse_type("A5~2").rank == 3);
  CHECK(parse_type("A4~2").family == Family::A2even);
  CHECK(parse_type("A4~2").rank == 2);
  CHECK(parse_type("D3~2").family == Family::D2);
  CHECK(parse_type("D3~2").rank == 2);
  CHECK_THROWS_AS(parse_type("A2~2"), TypeError);  // A_{2n-1}^{(2)} needs n >= 3 -> A5~2 smallest odd
  CHECK_THROWS_AS(parse_type("C3~1"), TypeError);
  CHECK_THROWS_AS(parse_type("D3~1"), TypeError);
  CHECK_THROWS_AS(parse_type("B2~1"), TypeError);
  CHECK_THROWS_AS(parse_type("bogus"), TypeError);
}

TEST_CASE("null root and central element annihilate the Cartan matrix") {
  for (const auto& t : test_matrix()) {
    const CartanData& cd = cartan_data(t);
    const int m = t.n_indices();
    REQUIRE(int(cd.a.size()) == m);
    for (int i = 0; i < m; ++i) {
      CHECK(cd.a[i][i] == 2);
      long long row = 0, col = 0;
      for (int j = 0; j < m; ++j) {
        CHECK(((i == j) || cd.a[i][j] <= 0));
        CHECK(((cd.a[i][j] == 0) == (cd.a[j][i] == 0)));
        row += (long long)cd.a[i][j] * cd.delta[j];
        col += (long long)cd.central[j] * cd.a[j][i];
      }
      CHECK(row == 0);  // A d = 0
      CHECK(col == 0);  // c A = 0
    }
    for (int i : cd.level1_weights) CHECK(cd.central[i] == 1);
    // level(Lambda_i) = c_i for every i
    for (int i = 0; i < m; ++i) CHECK(level(t, fundamental_weight(t, i)) == cd.central[i]);
  }
}

TEST_CASE("tabulated values for specific families") {
  {
    auto t = parse_type("B3~1");
    const auto& cd = cartan_data(t);
    CHECK(cd.central == std::vector<int>{1, 1, 2, 1});
    CHECK(cd.delta == std::vector<int>{1, 1, 2, 2});
    CHECK(cd.level1_weights == std::vector<int>{0, 1, 3});
  }
  {
    auto t = parse_type("A4~2");
    const auto& cd = cartan_data(t);
    CHECK(cd.delta == std::vector<int>{2, 2, 1});
    CHECK(cd.level1_weights == std::vector<int>{0});
  }
  {
    auto t = parse_type("A1~1");
    const auto& cd = cartan_data(t);
    CHECK(cd.a == std::vector<std::vector<int>>{{2, -2}, {-2, 2}});
    CHECK(cd.central == std::vector<int>{1, 1});
    CHECK(cd.delta == std::vector<int>{1, 1});
  }
}

TEST_CASE("coroot pairing on A2~1") {
  auto t = parse_type("A2~1");
  AffineWeight w = fundamental_weight(t, 0);
  CHECK(pair_coroot(t, w, 0) == 1);
  CHECK(pair_coroot(t, w, 1) == 0);
  AffineWeight w2 = subtract_root(w, 0);  // Lambda_0 - alpha_0
  CHECK(pair_coroot(t, w2, 0) == -1);
}

TEST_CASE("pairing is linear in the content") {
  auto t = parse_type("D4~1");
  AffineWeight w = fundamental_weight(t, 1);
  w.content = {3, 1, 4, 1, 5};
  AffineWeight zero;
  zero.base = -1;
  zero.content = {2, 7, 1, 8, 2};
  AffineWeight sum = w;
  for (int j = 0; j < t.n_indices(); ++j) sum.content[j] += zero.content[j];
  for (int i = 0; i < t.n_indices(); ++i)
    CHECK(pair_coroot(t, sum, i) == pair_coroot(t, w, i) + pair_coroot(t, zero, i));
}

TEST_CASE("subtract_root bookkeeping") {
  for (const auto& t : test_matrix()) {
    const auto& cd = cartan_data(t);
    AffineWeight w = fundamental_weight(t, cd.level1_weights[0]);
    for (int i = 0; i < t.n_indices(); ++i) {
      AffineWeight v = subtract_root(w, i);
      CHECK(level(t, v) == level(t, w));
      CHECK(pair_coroot(t, v, i) == pair_coroot(t, w, i) - 2);
    }
    // adding one delta's worth of content fixes every pairing
    AffineWeight v = w;
    for (int i = 0; i < t.n_indices(); ++i)
      for (int r = 0; r < cd.delta[i]; ++r) v = subtract_root(v, i);
    CHECK(pairing_vector(t, v) == pairing_vector(t, w));
  }
}

TEST_CASE("level-1 lambda selector") {
  auto t = parse_type("B3~1");
  CHECK(parse_level1_lambda(t, "L0") == 0);
  CHECK(parse_level1_lambda(t, "L3") == 3);
  CHECK_THROWS_AS(parse_level1_lambda(t, "L2"), TypeError);  // c_2 = 2
  CHECK_THROWS_AS(parse_level1_lambda(t, "Lx"), TypeError);
}
