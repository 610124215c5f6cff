#include <catch_amalgamated.hpp>

#include "antl/commutant.hpp"
#include "antl/enumerate.hpp"
#include "antl/fock.hpp"
#include "test_util.hpp"

using namespace antl;

TEST_CASE("config validation and circle labels") {
  CHECK_THROWS_AS(Config(Rank(4), {0}), std::invalid_argument);
  CHECK_THROWS_AS(Config(Rank(4), {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Config(Rank(4), {2, 1}), std::invalid_argument);
  Config c = Config::from_circle(Rank(8), {5, 0});
  CHECK(c.positions() == std::vector<int>{5, 8});
  CHECK(c.circle_labels() == std::vector<int>{0, 5});
}

TEST_CASE("generator action on configurations") {
  // a_0 across the zero position picks up -q on two particles
  auto hit = act_generator(0, Config(Rank(8), {5, 8}));
  REQUIRE(hit);
  CHECK(hit->first == QPoly::monomial(-1, 1));
  CHECK(hit->second.positions() == std::vector<int>{1, 5});

  auto plain = act_generator(6, Config(Rank(8), {1, 5, 6}));
  REQUIRE(plain);
  CHECK(plain->first == QPoly::one());
  CHECK(plain->second.positions() == std::vector<int>{1, 5, 7});

  CHECK_FALSE(act_generator(2, Config(Rank(5), {1, 4})));  // no particle at 2
  CHECK_FALSE(act_generator(2, Config(Rank(5), {2, 3})));  // target occupied
  CHECK_FALSE(act_generator(0, Config(Rank(5), {1, 5})));  // target occupied
}

TEST_CASE("act_word reproduces the figure examples") {
  // a_3 a_2 a_5 moves circle (0,1,2,5) to (0,1,4,6) with coefficient +1
  Config start = Config::from_circle(Rank(8), {0, 1, 2, 5});
  auto hit = act_word(Word(Rank(8), {3, 2, 5}), start);
  REQUIRE(hit);
  CHECK(hit->first == QPoly::one());
  CHECK(hit->second.circle_labels() == std::vector<int>{0, 1, 4, 6});

  // a_7 a_1 a_6 moves (1,5,6) to circle (0,2,5)
  auto chain = act_word(Word(Rank(8), {7, 1, 6}), Config(Rank(8), {1, 5, 6}));
  REQUIRE(chain);
  CHECK(chain->first == QPoly::one());
  CHECK(chain->second.circle_labels() == std::vector<int>{0, 2, 5});

  // the projector word for (1,5,6) fixes it with scalar +q
  auto proj = act_word(Word(Rank(8), {0, 7, 4, 3, 2, 1, 5, 6}),
                       Config(Rank(8), {1, 5, 6}));
  REQUIRE(proj);
  CHECK(proj->first == QPoly::q());
  CHECK(proj->second.positions() == std::vector<int>{1, 5, 6});

  auto id = act_word(Word(Rank(3)), Config(Rank(3), {2}));
  REQUIRE(id);
  CHECK(id->first == QPoly::one());
  CHECK(id->second.positions() == std::vector<int>{2});
}

TEST_CASE("defining relations annihilate every configuration") {
  for (int n : {3, 5}) {
    Rank rank(n);
    for (int k = 0; k <= n; ++k)
      for (const Config& c : all_configs(rank, k))
        for (int i = 0; i < n; ++i) {
          const int up = (i + 1) % n;
          CHECK_FALSE(act_word(Word(rank, {i, i}), c));
          CHECK_FALSE(act_word(Word(rank, {i, up, i}), c));
          CHECK_FALSE(act_word(Word(rank, {up, i, up}), c));
        }
  }
}

TEST_CASE("commuting generators act identically") {
  Rank rank(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const int d = (j - i + 5) % 5;
      if (d == 0 || d == 1 || d == 4) continue;
      for (int k = 0; k <= 5; ++k)
        for (const Config& c : all_configs(rank, k)) {
          auto ij = act_word(Word(rank, {i, j}), c);
          auto ji = act_word(Word(rank, {j, i}), c);
          CHECK(ij.has_value() == ji.has_value());
          if (ij && ji) {
            CHECK(ij->first == ji->first);
            CHECK(ij->second == ji->second);
          }
        }
    }
}

TEST_CASE("particle count is preserved") {
  Rank rank(4);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = antl::testing::random_nonzero_word(rank, 5, rng);
    for (int k = 0; k <= 4; ++k)
      for (const Config& c : all_configs(rank, k)) {
        auto hit = act_word(w, c);
        if (hit) CHECK(hit->second.particles() == k);
      }
  }
}

TEST_CASE("act_element basics") {
  Rank rank(3);
  FockVector v = FockVector::basis(Config(rank, {2}));
  CHECK(act_element(Element::one(rank), v) == v);

  // a_0 + a_1 on v(3): only a_0 contributes, with sign +
  Element e = add(Element::generator(rank, 0), Element::generator(rank, 1));
  FockVector image = act_element(e, FockVector::basis(Config(rank, {3})));
  FockVector expected(rank);
  expected.accumulate(Config(rank, {1}), QPoly::q());
  CHECK(image == expected);
}

TEST_CASE("matrix_block basics") {
  Rank rank(3);
  RepMatrix m = matrix_block(Element::generator(rank, 1), 1);
  REQUIRE(m.entries.size() == 1);
  const auto& [key, poly] = *m.entries.begin();
  CHECK(key.first == Config(rank, {2}));
  CHECK(key.second == Config(rank, {1}));
  CHECK(poly == QPoly::one());

  // a monomial expecting two particles has a zero one-particle block
  Element two = Element::from_word(Word(Rank(4), {0, 1}));
  CHECK(matrix_block(two, 1).entries.empty());
  CHECK_FALSE(matrix_block(two, 2).entries.empty());

  CHECK_THROWS_AS(matrix_block(two, 5), std::invalid_argument);
}

TEST_CASE("representation property on random pairs") {
  std::mt19937 rng(11);
  for (int n : {3, 4}) {
    Rank rank(n);
    for (int trial = 0; trial < 25; ++trial) {
      Element x = antl::testing::random_element(rank, rng);
      Element y = antl::testing::random_element(rank, rng);
      Element xy = mul(x, y);
      for (int k = 0; k <= n; ++k)
        CHECK(matrix_block(xy, k) == matmul(matrix_block(x, k), matrix_block(y, k)));
    }
  }
}

TEST_CASE("canonical monomial blocks have one distinguished entry") {
  // for a canonical monomial with key (i_in, i_out, l), the |i_in|-particle
  // block has exactly one entry +-q^l, at column i_in and row i_out + 1
  for (int n : {3, 4}) {
    Rank rank(n);
    for (const auto& letters : canonical_monomials(rank, 6)) {
      Word w(rank, letters);
      PsiKey key = psi_of_word(w);
      const int k = static_cast<int>(key.i_in.size());
      RepMatrix block = matrix_block(Element::from_word(w), k);
      REQUIRE(block.entries.size() == 1);
      const auto& [rc, poly] = *block.entries.begin();
      std::vector<int> col_circle = rc.second.circle_labels();
      CHECK(col_circle == key.i_in);
      std::vector<int> expected_row;
      for (int d : key.i_out) expected_row.push_back((d + 1) % n);
      std::sort(expected_row.begin(), expected_row.end());
      CHECK(rc.first.circle_labels() == expected_row);
      REQUIRE(poly.is_monomial());
      CHECK(poly.terms()[0].first == key.ell);
      CHECK(std::abs(poly.terms()[0].second) == 1);
      // smaller blocks vanish
      for (int kk = 0; kk < k; ++kk)
        CHECK(matrix_block(Element::from_word(w), kk).entries.empty());
    }
  }
}

TEST_CASE("inequivalent words have different matrices") {
  // the matrix oracle behind the commutation test: [0,1] and [1,0] differ
  Rank rank(3);
  Element a = Element::from_word(Word(rank, {0, 1}));
  Element b = Element::from_word(Word(rank, {1, 0}));
  bool differ = false;
  for (int k = 1; k < 3; ++k)
    if (!(matrix_block(a, k) == matrix_block(b, k))) differ = true;
  CHECK(differ);
}

TEST_CASE("central character of the identity") {
  Rank rank(4);
  auto chars = central_character(Element::one(rank));
  REQUIRE(chars.size() == 3);
  for (const auto& p : chars) CHECK(p == QPoly::one());
  CHECK_THROWS_AS(central_character(Element::generator(rank, 0)),
                  std::invalid_argument);
}

TEST_CASE("endomorphism dimension matches a dense nullspace solve") {
  using antl::testing::dense_commutant_dimension;
  for (const Rational& q : {Rational(0), Rational(1), Rational(2, 3)}) {
    for (int k = 1; k <= 2; ++k) {
      CHECK(endomorphism_dimension(Rank(3), k, q) ==
            dense_commutant_dimension(Rank(3), k, q));
    }
    for (int k = 1; k <= 3; ++k) {
      CHECK(endomorphism_dimension(Rank(4), k, q) ==
            dense_commutant_dimension(Rank(4), k, q));
    }
  }
}

TEST_CASE("endomorphism dimension known values") {
  // q != 0 makes the summands simple
  for (int k = 1; k <= 3; ++k) CHECK(endomorphism_dimension(Rank(4), k, 1) == 1);
  // the q = 0 headline value on 4 particles out of 8
  CHECK(endomorphism_dimension(Rank(8), 4, 0) == 5);
  CHECK_THROWS_AS(endomorphism_dimension(Rank(4), 0, 0), std::invalid_argument);
}
