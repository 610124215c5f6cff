#include <catch_amalgamated.hpp>
#include <set>

#include "antl/center.hpp"
#include "antl/embedding.hpp"
#include "antl/enumerate.hpp"
#include "test_util.hpp"

using namespace antl;

namespace {

/// Index map on circle labels induced by the rank-raising embedding.
int shift_label(int m, int x) { return x <= m ? x : x + 1; }

Config shift_config(int m, const Config& c) {
  Rank big(c.n() + 1);
  std::vector<int> labels;
  for (int x : c.circle_labels()) labels.push_back(shift_label(m, x));
  return Config::from_circle(big, labels);
}

}  // namespace

TEST_CASE("embed_word goldens") {
  CHECK(embed_word(0, Word(Rank(3), {0})) == Word(Rank(4), {1, 0}));
  CHECK(embed_word(5, Word(Rank(7), {0, 6, 5, 4})) ==
        Word(Rank(8), {0, 7, 6, 5, 4}));
  CHECK(embed_word(2, Word(Rank(3))) == Word(Rank(4)));
  CHECK_THROWS_AS(embed_word(3, Word(Rank(3), {0})), std::invalid_argument);
}

TEST_CASE("embedding preserves nonzero-ness") {
  for (int n : {3, 4}) {
    Rank rank(n);
    for_each_nonzero_word(rank, 6, [&](const Word& w) {
      for (int m = 0; m < n; ++m) CHECK(is_nonzero(embed_word(m, w)));
    });
  }
}

TEST_CASE("embedding is unital and multiplicative") {
  std::mt19937 rng(41);
  for (int n : {3, 4}) {
    Rank rank(n);
    for (int m = 0; m < n; ++m) {
      CHECK(embed_element(m, Element::one(rank)) == Element::one(Rank(n + 1)));
      for (int trial = 0; trial < 20; ++trial) {
        Element x = antl::testing::random_element(rank, rng);
        Element y = antl::testing::random_element(rank, rng);
        CHECK(embed_element(m, mul(x, y)) ==
              mul(embed_element(m, x), embed_element(m, y)));
      }
    }
  }
}

TEST_CASE("images of the defining relations vanish") {
  // the five products around the doubled generator, for every insertion
  // position after cyclic relabeling
  for (int n : {3, 4}) {
    Rank rank(n);
    for (int m = 0; m < n; ++m) {
      Element p = embed_element(m, Element::generator(rank, m));
      Element s = embed_element(m, Element::generator(rank, (m + 1) % n));
      Element r = embed_element(m, Element::generator(rank, (m + n - 1) % n));
      CHECK(mul(p, p).is_zero());
      CHECK(mul(s, mul(p, s)).is_zero());
      CHECK(mul(r, mul(p, r)).is_zero());
      CHECK(mul(p, mul(s, p)).is_zero());
      CHECK(mul(p, mul(r, p)).is_zero());
    }
  }
}

TEST_CASE("embedding is injective on canonical monomials") {
  Rank rank(3);
  for (int m = 0; m < 3; ++m) {
    std::set<std::vector<int>> images;
    std::size_t count = 0;
    for (const auto& letters : canonical_monomials(rank, 6)) {
      Element image = embed_element(m, Element::from_word(Word(rank, letters)));
      REQUIRE(image.terms().size() == 1);
      images.insert(image.terms().begin()->first);
      ++count;
    }
    CHECK(images.size() == count);
  }
}

TEST_CASE("basis words embed to basis words with shifted labels") {
  Rank rank(3);
  for (const auto& [label, word] : enumerate_basis(rank, 1)) {
    for (int m = 0; m < 3; ++m) {
      Element image = embed_element(m, Element::from_word(word));
      REQUIRE(image.terms().size() == 1);
      CHECK(image.terms().begin()->second == 1);
      BasisLabel shifted = factorize(Word(Rank(4), image.terms().begin()->first));
      CHECK(shifted.k == label.k);
      CHECK(shifted.ell == label.ell);
      CHECK(shifted.i_out == shift_config(m, label.i_out));
      CHECK(shifted.i_in == shift_config(m, label.i_in));
    }
  }
}
