#include <catch_amalgamated.hpp>

#include "antl/enumerate.hpp"
#include "antl/word.hpp"

using namespace antl;

TEST_CASE("rank validation") {
  CHECK_THROWS_AS(Rank(2), std::invalid_argument);
  CHECK_THROWS_AS(Rank(0), std::invalid_argument);
  CHECK(Rank(3).n() == 3);
}

TEST_CASE("word validation") {
  CHECK_THROWS_AS(Word(Rank(3), {3}), std::invalid_argument);
  CHECK_THROWS_AS(Word(Rank(3), {-1}), std::invalid_argument);
  CHECK(Word(Rank(3)).empty());
}

TEST_CASE("is_nonzero on known words") {
  CHECK_FALSE(is_nonzero(Word(Rank(5), {2, 2})));
  CHECK_FALSE(is_nonzero(Word(Rank(3), {0, 1, 0})));
  CHECK(is_nonzero(Word(Rank(8), {0, 7, 4, 3, 2, 1, 5, 6})));
  CHECK_FALSE(is_nonzero(Word(Rank(4), {0, 2, 0})));
  CHECK(is_nonzero(Word(Rank(3))));  // empty word = 1
  // wrap-around nil relations
  CHECK_FALSE(is_nonzero(Word(Rank(3), {2, 0, 2})));
  CHECK_FALSE(is_nonzero(Word(Rank(3), {0, 2, 0})));
}

TEST_CASE("commutation_equal on known pairs") {
  CHECK(commutation_equal(Word(Rank(5), {0, 2}), Word(Rank(5), {2, 0})));
  CHECK_FALSE(commutation_equal(Word(Rank(3), {0, 1}), Word(Rank(3), {1, 0})));
  Word w(Rank(6), {0, 2, 4});
  CHECK(commutation_equal(w, w));
  // adjacent mod n: a_0 and a_{n-1} do not commute
  CHECK_FALSE(commutation_equal(Word(Rank(5), {0, 4}), Word(Rank(5), {4, 0})));
  CHECK_THROWS_AS(commutation_equal(Word(Rank(3), {1, 1}), Word(Rank(3), {1, 1})),
                  std::invalid_argument);
}

TEST_CASE("zn_degree") {
  CHECK(zn_degree(Word(Rank(3))) == std::vector<int>{0, 0, 0});
  CHECK(zn_degree(Word(Rank(8), {0, 7, 4, 3, 2, 1, 5, 6})) ==
        std::vector<int>(8, 1));
  CHECK(zn_degree(Word(Rank(3), {0, 2, 1, 0, 2, 1})) == std::vector<int>{2, 2, 2});
}

TEST_CASE("concat") {
  Word w(Rank(4), {1, 2});
  CHECK(concat(Word(Rank(4)), w) == w);
  CHECK(concat(Word(Rank(4), {0}), Word(Rank(4), {1})) == Word(Rank(4), {0, 1}));
  CHECK(concat(w, Word(Rank(4), {0})) == Word(Rank(4), {1, 2, 0}));
  CHECK_THROWS_AS(concat(Word(Rank(3)), Word(Rank(4))), std::invalid_argument);
}

TEST_CASE("zn_degree additive under concat") {
  Rank rank(5);
  Word w1(rank, {0, 3, 1}), w2(rank, {4, 3});
  auto d = zn_degree(concat(w1, w2));
  auto d1 = zn_degree(w1), d2 = zn_degree(w2);
  for (int i = 0; i < 5; ++i) CHECK(d[i] == d1[i] + d2[i]);
}

TEST_CASE("is_nonzero invariant under commutation moves") {
  // single adjacent transpositions of non-adjacent indices preserve the test
  for (int n : {3, 4}) {
    Rank rank(n);
    for_each_nonzero_word(rank, 6, [&](const Word& w) {
      auto ls = w.letters();
      for (std::size_t p = 0; p + 1 < ls.size(); ++p) {
        const int d = (ls[p + 1] - ls[p] + n) % n;
        if (d == 0 || d == 1 || d == n - 1) continue;
        std::swap(ls[p], ls[p + 1]);
        CHECK(is_nonzero(Word(rank, ls)));
        std::swap(ls[p], ls[p + 1]);
      }
    });
  }
}

TEST_CASE("is_nonzero agrees with the rewriting-closure oracle") {
  const int max_len = 8;
  for (int n : {3, 4}) {
    Rank rank(n);
    std::vector<int> letters;
    long long checked = 0;
    std::function<void()> go = [&]() {
      if (!letters.empty()) {
        Word w(rank, letters);
        bool fast = is_nonzero(w);
        bool slow = rewriting_oracle_is_nonzero(w);
        if (fast != slow) {
          CAPTURE(n, letters);
          REQUIRE(fast == slow);
        }
        ++checked;
        if (!fast) return;  // oracle agrees; extensions of zero stay zero
      }
      if (static_cast<int>(letters.size()) == max_len) return;
      for (int i = 0; i < n; ++i) {
        letters.push_back(i);
        go();
        letters.pop_back();
      }
    };
    go();
    CHECK(checked > 0);
  }
}

TEST_CASE("commutation_equal is an equivalence compatible with concat") {
  Rank rank(6);
  Word u(rank, {0, 2, 4}), v(rank, {2, 0, 4}), t(rank, {2, 4, 0});
  CHECK(commutation_equal(u, v));
  CHECK(commutation_equal(v, t));
  CHECK(commutation_equal(u, t));  // transitivity instance
  Word g(rank, {1});
  CHECK(commutation_equal(concat(u, g), concat(v, g)));
  CHECK(commutation_equal(concat(g, u), concat(g, v)));
}
