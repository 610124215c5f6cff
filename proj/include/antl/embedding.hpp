#pragma once

#include "antl/element.hpp"

namespace antl {

/// Rank-raising substitution underlying the embedding into the algebra on
/// one more generator: a_i stays for i < m, a_m becomes a_{m+1} a_m, and
/// a_i moves to a_{i+1} for i > m. Raw letterwise image, no
/// normalization, so figure-level words can be compared literally.
inline Word embed_word(int m, const Word& w) {
  const int n = w.n();
  if (m < 0 || m > n - 1) throw std::invalid_argument("embed_word: m out of range");
  Rank big(n + 1);
  std::vector<int> letters;
  for (int x : w.letters()) {
    if (x < m) {
      letters.push_back(x);
    } else if (x == m) {
      letters.push_back(m + 1);
      letters.push_back(m);
    } else {
      letters.push_back(x + 1);
    }
  }
  return Word(big, std::move(letters));
}

/// Termwise embedding followed by normalization; a unital algebra
/// embedding into the rank n+1 algebra.
inline Element embed_element(int m, const Element& e) {
  const int n = e.n();
  if (m < 0 || m > n - 1)
    throw std::invalid_argument("embed_element: m out of range");
  Element out(Rank(n + 1));
  for (const auto& [letters, coeff] : e.terms())
    out = add(out, scale(coeff, Element::from_word(embed_word(m, Word(e.rank(), letters)))));
  return out;
}

}  // namespace antl
