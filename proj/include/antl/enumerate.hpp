#pragma once

#include <functional>
#include <map>
#include <queue>
#include <set>

#include "antl/normal_form.hpp"

namespace antl {

/// Calls fn on every nonzero word of length 1..max_len. Extensions of a
/// zero word are zero, so the search prunes at the first zero.
inline void for_each_nonzero_word(Rank rank, int max_len,
                                  const std::function<void(const Word&)>& fn) {
  const int n = rank.n();
  std::vector<int> letters;
  std::function<void()> go = [&]() {
    if (!letters.empty()) {
      Word w(rank, letters);
      if (!is_nonzero(w)) return;
      fn(w);
    }
    if (static_cast<int>(letters.size()) == max_len) return;
    for (int i = 0; i < n; ++i) {
      letters.push_back(i);
      go();
      letters.pop_back();
    }
  };
  go();
}

/// Distinct canonical words of the nonzero monomials of length 1..max_len.
inline std::set<std::vector<int>> canonical_monomials(Rank rank, int max_len) {
  std::set<std::vector<int>> out;
  for_each_nonzero_word(rank, max_len, [&](const Word& w) {
    out.insert(canonicalize(w).letters());
  });
  return out;
}

/// All distinct canonical monomials (as canonical words, including the
/// empty word for 1) reachable with letters from `alphabet` and at most
/// max_zeros occurrences of the letter 0. Breadth-first closure under
/// right multiplication by the allowed generators; finite because a
/// bounded zero count bounds the word length.
inline std::set<std::vector<int>> canonical_closure(Rank rank,
                                                    const std::vector<int>& alphabet,
                                                    long long max_zeros) {
  std::set<std::vector<int>> seen;
  std::queue<std::vector<int>> queue;
  seen.insert(std::vector<int>{});
  queue.push(std::vector<int>{});
  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop();
    for (int i : alphabet) {
      std::vector<int> ext = cur;
      ext.push_back(i);
      Word w(rank, ext);
      if (!is_nonzero(w)) continue;
      long long zeros = static_cast<long long>(std::count(ext.begin(), ext.end(), 0));
      if (zeros > max_zeros) continue;
      std::vector<int> canon = canonicalize(w).letters();
      if (seen.insert(canon).second) queue.push(canon);
    }
  }
  return seen;
}

/// Brute-force zero test: saturate the commutation moves and look for a
/// factor a_i a_i or a_i a_{i+-1} a_i in any representative. Independent
/// of is_nonzero; intended as a test oracle at small lengths.
inline bool rewriting_oracle_is_nonzero(const Word& w) {
  const int n = w.n();
  auto forbidden = [&](const std::vector<int>& ls) {
    for (std::size_t p = 0; p + 1 < ls.size(); ++p) {
      if (ls[p] == ls[p + 1]) return true;
      if (p + 2 < ls.size() && ls[p] == ls[p + 2]) {
        const int d = (ls[p + 1] - ls[p] + n) % n;
        if (d == 1 || d == n - 1) return true;
      }
    }
    return false;
  };
  std::set<std::vector<int>> seen;
  std::queue<std::vector<int>> queue;
  seen.insert(w.letters());
  queue.push(w.letters());
  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop();
    if (forbidden(cur)) return false;
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      const int d = (cur[p + 1] - cur[p] + n) % n;
      if (d == 1 || d == n - 1 || d == 0) continue;  // non-commuting or equal
      std::swap(cur[p], cur[p + 1]);
      if (seen.insert(cur).second) queue.push(cur);
      std::swap(cur[p], cur[p + 1]);
    }
  }
  return true;
}

}  // namespace antl
