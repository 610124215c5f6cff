#pragma once

#include <random>
#include <vector>

#include "antl/commutant.hpp"
#include "antl/element.hpp"

namespace antl::testing {

inline std::vector<std::vector<int>> subsets_of(int n, int k, int lo = 0) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < lo + n; ++i) {
      cur.push_back(i);
      go(i + 1);
      cur.pop_back();
    }
  };
  go(lo);
  return out;
}

inline Word random_nonzero_word(Rank rank, int len, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, rank.n() - 1);
  while (true) {
    std::vector<int> letters(len);
    for (int& x : letters) x = pick(rng);
    Word w(rank, letters);
    if (is_nonzero(w)) return w;
  }
}

inline Element random_element(Rank rank, std::mt19937& rng, int max_terms = 3,
                              int max_len = 5) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Element e(rank);
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    long long c = coeff(rng);
    if (c == 0) c = 1;
    e = add(e, scale(c, Element::from_word(random_nonzero_word(rank, len(rng), rng))));
  }
  return e;
}

/// Dense nullspace count of the commutant system; an independent check
/// for endomorphism_dimension. Builds the full (n*m*m) x (m*m) system and
/// row reduces it.
inline int dense_commutant_dimension(Rank rank, int k, const Rational& q) {
  const std::vector<Config> basis = all_configs(rank, k);
  const int m = static_cast<int>(basis.size());
  std::map<Config, int> index;
  for (int i = 0; i < m; ++i) index.emplace(basis[i], i);

  std::vector<std::vector<Rational>> mats(
      rank.n(), std::vector<Rational>(static_cast<std::size_t>(m) * m, Rational(0)));
  for (int g = 0; g < rank.n(); ++g)
    for (int c = 0; c < m; ++c) {
      auto hit = act_generator(g, basis[c]);
      if (!hit) continue;
      mats[g][static_cast<std::size_t>(index.at(hit->second)) * m + c] =
          eval_qpoly(hit->first, q);
    }

  std::vector<std::vector<Rational>> rows;
  for (int g = 0; g < rank.n(); ++g)
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) {
        std::vector<Rational> row(static_cast<std::size_t>(m) * m, Rational(0));
        bool any = false;
        for (int s = 0; s < m; ++s) {
          // (X A)[r][c] collects X[r][s] A[s][c]; (A X)[r][c] collects A[r][s] X[s][c]
          const Rational a_sc = mats[g][static_cast<std::size_t>(s) * m + c];
          const Rational a_rs = mats[g][static_cast<std::size_t>(r) * m + s];
          if (a_sc != 0) {
            row[static_cast<std::size_t>(r) * m + s] += a_sc;
            any = true;
          }
          if (a_rs != 0) {
            row[static_cast<std::size_t>(s) * m + c] -= a_rs;
            any = true;
          }
        }
        if (any) rows.push_back(std::move(row));
      }

  // row reduce
  const std::size_t cols = static_cast<std::size_t>(m) * m;
  std::size_t rank_count = 0;
  for (std::size_t col = 0; col < cols && rank_count < rows.size(); ++col) {
    std::size_t pivot = rank_count;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank_count], rows[pivot]);
    const Rational lead = rows[rank_count][col];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank_count || rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / lead;
      for (std::size_t cc = col; cc < cols; ++cc) rows[r][cc] -= f * rows[rank_count][cc];
    }
    ++rank_count;
  }
  return static_cast<int>(cols - rank_count);
}

}  // namespace antl::testing
