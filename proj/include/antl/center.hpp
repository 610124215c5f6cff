#pragma once

#include "antl/enumerate.hpp"
#include "antl/fock.hpp"

namespace antl {

/// Label of a basis monomial: it acts on k-particle configurations,
/// moving the input configuration J = i_in to the output configuration
/// I = i_out after ell extra full turns of the central generator.
struct BasisLabel {
  int k;
  long long ell;
  Config i_out;  // I
  Config i_in;   // J

  friend bool operator==(const BasisLabel& a, const BasisLabel& b) {
    return a.k == b.k && a.ell == b.ell && a.i_out == b.i_out && a.i_in == b.i_in;
  }
  friend bool operator<(const BasisLabel& a, const BasisLabel& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.ell != b.ell) return a.ell < b.ell;
    if (!(a.i_out == b.i_out)) return a.i_out < b.i_out;
    return a.i_in < b.i_in;
  }
};

namespace detail {

/// Smallest l (1-based) such that the circle has an empty position
/// between the l-th and (l+1)-th particle (cyclically). Requires
/// 1 <= k <= n-1 so that a gap exists.
inline int first_gap(const std::vector<int>& pos, int n) {
  const int k = static_cast<int>(pos.size());
  for (int l = 1; l < k; ++l)
    if (pos[l - 1] + 1 < pos[l]) return l;
  if (!(pos.front() == 1 && pos.back() == n)) return k;
  throw std::invalid_argument("no gap: configuration is full");
}

/// The one-step factor: every particle moved one position clockwise,
/// emitted in the gap-split order that keeps the word nonzero.
inline std::vector<int> one_step_letters(const std::vector<int>& pos, int n) {
  const int k = static_cast<int>(pos.size());
  const int gap = first_gap(pos, n);
  std::vector<int> letters;
  for (int idx = gap; idx < k; ++idx) letters.push_back(pos[idx] % n);
  for (int idx = 0; idx < gap; ++idx) letters.push_back(pos[idx] % n);
  return letters;
}

}  // namespace detail

/// The projector monomial a(I^): degree (1,...,1), fixes v(I) up to the
/// scalar (-1)^(k-1) q and annihilates every other configuration. Built
/// as the wrap-around run, the in-between descending runs, and the
/// one-step factor chosen at the first gap.
inline Word projector_monomial(const Config& I) {
  const int n = I.n();
  const auto& pos = I.positions();
  const int k = I.particles();
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("projector_monomial: need 1 <= |I| <= n-1");

  std::vector<int> letters;
  for (int v = pos.front() - 1 + n; v >= pos.back() + 1; --v)
    letters.push_back(v % n);
  for (int s = 1; s < k; ++s)
    for (int v = pos[s] - 1; v >= pos[s - 1] + 1; --v)
      letters.push_back(v % n);
  for (int x : detail::one_step_letters(pos, n)) letters.push_back(x);
  return Word(I.rank(), std::move(letters));
}

/// Unsigned sum of all projector monomials on k particles; acts as
/// (-1)^(k-1) q on k-particle configurations and as zero elsewhere.
inline Element projector_sum(int k, Rank rank) {
  if (k < 1 || k > rank.n() - 1)
    throw std::invalid_argument("projector_sum: k out of range");
  Element out(rank);
  for (const Config& I : all_configs(rank, k))
    out = add(out, Element::from_word(projector_monomial(I)));
  return out;
}

/// The central generator t_k = (-1)^(k-1) sum over |I| = k of a(I^);
/// acts as multiplication by q on k-particle configurations.
inline Element central_generator(int k, Rank rank) {
  return scale(k % 2 == 1 ? 1 : -1, projector_sum(k, rank));
}

namespace detail {

struct Assignment {
  int offset;                // cyclic shift J -> I
  std::vector<int> travel;   // clockwise distance of each particle, >= 1
  int crossings;             // passes of the zero position
};

/// Realizable particle routings J -> I: each particle moves clockwise to
/// a target under an order-preserving cyclic shift, and the induced
/// strand ends satisfy the normal-form inequalities (strictly increasing
/// ends; last end < first end + n).
inline std::vector<Assignment> realizable_assignments(const Config& I,
                                                      const Config& J) {
  const int n = I.n();
  const int k = I.particles();
  const auto& ipos = I.positions();
  const auto& jpos = J.positions();
  std::vector<Assignment> out;
  for (int c = 0; c < k; ++c) {
    Assignment a{c, std::vector<int>(k), 0};
    for (int r = 0; r < k; ++r) {
      const int target = ipos[(r + c) % k];
      a.travel[r] = (target - jpos[r] - 1 + 2 * n) % n + 1;
      if (jpos[r] + a.travel[r] > n) ++a.crossings;
    }
    // strand inequalities on the shifted start letters
    std::vector<char> start_set(n, 0);
    for (int r = 0; r < k; ++r) start_set[jpos[r] % n] = 1;
    const int ihat = reorder_start(start_set, n);
    const int shift = cyclic_least(start_set, n, ihat);
    std::vector<std::pair<int, long long>> strands;  // (shifted start, end)
    for (int r = 0; r < k; ++r) {
      const int s = (jpos[r] % n - shift + n) % n;
      strands.emplace_back(s, s + a.travel[r] - 1);
    }
    std::sort(strands.begin(), strands.end());
    bool ok = true;
    for (int r = 0; r + 1 < k; ++r)
      if (strands[r].second >= strands[r + 1].second) ok = false;
    if (strands.back().second >= strands.front().second + n) ok = false;
    if (ok) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace detail

/// The minimal monomial moving configuration J to configuration I with
/// every particle moved at least one step clockwise; the power of q in
/// e_IJ v(J) = +-q^l v(I) is minimal. For I = J this is the projector
/// monomial. The unique minimal routing is realized as (remaining moves)
/// times (one-step factor).
inline Word e_word(const Config& I, const Config& J) {
  if (I.rank() != J.rank()) throw std::invalid_argument("e_word: rank mismatch");
  const int n = I.n();
  const int k = I.particles();
  if (k != J.particles()) throw std::invalid_argument("e_word: |I| != |J|");
  if (k < 1 || k > n - 1) throw std::invalid_argument("e_word: k out of range");
  if (I == J) return projector_monomial(I);

  auto assignments = detail::realizable_assignments(I, J);
  if (assignments.empty())
    throw std::logic_error("e_word: no realizable routing");
  const detail::Assignment* best = &assignments[0];
  for (const auto& a : assignments)
    if (a.crossings < best->crossings) best = &a;
  for (const auto& a : assignments)
    if (a.crossings == best->crossings && a.offset != best->offset)
      throw std::logic_error("e_word: ambiguous minimal routing");

  const auto& jpos = J.positions();
  std::vector<int> second_line = detail::one_step_letters(jpos, n);

  // simulate the remaining moves, one particle run at a time
  std::vector<int> cur(k), rem(k);
  std::vector<char> occupied(n + 1, 0);
  for (int r = 0; r < k; ++r) {
    cur[r] = jpos[r] % n + 1;
    rem[r] = best->travel[r] - 1;
    occupied[cur[r]] = 1;
  }
  std::vector<int> chrono;
  int pending = 0;
  for (int r = 0; r < k; ++r) pending += rem[r];
  while (pending > 0) {
    bool progressed = false;
    for (int r = 0; r < k; ++r) {
      while (rem[r] > 0) {
        const int next = cur[r] % n + 1;
        if (occupied[next]) break;
        chrono.push_back(cur[r] % n);
        occupied[cur[r]] = 0;
        occupied[next] = 1;
        cur[r] = next;
        --rem[r];
        --pending;
        progressed = true;
      }
    }
    if (!progressed) throw std::logic_error("e_word: routing stuck");
  }

  std::vector<int> letters(chrono.rbegin(), chrono.rend());
  letters.insert(letters.end(), second_line.begin(), second_line.end());
  return Word(I.rank(), std::move(letters));
}

/// Writes a nonzero monomial as t_k^ell e_IJ up to sign: J is the minimal
/// configuration it acts on, I the image configuration, and ell the
/// number of surplus q-powers over the minimal word. The factorization is
/// verified by normal-form comparison.
inline BasisLabel factorize(const Word& w) {
  if (w.empty()) throw std::invalid_argument("factorize: empty word");
  NormalForm nf = normalize(w);
  if (nf.is_zero()) throw std::invalid_argument("factorize: zero word");
  PsiKey key = psi(nf);

  Config J = Config::from_circle(w.rank(), key.i_in);
  auto hit = act_word(w, J);
  if (!hit) throw std::logic_error("factorize: word kills its minimal configuration");
  const Config I = hit->second;
  const long long power = hit->first.terms()[0].first;

  Word e = e_word(I, J);
  auto ehit = act_word(e, J);
  const long long ell = power - ehit->first.terms()[0].first;
  if (ell < 0) throw std::logic_error("factorize: below the minimal power");

  Word basis_word = e;
  if (ell > 0) {
    Word proj = projector_monomial(I);
    Word prefix(w.rank());
    for (long long i = 0; i < ell; ++i) prefix = concat(prefix, proj);
    basis_word = concat(prefix, e);
  }
  if (canonicalize(basis_word) != canonical_word(nf))
    throw std::logic_error("factorize: label does not reproduce the monomial");
  return BasisLabel{I.particles(), ell, I, J};
}

/// All basis labels with 1 <= k <= n-1 and 0 <= ell <= ell_max, paired
/// with their canonical words.
inline std::vector<std::pair<BasisLabel, Word>> enumerate_basis(Rank rank,
                                                                int ell_max) {
  if (ell_max < 0) throw std::invalid_argument("enumerate_basis: ell_max < 0");
  std::vector<std::pair<BasisLabel, Word>> out;
  for (int k = 1; k < rank.n(); ++k) {
    const auto configs = all_configs(rank, k);
    for (const Config& I : configs) {
      const Word proj = projector_monomial(I);
      for (const Config& J : configs) {
        const Word e = e_word(I, J);
        Word word = e;
        for (int ell = 0; ell <= ell_max; ++ell) {
          if (ell > 0) word = concat(proj, word);
          out.emplace_back(BasisLabel{k, ell, I, J}, canonicalize(word));
        }
      }
    }
  }
  return out;
}

/// Dimension of the subalgebra generated by a_1,...,a_{n-1}: the number
/// of distinct nonzero monomials avoiding a_0, including 1. Exhaustive
/// closure; the subalgebra is finite dimensional.
inline long long fntl_dimension(Rank rank) {
  std::vector<int> alphabet;
  for (int i = 1; i < rank.n(); ++i) alphabet.push_back(i);
  return static_cast<long long>(canonical_closure(rank, alphabet, 0).size());
}

}  // namespace antl
