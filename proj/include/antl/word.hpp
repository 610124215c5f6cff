#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

/// Monomials in the affine nilTemperley-Lieb algebra on generators
/// a_0,...,a_{n-1} (indices mod n), subject to
///
///   a_i^2 = 0,   a_i a_{i+1} a_i = a_{i+1} a_i a_{i+1} = 0,
///   a_i a_j = a_j a_i   for i - j != +-1 mod n.
///
/// A Word is a raw product of generators; whether it is zero, and whether
/// two words are the same element, is decided combinatorially below.
namespace antl {

/// Number of generators / circle positions. Always at least 3; for n <= 2
/// the algebra degenerates and none of the structure here applies.
class Rank {
public:
  explicit Rank(int n) : n_(n) {
    if (n < 3) throw std::invalid_argument("Rank: n must be >= 3");
  }
  int n() const { return n_; }
  friend bool operator==(Rank a, Rank b) { return a.n_ == b.n_; }
  friend bool operator!=(Rank a, Rank b) { return a.n_ != b.n_; }

private:
  int n_;
};

/// A product of generators. letters()[0] is the leftmost factor; the
/// rightmost factor acts first on particle configurations. The empty word
/// is the identity monomial 1.
class Word {
public:
  explicit Word(Rank rank) : rank_(rank) {}
  Word(Rank rank, std::vector<int> letters)
      : rank_(rank), letters_(std::move(letters)) {
    for (int x : letters_)
      if (x < 0 || x >= rank_.n())
        throw std::invalid_argument("Word: letter out of range");
  }

  Rank rank() const { return rank_; }
  int n() const { return rank_.n(); }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word& a, const Word& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

private:
  Rank rank_;
  std::vector<int> letters_;
};

inline Word generator(Rank rank, int i) { return Word(rank, {i}); }

/// Juxtaposition w1 * w2 (the product of monomials, before any
/// normalization).
inline Word concat(const Word& w1, const Word& w2) {
  if (w1.rank() != w2.rank())
    throw std::invalid_argument("concat: rank mismatch");
  std::vector<int> letters = w1.letters();
  letters.insert(letters.end(), w2.letters().begin(), w2.letters().end());
  return Word(w1.rank(), std::move(letters));
}

/// True iff the monomial is nonzero: between any two neighbouring
/// occurrences of the same index i there must be exactly one i+1 and
/// exactly one i-1 (mod n). The empty word is the identity and nonzero.
inline bool is_nonzero(const Word& w) {
  const int n = w.n();
  const auto& ls = w.letters();
  const int len = static_cast<int>(ls.size());
  for (int p = 0; p < len; ++p) {
    const int i = ls[p];
    const int up = (i + 1) % n;
    const int down = (i + n - 1) % n;
    int seen_up = 0, seen_down = 0;
    for (int q = p + 1; q < len; ++q) {
      if (ls[q] == i) {
        if (seen_up != 1 || seen_down != 1) return false;
        break;  // the next neighbouring pair starts at q
      }
      if (ls[q] == up) ++seen_up;
      else if (ls[q] == down) ++seen_down;
    }
  }
  return true;
}

/// Componentwise letter counts; entry i is the number of occurrences of
/// a_i. The sum of the entries is the length grading.
inline std::vector<int> zn_degree(const Word& w) {
  std::vector<int> deg(w.n(), 0);
  for (int x : w.letters()) ++deg[x];
  return deg;
}

/// Decides equality of two nonzero monomials as algebra elements. Two
/// words are equal iff they differ only by commutation moves, i.e. iff
/// for every i the restriction to letters {i, i+1 mod n} is the same
/// sequence in both words.
inline bool commutation_equal(const Word& w1, const Word& w2) {
  if (w1.rank() != w2.rank())
    throw std::invalid_argument("commutation_equal: rank mismatch");
  if (!is_nonzero(w1) || !is_nonzero(w2))
    throw std::invalid_argument("commutation_equal: zero word");
  if (w1.size() != w2.size()) return false;
  const int n = w1.n();
  std::vector<char> r1, r2;
  for (int i = 0; i < n; ++i) {
    const int up = (i + 1) % n;
    r1.clear();
    r2.clear();
    for (int x : w1.letters())
      if (x == i || x == up) r1.push_back(x == i);
    for (int x : w2.letters())
      if (x == i || x == up) r2.push_back(x == i);
    if (r1 != r2) return false;
  }
  return true;
}

/// Parses "6 4 2 1" or "6,4,2,1" (leftmost = leftmost algebraic factor).
inline Word parse_word(Rank rank, const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<int> letters;
  int x;
  while (in >> x) letters.push_back(x);
  if (!in.eof()) throw std::invalid_argument("parse_word: bad token");
  return Word(rank, std::move(letters));
}

inline std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.letters()[i]);
  }
  return out;
}

}  // namespace antl
