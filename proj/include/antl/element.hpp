#pragma once

#include <map>

#include "antl/normal_form.hpp"

namespace antl {

/// Integer-linear combination of canonical monomials. Keys are canonical
/// words (the empty word is the identity monomial); the zero element is
/// the empty combination. Canonical words form a basis, so structural
/// equality of the term maps is equality in the algebra.
class Element {
public:
  explicit Element(Rank rank) : rank_(rank) {}

  static Element zero(Rank rank) { return Element(rank); }
  static Element one(Rank rank) {
    Element e(rank);
    e.terms_[{}] = 1;
    return e;
  }
  static Element generator(Rank rank, int i) {
    return from_word(Word(rank, {i}));
  }

  /// The class of a word: zero words give the zero element.
  static Element from_word(const Word& w) {
    Element e(w.rank());
    NormalForm nf = normalize(w);
    if (!nf.is_zero()) e.terms_[canonical_word(nf).letters()] = 1;
    return e;
  }

  Rank rank() const { return rank_; }
  int n() const { return rank_.n(); }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, long long>& terms() const { return terms_; }

  /// Adds coeff times the class of w.
  void accumulate(const Word& w, long long coeff) {
    if (coeff == 0) return;
    NormalForm nf = normalize(w);
    if (nf.is_zero()) return;
    auto key = canonical_word(nf).letters();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), coeff);
    } else if ((it->second += coeff) == 0) {
      terms_.erase(it);
    }
  }

  friend Element add(const Element& a, const Element& b) {
    if (a.rank_ != b.rank_) throw std::invalid_argument("add: rank mismatch");
    Element out = a;
    for (const auto& [key, coeff] : b.terms_) {
      auto it = out.terms_.find(key);
      if (it == out.terms_.end()) {
        out.terms_.emplace(key, coeff);
      } else if ((it->second += coeff) == 0) {
        out.terms_.erase(it);
      }
    }
    return out;
  }

  friend Element scale(long long c, const Element& e) {
    Element out(e.rank_);
    if (c == 0) return out;
    for (const auto& [key, coeff] : e.terms_) out.terms_[key] = c * coeff;
    return out;
  }

  friend Element sub(const Element& a, const Element& b) {
    return add(a, scale(-1, b));
  }

  /// Distributes over terms; every word product is concat-then-normalize,
  /// and zero products vanish.
  friend Element mul(const Element& a, const Element& b) {
    if (a.rank_ != b.rank_) throw std::invalid_argument("mul: rank mismatch");
    Element out(a.rank_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        std::vector<int> prod = ka;
        prod.insert(prod.end(), kb.begin(), kb.end());
        out.accumulate(Word(a.rank_, std::move(prod)), ca * cb);
      }
    return out;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Element& a, const Element& b) {
    return !(a == b);
  }

private:
  Rank rank_;
  std::map<std::vector<int>, long long> terms_;
};

/// True iff e commutes with every generator; the generators generate, so
/// this decides centrality.
inline bool is_central(const Element& e) {
  for (int i = 0; i < e.n(); ++i) {
    Element g = Element::generator(e.rank(), i);
    if (mul(e, g) != mul(g, e)) return false;
  }
  return true;
}

}  // namespace antl
