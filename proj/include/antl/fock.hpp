#pragma once

#include <functional>
#include <optional>

#include "antl/element.hpp"
#include "antl/qpoly.hpp"

namespace antl {

/// Fermionic particle configuration: a strictly increasing subset of
/// {1,...,n}, the index set of a wedge v_{i_1} ^ ... ^ v_{i_k}. Position n
/// stands for the circle position 0 (v_0 and v_N are the same vector).
class Config {
public:
  Config(Rank rank, std::vector<int> positions)
      : rank_(rank), positions_(std::move(positions)) {
    for (std::size_t i = 0; i < positions_.size(); ++i) {
      if (positions_[i] < 1 || positions_[i] > rank_.n())
        throw std::invalid_argument("Config: position out of range");
      if (i > 0 && positions_[i - 1] >= positions_[i])
        throw std::invalid_argument("Config: positions must strictly increase");
    }
  }

  /// From circle labels 0..n-1 (in any order); 0 is stored as n.
  static Config from_circle(Rank rank, std::vector<int> labels) {
    for (int& x : labels) {
      if (x < 0 || x >= rank.n())
        throw std::invalid_argument("Config: circle label out of range");
      if (x == 0) x = rank.n();
    }
    std::sort(labels.begin(), labels.end());
    return Config(rank, std::move(labels));
  }

  Rank rank() const { return rank_; }
  int n() const { return rank_.n(); }
  const std::vector<int>& positions() const { return positions_; }
  int particles() const { return static_cast<int>(positions_.size()); }

  bool contains(int pos) const {
    return std::binary_search(positions_.begin(), positions_.end(), pos);
  }

  /// Sorted circle labels 0..n-1 (position n maps back to 0).
  std::vector<int> circle_labels() const {
    std::vector<int> out;
    for (int p : positions_) out.push_back(p % rank_.n());
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Config& a, const Config& b) {
    return a.rank_ == b.rank_ && a.positions_ == b.positions_;
  }
  friend bool operator!=(const Config& a, const Config& b) { return !(a == b); }
  friend bool operator<(const Config& a, const Config& b) {
    return a.positions_ < b.positions_;
  }

private:
  Rank rank_;
  std::vector<int> positions_;
};

/// All k-particle configurations, sorted.
inline std::vector<Config> all_configs(Rank rank, int k) {
  if (k < 0 || k > rank.n())
    throw std::invalid_argument("all_configs: k out of range");
  std::vector<Config> out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.emplace_back(rank, cur);
      return;
    }
    for (int p = start; p <= rank.n(); ++p) {
      cur.push_back(p);
      go(p + 1);
      cur.pop_back();
    }
  };
  go(1);
  return out;
}

/// Action of a single generator. For 1 <= j <= n-1 the particle at j
/// moves to j+1 with scalar 1; a_0 moves the particle at position n to
/// position 1 with scalar (-1)^(k-1) q, where k is the particle count.
/// Absent means the configuration is annihilated.
inline std::optional<std::pair<QPoly, Config>> act_generator(int j,
                                                             const Config& c) {
  const int n = c.n();
  if (j < 0 || j >= n) throw std::invalid_argument("act_generator: bad index");
  std::vector<int> pos = c.positions();
  if (j == 0) {
    if (!c.contains(n) || c.contains(1)) return std::nullopt;
    pos.pop_back();
    pos.insert(pos.begin(), 1);
    const int k = c.particles();
    const long long sign = (k % 2 == 1) ? 1 : -1;  // (-1)^(k-1)
    return std::make_pair(QPoly::monomial(sign, 1), Config(c.rank(), std::move(pos)));
  }
  if (!c.contains(j) || c.contains(j + 1)) return std::nullopt;
  for (int& p : pos)
    if (p == j) p = j + 1;
  return std::make_pair(QPoly::one(), Config(c.rank(), std::move(pos)));
}

/// Right-to-left composition of act_generator over the letters; the
/// scalar is +-q^l. The particle count never changes.
inline std::optional<std::pair<QPoly, Config>> act_word(const Word& w,
                                                        const Config& c) {
  if (w.rank() != c.rank()) throw std::invalid_argument("act_word: rank mismatch");
  Config cur = c;
  long long sign = 1;
  int qexp = 0;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    auto step = act_generator(*it, cur);
    if (!step) return std::nullopt;
    const auto& [scalar, next] = *step;
    sign *= scalar.terms()[0].second;
    qexp += scalar.terms()[0].first;
    cur = next;
  }
  return std::make_pair(QPoly::monomial(sign, qexp), cur);
}

/// Finite k[q]-linear combination of configurations.
class FockVector {
public:
  explicit FockVector(Rank rank) : rank_(rank) {}

  static FockVector basis(const Config& c) {
    FockVector v(c.rank());
    v.terms_.emplace(c, QPoly::one());
    return v;
  }

  Rank rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Config, QPoly>& terms() const { return terms_; }

  void accumulate(const Config& c, const QPoly& p) {
    if (p.is_zero()) return;
    auto it = terms_.find(c);
    if (it == terms_.end()) {
      terms_.emplace(c, p);
    } else {
      it->second = it->second + p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend FockVector operator+(const FockVector& a, const FockVector& b) {
    if (a.rank_ != b.rank_) throw std::invalid_argument("FockVector: rank mismatch");
    FockVector out = a;
    for (const auto& [c, p] : b.terms_) out.accumulate(c, p);
    return out;
  }

  friend FockVector operator*(const QPoly& p, const FockVector& v) {
    FockVector out(v.rank_);
    for (const auto& [c, q] : v.terms_) out.accumulate(c, p * q);
    return out;
  }

  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const FockVector& a, const FockVector& b) {
    return !(a == b);
  }

private:
  Rank rank_;
  std::map<Config, QPoly> terms_;
};

/// Bilinear extension of act_word.
inline FockVector act_element(const Element& e, const FockVector& v) {
  if (e.rank() != v.rank())
    throw std::invalid_argument("act_element: rank mismatch");
  FockVector out(v.rank());
  for (const auto& [letters, coeff] : e.terms()) {
    Word w(e.rank(), letters);
    for (const auto& [config, poly] : v.terms()) {
      auto hit = act_word(w, config);
      if (!hit) continue;
      out.accumulate(hit->second, QPoly::monomial(coeff, 0) * hit->first * poly);
    }
  }
  return out;
}

/// Sparse k-particle block of an element in the standard basis.
/// Entry (row, col) is the coefficient of v(row) in e * v(col).
struct RepMatrix {
  Rank rank;
  int k;
  std::map<std::pair<Config, Config>, QPoly> entries;

  friend bool operator==(const RepMatrix& a, const RepMatrix& b) {
    return a.rank == b.rank && a.k == b.k && a.entries == b.entries;
  }
};

inline RepMatrix matrix_block(const Element& e, int k) {
  if (k < 0 || k > e.n()) throw std::invalid_argument("matrix_block: k out of range");
  RepMatrix m{e.rank(), k, {}};
  for (const Config& col : all_configs(e.rank(), k)) {
    FockVector image = act_element(e, FockVector::basis(col));
    for (const auto& [row, poly] : image.terms())
      m.entries.emplace(std::make_pair(row, col), poly);
  }
  return m;
}

inline RepMatrix matmul(const RepMatrix& a, const RepMatrix& b) {
  if (a.rank != b.rank || a.k != b.k)
    throw std::invalid_argument("matmul: shape mismatch");
  RepMatrix out{a.rank, a.k, {}};
  for (const auto& [bkey, bpoly] : b.entries) {
    const auto& [mid, col] = bkey;
    for (const auto& [akey, apoly] : a.entries) {
      if (akey.second != mid) continue;
      auto key = std::make_pair(akey.first, col);
      auto it = out.entries.find(key);
      QPoly prod = apoly * bpoly;
      if (it == out.entries.end()) {
        if (!prod.is_zero()) out.entries.emplace(key, prod);
      } else {
        it->second = it->second + prod;
        if (it->second.is_zero()) out.entries.erase(it);
      }
    }
  }
  return out;
}

/// The polynomials (p_1,...,p_{n-1}) by which a central element acts on
/// the k-particle summands; verified against every configuration.
inline std::vector<QPoly> central_character(const Element& e) {
  std::vector<QPoly> out;
  for (int k = 1; k < e.n(); ++k) {
    std::optional<QPoly> pk;
    for (const Config& c : all_configs(e.rank(), k)) {
      FockVector image = act_element(e, FockVector::basis(c));
      QPoly scalar = QPoly::zero();
      for (const auto& [row, poly] : image.terms()) {
        if (row != c) throw std::invalid_argument("central_character: not central");
        scalar = poly;
      }
      if (!pk) {
        pk = scalar;
      } else if (*pk != scalar) {
        throw std::invalid_argument("central_character: not central");
      }
    }
    out.push_back(*pk);
  }
  return out;
}

}  // namespace antl
