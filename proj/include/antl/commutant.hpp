#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "antl/fock.hpp"

namespace antl {

using Rational = boost::multiprecision::cpp_rational;

inline Rational eval_qpoly(const QPoly& p, const Rational& q) {
  Rational out = 0;
  for (const auto& [exp, coeff] : p.terms()) {
    Rational pow = 1;
    for (int i = 0; i < exp; ++i) pow *= q;
    out += Rational(coeff) * pow;
  }
  return out;
}

namespace detail {

/// Union-find over variables related by equations c1*x_u + c2*x_v = 0
/// (c1, c2 nonzero). Each class stores x = weight * x_root; inconsistent
/// cycles force the class to zero.
class ScaledUnionFind {
public:
  explicit ScaledUnionFind(std::size_t size)
      : parent_(size), weight_(size, Rational(1)), zero_(size, false) {
    for (std::size_t i = 0; i < size; ++i) parent_[i] = i;
  }

  std::size_t find(std::size_t v, Rational& weight_out) {
    if (parent_[v] == v) {
      weight_out = weight_[v];
      return v;
    }
    Rational w;
    std::size_t root = find(parent_[v], w);
    parent_[v] = root;
    weight_[v] *= w;
    weight_out = weight_[v];
    return root;
  }

  void force_zero(std::size_t v) {
    Rational w;
    zero_[find(v, w)] = true;
  }

  /// Imposes c1*x_u + c2*x_v = 0.
  void relate(std::size_t u, const Rational& c1, std::size_t v,
              const Rational& c2) {
    Rational wu, wv;
    std::size_t ru = find(u, wu), rv = find(v, wv);
    if (ru == rv) {
      if (c1 * wu + c2 * wv != 0) zero_[ru] = true;
      return;
    }
    // x_ru = -(c2*wv)/(c1*wu) * x_rv
    parent_[ru] = rv;
    weight_[ru] = -(c2 * wv) / (c1 * wu);
    if (zero_[ru]) zero_[rv] = true;
  }

  std::size_t free_classes() {
    std::size_t count = 0;
    Rational w;
    for (std::size_t v = 0; v < parent_.size(); ++v)
      if (find(v, w) == v && !zero_[v]) ++count;
    return count;
  }

private:
  std::vector<std::size_t> parent_;
  std::vector<Rational> weight_;
  std::vector<bool> zero_;
};

}  // namespace detail

/// Dimension of the commutant of the generator matrices on the k-particle
/// block, with q specialized to an exact rational. Solves X A_i = A_i X
/// for all i; every scalar equation has at most two terms because each
/// generator matrix has at most one nonzero entry per column.
inline int endomorphism_dimension(Rank rank, int k, const Rational& q_value) {
  const int n = rank.n();
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("endomorphism_dimension: k out of range");

  const std::vector<Config> basis = all_configs(rank, k);
  const int m = static_cast<int>(basis.size());
  std::map<Config, int> index;
  for (int i = 0; i < m; ++i) index.emplace(basis[i], i);

  // column -> (row, value) for each generator, zero values dropped
  struct Action {
    std::vector<int> to;         // -1 if annihilated
    std::vector<Rational> val;   // scalar on the surviving moves
    std::vector<int> from;       // inverse map, -1 if not hit
  };
  std::vector<Action> acts(n);
  for (int g = 0; g < n; ++g) {
    Action a{std::vector<int>(m, -1), std::vector<Rational>(m), std::vector<int>(m, -1)};
    for (int c = 0; c < m; ++c) {
      auto hit = act_generator(g, basis[c]);
      if (!hit) continue;
      Rational v = eval_qpoly(hit->first, q_value);
      if (v == 0) continue;
      const int r = index.at(hit->second);
      a.to[c] = r;
      a.val[c] = v;
      a.from[r] = c;
    }
    acts[g] = std::move(a);
  }

  const auto var = [m](int r, int c) { return static_cast<std::size_t>(r) * m + c; };
  detail::ScaledUnionFind uf(static_cast<std::size_t>(m) * m);
  for (int g = 0; g < n; ++g) {
    const Action& a = acts[g];
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) {
        // (X A - A X)[r][c] = X[r][to(c)] val(c) - val(from(r)) X[from(r)][c]
        const bool t1 = a.to[c] >= 0;
        const bool t2 = a.from[r] >= 0;
        if (t1 && t2) {
          uf.relate(var(r, a.to[c]), a.val[c], var(a.from[r], c), -a.val[a.from[r]]);
        } else if (t1) {
          uf.force_zero(var(r, a.to[c]));
        } else if (t2) {
          uf.force_zero(var(a.from[r], c));
        }
      }
  }
  return static_cast<int>(uf.free_classes());
}

/// Incremental rank of sparse rational vectors indexed by int
/// coordinates. insert() returns false iff the vector is a linear
/// combination of the previously inserted ones.
class IncrementalRank {
public:
  using Row = std::map<int, Rational>;

  bool insert(Row row) {
    while (!row.empty()) {
      const int lead = row.begin()->first;
      auto pivot = pivots_.find(lead);
      if (pivot == pivots_.end()) {
        const Rational inv = row.begin()->second;
        for (auto& [coord, value] : row) value /= inv;
        pivots_.emplace(lead, std::move(row));
        return true;
      }
      const Rational factor = row.begin()->second;
      for (const auto& [coord, value] : pivot->second) {
        auto it = row.find(coord);
        if (it == row.end()) {
          row.emplace(coord, -factor * value);
        } else {
          it->second -= factor * value;
          if (it->second == 0) row.erase(it);
        }
      }
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

private:
  std::map<int, Row> pivots_;
};

}  // namespace antl
