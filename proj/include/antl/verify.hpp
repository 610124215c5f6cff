#pragma once

#include <functional>
#include <random>
#include <string>

#include "antl/center.hpp"
#include "antl/commutant.hpp"
#include "antl/embedding.hpp"
#include "antl/enumerate.hpp"
#include "antl/io.hpp"

/// Named property suites behind the `verify` command. Each check is a
/// desk-scale exhaustive or randomized run of the invariants the library
/// is built on; bounds scale with the rank and the enumeration cap.
namespace antl {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass;
  std::string detail;
};

namespace detail {

class SuiteRunner {
public:
  SuiteRunner(std::string suite, std::vector<CheckResult>& sink)
      : suite_(std::move(suite)), sink_(sink) {}

  void check(const std::string& name, const std::function<bool()>& body) {
    CheckResult result{suite_, name, false, ""};
    try {
      result.pass = body();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = e.what();
    }
    sink_.push_back(std::move(result));
  }

private:
  std::string suite_;
  std::vector<CheckResult>& sink_;
};

}  // namespace detail

inline std::vector<std::string> verify_suite_names() {
  return {"relations", "center", "faithfulness", "psi", "basis", "embeddings"};
}

inline void verify_relations(Rank rank, int max_len, std::vector<CheckResult>& out) {
  detail::SuiteRunner run("relations", out);
  const int n = rank.n();
  run.check("nil relations annihilate every configuration", [&] {
    for (int k = 0; k <= n; ++k)
      for (const Config& c : all_configs(rank, k))
        for (int i = 0; i < n; ++i) {
          const int up = (i + 1) % n;
          if (act_word(Word(rank, {i, i}), c)) return false;
          if (act_word(Word(rank, {i, up, i}), c)) return false;
          if (act_word(Word(rank, {up, i, up}), c)) return false;
        }
    return true;
  });
  run.check("distant generators commute in the representation", [&] {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int d = (j - i + n) % n;
        if (d == 0 || d == 1 || d == n - 1) continue;
        for (int k = 0; k <= n; ++k)
          for (const Config& c : all_configs(rank, k)) {
            auto ij = act_word(Word(rank, {i, j}), c);
            auto ji = act_word(Word(rank, {j, i}), c);
            if (ij.has_value() != ji.has_value()) return false;
            if (ij && !(ij->first == ji->first && ij->second == ji->second))
              return false;
          }
      }
    return true;
  });
  run.check("is_nonzero matches the rewriting closure", [&] {
    bool ok = true;
    for_each_nonzero_word(rank, std::min(max_len, 6), [&](const Word& w) {
      if (!rewriting_oracle_is_nonzero(w)) ok = false;
    });
    return ok;
  });
}

inline void verify_center(Rank rank, int /*max_len*/, std::vector<CheckResult>& out) {
  detail::SuiteRunner run("center", out);
  const int n = rank.n();
  run.check("central generators are central", [&] {
    for (int k = 1; k < n; ++k)
      if (!is_central(central_generator(k, rank))) return false;
    return true;
  });
  run.check("products of distinct generators vanish, powers do not", [&] {
    for (int k = 1; k < n; ++k) {
      Element tk = central_generator(k, rank);
      for (int l = 1; l < n; ++l) {
        Element prod = mul(tk, central_generator(l, rank));
        if ((k == l) == prod.is_zero()) return false;
      }
      Element power = tk;
      for (int m = 2; m <= 3; ++m) {
        power = mul(power, tk);
        if (power.is_zero()) return false;
      }
    }
    return true;
  });
  run.check("central characters are delta_k q", [&] {
    for (int k = 1; k < n; ++k) {
      auto chars = central_character(central_generator(k, rank));
      for (int j = 1; j < n; ++j)
        if (chars[j - 1] != (j == k ? QPoly::q() : QPoly::zero())) return false;
    }
    return true;
  });
  run.check("projectors fix exactly their configuration", [&] {
    for (int k = 1; k < n; ++k)
      for (const Config& I : all_configs(rank, k)) {
        Word p = projector_monomial(I);
        const long long sign = (k % 2 == 1) ? 1 : -1;
        for (int kk = 0; kk <= n; ++kk)
          for (const Config& other : all_configs(rank, kk)) {
            auto hit = act_word(p, other);
            if (other == I) {
              if (!hit || hit->second != I ||
                  hit->first != QPoly::monomial(sign, 1))
                return false;
            } else if (hit) {
              return false;
            }
          }
      }
    return true;
  });
}

inline void verify_faithfulness(Rank rank, int max_len, std::vector<CheckResult>& out) {
  detail::SuiteRunner run("faithfulness", out);
  const int n = rank.n();
  run.check("normalize is sound and constant on commutation classes", [&] {
    bool ok = true;
    for_each_nonzero_word(rank, max_len, [&](const Word& w) {
      if (!ok) return;
      NormalForm nf = normalize(w);
      Word cw = canonical_word(nf);
      if (!commutation_equal(w, cw) || normalize(cw) != nf) ok = false;
    });
    return ok;
  });
  run.check("representation matrices are linearly independent", [&] {
    std::map<std::tuple<int, std::vector<int>, std::vector<int>, int>, int> coords;
    auto coord_of = [&](int k, const Config& row, const Config& col, int exp) {
      auto key = std::make_tuple(k, row.positions(), col.positions(), exp);
      auto [it, inserted] = coords.emplace(key, static_cast<int>(coords.size()));
      return it->second;
    };
    IncrementalRank rank_tracker;
    IncrementalRank::Row identity_row;
    for (int k = 1; k < n; ++k)
      for (const Config& c : all_configs(rank, k))
        identity_row[coord_of(k, c, c, 0)] = 1;
    if (!rank_tracker.insert(identity_row)) return false;
    for (const auto& letters : canonical_monomials(rank, max_len)) {
      Element e = Element::from_word(Word(rank, letters));
      IncrementalRank::Row row;
      for (int k = 1; k < n; ++k)
        for (const auto& [rc, poly] : matrix_block(e, k).entries)
          for (const auto& [exp, coeff] : poly.terms())
            row[coord_of(k, rc.first, rc.second, exp)] = coeff;
      if (!rank_tracker.insert(std::move(row))) return false;
    }
    return true;
  });
}

inline void verify_psi(Rank rank, int max_len, std::vector<CheckResult>& out) {
  detail::SuiteRunner run("psi", out);
  const int n = rank.n();
  run.check("psi is injective and reconstruct inverts it", [&] {
    std::map<PsiKey, std::vector<int>> by_key;
    for (const auto& letters : canonical_monomials(rank, max_len)) {
      NormalForm nf = normalize(Word(rank, letters));
      PsiKey key = psi(nf);
      auto [it, inserted] = by_key.emplace(key, letters);
      if (!inserted) return false;
      auto back = reconstruct(key, rank);
      if (!back || *back != nf) return false;
    }
    return true;
  });
  run.check("integral lifts satisfy the strand inequalities", [&] {
    for (const auto& letters : canonical_monomials(rank, max_len)) {
      IntegralSequence seq = integral_lift(normalize(Word(rank, letters)));
      for (std::size_t r = 0; r + 1 < seq.strands.size(); ++r)
        if (seq.strands[r].first + seq.strands[r].second >=
            seq.strands[r + 1].first + seq.strands[r + 1].second)
          return false;
      if (seq.strands.back().first + seq.strands.back().second >=
          seq.strands.front().first + seq.strands.front().second + n)
        return false;
    }
    return true;
  });
}

inline void verify_basis(Rank rank, int /*max_len*/, std::vector<CheckResult>& out) {
  detail::SuiteRunner run("basis", out);
  const int n = rank.n();
  const int ell_max = 1;
  run.check("factorize inverts enumerate_basis", [&] {
    for (const auto& [label, word] : enumerate_basis(rank, ell_max))
      if (!(factorize(word) == label)) return false;
    return true;
  });
  run.check("enumerated words cover all monomials at bounded q-count", [&] {
    if (n > 5) return true;  // closure grows quickly; covered at small ranks
    std::set<std::vector<int>> enumerated;
    for (const auto& [label, word] : enumerate_basis(rank, ell_max))
      enumerated.insert(word.letters());
    std::vector<int> alphabet(n);
    for (int i = 0; i < n; ++i) alphabet[i] = i;
    std::set<std::vector<int>> expected;
    for (const auto& letters : canonical_closure(rank, alphabet, ell_max + n - 1)) {
      if (letters.empty()) continue;
      if (factorize(Word(rank, letters)).ell <= ell_max) expected.insert(letters);
    }
    return enumerated == expected;
  });
  run.check("catalan dimension of the finite subalgebra", [&] {
    long long expect = 1;  // C_n = binom(2n, n) / (n + 1)
    for (int i = 0; i < n; ++i) expect = expect * (2 * n - i) / (i + 1);
    expect /= (n + 1);
    return fntl_dimension(rank) == expect;
  });
}

inline void verify_embeddings(Rank rank, int max_len, std::vector<CheckResult>& out) {
  detail::SuiteRunner run("embeddings", out);
  const int n = rank.n();
  run.check("relation images vanish at every insertion position", [&] {
    for (int m = 0; m < n; ++m) {
      Element p = embed_element(m, Element::generator(rank, m));
      Element s = embed_element(m, Element::generator(rank, (m + 1) % n));
      Element r = embed_element(m, Element::generator(rank, (m + n - 1) % n));
      if (!mul(p, p).is_zero()) return false;
      if (!mul(s, mul(p, s)).is_zero()) return false;
      if (!mul(r, mul(p, r)).is_zero()) return false;
      if (!mul(p, mul(s, p)).is_zero()) return false;
      if (!mul(p, mul(r, p)).is_zero()) return false;
    }
    return true;
  });
  run.check("embedding is injective on canonical monomials", [&] {
    const int len = std::min(max_len, 6);
    for (int m = 0; m < n; ++m) {
      std::set<std::vector<int>> images;
      std::size_t count = 0;
      for (const auto& letters : canonical_monomials(rank, len)) {
        Element image = embed_element(m, Element::from_word(Word(rank, letters)));
        if (image.terms().size() != 1) return false;
        images.insert(image.terms().begin()->first);
        ++count;
      }
      if (images.size() != count) return false;
    }
    return true;
  });
  run.check("embedding is multiplicative on random pairs", [&] {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> xs, ys;
      for (int i = 0; i < 4; ++i) {
        xs.push_back(pick(rng));
        ys.push_back(pick(rng));
      }
      Element x = Element::from_word(Word(rank, xs));
      Element y = Element::from_word(Word(rank, ys));
      for (int m = 0; m < n; ++m)
        if (embed_element(m, mul(x, y)) !=
            mul(embed_element(m, x), embed_element(m, y)))
          return false;
    }
    return true;
  });
}

/// Runs one named suite ("all" for every suite) at the given enumeration
/// cap. Returns one result per check.
inline std::vector<CheckResult> run_verify(const std::string& suite, Rank rank,
                                           int max_len) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (all || suite == "relations") verify_relations(rank, max_len, out);
  if (all || suite == "center") verify_center(rank, max_len, out);
  if (all || suite == "faithfulness") verify_faithfulness(rank, max_len, out);
  if (all || suite == "psi") verify_psi(rank, max_len, out);
  if (all || suite == "basis") verify_basis(rank, max_len, out);
  if (all || suite == "embeddings") verify_embeddings(rank, max_len, out);
  if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
  return out;
}

}  // namespace antl
