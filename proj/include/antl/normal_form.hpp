#pragma once

#include <optional>
#include <set>
#include <utility>

#include "antl/word.hpp"

namespace antl {

/// Canonical block decomposition of a nonzero monomial. A nonzero,
/// nonconstant monomial factors uniquely as
///
///   a(j^(m)) a(j^(m-1)) ... a(j^(1)) a(j^(0)),
///
/// where each block j^(r) repeats no index, every index of j^(r+1) is
/// some index of j^(r) plus one (mod n), and block lengths weakly
/// decrease leftwards. Zero and the identity are separate variants:
/// zero has no word representative, and 1 must not collide with any
/// block value.
class NormalForm {
public:
  enum class Kind { Zero, One, Blocks };

  static NormalForm zero(Rank rank) { return NormalForm(Kind::Zero, rank); }
  static NormalForm one(Rank rank) { return NormalForm(Kind::One, rank); }

  /// blocks in algebraic order: blocks[0] is the leftmost factor
  /// Block^(m), blocks.back() is Block^(0).
  static NormalForm make(Rank rank, std::vector<std::vector<int>> blocks) {
    NormalForm nf(Kind::Blocks, rank);
    nf.blocks_ = std::move(blocks);
    return nf;
  }

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_one() const { return kind_ == Kind::One; }
  bool is_blocks() const { return kind_ == Kind::Blocks; }
  Rank rank() const { return rank_; }
  int n() const { return rank_.n(); }

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  /// Rightmost block Block^(0); the underlying set of the minimal
  /// particle configuration the monomial acts on.
  const std::vector<int>& block0() const { return blocks_.back(); }

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) {
    return !(a == b);
  }

private:
  NormalForm(Kind kind, Rank rank) : kind_(kind), rank_(rank) {}

  Kind kind_;
  Rank rank_;
  std::vector<std::vector<int>> blocks_;
};

/// One particle's journey through the blocks: the indices
/// start, start+1, ..., start+length-1 (mod n) in successive blocks.
struct Strand {
  int start;   // element of Block^(0)
  int length;  // number of blocks traversed, >= 1
  int end;     // start + length - 1 mod n
};

/// The injective invariant of a nonzero monomial: the set of indices with
/// no predecessor to their right, the set with no successor to their
/// left, and the number of zero letters.
struct PsiKey {
  std::vector<int> i_in;   // sorted
  std::vector<int> i_out;  // sorted
  int ell = 0;

  friend bool operator==(const PsiKey& a, const PsiKey& b) {
    return a.i_in == b.i_in && a.i_out == b.i_out && a.ell == b.ell;
  }
  friend bool operator<(const PsiKey& a, const PsiKey& b) {
    if (a.i_in != b.i_in) return a.i_in < b.i_in;
    if (a.i_out != b.i_out) return a.i_out < b.i_out;
    return a.ell < b.ell;
  }
};

/// Normal-form blocks lifted to integer entries (not reduced mod n),
/// together with the strand data (start, traversal count). Entries of
/// block r equal (start index in Block^(0)) + r over the integers.
struct IntegralSequence {
  Rank rank;
  int shift;  // amount subtracted from every index before lifting
  std::vector<std::vector<long long>> blocks;  // algebraic order
  std::vector<std::pair<long long, long long>> strands;  // (i_r, n_r), i_r increasing
};

namespace detail {

/// Start index for the block reorder: the largest i (usual order) that is
/// absent from the set while i-1 is present. Exists whenever the set is a
/// proper nonempty subset of {0,...,n-1}.
inline int reorder_start(const std::vector<char>& present, int n) {
  int best = -1;
  for (int i = 0; i < n; ++i)
    if (!present[i] && present[(i + n - 1) % n]) best = i;
  return best;
}

/// First element of the set when scanning base, base+1, ... (mod n).
inline int cyclic_least(const std::vector<char>& present, int n, int base) {
  for (int d = 0; d < n; ++d)
    if (present[(base + d) % n]) return (base + d) % n;
  return -1;
}

inline std::vector<char> as_set(const std::vector<int>& xs, int n) {
  std::vector<char> present(n, 0);
  for (int x : xs) present[x] = 1;
  return present;
}

}  // namespace detail

/// Rewrites a nonzero monomial into its canonical block decomposition.
/// Letters with no predecessor to their right are extracted to the far
/// right (preserving their internal order), the remainder is processed
/// the same way, and finally each block r is sorted increasingly in the
/// cyclic order starting at ihat + r, where ihat is the reorder start of
/// Block^(0). Only commutation moves are used, so the result equals the
/// input as an algebra element, and it is identical for all
/// commutation-equal inputs.
inline NormalForm normalize(const Word& w) {
  if (!is_nonzero(w)) return NormalForm::zero(w.rank());
  if (w.empty()) return NormalForm::one(w.rank());
  const int n = w.n();

  std::vector<int> rest = w.letters();
  std::vector<std::vector<int>> blocks;  // extraction order: blocks[0] = Block^(0)
  while (!rest.empty()) {
    std::vector<char> seen(n, 0);
    std::vector<char> pick(rest.size(), 0);
    for (int p = static_cast<int>(rest.size()) - 1; p >= 0; --p) {
      if (!seen[(rest[p] + n - 1) % n]) pick[p] = 1;
      seen[rest[p]] = 1;
    }
    std::vector<int> block, remainder;
    for (std::size_t p = 0; p < rest.size(); ++p)
      (pick[p] ? block : remainder).push_back(rest[p]);
    blocks.push_back(std::move(block));
    rest = std::move(remainder);
  }

  const int ihat = detail::reorder_start(detail::as_set(blocks[0], n), n);
  for (std::size_t r = 0; r < blocks.size(); ++r) {
    const int base = (ihat + static_cast<int>(r)) % n;
    std::sort(blocks[r].begin(), blocks[r].end(), [&](int a, int b) {
      return (a - base + n) % n < (b - base + n) % n;
    });
  }

  std::reverse(blocks.begin(), blocks.end());
  return NormalForm::make(w.rank(), std::move(blocks));
}

/// The concatenation of the blocks; the canonical representative word.
inline Word canonical_word(const NormalForm& nf) {
  if (nf.is_zero())
    throw std::invalid_argument("canonical_word: zero has no representative");
  std::vector<int> letters;
  for (const auto& block : nf.blocks())
    letters.insert(letters.end(), block.begin(), block.end());
  return Word(nf.rank(), std::move(letters));
}

/// Canonical representative of a word: canonical_word(normalize(w)).
/// Requires a nonzero word.
inline Word canonicalize(const Word& w) {
  NormalForm nf = normalize(w);
  if (nf.is_zero()) throw std::invalid_argument("canonicalize: zero word");
  return canonical_word(nf);
}

/// One strand per element of Block^(0), in block order.
inline std::vector<Strand> strands(const NormalForm& nf) {
  if (!nf.is_blocks()) throw std::invalid_argument("strands: not a block form");
  const int n = nf.n();
  const auto& bs = nf.blocks();
  const int m = static_cast<int>(bs.size());
  std::vector<std::vector<char>> present(m);
  for (int r = 0; r < m; ++r)
    present[r] = detail::as_set(bs[m - 1 - r], n);  // extraction order

  std::vector<Strand> out;
  for (int s : nf.block0()) {
    int length = 1;
    while (length < m && present[length][(s + length) % n]) ++length;
    out.push_back(Strand{s, length, (s + length - 1 + n) % n});
  }
  return out;
}

/// psi of a nonzero nonconstant monomial, computed on any representative
/// word. i_in / i_out / ell are invariants of the element: they only
/// depend on letter counts and the relative order of consecutive indices.
inline PsiKey psi_of_word(const Word& w) {
  const int n = w.n();
  const auto& ls = w.letters();
  std::vector<char> seen_right(n, 0), seen_left(n, 0);
  std::set<int> in, out;
  int ell = 0;
  for (int p = static_cast<int>(ls.size()) - 1; p >= 0; --p) {
    if (!seen_right[(ls[p] + n - 1) % n]) in.insert(ls[p]);
    seen_right[ls[p]] = 1;
  }
  for (std::size_t p = 0; p < ls.size(); ++p) {
    if (!seen_left[(ls[p] + 1) % n]) out.insert(ls[p]);
    seen_left[ls[p]] = 1;
    if (ls[p] == 0) ++ell;
  }
  return PsiKey{{in.begin(), in.end()}, {out.begin(), out.end()}, ell};
}

inline PsiKey psi(const NormalForm& nf) {
  if (!nf.is_blocks()) throw std::invalid_argument("psi: not a block form");
  return psi_of_word(canonical_word(nf));
}

/// Integer lift of the blocks. If min(Block^(0)) != 0, all indices are
/// first shifted by -min(Block^(0)) mod n. Entry e of block r lifts to
/// ((e - r) mod n) + r. Strand data is sorted by start.
inline IntegralSequence integral_lift(const NormalForm& nf) {
  if (!nf.is_blocks())
    throw std::invalid_argument("integral_lift: not a block form");
  const int n = nf.n();
  const int shift = *std::min_element(nf.block0().begin(), nf.block0().end());

  const auto& bs = nf.blocks();
  const int m = static_cast<int>(bs.size());
  IntegralSequence seq{nf.rank(), shift, {}, {}};
  seq.blocks.resize(m);
  for (int r = 0; r < m; ++r) {
    const int depth = m - 1 - r;  // extraction index of this block
    for (int e : bs[r]) {
      const int shifted = (e - shift + n) % n;
      seq.blocks[r].push_back((shifted - depth % n + n) % n + depth);
    }
  }

  // strands on the shifted form, sorted by start
  std::vector<std::vector<char>> present(m);
  for (int r = 0; r < m; ++r) {
    std::vector<int> shifted;
    for (int e : bs[m - 1 - r]) shifted.push_back((e - shift + n) % n);
    present[r] = detail::as_set(shifted, n);
  }
  for (int e : nf.block0()) {
    const long long start = (e - shift + n) % n;
    int length = 1;
    while (length < m && present[length][(start + length) % n]) ++length;
    seq.strands.emplace_back(start, length - 1);
  }
  std::sort(seq.strands.begin(), seq.strands.end());
  return seq;
}

/// Inverse of psi on its image. A key determines the shift i1 (the
/// cyclically least element of i_in), the zero count of the shifted word,
/// the strand-end integers N*l_r + d_r, and hence the blocks. Returns
/// nothing if the key is not hit by any normal form; the membership test
/// is running the construction and checking psi of the result.
inline std::optional<NormalForm> reconstruct(const PsiKey& key, Rank rank) {
  const int n = rank.n();
  if (key.i_in.size() != key.i_out.size())
    throw std::invalid_argument("reconstruct: |i_in| != |i_out|");
  for (int x : key.i_in)
    if (x < 0 || x >= n) throw std::invalid_argument("reconstruct: bad index");
  for (int x : key.i_out)
    if (x < 0 || x >= n) throw std::invalid_argument("reconstruct: bad index");
  if (key.ell < 0) throw std::invalid_argument("reconstruct: negative ell");

  const int k = static_cast<int>(key.i_in.size());
  if (k == 0 || k >= n) return std::nullopt;
  if (std::set<int>(key.i_in.begin(), key.i_in.end()).size() != key.i_in.size() ||
      std::set<int>(key.i_out.begin(), key.i_out.end()).size() != key.i_out.size())
    throw std::invalid_argument("reconstruct: repeated index");

  const auto in_set = detail::as_set(key.i_in, n);
  const int ihat = detail::reorder_start(in_set, n);
  if (ihat < 0) return std::nullopt;
  const int shift = detail::cyclic_least(in_set, n, ihat);

  std::vector<int> in_s, out_s;
  for (int x : key.i_in) in_s.push_back((x - shift + n) % n);
  for (int x : key.i_out) out_s.push_back((x - shift + n) % n);
  std::sort(in_s.begin(), in_s.end());
  std::sort(out_s.begin(), out_s.end());
  if (in_s[0] != 0 || in_s.back() == n - 1) return std::nullopt;

  // zero count of the shifted word from the zero count of the original
  long long ell = key.ell;
  if (shift != 0) {
    long long drop = 0, add = 0;
    for (int d : out_s)
      if (d >= n - shift) ++drop;
    for (int x : in_s)
      if (x > n - shift) ++add;
    ell = ell - drop + add + 1;
  }
  if (ell < 1) return std::nullopt;

  const long long ttilde = (ell - 1) / k;
  const int s = k - static_cast<int>((ell - 1) % k);  // 1 <= s <= k

  // strand-end integers: d_{s+1} < ... < d_k < d_1 < ... < d_s
  std::vector<long long> ends(k);
  for (int r = 1; r <= k; ++r) {
    const long long lr = (r <= s) ? ttilde : ttilde + 1;
    const int d = (r <= s) ? out_s[k - s + r - 1] : out_s[r - s - 1];
    ends[r - 1] = static_cast<long long>(n) * lr + d;
  }
  for (int r = 0; r < k; ++r)
    if (ends[r] < in_s[r]) return std::nullopt;
  for (int r = 0; r + 1 < k; ++r)
    if (ends[r] >= ends[r + 1]) return std::nullopt;
  if (ends[k - 1] >= ends[0] + n) return std::nullopt;

  // unfold strands into blocks, reduce mod n, undo the shift
  long long depth_max = 0;
  for (int r = 0; r < k; ++r) depth_max = std::max(depth_max, ends[r] - in_s[r]);
  std::vector<int> letters;
  for (long long depth = depth_max; depth >= 0; --depth) {
    std::vector<long long> entries;
    for (int r = 0; r < k; ++r)
      if (ends[r] - in_s[r] >= depth) entries.push_back(in_s[r] + depth);
    std::sort(entries.begin(), entries.end());
    for (long long e : entries)
      letters.push_back(static_cast<int>((e % n + shift) % n));
  }

  NormalForm nf = normalize(Word(rank, std::move(letters)));
  if (!nf.is_blocks() || !(psi(nf) == key)) return std::nullopt;
  return nf;
}

/// "(6 2)(4 5 1)(3 4 0)" style rendering; Zero is "0", One is "1".
inline std::string format_normal_form(const NormalForm& nf) {
  if (nf.is_zero()) return "0";
  if (nf.is_one()) return "1";
  std::string out;
  for (const auto& block : nf.blocks()) {
    out += '(';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(block[i]);
    }
    out += ')';
  }
  return out;
}

inline NormalForm parse_normal_form(Rank rank, const std::string& text) {
  if (text == "0") return NormalForm::zero(rank);
  if (text == "1") return NormalForm::one(rank);
  std::vector<std::vector<int>> blocks;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != '(') throw std::invalid_argument("parse_normal_form: expected '('");
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos)
      throw std::invalid_argument("parse_normal_form: missing ')'");
    std::istringstream in(text.substr(pos + 1, close - pos - 1));
    std::vector<int> block;
    int x;
    while (in >> x) block.push_back(x);
    if (block.empty()) throw std::invalid_argument("parse_normal_form: empty block");
    blocks.push_back(std::move(block));
    pos = close + 1;
  }
  if (blocks.empty()) throw std::invalid_argument("parse_normal_form: no blocks");
  return NormalForm::make(rank, std::move(blocks));
}

}  // namespace antl
